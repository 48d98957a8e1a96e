#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpsi/qcore.hpp"

namespace qpsi {

// thrown by a trial whose draw lands too close to a pole or a convergence edge
struct RejectSample : Error { using Error::Error; };

// distance from w to Z + Z tau, measured in lattice coordinates
double lattice_distance(Complex w, Complex tau);

// Seeded parameter source. Each (seed, stream) pair gives an independent
// reproducible sequence; the bit-to-double mapping is spelled out so reports
// do not depend on the standard library's distributions.
class Sampler {
public:
    Sampler(std::uint64_t seed, const std::string& stream);

    double uniform(double lo, double hi);
    // log-uniform modulus in [lo, hi], uniform phase
    Complex annulus(const std::string& name, double lo, double hi);
    // real part in [re_lo, re_hi], imaginary part in [-im, im]
    Complex box(const std::string& name, double re_lo, double re_hi, double im);
    // s + t tau with s in [0,1), |t| <= tmax
    Complex additive(const std::string& name, Complex tau, double tmax);
    // |q| uniform in [qmin, qmax], uniform phase; a fixed nome wins when set, and is
    // rejected when it lies outside [qmin, qmax]
    QContext nome(double qmin, double qmax);

    void fix_nome(std::optional<Complex> q) { fixed_q_ = q; }
    void set_numerics(double tol, long max_terms) { tol_ = tol; max_terms_ = max_terms; }

    Complex record(const std::string& name, Complex v);
    void clear() { params_.clear(); }
    const std::vector<std::pair<std::string, Complex>>& params() const { return params_; }

private:
    std::uint64_t next();
    std::uint64_t s_[4];
    std::optional<Complex> fixed_q_;
    double tol_ = 1e-12;
    long max_terms_ = 100000;
    std::vector<std::pair<std::string, Complex>> params_;
};

// keep w off the lattice by at least margin, else reject
void require_off_lattice(Complex w, Complex tau, double margin, const char* what);

}  // namespace qpsi
