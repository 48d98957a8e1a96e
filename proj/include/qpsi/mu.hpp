#pragma once

#include "qpsi/series.hpp"

namespace qpsi {

enum class Representation { DEF, PSI12, PSI22, PSI02, PSI48, QHERMITE };

const char* to_string(Representation r);
Representation representation_from_string(const std::string& s);

// additive coordinates; x = e^{2 pi i u}, y = e^{2 pi i v}, a = q^alpha
struct MuPoint {
    Complex u{};
    Complex v{};
    Complex alpha{1.0};
    QContext ctx;

    Complex x() const;
    Complex y() const;
    Complex a() const;
    // (x/y)^{alpha/2} on the additive branch
    Complex half_power() const;
};

struct MuValue {
    Complex value{};
    Representation representation = Representation::DEF;
    TruncationReport report;
};

MuValue mu_def(const MuPoint& p);
MuValue mu_psi12(const MuPoint& p);
MuValue mu_psi22(const MuPoint& p);
MuValue mu_psi02(const MuPoint& p);
// the degenerate very-well-poised 4psi8 form
MuValue mu_psi48(const MuPoint& p);
// same series written out as an explicit bilateral sum
MuValue mu_psi48_sum(const MuPoint& p);

MuValue mu(const MuPoint& p, Representation r);
// PSI22 when it converges, PSI12 otherwise, polynomial path near alpha = -k
MuValue mu(const MuPoint& p);

// nonnegative k with |alpha + k| < pole_eps, or -1
long hermite_degree(const MuPoint& p);

// classic Zwegers mu(u,v) by its defining partial-fraction sum
Complex zwegers_mu(const QContext& ctx, Complex u, Complex v);

// a = q forms of mu(u,v)
struct ZwegersForms {
    Complex psi48;     // 4psi8 with sqrt(xy)
    Complex vwp_sum;   // sum (1 - xy q^{2n}) ... / ((1-xq^n)(1-yq^n))
    Complex split;     // difference of two one-sided-looking sums
    Complex w_form;    // through the W series
};
ZwegersForms zwegers_forms(const QContext& ctx, Complex u, Complex v);

// sum_n (1 - a q^{2n}) (b,c)_n / (a/b, a/c)_{n+1} q^{2n^2} (a^3/bc)^n
Complex w_func(const QContext& ctx, Complex a, Complex b, Complex c);

// mu rebuilt from W(xy/aq; x/a, y/a); the two prefactors in circulation
enum class WPrefactor { Shifted, Plain };  // (x/q,y/q,..) vs (x,y,..)
Complex mu_from_w(const MuPoint& p, WPrefactor pre);

// H_k(cos pi w | q)
Complex cont_q_hermite(const QContext& ctx, long k, Complex w);

Complex phi_factor(const MuPoint& p);
Complex j_func(const QContext& ctx, Complex w, Complex alpha);

// 2cos pi(u-v) mu(a) - (1 - q^{-alpha}) mu(alpha+1) - mu(alpha-1)
struct Residual {
    Complex residual{};
    double scale = 0.0;  // |lhs| + |rhs|
};
Residual recursion_residual(const MuPoint& p);

// theta(y/a) theta(x) / (theta(x/a) theta(y)) (x/y)^alpha mu(y,x;a)
Complex symmetry_transform(const MuPoint& p);

// Translation: mu(u+z, v+z) = Phi(u+z, v+z) mu(v,u) - (theta quotient) 1phi1
Complex translation_rhs(const MuPoint& p, Complex z);
// iq^{1/8} mu = Phi j(u-v) + j(v-u), returned divided by iq^{1/8}
Complex variation_rhs(const MuPoint& p);

}  // namespace qpsi
