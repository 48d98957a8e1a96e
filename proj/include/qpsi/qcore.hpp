#pragma once

#include <complex>
#include <vector>

#include "qpsi/errors.hpp"

namespace qpsi {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline const Complex kI{0.0, 1.0};

// small exact rational used for exponents of q
struct Ratio {
    long num = 0;
    long den = 1;
};

// nome q = e^{2 pi i tau} plus numerical knobs
struct QContext {
    Complex tau{0.0, 1.0};
    Complex q{};
    double tol = 1e-12;
    long max_terms = 100000;
    double pole_eps = 1e-12;

    static QContext from_tau(Complex tau, double tol = 1e-12);
    // principal branch of log q; |q| must lie in (0,1)
    static QContext from_q(Complex q, double tol = 1e-12);

    Complex log_q() const { return 2.0 * kPi * kI * tau; }
};

// sentinel for n = infinity in pochhammer
struct Infinite {};
inline constexpr Infinite kInf{};

struct PochhammerValue {
    Complex value{};
    long truncation_terms = 0;  // factors used
    double tail_bound = 0.0;    // geometric tail |a q^M| / (1 - |q|), 0 for finite n
};

// max_terms after applying QPSI_MAX_TERMS if set
long env_max_terms(long fallback);

Complex q_power(const QContext& ctx, Ratio s);
Complex q_power(const QContext& ctx, Complex s);

PochhammerValue pochhammer_value(const QContext& ctx, Complex a, long n);
PochhammerValue pochhammer_value(const QContext& ctx, Complex a, Infinite);

Complex pochhammer(const QContext& ctx, Complex a, long n);
Complex pochhammer(const QContext& ctx, Complex a, Infinite);
Complex pochhammer(const QContext& ctx, const std::vector<Complex>& as, long n);
Complex pochhammer(const QContext& ctx, const std::vector<Complex>& as, Infinite);

// (q;q)_inf
Complex euler(const QContext& ctx);

// theta(y) = (y, q/y)_inf
Complex theta_div(const QContext& ctx, Complex y);
// theta_q(x) = (q, -x, -q/x)_inf = sum x^n q^{n(n-1)/2}
Complex theta_jtp(const QContext& ctx, Complex x);
// same, summed directly; used to cross-check the product
Complex theta_jtp_sum(const QContext& ctx, Complex x);
// -i q^{1/8} e^{-pi i u} (q, e^{2 pi i u}, q e^{-2 pi i u})_inf
Complex vartheta11(const QContext& ctx, Complex u);

}  // namespace qpsi
