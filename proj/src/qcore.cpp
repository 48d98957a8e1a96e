#include "qpsi/qcore.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace qpsi {

long env_max_terms(long fallback)
{
    const char* s = std::getenv("QPSI_MAX_TERMS");
    if (!s || !*s) return fallback;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v <= 0) return fallback;
    return v;
}

QContext QContext::from_tau(Complex tau, double tol)
{
    if (!(tau.imag() > 0.0)) throw DomainError("Im tau must be positive");
    QContext c;
    c.tau = tau;
    c.q = std::exp(2.0 * kPi * kI * tau);
    c.tol = tol;
    c.max_terms = env_max_terms(c.max_terms);
    return c;
}

QContext QContext::from_q(Complex q, double tol)
{
    double m = std::abs(q);
    if (!(m > 0.0 && m < 1.0)) throw DomainError("|q| must lie in (0,1)");
    QContext c = from_tau(std::log(q) / (2.0 * kPi * kI), tol);
    c.q = q;  // keep the caller's value bit-exact
    return c;
}

Complex q_power(const QContext& ctx, Ratio s)
{
    if (s.den == 0) throw DomainError("zero denominator in exponent");
    if (s.num == s.den) return ctx.q;
    if (s.num == 0) return 1.0;
    return std::exp(ctx.log_q() * (double(s.num) / double(s.den)));
}

Complex q_power(const QContext& ctx, Complex s)
{
    if (s == Complex(1.0, 0.0)) return ctx.q;
    return std::exp(ctx.log_q() * s);
}

namespace {

double product_cutoff(const QContext& ctx)
{
    return std::min(ctx.tol, 1e-15) * 1e-2;
}

void check_denominator(const QContext& ctx, Complex f)
{
    if (std::abs(f) < ctx.pole_eps) throw PoleError("pochhammer: vanishing denominator factor");
}

}  // namespace

PochhammerValue pochhammer_value(const QContext& ctx, Complex a, long n)
{
    return {pochhammer(ctx, a, n), n < 0 ? -n : n, 0.0};
}

PochhammerValue pochhammer_value(const QContext& ctx, Complex a, Infinite)
{
    PochhammerValue out{1.0, 0, 0.0};
    if (a == Complex(0.0)) return out;
    double aq = std::abs(ctx.q);
    if (!(aq < 1.0)) throw DomainError("infinite product needs |q| < 1");
    const double cut = product_cutoff(ctx) * (1.0 - aq);
    Complex z = a;
    for (long j = 0;; ++j) {
        if (j > ctx.max_terms) throw TruncationError("pochhammer: max_terms exceeded before tail bound met");
        double m = std::abs(z);
        if (m < cut) {
            out.truncation_terms = j;
            out.tail_bound = m / (1.0 - aq);
            break;
        }
        out.value *= 1.0 - z;
        z *= ctx.q;
    }
    return out;
}

Complex pochhammer(const QContext& ctx, Complex a, long n)
{
    if (a == Complex(0.0)) return 1.0;
    Complex p = 1.0;
    if (n >= 0) {
        Complex z = a;
        for (long j = 0; j < n; ++j) {
            p *= 1.0 - z;
            z *= ctx.q;
        }
        return p;
    }
    Complex qi = 1.0 / ctx.q;
    Complex z = a * qi;
    for (long j = 1; j <= -n; ++j) {
        Complex f = 1.0 - z;
        check_denominator(ctx, f);
        p *= f;
        z *= qi;
    }
    return 1.0 / p;
}

Complex pochhammer(const QContext& ctx, Complex a, Infinite)
{
    return pochhammer_value(ctx, a, kInf).value;
}

Complex pochhammer(const QContext& ctx, const std::vector<Complex>& as, long n)
{
    Complex p = 1.0;
    for (Complex a : as) p *= pochhammer(ctx, a, n);
    return p;
}

Complex pochhammer(const QContext& ctx, const std::vector<Complex>& as, Infinite)
{
    Complex p = 1.0;
    for (Complex a : as) p *= pochhammer(ctx, a, kInf);
    return p;
}

Complex euler(const QContext& ctx) { return pochhammer(ctx, ctx.q, kInf); }

Complex theta_div(const QContext& ctx, Complex y)
{
    if (y == Complex(0.0)) throw DomainError("theta(0) is undefined");
    return pochhammer(ctx, y, kInf) * pochhammer(ctx, ctx.q / y, kInf);
}

Complex theta_jtp(const QContext& ctx, Complex x)
{
    if (x == Complex(0.0)) throw DomainError("theta_q(0) is undefined");
    return euler(ctx) * pochhammer(ctx, -x, kInf) * pochhammer(ctx, -ctx.q / x, kInf);
}

Complex theta_jtp_sum(const QContext& ctx, Complex x)
{
    // terms x^n q^{n(n-1)/2}, done in log space so large |x| cannot overflow early
    const Complex lq = ctx.log_q();
    const Complex lx = std::log(x);
    Complex s = 1.0;
    const double cut = product_cutoff(ctx);
    for (long n = 1;; ++n) {
        if (n > ctx.max_terms) throw NonConvergence("theta_jtp_sum: max_terms exceeded");
        double nn = double(n);
        Complex tp = std::exp(nn * lx + nn * (nn - 1) / 2.0 * lq);
        Complex tm = std::exp(-nn * lx + nn * (nn + 1) / 2.0 * lq);
        s += tp + tm;
        if (std::abs(tp) + std::abs(tm) < cut * std::max(1.0, std::abs(s)) && nn * nn > 4.0 * std::abs(lx))
            break;
    }
    return s;
}

Complex vartheta11(const QContext& ctx, Complex u)
{
    Complex x = std::exp(2.0 * kPi * kI * u);
    return -kI * q_power(ctx, Ratio{1, 8}) * std::exp(-kPi * kI * u) * euler(ctx)
           * pochhammer(ctx, x, kInf) * pochhammer(ctx, ctx.q / x, kInf);
}

}  // namespace qpsi
