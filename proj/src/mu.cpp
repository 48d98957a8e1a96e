#include "qpsi/mu.hpp"

#include <cmath>

namespace qpsi {

const char* to_string(Representation r)
{
    switch (r) {
    case Representation::DEF: return "DEF";
    case Representation::PSI12: return "PSI12";
    case Representation::PSI22: return "PSI22";
    case Representation::PSI02: return "PSI02";
    case Representation::PSI48: return "PSI48";
    case Representation::QHERMITE: return "QHERMITE";
    }
    return "?";
}

Representation representation_from_string(const std::string& s)
{
    for (auto r : {Representation::DEF, Representation::PSI12, Representation::PSI22, Representation::PSI02,
                   Representation::PSI48, Representation::QHERMITE}) {
        std::string n = to_string(r);
        std::string low;
        for (char c : n) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (s == n || s == low) return r;
    }
    throw DomainError("unknown representation: " + s);
}

namespace {

Complex e2pi(Complex u) { return std::exp(2.0 * kPi * kI * u); }

// -i q^{-1/8} (x/y)^{alpha/2}
Complex common_prefactor(const MuPoint& p)
{
    return -kI * q_power(p.ctx, Ratio{-1, 8}) * p.half_power();
}

void need_nonzero(const QContext& ctx, Complex d, const char* what)
{
    if (std::abs(d) < ctx.pole_eps) throw PoleError(std::string(what) + ": vanishing denominator");
}

// log prod_{j>=0} (1 - x q^{m0+j}) / (1 - (x/a) q^{m0+j}), summed in logs so that
// huge early factors (m0 very negative) never get formed
Complex log_pochhammer_ratio(const QContext& ctx, Complex x, double m0, Complex a)
{
    const Complex lq = ctx.log_q();
    const double lcut = std::log(std::min(ctx.tol, 1e-15) * 1e-2 * (1.0 - std::abs(ctx.q)));
    const double la = std::max(0.0, -std::log(std::abs(a)));
    const double lx = std::log(std::abs(x));
    const double lpole = std::log(ctx.pole_eps);
    const Complex xa = x / a;
    Complex s = 0.0;
    for (long j = 0;; ++j) {
        if (j > ctx.max_terms) throw NonConvergence("mu_def: max_terms exceeded in product");
        double m = m0 + double(j);
        if (lx + m * lq.real() + la < lcut) break;
        Complex ld = log_one_minus(xa, m, lq);
        if (ld.real() < lpole) throw PoleError("mu_def: vanishing denominator");
        s += log_one_minus(x, m, lq) - ld;
    }
    return s;
}

}  // namespace

Complex MuPoint::x() const { return e2pi(u); }
Complex MuPoint::y() const { return e2pi(v); }
Complex MuPoint::a() const { return q_power(ctx, alpha); }
Complex MuPoint::half_power() const { return std::exp(kPi * kI * alpha * (u - v)); }

MuValue mu_def(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    const Complex lq = ctx.log_q();
    const Complex a = p.a();
    const Complex x = p.x();
    const Complex th = vartheta11(ctx, p.v);
    need_nonzero(ctx, th, "mu_def");
    auto term = [&](long n) {
        double nn = double(n);
        Complex lt = 2.0 * kPi * kI * (nn + 0.5) * p.v + nn * (nn + 1.0) / 2.0 * lq;
        Complex t = std::exp(lt + log_pochhammer_ratio(ctx, x, nn + 1.0, a));
        return n % 2 != 0 ? -t : t;
    };
    SeriesValue s = sum_bilateral(ctx, term);
    return {p.half_power() / th * s.value, Representation::DEF, s.report};
}

MuValue mu_psi12(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex x = p.x(), y = p.y(), a = p.a(), q = ctx.q;
    Complex den = euler(ctx) * theta_div(ctx, x / a) * pochhammer(ctx, q / y, kInf);
    need_nonzero(ctx, den, "mu_psi12");
    SeriesValue s = eval(ctx, {{y / a}, {0.0, y}, x, SeriesKind::Bilateral});
    Complex v = common_prefactor(p) * pochhammer(ctx, a * q / y, kInf) / den * s.value;
    return {v, Representation::PSI12, s.report};
}

MuValue mu_psi22(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex x = p.x(), y = p.y(), a = p.a(), q = ctx.q;
    Complex den = euler(ctx) * theta_div(ctx, y) * theta_div(ctx, x / a);
    need_nonzero(ctx, den, "mu_psi22");
    SeriesValue s = eval(ctx, {{x / a, y / a}, {0.0, 0.0}, a, SeriesKind::Bilateral});
    Complex num = pochhammer(ctx, {a, a * q / x, a * q / y}, kInf);
    return {common_prefactor(p) * num / den * s.value, Representation::PSI22, s.report};
}

MuValue mu_psi02(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex x = p.x(), y = p.y(), a = p.a();
    Complex den = euler(ctx) * theta_div(ctx, y) * theta_div(ctx, x / a);
    need_nonzero(ctx, den, "mu_psi02");
    SeriesValue s = eval(ctx, {{}, {x, y}, x * y / a, SeriesKind::Bilateral});
    Complex num = pochhammer(ctx, {a, x, y}, kInf);
    return {common_prefactor(p) * num / den * s.value, Representation::PSI02, s.report};
}

namespace {

Complex psi48_prefactor(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex x = p.x(), y = p.y(), a = p.a(), q = ctx.q;
    Complex den = euler(ctx) * theta_div(ctx, y) * theta_div(ctx, x / a) * theta_div(ctx, x * y / (a * q));
    need_nonzero(ctx, den, "mu_psi48");
    return common_prefactor(p) * pochhammer(ctx, {x, y, a * q / x, a * q / y}, kInf) / den;
}

}  // namespace

MuValue mu_psi48(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex x = p.x(), y = p.y(), a = p.a(), q = ctx.q;
    const Complex lq = ctx.log_q();
    // sqrt(qxy/a) on the additive branch; the series only sees +- pairs
    Complex r = std::exp(0.5 * (lq + 2.0 * kPi * kI * (p.u + p.v) - p.alpha * lq));
    Complex r2 = r / q;
    HypergeometricSpec spec{{r, -r, x / a, y / a}, {r2, -r2, y, x, 0.0, 0.0, 0.0, 0.0},
                            x * x * y * y / (a * q), SeriesKind::Bilateral};
    SeriesValue s = eval(ctx, spec);
    Complex v = psi48_prefactor(p) * (1.0 - x * y / (a * q)) * s.value;
    return {v, Representation::PSI48, s.report};
}

MuValue mu_psi48_sum(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex x = p.x(), y = p.y(), a = p.a();
    const Complex lq = ctx.log_q();
    const Complex c = x * x * y * y / a;
    const Complex lc = std::log(c);
    TermWalker w;
    w.start = 1.0;
    w.up = [&](long n) {
        double m = double(n);
        return factor_ratio(ctx, {{x / a, m}, {y / a, m}}, {{x, m}, {y, m}}, double(4 * n - 1) * lq + lc);
    };
    w.down = [&](long n) {
        double m = double(n - 1);
        return factor_ratio(ctx, {{x, m}, {y, m}}, {{x / a, m}, {y / a, m}}, -double(4 * n - 5) * lq - lc);
    };
    w.weight = [&](long n) { return 1.0 - x * y / a * std::exp(double(2 * n - 1) * lq); };
    SeriesValue s = sum_terms(ctx, w);
    return {psi48_prefactor(p) * s.value, Representation::PSI48, s.report};
}

long hermite_degree(const MuPoint& p)
{
    double re = p.alpha.real();
    if (re > p.ctx.pole_eps) return -1;
    long k = std::lround(-re);
    if (std::abs(p.alpha + double(k)) < p.ctx.pole_eps) return k;
    return -1;
}

MuValue mu(const MuPoint& p, Representation r)
{
    switch (r) {
    case Representation::DEF: return mu_def(p);
    case Representation::PSI12: return mu_psi12(p);
    case Representation::PSI22: return mu_psi22(p);
    case Representation::PSI02: return mu_psi02(p);
    case Representation::PSI48: return mu_psi48(p);
    case Representation::QHERMITE: {
        long k = hermite_degree(p);
        if (k < 0) throw DomainError("QHERMITE needs alpha at a nonpositive integer");
        Complex v = -kI * q_power(p.ctx, Ratio{-1, 8}) * cont_q_hermite(p.ctx, k, p.u - p.v);
        TruncationReport rep;
        rep.n_max = k;
        rep.terms_used = k + 1;
        rep.converged = true;
        return {v, Representation::QHERMITE, rep};
    }
    }
    throw DomainError("unknown representation");
}

MuValue mu(const MuPoint& p)
{
    if (hermite_degree(p) >= 0) return mu(p, Representation::QHERMITE);
    // the 2psi2 argument is a itself; fall back once it is not comfortably inside the disc
    if (std::abs(p.a()) < 0.9) return mu_psi22(p);
    return mu_psi12(p);
}

Complex zwegers_mu(const QContext& ctx, Complex u, Complex v)
{
    const Complex lq = ctx.log_q();
    Complex th = vartheta11(ctx, v);
    need_nonzero(ctx, th, "zwegers_mu");
    auto term = [&](long n) {
        double nn = double(n);
        Complex d = 1.0 - std::exp(2.0 * kPi * kI * u + nn * lq);
        need_nonzero(ctx, d, "zwegers_mu");
        Complex t = std::exp(2.0 * kPi * kI * nn * v + nn * (nn + 1.0) / 2.0 * lq) / d;
        return n % 2 ? -t : t;
    };
    return std::exp(kPi * kI * u) / th * sum_bilateral(ctx, term).value;
}

ZwegersForms zwegers_forms(const QContext& ctx, Complex u, Complex v)
{
    const Complex lq = ctx.log_q();
    const Complex q = ctx.q;
    const Complex x = e2pi(u), y = e2pi(v);
    const Complex sxy = std::exp(kPi * kI * (u + v));
    const Complex lxy = 2.0 * kPi * kI * (u + v);
    const Complex c = kI * q_power(ctx, Ratio{-1, 8}) * sxy;
    ZwegersForms f;

    {
        Complex den = (1.0 - x / q) * (q - y) * euler(ctx) * theta_div(ctx, x * y / (q * q));
        need_nonzero(ctx, den, "zwegers_forms");
        HypergeometricSpec spec{{sxy, -sxy, x / q, y / q}, {sxy / q, -sxy / q, y, x, 0.0, 0.0, 0.0, 0.0},
                                x * x * y * y / (q * q), SeriesKind::Bilateral};
        f.psi48 = c / den * (1.0 - x * y / (q * q)) * eval(ctx, spec).value;
    }
    Complex den = euler(ctx) * theta_div(ctx, x * y);
    need_nonzero(ctx, den, "zwegers_forms");
    auto pf = [&](long n, Complex z) {
        Complex d = 1.0 - z * std::exp(double(n) * lq);
        need_nonzero(ctx, d, "zwegers_forms");
        return d;
    };
    auto vwp = [&](long n) {
        double nn = double(n);
        Complex g = std::exp(2.0 * nn * lxy + 2.0 * nn * nn * lq);
        return (1.0 - x * y * std::exp(2.0 * nn * lq)) / (pf(n, x) * pf(n, y)) * g;
    };
    f.vwp_sum = c / den * sum_bilateral(ctx, vwp).value;
    auto split = [&](long n) {
        double nn = double(n);
        Complex gp = std::exp(2.0 * nn * lxy + 2.0 * nn * nn * lq);
        Complex gm = std::exp(-2.0 * nn * lxy + 2.0 * nn * nn * lq);
        return gp / (pf(n, x) * pf(n, y)) - gm / (pf(n, 1.0 / x) * pf(n, 1.0 / y));
    };
    f.split = c / den * sum_bilateral(ctx, split).value;
    {
        Complex d = euler(ctx) * theta_div(ctx, x * y / (q * q));
        need_nonzero(ctx, d, "zwegers_forms");
        f.w_form = kI * q_power(ctx, Ratio{-9, 8}) * sxy / d * w_func(ctx, x * y / (q * q), x / q, y / q);
    }
    return f;
}

Complex w_func(const QContext& ctx, Complex a, Complex b, Complex c)
{
    const Complex lq = ctx.log_q();
    const Complex g = a * a * a / (b * c);
    // (a/b, a/c)_1 sits in t(0)
    Complex t0d = (1.0 - a / b) * (1.0 - a / c);
    need_nonzero(ctx, t0d, "w_func");
    const Complex lg = std::log(g);
    TermWalker w;
    w.start = 1.0 / t0d;
    w.up = [&](long n) {
        double m = double(n);
        return factor_ratio(ctx, {{b, m}, {c, m}}, {{a / b, m + 1}, {a / c, m + 1}}, double(4 * n + 2) * lq + lg);
    };
    w.down = [&](long n) {
        double m = double(n);
        return factor_ratio(ctx, {{a / b, m}, {a / c, m}}, {{b, m - 1}, {c, m - 1}}, -double(4 * n - 2) * lq - lg);
    };
    w.weight = [&](long n) { return 1.0 - a * std::exp(double(2 * n) * lq); };
    return sum_terms(ctx, w).value;
}

Complex mu_from_w(const MuPoint& p, WPrefactor pre)
{
    const QContext& ctx = p.ctx;
    Complex x = p.x(), y = p.y(), a = p.a(), q = ctx.q;
    Complex den = euler(ctx) * theta_div(ctx, y) * theta_div(ctx, x / a) * theta_div(ctx, x * y / (a * q));
    need_nonzero(ctx, den, "mu_from_w");
    Complex num = pre == WPrefactor::Shifted ? pochhammer(ctx, {x / q, y / q, a * q / x, a * q / y}, kInf)
                                             : pochhammer(ctx, {x, y, a * q / x, a * q / y}, kInf);
    return common_prefactor(p) * num / den * w_func(ctx, x * y / (a * q), x / a, y / a);
}

Complex cont_q_hermite(const QContext& ctx, long k, Complex w)
{
    if (k < 0) throw DomainError("cont_q_hermite: negative degree");
    Complex qk = pochhammer(ctx, ctx.q, k);
    Complex s = 0.0;
    for (long l = 0; l <= k; ++l) {
        Complex binom = qk / (pochhammer(ctx, ctx.q, l) * pochhammer(ctx, ctx.q, k - l));
        s += binom * std::exp(kPi * kI * double(k - 2 * l) * w);
    }
    return s;
}

Complex phi_factor(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex at = p.alpha * ctx.tau;
    Complex den = vartheta11(ctx, p.u - at) * vartheta11(ctx, p.v);
    need_nonzero(ctx, den, "phi_factor");
    return vartheta11(ctx, p.v - at) * vartheta11(ctx, p.u) / den * std::exp(2.0 * kPi * kI * p.alpha * (p.u - p.v));
}

Complex j_func(const QContext& ctx, Complex w, Complex alpha)
{
    Complex b = q_power(ctx, 1.0 - alpha);
    Complex den = pochhammer(ctx, b, kInf) * vartheta11(ctx, w);
    need_nonzero(ctx, den, "j_func");
    Complex s = phi(ctx, {b}, {0.0}, e2pi(w) * ctx.q);
    return kI * q_power(ctx, Ratio{1, 8}) * euler(ctx) / den * std::exp(kPi * kI * (1.0 - alpha) * w) * s;
}

Residual recursion_residual(const MuPoint& p)
{
    MuPoint up = p, dn = p;
    up.alpha += 1.0;
    dn.alpha -= 1.0;
    Complex lhs = 2.0 * std::cos(kPi * (p.u - p.v)) * mu(p).value;
    Complex rhs = (1.0 - q_power(p.ctx, -p.alpha)) * mu(up).value + mu(dn).value;
    return {lhs - rhs, std::abs(lhs) + std::abs(rhs)};
}

Complex symmetry_transform(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex x = p.x(), y = p.y(), a = p.a();
    Complex den = theta_div(ctx, x / a) * theta_div(ctx, y);
    need_nonzero(ctx, den, "symmetry_transform");
    MuPoint s = p;
    std::swap(s.u, s.v);
    return theta_div(ctx, y / a) * theta_div(ctx, x) / den * std::exp(2.0 * kPi * kI * p.alpha * (p.u - p.v))
           * mu(s).value;
}

Complex translation_rhs(const MuPoint& p, Complex z)
{
    const QContext& ctx = p.ctx;
    const Complex al = p.alpha;
    const Complex at = al * ctx.tau;
    MuPoint shifted = p;
    shifted.u += z;
    shifted.v += z;
    MuPoint swapped = p;
    std::swap(swapped.u, swapped.v);
    Complex first = phi_factor(shifted) * mu(swapped).value;

    Complex den = vartheta11(ctx, p.u) * vartheta11(ctx, p.v - at) * vartheta11(ctx, p.u + z - at)
                  * vartheta11(ctx, p.v + z);
    need_nonzero(ctx, den, "translation_rhs");
    Complex q = ctx.q;
    Complex e = euler(ctx);
    Complex second = kI * pochhammer(ctx, p.a(), kInf) * e * e * q_power(ctx, (1.0 - 4.0 * al) / 8.0)
                     * vartheta11(ctx, z) * vartheta11(ctx, p.u + p.v + z - at) / den
                     * std::exp(kPi * kI * (al - 1.0) * (p.u - p.v))
                     * phi(ctx, {q_power(ctx, 1.0 - al)}, {0.0}, e2pi(p.v - p.u) * q);
    return first - second;
}

Complex variation_rhs(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex w = p.u - p.v;
    return (phi_factor(p) * j_func(ctx, w, p.alpha) + j_func(ctx, -w, p.alpha)) / (kI * q_power(ctx, Ratio{1, 8}));
}

}  // namespace qpsi
