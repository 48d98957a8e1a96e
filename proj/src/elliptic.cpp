#include "qpsi/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "qpsi/mu.hpp"
#include "qpsi/series.hpp"

namespace qpsi::elliptic {

namespace {

Complex e2pi(Complex u) { return std::exp(2.0 * kPi * kI * u); }

void need_nonzero(const QContext& ctx, Complex d, const char* what)
{
    if (std::abs(d) < ctx.pole_eps) throw PoleError(std::string(what) + ": vanishing denominator");
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30}); }

const Complex kFourPi2 = 4.0 * kPi * kPi;

}  // namespace

const char* to_string(Psi26Argument a) { return a == Psi26Argument::XFourth ? "x^4/q^2" : "x^2/q^2"; }

Complex period_K(const QContext& ctx)
{
    Complex e = euler(ctx);
    Complex h = pochhammer(ctx, -q_power(ctx, Ratio{1, 2}), kInf);
    return kPi / 2.0 * e * e * std::pow(h, 4);
}

Complex modulus_k(const QContext& ctx)
{
    Complex r = pochhammer(ctx, -ctx.q, kInf) / pochhammer(ctx, -q_power(ctx, Ratio{1, 2}), kInf);
    return 4.0 * q_power(ctx, Ratio{1, 4}) * std::pow(r, 4);
}

Complex modulus_kprime(const QContext& ctx)
{
    Complex h = q_power(ctx, Ratio{1, 2});
    return std::pow(pochhammer(ctx, h, kInf) / pochhammer(ctx, -h, kInf), 4);
}

Complex theta11_prime0(const QContext& ctx)
{
    // Romberg table on h, h/2, h/4, ...; the error of the central difference is even in h
    constexpr int kLevels = 10;
    Complex T[kLevels][kLevels];
    double h = 0.05;
    for (int i = 0; i < kLevels; ++i, h /= 2.0) {
        T[i][0] = (vartheta11(ctx, h) - vartheta11(ctx, -h)) / (2.0 * h);
        double f = 1.0;
        for (int j = 1; j <= i; ++j) {
            f *= 4.0;
            T[i][j] = T[i][j - 1] + (T[i][j - 1] - T[i - 1][j - 1]) / (f - 1.0);
        }
        if (i > 1 && std::abs(T[i][i] - T[i - 1][i - 1]) <= std::max(ctx.tol, 1e-14) * std::abs(T[i][i]))
            return T[i][i];
    }
    return T[kLevels - 1][kLevels - 1];
}

EllipticContext make_context(const QContext& ctx)
{
    return {ctx, period_K(ctx), modulus_k(ctx), theta11_prime0(ctx)};
}

Complex wp_diff_oracle(const EllipticContext& ec, Complex u, Complex v)
{
    const QContext& ctx = ec.ctx;
    Complex tu = vartheta11(ctx, u), tv = vartheta11(ctx, v);
    Complex den = tu * tu * tv * tv;
    need_nonzero(ctx, den, "wp_diff_oracle");
    Complex c = ec.theta_prime0;
    return -vartheta11(ctx, u + v) * vartheta11(ctx, u - v) * c * c / den;
}

Complex psi26_piece(const QContext& ctx, Complex u, Psi26Argument arg)
{
    const Complex q = ctx.q;
    const Complex x = e2pi(u);
    Complex th = theta_div(ctx, x * x / (q * q));
    need_nonzero(ctx, th * (q - x), "wp_diff_psi26");
    Complex z = arg == Psi26Argument::XFourth ? x * x * x * x / (q * q) : x * x / (q * q);
    Complex e = euler(ctx);
    Complex s = psi(ctx, {-x, x / q}, {-x / q, x, 0.0, 0.0, 0.0, 0.0}, z);
    return x / q * (q + x) / (q - x) * e * e / th * s;
}

Complex wp_diff_psi26(const EllipticContext& ec, Complex u, Complex v, Psi26Argument arg)
{
    return -kFourPi2 * (psi26_piece(ec.ctx, u, arg) - psi26_piece(ec.ctx, v, arg));
}

namespace {

// sum_n (1 + x q^n)/(1 - x q^n) x^{4n+1} q^{2n^2} / theta(x^2)
Complex bilateral_piece(const QContext& ctx, Complex u)
{
    const Complex lq = ctx.log_q();
    const Complex lx = 2.0 * kPi * kI * u;
    Complex th = theta_div(ctx, std::exp(2.0 * lx));
    need_nonzero(ctx, th, "wp_diff_bilateral");
    auto t = [&](long n) {
        double m = double(n);
        Complex xq = std::exp(lx + m * lq);
        need_nonzero(ctx, 1.0 - xq, "wp_diff_bilateral");
        return (1.0 + xq) / (1.0 - xq) * std::exp((4.0 * m + 1.0) * lx + 2.0 * m * m * lq);
    };
    return sum_bilateral(ctx, t).value / th;
}

// x/theta(x^2) sum_n x^{4n} q^{2n^2}/(1 - x q^n)^2 - x^{-4n} q^{2n^2}/(1 - q^n/x)^2
Complex split_piece(const QContext& ctx, Complex u)
{
    const Complex lq = ctx.log_q();
    const Complex lx = 2.0 * kPi * kI * u;
    const Complex x = std::exp(lx);
    Complex th = theta_div(ctx, x * x);
    need_nonzero(ctx, th, "wp_diff_split");
    auto t = [&](long n) {
        double m = double(n);
        Complex a = 1.0 - std::exp(lx + m * lq);
        Complex b = 1.0 - std::exp(-lx + m * lq);
        need_nonzero(ctx, a * b, "wp_diff_split");
        return std::exp(4.0 * m * lx + 2.0 * m * m * lq) / (a * a) - std::exp(-4.0 * m * lx + 2.0 * m * m * lq) / (b * b);
    };
    return x / th * sum_bilateral(ctx, t).value;
}

}  // namespace

Complex wp_diff_bilateral(const EllipticContext& ec, Complex u, Complex v)
{
    Complex e = euler(ec.ctx);
    return -kFourPi2 * e * e * (bilateral_piece(ec.ctx, u) - bilateral_piece(ec.ctx, v));
}

Complex wp_diff_split(const EllipticContext& ec, Complex u, Complex v)
{
    Complex e = euler(ec.ctx);
    return -kFourPi2 * e * e * (split_piece(ec.ctx, u) - split_piece(ec.ctx, v));
}

Complex curious_lhs(const QContext& ctx, Complex u, Complex v)
{
    const Complex q = ctx.q;
    const Complex x = e2pi(u), y = e2pi(v);
    const Complex s = std::exp(kPi * kI * (u + v));
    Complex den = (1.0 - x) * (1.0 - x) * (1.0 - y) * (1.0 - y);
    need_nonzero(ctx, den, "curious_lhs");
    Complex p = psi(ctx, {q * s, -q * s, x, x, y, y}, {s, -s, q * y, q * y, q * x, q * x}, q);
    return (1.0 - x * y) * (x - y) / den * p;
}

Complex curious_rhs(const QContext& ctx, Complex u, Complex v, Psi26Argument arg)
{
    return psi26_piece(ctx, u, arg) - psi26_piece(ctx, v, arg);
}

BaileyForms wp_diff_bailey_forms(const EllipticContext& ec, Complex u, Complex v)
{
    const QContext& ctx = ec.ctx;
    const Complex lq = ctx.log_q();
    const Complex x = e2pi(u), y = e2pi(v);
    BaileyForms f;
    f.psi66 = -kFourPi2 * curious_lhs(ctx, u, v);
    auto d = [&](Complex z, long n) {
        Complex r = 1.0 - z * std::exp(double(n) * lq);
        need_nonzero(ctx, r, "wp_diff_bailey");
        return r;
    };
    auto vwp = [&](long n) {
        Complex qn = std::exp(double(n) * lq);
        Complex a = d(x, n), b = d(y, n);
        return (x - y) * (1.0 - x * y * qn * qn) * qn / (a * a * b * b);
    };
    f.vwp_sum = -kFourPi2 * sum_bilateral(ctx, vwp).value;
    auto split = [&](long n) {
        Complex qn = std::exp(double(n) * lq);
        Complex a = d(x, n), b = d(y, n);
        return x * qn / (a * a) - y * qn / (b * b);
    };
    f.split = -kFourPi2 * sum_bilateral(ctx, split).value;
    return f;
}

Complex wp_diff_bailey(const EllipticContext& ec, Complex u, Complex v) { return wp_diff_bailey_forms(ec, u, v).vwp_sum; }

Complex m_func(const EllipticContext& ec, Complex u)
{
    const QContext& ctx = ec.ctx;
    Complex e = euler(ctx);
    MuPoint p{u, u, 1.0, ctx};
    return kFourPi2 * kI * q_power(ctx, Ratio{1, 8}) * e * e * e * mu(p).value;
}

Complex jacobi_combo_oracle(const EllipticContext& ec, Complex u)
{
    MuPoint p{u, u + 0.5, 1.0, ec.ctx};
    return -mu(p).value;
}

Complex jacobi_prefactor(const EllipticContext& ec)
{
    Complex t = vartheta11(ec.ctx, 0.5);
    return 2.0 * ec.K / (2.0 * kPi * kI * t);
}

Complex jacobi_psi48_printed(const EllipticContext& ec, Complex u)
{
    const QContext& ctx = ec.ctx;
    const Complex q = ctx.q;
    const Complex x = e2pi(u);
    const Complex ix = kI * x;
    Complex den = (q * q - x * x) * euler(ctx) * theta_div(ctx, -x * x / (q * q));
    need_nonzero(ctx, den, "jacobi_combo_forms");
    Complex s = psi(ctx, {ix, -ix, x / q, -x / q}, {ix / q, -ix / q, x, -x, 0.0, 0.0, 0.0, 0.0},
                    x * x * x * x / (q * q));
    return -q_power(ctx, Ratio{-9, 8}) * (q * q + x * x) * x / den * s;
}

JacobiForms jacobi_combo_forms(const EllipticContext& ec, Complex u)
{
    const QContext& ctx = ec.ctx;
    const Complex lq = ctx.log_q();
    const Complex lx = 2.0 * kPi * kI * u;
    const Complex x = std::exp(lx);
    JacobiForms f;
    f.psi48 = -jacobi_psi48_printed(ec, u);

    Complex den = euler(ctx) * theta_div(ctx, -x * x);
    need_nonzero(ctx, den, "jacobi_combo_forms");
    Complex pre = q_power(ctx, Ratio{-1, 8}) * x / den;
    auto d = [&](Complex l, long n) {
        Complex r = 1.0 - std::exp(l + 2.0 * double(n) * lq);
        need_nonzero(ctx, r, "jacobi_combo_forms");
        return r;
    };
    auto bil = [&](long n) {
        double m = double(n);
        Complex x2q = std::exp(2.0 * lx + 2.0 * m * lq);
        return (1.0 + x2q) / d(2.0 * lx, n) * std::exp(4.0 * m * lx + 2.0 * m * m * lq);
    };
    f.bilateral = pre * sum_bilateral(ctx, bil).value;
    auto split = [&](long n) {
        double m = double(n);
        return std::exp(4.0 * m * lx + 2.0 * m * m * lq) / d(2.0 * lx, n)
               - std::exp(-4.0 * m * lx + 2.0 * m * m * lq) / d(-2.0 * lx, n);
    };
    f.split = pre * sum_bilateral(ctx, split).value;
    return f;
}

EllipticDraw draw_point(Sampler& s, double qmin, double qmax)
{
    QContext ctx = s.nome(qmin, qmax);
    Complex tau = ctx.tau;
    Complex u = s.additive("u", tau, 0.4);
    Complex v = s.additive("v", tau, 0.4);
    const double m = 0.04;
    for (Complex w : {u, v, u + v, u - v, 2.0 * u, 2.0 * v, 2.0 * u + 0.5, 2.0 * v + 0.5, u + 0.5, v + 0.5,
                      u + 0.25, u - 0.25, (u + v) / 2.0, (u + v) / 2.0 + 0.5})
        require_off_lattice(w, tau, m, "elliptic draw");
    return {ctx, u, v};
}

CuriousResolution resolve_curious(std::uint64_t seed, long draws, double tol, std::optional<Complex> fixed_q)
{
    CuriousResolution res;
    for (auto arg : {Psi26Argument::XSquared, Psi26Argument::XFourth}) res.candidates.push_back({arg});
    Sampler s(seed, "CURIOUS_RELATION");
    s.fix_nome(fixed_q);
    long done = 0, attempts = 0;
    while (done < draws && attempts < 100 * draws) {
        ++attempts;
        s.clear();
        try {
            EllipticDraw d = draw_point(s);
            Complex lhs = curious_lhs(d.ctx, d.u, d.v);
            std::vector<double> errs;
            for (auto& c : res.candidates) errs.push_back(rel_err(lhs, curious_rhs(d.ctx, d.u, d.v, c.argument)));
            for (std::size_t i = 0; i < errs.size(); ++i) {
                res.candidates[i].max_rel_err = std::max(res.candidates[i].max_rel_err, errs[i]);
                ++res.candidates[i].draws;
            }
            ++done;
        } catch (const Error&) {
            ++res.rejected_samples;
        }
    }
    int passing = 0;
    for (auto& c : res.candidates) {
        c.pass = c.draws == draws && c.max_rel_err <= tol;
        if (c.pass) {
            ++passing;
            res.resolved = c.argument;
        }
    }
    if (passing != 1) res.resolved.reset();
    return res;
}

}  // namespace qpsi::elliptic
