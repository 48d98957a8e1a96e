#include "qpsi/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "json.hpp"
#include "qpsi/elliptic.hpp"
#include "qpsi/mu.hpp"
#include "qpsi/series.hpp"

namespace qpsi::identities {

namespace {

using CV = std::vector<Complex>;

// convergence region shrunk by this much in log-modulus before a draw is accepted
constexpr double kLogMargin = 0.1;
constexpr double kLattice = 0.04;
constexpr double kSmall = 1e-8;

Complex e2pi(Complex u) { return std::exp(2.0 * kPi * kI * u); }

Complex bpsi(const QContext& ctx, CV up, CV lo, Complex x)
{
    HypergeometricSpec spec{std::move(up), std::move(lo), x, SeriesKind::Bilateral};
    auto c = classify(ctx, spec, kLogMargin);
    if (c.status != Convergence::Convergent) throw RejectSample(c.reason);
    return eval(ctx, spec).value;
}

Complex uphi(const QContext& ctx, CV up, CV lo, Complex x)
{
    HypergeometricSpec spec{std::move(up), std::move(lo), x, SeriesKind::Unilateral};
    auto c = classify(ctx, spec, kLogMargin);
    if (c.status != Convergence::Convergent) throw RejectSample(c.reason);
    return eval(ctx, spec).value;
}

Complex P(const QContext& ctx, const CV& as) { return pochhammer(ctx, as, kInf); }
Complex th(const QContext& ctx, Complex y) { return theta_div(ctx, y); }

// a denominator; near-zero ones reject the draw
Complex den(Complex d)
{
    if (!(std::abs(d) > kSmall)) throw RejectSample("near a pole");
    return d;
}

Complex prod(const CV& v)
{
    Complex p = 1.0;
    for (Complex z : v) p *= z;
    return p;
}

CV draw_vec(Sampler& s, const std::string& name, int n, double lo, double hi)
{
    CV out;
    for (int j = 1; j <= n; ++j) out.push_back(s.annulus(name + std::to_string(j), lo, hi));
    return out;
}

// |x| log-uniform strictly inside lo < |x| < hi, margin on both ends
Complex in_annulus(Sampler& s, const std::string& name, double lo, double hi)
{
    double a = lo * std::exp(0.15), b = hi * std::exp(-0.15);
    if (a >= b) throw RejectSample("empty annulus for " + name);
    return s.annulus(name, a, b);
}

CV scaled(const CV& v, Complex f)
{
    CV out;
    for (Complex z : v) out.push_back(z * f);
    return out;
}

CV over(Complex f, const CV& v)
{
    CV out;
    for (Complex z : v) out.push_back(f / z);
    return out;
}

void off(const QContext& ctx, Complex w, const char* what) { require_off_lattice(w, ctx.tau, kLattice, what); }

// ---- 2.x layer -------------------------------------------------------------

std::vector<Check> inversion(Sampler& s)
{
    QContext ctx = s.nome(0.05, 0.5);
    std::vector<Check> out;
    for (int r = 1; r <= 3; ++r) {
        std::string tag = "r" + std::to_string(r) + "_";
        CV a = draw_vec(s, tag + "a", r, 0.5, 2.0);
        CV b = draw_vec(s, tag + "b", r, 0.1, 1.2);
        Complex x = in_annulus(s, tag + "x", std::abs(prod(b) / prod(a)), 1.0);
        Complex l = bpsi(ctx, a, b, x);
        Complex rr = bpsi(ctx, over(ctx.q, b), over(ctx.q, a), prod(b) / (prod(a) * x));
        out.push_back({"r = " + std::to_string(r), l, rr});
    }
    return out;
}

// A-type; with_bq restores the (q b_m/c_m)_inf factor that the printed sum drops
Trial slater_a(int r, bool with_bq)
{
    return [r, with_bq](Sampler& s) -> std::vector<Check> {
        QContext ctx = s.nome(0.05, r >= 3 ? 0.3 : 0.5);
        Complex q = ctx.q;
        CV a = draw_vec(s, "a", r, 0.5, 1.5);
        CV b = draw_vec(s, "b", r, 0.05, 0.3);
        CV c = draw_vec(s, "c", r, 0.5, 1.5);
        Complex x = in_annulus(s, "x", std::abs(prod(b) / prod(a)), 1.0);
        Complex d = prod(a) / prod(c);
        Complex lhs = th(ctx, d * x * q) * bpsi(ctx, a, b, x);
        for (int j = 0; j < r; ++j) lhs *= P(ctx, {b[j], q / a[j]}) / den(th(ctx, c[j]));
        Complex rhs = 0.0;
        for (int m = 0; m < r; ++m) {
            Complex t = th(ctx, c[m] * d * x) / den(th(ctx, c[m])) * P(ctx, {c[m] / a[m]});
            if (with_bq) t *= P(ctx, {b[m] * q / c[m]});
            for (int j = 0; j < r; ++j)
                if (j != m) t *= P(ctx, {c[m] / a[j], b[j] * q / c[m]}) / den(th(ctx, c[m] / c[j]));
            rhs += t * bpsi(ctx, scaled(a, q / c[m]), scaled(b, q / c[m]), x);
        }
        return {{"r = " + std::to_string(r), lhs, rhs}};
    };
}

// BC-type with 2r+2 b's; both sides at argument z
std::pair<Complex, Complex> bc_sides(const QContext& ctx, Complex a, const CV& al, const CV& bs, Complex z)
{
    const Complex q = ctx.q;
    const Complex sa = std::sqrt(a);
    const std::size_t r = al.size();
    CV up{sa * q, -sa * q}, lo{sa, -sa};
    for (Complex b : bs) {
        up.push_back(b);
        lo.push_back(a * q / b);
    }
    Complex lhs = (1.0 - a) / den(th(ctx, a)) * bpsi(ctx, up, lo, z);
    for (Complex b : bs) lhs *= P(ctx, {q / b, a * q / b});
    for (Complex ak : al) lhs /= den(th(ctx, ak) * th(ctx, ak / a));

    Complex rhs = 0.0;
    for (std::size_t m = 0; m < r; ++m) {
        Complex am = al[m];
        Complex t = (1.0 - am * am / a) / den(th(ctx, am) * th(ctx, am / a) * th(ctx, am * am / a));
        for (Complex b : bs) t *= P(ctx, {am * q / b, a * q / (am * b)});
        for (std::size_t k = 0; k < r; ++k)
            if (k != m) t /= den(th(ctx, al[k] / am) * th(ctx, al[k] * am / a));
        Complex sm = am / sa;
        CV u2{sm * q, -sm * q}, l2{sm, -sm};
        for (Complex b : bs) {
            u2.push_back(am * b / a);
            l2.push_back(am * q / b);
        }
        rhs += t * bpsi(ctx, u2, l2, z);
    }
    return {lhs, rhs};
}

// printed_arg uses a^{r-1} q^{r-2}/prod b, which only matches the r = 1 summation after a shift
Trial slater_bc(int r, bool printed_arg)
{
    return [r, printed_arg](Sampler& s) -> std::vector<Check> {
        QContext ctx = s.nome(0.05, 0.5);
        Complex q = ctx.q;
        Complex a = s.annulus("a", 0.3, 0.6);
        CV al = draw_vec(s, "a", r, 0.5, 1.5);
        CV bs = draw_vec(s, "b", 2 * r + 2, 0.9, 1.5);
        Complex z = printed_arg ? std::pow(a, r - 1) * std::pow(q, r - 2) / prod(bs)
                                : std::pow(a, r + 1) * std::pow(q, r) / prod(bs);
        auto [l, rr] = bc_sides(ctx, a, al, bs, z);
        return {{"r = " + std::to_string(r), l, rr}};
    };
}

std::vector<Check> ramanujan(Sampler& s)
{
    QContext ctx = s.nome(0.05, 0.4);
    Complex q = ctx.q;
    Complex a = s.annulus("a", 0.3, 3.0);
    Complex b = s.annulus("b", 0.05, 0.6);
    Complex x = in_annulus(s, "x", std::abs(b / a), 1.0);
    Complex lhs = bpsi(ctx, {a}, {b}, x);
    Complex rhs = P(ctx, {a * x, q / (a * x), q, b / a}) / den(P(ctx, {x, b / (a * x), b, q / a}));
    return {{"sum = product", lhs, rhs}};
}

std::vector<Check> bailey66(Sampler& s)
{
    QContext ctx = s.nome(0.05, 0.4);
    Complex q = ctx.q;
    Complex a = s.annulus("a", 0.2, 0.8);
    CV p = draw_vec(s, "b", 4, 0.8, 1.5);
    Complex b = p[0], c = p[1], d = p[2], e = p[3];
    Complex sa = std::sqrt(a);
    Complex z = q * a * a / (b * c * d * e);
    Complex lhs = bpsi(ctx, {sa * q, -sa * q, b, c, d, e}, {sa, -sa, a * q / b, a * q / c, a * q / d, a * q / e}, z);
    Complex rhs = P(ctx, {a * q, a * q / (b * c), a * q / (b * d), a * q / (b * e), a * q / (c * d), a * q / (c * e),
                          a * q / (d * e), q, q / a})
                  / den(P(ctx, {a * q / b, a * q / c, a * q / d, a * q / e, q / b, q / c, q / d, q / e, z}));
    return {{"sum = product", lhs, rhs}};
}

struct A2Draw {
    QContext ctx;
    Complex a1, a2, b1, b2, c1, c2, x;
};

A2Draw draw_a2(Sampler& s)
{
    A2Draw d;
    d.ctx = s.nome(0.05, 0.5);
    d.a1 = s.annulus("a1", 0.5, 1.5);
    d.a2 = s.annulus("a2", 0.5, 1.5);
    d.b1 = s.annulus("b1", 0.05, 0.3);
    d.b2 = s.annulus("b2", 0.05, 0.3);
    d.c1 = s.annulus("c1", 0.5, 1.5);
    d.c2 = s.annulus("c2", 0.5, 1.5);
    d.x = in_annulus(s, "x", std::abs(d.b1 * d.b2 / (d.a1 * d.a2)), 1.0);
    return d;
}

// three two-term variants; with_bq as in slater_a
Trial slater_a2(int variant, bool with_bq)
{
    return [variant, with_bq](Sampler& s) -> std::vector<Check> {
        A2Draw d = draw_a2(s);
        const QContext& ctx = d.ctx;
        Complex q = ctx.q, a1 = d.a1, a2 = d.a2, b1 = d.b1, b2 = d.b2, x = d.x;
        auto pref = [&](Complex c1, Complex c2, Complex bb1, Complex bb2) {
            Complex t = q / c1 * th(ctx, a1 * a2 * x / (q * c2)) * th(ctx, c2)
                        / den(th(ctx, a1 * a2 * x / (c1 * c2)) * th(ctx, c1 / c2)) * P(ctx, {c1 / a1, c1 / a2, q * bb2 / c1})
                        / den(P(ctx, {q / a1, q / a2, b1, b2}));
            if (with_bq) t *= P(ctx, {q * bb1 / c1});
            return t;
        };
        Complex xi = b1 * b2 / (a1 * a2 * x);
        auto same = [&](Complex c) { return bpsi(ctx, {q * a1 / c, q * a2 / c}, {q * b1 / c, q * b2 / c}, x); };
        auto flipped = [&](Complex c) { return bpsi(ctx, {c / b1, c / b2}, {c / a1, c / a2}, xi); };
        Complex t1 = pref(d.c1, d.c2, b1, b2), t2 = pref(d.c2, d.c1, b2, b1);
        Complex rhs;
        if (variant == 1) rhs = t1 * same(d.c1) + t2 * same(d.c2);
        else if (variant == 2) rhs = t1 * same(d.c1) + t2 * flipped(d.c2);
        else rhs = t1 * flipped(d.c1) + t2 * flipped(d.c2);
        return {{"variant " + std::to_string(variant), bpsi(ctx, {a1, a2}, {b1, b2}, x), rhs}};
    };
}

std::vector<Check> bailey_vwp_a(Sampler& s)
{
    QContext ctx = s.nome(0.05, 0.5);
    Complex q = ctx.q;
    Complex a = s.annulus("a", 0.3, 0.7);
    CV p = draw_vec(s, "c", 4, 0.7, 1.3);
    Complex c = p[0], d = p[1], e = p[2], f = p[3];
    Complex sa = std::sqrt(a);
    Complex lhs = bpsi(ctx, {e, f}, {a * q / c, a * q / d}, a * q / (e * f));
    Complex rhs = P(ctx, {q / c, q / d, a * q / e, a * q / f}) / den(P(ctx, {a * q, q / a, a * q / (c * d), a * q / (e * f)}))
                  * bpsi(ctx, {sa * q, -sa * q, c, d, e, f},
                         {sa, -sa, a * q / c, a * q / d, a * q / e, a * q / f, 0.0, 0.0},
                         a * a * a * q * q / (c * d * e * f));
    return {{"2psi2 = 6psi8", lhs, rhs}};
}

std::vector<Check> bailey_vwp_b(Sampler& s)
{
    QContext ctx = s.nome(0.05, 0.5);
    Complex q = ctx.q;
    Complex a = s.annulus("a", 0.6, 1.2), b = s.annulus("b", 0.6, 1.2);
    Complex c = s.annulus("c", 0.05, 0.3), d = s.annulus("d", 0.05, 0.3);
    Complex x = in_annulus(s, "x", std::abs(c * d / (a * b)), 1.0);
    Complex abx = a * b * x;
    Complex w = std::sqrt(q * abx), w2 = std::sqrt(abx / q);
    Complex lhs = bpsi(ctx, {a, b}, {c, d}, x);
    Complex rhs = P(ctx, {a * x, b * x, q * c / abx, q * d / abx}) / den(P(ctx, {x, abx, q * q / abx, c * d / abx}))
                  * bpsi(ctx, {w, -w, abx / c, abx / d, a, b}, {w2, -w2, c, d, b * x, a * x, 0.0, 0.0}, c * d * x / q);
    return {{"2psi2 = 6psi8", lhs, rhs}};
}

// the r = 2 BC identity, at the point that the limit to the 2psi2 A-type form passes through
// (b5, b6 left finite and free)
std::vector<Check> slater_bc_8psi8(Sampler& s)
{
    A2Draw d = draw_a2(s);
    Complex b5 = s.annulus("b5", 0.5, 2.0), b6 = s.annulus("b6", 0.5, 2.0);
    const QContext& ctx = d.ctx;
    Complex q = ctx.q;
    Complex A = d.a1 * d.a2 * d.x;
    Complex a = A / q;
    CV al{A / d.c1, A / d.c2};
    CV bs{d.a1, d.a2, A / d.b1, A / d.b2, b5, b6};
    auto [l, r] = bc_sides(ctx, a, al, bs, a * a * a * q * q / prod(bs));
    return {{"8psi8", l, r}};
}

Trial bailey_t(int k)
{
    return [k](Sampler& s) -> std::vector<Check> {
        QContext ctx = s.nome(0.05, 0.5);
        Complex q = ctx.q;
        Complex a = s.annulus("a", 0.6, 1.2), b = s.annulus("b", 0.6, 1.2);
        Complex c = s.annulus("c", 0.2, 0.5), d = s.annulus("d", 0.2, 0.5);
        Complex x = in_annulus(s, "x", std::abs(c * d / (a * b)), 1.0);
        Complex abx = a * b * x;
        // (first, second) roles: T0 (a,c | b,d), T1 (b,d | a,c), T2 (a,d | b,c), T3 (b,c | a,d)
        Complex p1, c1, p2, c2;
        switch (k) {
        case 0: p1 = a; c1 = c; p2 = b; c2 = d; break;
        case 1: p1 = b; c1 = d; p2 = a; c2 = c; break;
        case 2: p1 = a; c1 = d; p2 = b; c2 = c; break;
        default: p1 = b; c1 = c; p2 = a; c2 = d; break;
        }
        Complex rhs = P(ctx, {p1 * x, c1 / p1, c2 / p2, q * c1 / abx}) / den(P(ctx, {x, c1, q / p2, c * d / abx}))
                      * bpsi(ctx, {p1, abx / c1}, {p1 * x, c2}, c1 / p1);
        return {{"T" + std::to_string(k), bpsi(ctx, {a, b}, {c, d}, x), rhs}};
    };
}

// ---- generalized mu --------------------------------------------------------

// theta zeros and Pochhammer poles of the mu expressions at p
void guard_mu(const MuPoint& p)
{
    const QContext& ctx = p.ctx;
    Complex at = p.alpha * ctx.tau;
    off(ctx, p.u, "u");
    off(ctx, p.v, "v");
    off(ctx, p.u - at, "u - alpha tau");
    off(ctx, p.v - at, "v - alpha tau");
    off(ctx, p.u + p.v - at, "u + v - alpha tau");
    off(ctx, p.u - p.v, "u - v");
}

MuPoint draw_mu(Sampler& s, double qmax = 0.5)
{
    MuPoint p;
    p.ctx = s.nome(0.05, qmax);
    p.u = s.additive("u", p.ctx.tau, 0.4);
    p.v = s.additive("v", p.ctx.tau, 0.4);
    p.alpha = s.box("alpha", 0.05, 2.0, 0.3);
    guard_mu(p);
    return p;
}

MuPoint shifted(const MuPoint& p, Complex z)
{
    MuPoint s = p;
    s.u += z;
    s.v += z;
    guard_mu(s);
    return s;
}

Complex mu_at(const MuPoint& p) { return mu(p).value; }

std::vector<Check> mu_equiv(Sampler& s)
{
    MuPoint p = draw_mu(s);
    // the 2psi2 expression sums a power series in a
    if (std::abs(p.a()) > std::exp(-kLogMargin)) throw RejectSample("|a| too close to 1 for the 2psi2 form");
    const Representation reps[] = {Representation::DEF, Representation::PSI12, Representation::PSI22,
                                   Representation::PSI02, Representation::PSI48};
    Complex vals[5];
    for (int i = 0; i < 5; ++i) vals[i] = mu(p, reps[i]).value;
    std::vector<Check> out;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            out.push_back({std::string(to_string(reps[i])) + " vs " + to_string(reps[j]), vals[i], vals[j]});
    return out;
}

struct FreeDraw {
    MuPoint p;
    Complex x, y, a, xp, yp;
    Complex up, vp;  // additive coordinates of x', y'
};

FreeDraw draw_free(Sampler& s)
{
    FreeDraw f;
    f.p = draw_mu(s);
    const QContext& ctx = f.p.ctx;
    Complex up = s.additive("u'", ctx.tau, 0.4), vp = s.additive("v'", ctx.tau, 0.4);
    off(ctx, up, "u'");
    off(ctx, vp, "v'");
    off(ctx, up - vp, "u' - v'");
    off(ctx, f.p.u + f.p.v + up + vp - f.p.alpha * ctx.tau, "u + v + u' + v' - alpha tau");
    f.x = f.p.x();
    f.y = f.p.y();
    f.a = f.p.a();
    f.xp = e2pi(up);
    f.yp = e2pi(vp);
    f.up = up;
    f.vp = vp;
    s.record("x'", f.xp);
    s.record("y'", f.yp);
    return f;
}

// swap_fix puts the second term's theta(y y') theta(x y'/a) where the printed display has
// theta(x y') theta(y y'/a)
Trial thm11_1(bool swap_fix)
{
    return [swap_fix](Sampler& s) -> std::vector<Check> {
        FreeDraw f = draw_free(s);
        const QContext& ctx = f.p.ctx;
        Complex q = ctx.q, x = f.x, y = f.y, a = f.a, xp = f.xp, yp = f.yp;
        MuPoint p1 = shifted(f.p, f.up), p2 = shifted(f.p, f.vp);
        Complex common = den(th(ctx, x * y * xp * yp / (q * q * a)) * th(ctx, y) * th(ctx, x / a));
        Complex t1 = xp * th(ctx, x * y * yp / (q * q * a)) * th(ctx, y * xp) * th(ctx, x * xp / a) * th(ctx, q / yp)
                     / (common * den(th(ctx, yp / xp))) * mu_at(p1);
        Complex mid = swap_fix ? th(ctx, y * yp) * th(ctx, x * yp / a) : th(ctx, x * yp) * th(ctx, y * yp / a);
        Complex t2 = yp * th(ctx, x * y * xp / (q * q * a)) * mid * th(ctx, q / xp) / (common * den(th(ctx, xp / yp)))
                     * mu_at(p2);
        return {{"three-term", mu_at(f.p), t1 + t2}};
    };
}

// -i q^{-1/8} (x/y)^{alpha/2}
Complex mu_pref(const MuPoint& p) { return -kI * q_power(p.ctx, Ratio{-1, 8}) * p.half_power(); }

// the 1.12-type right side; bessel is the 0phi1 factor (or its 1phi1 replacement)
Complex thm11_2_rhs(const FreeDraw& f, Complex bessel)
{
    const QContext& ctx = f.p.ctx;
    Complex q = ctx.q, x = f.x, y = f.y, a = f.a, xp = f.xp;
    MuPoint p1 = shifted(f.p, f.up);
    Complex d0 = den(th(ctx, x * xp / (q * q)) * th(ctx, y) * th(ctx, x / a));
    Complex t1 = xp * th(ctx, x / (q * q)) * th(ctx, y * xp) * th(ctx, x * xp / a) * th(ctx, q * y / a)
                 / (d0 * den(th(ctx, a / (y * xp)))) * mu_at(p1);
    Complex t2 = mu_pref(f.p) * a / y * th(ctx, x * y * xp / (q * q * a)) * th(ctx, q / xp) * P(ctx, {a, q * y / x})
                 / (d0 * den(th(ctx, y * xp / a))) * bessel;
    return t1 + t2;
}

std::vector<Check> thm11_2(Sampler& s)
{
    FreeDraw f = draw_free(s);
    const QContext& ctx = f.p.ctx;
    Complex q = ctx.q;
    Complex b = uphi(ctx, {}, {q * f.y / f.x}, q * q * f.y / (f.a * f.x));
    return {{"two-term with 0phi1", mu_at(f.p), thm11_2_rhs(f, b)}};
}

std::vector<Check> thm11_3(Sampler& s)
{
    FreeDraw f = draw_free(s);
    const QContext& ctx = f.p.ctx;
    Complex q = ctx.q, x = f.x, y = f.y, a = f.a;
    Complex pf = mu_pref(f.p);
    Complex d0 = den(th(ctx, a / (q * q)) * th(ctx, y) * th(ctx, x / a));
    Complex t1 = pf * a / x * th(ctx, x / (q * q)) * th(ctx, q * y / a) * P(ctx, {a, q * x / y})
                 / (d0 * den(th(ctx, x / y))) * uphi(ctx, {}, {q * x / y}, q * q * x / (a * y));
    Complex t2 = pf * a / y * th(ctx, y / (q * q)) * th(ctx, q * x / a) * P(ctx, {a, q * y / x})
                 / (d0 * den(th(ctx, y / x))) * uphi(ctx, {}, {q * y / x}, q * q * y / (a * x));
    return {{"two 0phi1 terms", mu_at(f.p), t1 + t2}};
}

// (qy/x)_inf 0phi1(-; qy/x; q, q^2 y/(ax)) = 1phi1(q/a; 0; q, qy/x)
std::vector<Check> thm11_2_bessel(Sampler& s)
{
    FreeDraw f = draw_free(s);
    const QContext& ctx = f.p.ctx;
    Complex q = ctx.q, x = f.x, y = f.y, a = f.a;
    Complex b0 = uphi(ctx, {}, {q * y / x}, q * q * y / (a * x));
    Complex b1 = uphi(ctx, {q / a}, {0.0}, q * y / x);
    Complex lead = P(ctx, {q * y / x});
    return {{"0phi1 vs 1phi1", lead * b0, b1},
            {"two-term with 1phi1", mu_at(f.p), thm11_2_rhs(f, b1 / den(lead))}};
}

std::vector<Check> thm12(Sampler& s)
{
    QContext ctx = s.nome(0.05, 0.5);
    Complex u = s.additive("u", ctx.tau, 0.4), v = s.additive("v", ctx.tau, 0.4);
    for (Complex w : {u, v, u + v, u - v}) off(ctx, w, "a = q draw");
    Complex z = zwegers_mu(ctx, u, v);
    auto f = zwegers_forms(ctx, u, v);
    MuPoint p{u, v, 1.0, ctx};
    return {{"4psi8", f.psi48, z},
            {"very-well-poised sum", f.vwp_sum, z},
            {"split sum", f.split, z},
            {"W series", f.w_form, z},
            {"generalized mu at alpha = 1", mu_def(p).value, z}};
}

std::vector<Check> mu_w(Sampler& s)
{
    MuPoint p = draw_mu(s);
    return {{"W with (x/q, y/q, ...) prefactor", mu_at(p), mu_from_w(p, WPrefactor::Shifted)}};
}

// printed_phi evaluates Phi at (u, v) instead of (u + z, v + z)
Trial trans(bool printed_phi)
{
    return [printed_phi](Sampler& s) -> std::vector<Check> {
        MuPoint p = draw_mu(s);
        const QContext& ctx = p.ctx;
        Complex z = s.additive("z", ctx.tau, 0.4);
        off(ctx, z, "z");
        MuPoint ps = shifted(p, z);
        off(ctx, p.u + p.v + z - p.alpha * ctx.tau, "u + v + z - alpha tau");
        MuPoint sw = p;
        std::swap(sw.u, sw.v);
        guard_mu(sw);
        Complex rhs = translation_rhs(p, z);
        if (printed_phi) rhs += (phi_factor(p) - phi_factor(ps)) * mu_at(sw);
        return {{"translation", mu_at(ps), rhs}};
    };
}

std::vector<Check> variation(Sampler& s)
{
    MuPoint p = draw_mu(s);
    // j carries 1/(q^{1-alpha})_inf
    for (double k : {1.0, 2.0})
        if (std::abs(p.alpha - k) < 0.05) throw RejectSample("alpha near a pole of j");
    return {{"Phi j + j", mu_at(p), variation_rhs(p)}};
}

std::vector<Check> symmetry(Sampler& s)
{
    MuPoint p = draw_mu(s);
    MuPoint sw = p;
    std::swap(sw.u, sw.v);
    guard_mu(sw);
    return {{"u <-> v", mu_at(p), symmetry_transform(p)}};
}

std::vector<Check> hermite(Sampler& s)
{
    QContext ctx = s.nome(0.05, 0.5);
    Complex u = s.additive("u", ctx.tau, 0.4), v = s.additive("v", ctx.tau, 0.4);
    off(ctx, v, "v");
    std::vector<Check> out;
    for (long k = 0; k <= 10; ++k) {
        MuPoint p{u, v, Complex(double(-k)), ctx};
        Complex h = -kI * q_power(ctx, Ratio{-1, 8}) * cont_q_hermite(ctx, k, u - v);
        out.push_back({"k = " + std::to_string(k), mu_def(p).value, h});
    }
    return out;
}

std::vector<Check> recursion(Sampler& s)
{
    MuPoint p = draw_mu(s);
    MuPoint up = p, dn = p;
    up.alpha += 1.0;
    dn.alpha -= 1.0;
    guard_mu(up);
    guard_mu(dn);
    Complex lhs = 2.0 * std::cos(kPi * (p.u - p.v)) * mu_at(p);
    Complex rhs = (1.0 - q_power(p.ctx, -p.alpha)) * mu_at(up) + mu_at(dn);
    return {{"three-term in alpha", lhs, rhs}};
}

std::vector<Check> triple_product(Sampler& s)
{
    QContext ctx = s.nome(0.05, 0.5);
    Complex x = s.annulus("x", 0.2, 5.0);
    return {{"product vs sum", theta_jtp(ctx, x), theta_jtp_sum(ctx, x)}};
}

// ---- elliptic --------------------------------------------------------------

std::vector<Check> wp_forms(Sampler& s)
{
    using namespace elliptic;
    auto d = draw_point(s, 0.05, 0.4);
    auto ec = make_context(d.ctx);
    Complex o = wp_diff_oracle(ec, d.u, d.v);
    auto b = wp_diff_bailey_forms(ec, d.u, d.v);
    return {{"2psi6", wp_diff_psi26(ec, d.u, d.v), o},
            {"bilateral", wp_diff_bilateral(ec, d.u, d.v), o},
            {"split", wp_diff_split(ec, d.u, d.v), o},
            {"Bailey 6psi6", b.psi66, o},
            {"Bailey sum", b.vwp_sum, o},
            {"Bailey split", b.split, o},
            {"M(u) - M(v)", m_func(ec, d.u) - m_func(ec, d.v), o}};
}

std::vector<Check> m_periodicity(Sampler& s)
{
    using namespace elliptic;
    auto d = draw_point(s, 0.05, 0.4);
    auto ec = make_context(d.ctx);
    Complex m = m_func(ec, d.u);
    return {{"u + 1", m_func(ec, d.u + 1.0), m}, {"u + tau", m_func(ec, d.u + d.ctx.tau), m}, {"-u", m_func(ec, -d.u), m}};
}

std::vector<Check> jacobi_forms(Sampler& s)
{
    using namespace elliptic;
    auto d = draw_point(s, 0.05, 0.4);
    auto ec = make_context(d.ctx);
    Complex o = jacobi_combo_oracle(ec, d.u);
    auto f = jacobi_combo_forms(ec, d.u);
    return {{"4psi8", f.psi48, o}, {"bilateral", f.bilateral, o}, {"split", f.split, o}};
}

std::vector<Check> jacobi_printed(Sampler& s)
{
    using namespace elliptic;
    auto d = draw_point(s, 0.05, 0.4);
    auto ec = make_context(d.ctx);
    return {{"4psi8 as printed", jacobi_psi48_printed(ec, d.u), jacobi_combo_oracle(ec, d.u)}};
}

Trial curious(elliptic::Psi26Argument arg)
{
    return [arg](Sampler& s) -> std::vector<Check> {
        using namespace elliptic;
        auto d = draw_point(s, 0.05, 0.4);
        return {{std::string("2psi6 at ") + to_string(arg), curious_lhs(d.ctx, d.u, d.v),
                 curious_rhs(d.ctx, d.u, d.v, arg)}};
    };
}

const std::string kMuDomain =
    "|q| in [0.05, 0.5]; u, v = s + t tau, s in [0,1), |t| <= 0.4; Re alpha in [0.05, 2], |Im alpha| <= 0.3; "
    "theta zeros at distance >= 0.04 in lattice coordinates";
const std::string kEllDomain = "|q| in [0.05, 0.4]; u, v = s + t tau, |t| <= 0.4, kept off the lattice and half periods";

std::vector<IdentityDescriptor> build_registry()
{
    std::vector<IdentityDescriptor> r;
    auto add = [&](std::string id, std::string ref, int arity, std::string dom, Trial t, double tol = 1e-8) {
        r.push_back({std::move(id), std::move(ref), arity, std::move(dom), tol, std::move(t)});
    };
    add("INV_R", "Slater: rpsi_r reflection n -> -n, r = 1, 2, 3", 13,
        "|q| in [0.05, 0.5]; |a_j| in [0.5, 2], |b_j| in [0.1, 1.2]; x inside the convergence annulus", inversion);
    for (int k = 1; k <= 3; ++k)
        add("SLATER_A_R" + std::to_string(k), "Slater: A-type rpsi_r transformation, r = " + std::to_string(k),
            3 * k + 2,
            std::string("|q| in [0.05, ") + (k == 3 ? "0.3" : "0.5")
                + "]; |a|, |c| in [0.5, 1.5], |b| in [0.05, 0.3]; x inside the annulus; (q b_m/c_m)_inf kept in term m",
            slater_a(k, true));
    for (int k = 1; k <= 2; ++k)
        add("SLATER_BC_R" + std::to_string(k), "Slater: BC-type very-well-poised transformation, r = " + std::to_string(k),
            3 * k + 4,
            "|q| in [0.05, 0.5]; |a| in [0.3, 0.6], |a_k| in [0.5, 1.5], |b_j| in [0.9, 1.5]; argument a^{r+1} q^r / prod b",
            slater_bc(k, false));
    add("RAMANUJAN_1PSI1", "Ramanujan 1psi1 summation", 4,
        "|q| in [0.05, 0.4]; |a| in [0.3, 3], |b| in [0.05, 0.6], |b/a| < |x| < 1", ramanujan);
    add("BAILEY_6PSI6", "Bailey 6psi6 summation", 6,
        "|q| in [0.05, 0.4]; |a| in [0.2, 0.8], |b|, |c|, |d|, |e| in [0.8, 1.5]; |q a^2/bcde| < 1", bailey66);
    for (int k = 1; k <= 3; ++k)
        add("SLATER_A2_" + std::to_string(k), "Slater: 2psi2 two-term transformation, variant " + std::to_string(k), 8,
            "|q| in [0.05, 0.5]; |a|, |c| in [0.5, 1.5], |b| in [0.05, 0.3]; x inside the annulus", slater_a2(k, true));
    add("BAILEY_VWP_A", "Bailey: 2psi2 with argument aq/ef as a very-well-poised 6psi8", 6,
        "|q| in [0.05, 0.5]; |a| in [0.3, 0.7], |c|, |d|, |e|, |f| in [0.7, 1.3]", bailey_vwp_a);
    add("BAILEY_VWP_B", "Bailey: general 2psi2 as a very-well-poised 6psi8", 6,
        "|q| in [0.05, 0.5]; |a|, |b| in [0.6, 1.2], |c|, |d| in [0.05, 0.3]; x inside the annulus", bailey_vwp_b);
    add("SLATER_BC_8PSI8", "Slater: BC-type 8psi8 at r = 2, on the path of the limit to the 2psi2 A-type form", 10,
        "2psi2 A-type draw mapped to (a, a_1, a_2, b_1..b_4), |b_5|, |b_6| in [0.5, 2]", slater_bc_8psi8);
    for (int k = 0; k <= 3; ++k)
        add("BAILEY_T" + std::to_string(k), "Bailey: 2psi2 to 2psi2 transformation " + std::to_string(k), 6,
            "|q| in [0.05, 0.5]; |a|, |b| in [0.6, 1.2], |c|, |d| in [0.2, 0.5]; x inside the annulus", bailey_t(k));
    add("MU_EXPR_EQUIV", "generalized Zwegers mu: Eulerian, 1psi2, 2psi2, 0psi2 and 4psi8 expressions", 4,
        kMuDomain + "; |a| <= e^{-0.1}", mu_equiv);
    add("THM11_1", "generalized Zwegers mu: three-term relation in free x', y'", 6, kMuDomain + "; u', v' as u, v",
        thm11_1(true));
    add("THM11_2", "generalized Zwegers mu: mu plus a 0phi1 term, free x'", 6, kMuDomain + "; u' as u", thm11_2);
    add("THM11_3", "generalized Zwegers mu: two 0phi1 terms", 6, kMuDomain, thm11_3);
    add("THM11_2_QBESSEL_FORM", "Jackson q-Bessel reading of the 0phi1 terms", 6, kMuDomain, thm11_2_bessel);
    add("THM12", "Zwegers mu at a = q: 4psi8, very-well-poised sum, split sum and W series", 3,
        "|q| in [0.05, 0.5]; u, v = s + t tau, |t| <= 0.4, off the lattice", thm12);
    add("MU_W_RELATION", "Watson-type degenerate very-well-poised W series for mu", 4, kMuDomain, mu_w);
    add("TRANS_110", "Zwegers-type translation of mu in (u, v)", 5, kMuDomain + "; z as u", trans(false));
    add("TRANS_VARIATION", "generalized mu through Phi and the j function", 4, kMuDomain + "; |alpha - 1|, |alpha - 2| >= 0.05",
        variation);
    add("MU_SYMMETRY", "generalized mu under u <-> v", 4, kMuDomain, symmetry);
    add("MU_CQH", "Rogers continuous q-Hermite polynomials at alpha = -k, k = 0..10", 3,
        "|q| in [0.05, 0.5]; u, v = s + t tau, |t| <= 0.4; k fixed", hermite, 1e-9);
    add("MU_QBESSEL_REC", "recursion in alpha of q-Bessel type", 4, kMuDomain + "; also at alpha +- 1", recursion);
    add("JACOBI_TRIPLE_PRODUCT", "Jacobi triple product", 2, "|q| in [0.05, 0.5]; |x| in [0.2, 5]", triple_product);
    add("WP_FORMS", "Weierstrass wp(u) - wp(v): sigma quotient against Bailey's 6psi6 and the 2psi6 forms", 3,
        kEllDomain, wp_forms);
    add("M_PERIODICITY", "M(u) built from Zwegers mu(u, u): evenness and double periodicity", 2, kEllDomain,
        m_periodicity);
    add("JACOBI_FORMS", "Jacobi dn/(sn cn) as mu(u, u + 1/2): 4psi8, bilateral and split forms", 2, kEllDomain,
        jacobi_forms);
    add("CURIOUS_RELATION", "Bailey 6psi6 against the 2psi6 form at x^4/q^2", 3, kEllDomain,
        curious(elliptic::Psi26Argument::XFourth));
    return r;
}

std::vector<IdentityDescriptor> build_printed()
{
    std::vector<IdentityDescriptor> r;
    auto add = [&](std::string id, std::string ref, int arity, Trial t) {
        r.push_back({std::move(id), std::move(ref), arity, "as the corrected identity", 1e-8, std::move(t)});
    };
    add("SLATER_A_R2_PRINTED", "Slater A-type, r = 2, without (q b_m/c_m)_inf", 8, slater_a(2, false));
    add("SLATER_A2_1_PRINTED", "Slater 2psi2 two-term variant 1, without (q b_m/c_m)_inf", 8, slater_a2(1, false));
    add("SLATER_BC_R2_PRINTED", "Slater BC-type, r = 2, argument a^{r-1} q^{r-2} / prod b", 10, slater_bc(2, true));
    add("THM11_1_PRINTED", "three-term relation with theta(x y') theta(y y'/a) in the second term", 6, thm11_1(false));
    add("TRANS_110_PRINTED", "translation with Phi taken at (u, v)", 5, trans(true));
    add("JACOBI_PSI48_PRINTED", "Jacobi 4psi8 form with its printed overall sign", 2, jacobi_printed);
    add("CURIOUS_X2", "curious relation with the 2psi6 argument x^2/q^2", 3, curious(elliptic::Psi26Argument::XSquared));
    return r;
}

nlohmann::ordered_json cjson(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

}  // namespace

const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

const std::vector<IdentityDescriptor>& registry()
{
    static const std::vector<IdentityDescriptor> r = build_registry();
    return r;
}

const std::vector<IdentityDescriptor>& printed_registry()
{
    static const std::vector<IdentityDescriptor> r = build_printed();
    return r;
}

const IdentityDescriptor& find(const std::string& id)
{
    for (const auto* list : {&registry(), &printed_registry()})
        for (const auto& d : *list)
            if (d.id == id) return d;
    throw UnknownIdentity("unknown identity: " + id);
}

double rel_err(Complex lhs, Complex rhs)
{
    if (!std::isfinite(lhs.real()) || !std::isfinite(lhs.imag()) || !std::isfinite(rhs.real())
        || !std::isfinite(rhs.imag()))
        return HUGE_VAL;
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-30});
}

IdentityReport verify(const VerifyOptions& opts, const std::string& id, std::uint64_t seed, long draws)
{
    const IdentityDescriptor& d = find(id);
    if (opts.q && !(std::abs(*opts.q) > 0.0 && std::abs(*opts.q) < 1.0)) throw DomainError("fixed q needs 0 < |q| < 1");
    IdentityReport rep;
    rep.id = d.id;
    rep.paper_ref = d.paper_ref;
    rep.seed = seed;
    const double tol = opts.check_tol.value_or(d.default_tol);

    Sampler s(seed, d.id);
    s.fix_nome(opts.q);
    s.set_numerics(opts.tol, opts.max_terms);
    const long budget = 100 * std::max(draws, 1L);
    long attempts = 0;
    while (rep.draws < draws && attempts < budget) {
        ++attempts;
        s.clear();
        std::vector<Check> checks;
        try {
            checks = d.trial(s);
        } catch (const Error&) {
            ++rep.rejected_samples;
            continue;
        }
        ++rep.draws;
        for (const auto& c : checks) {
            double e = rel_err(c.lhs, c.rhs);
            rep.max_rel_err = std::max(rep.max_rel_err, e);
            if (!(e <= tol)) rep.failures.push_back({s.params(), c.label, c.lhs, c.rhs, e});
        }
    }
    if (!rep.failures.empty()) rep.status = Status::Fail;
    else if (rep.draws < draws) rep.status = Status::Inconclusive;
    else rep.status = Status::Pass;
    return rep;
}

std::vector<IdentityReport> run_suite(const VerifyOptions& opts, const std::vector<std::string>& ids,
                                      std::uint64_t seed, long draws)
{
    std::vector<std::string> todo = ids;
    if (todo.empty())
        for (const auto& d : registry()) todo.push_back(d.id);
    for (const auto& id : todo) find(id);  // unknown ids fail before any work

    std::vector<IdentityReport> out(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();) out[i] = verify(opts, todo[i], seed, draws);
    };
    unsigned n = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(todo.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::string report_json(const std::vector<IdentityReport>& reports)
{
    using J = nlohmann::ordered_json;
    J arr = J::array();
    for (const auto& r : reports) {
        J fails = J::array();
        for (const auto& f : r.failures) {
            J params = J::object();
            for (const auto& [k, v] : f.params) params[k] = cjson(v);
            J e = std::isfinite(f.err) ? J(f.err) : J(nullptr);
            fails.push_back(J{{"params", params}, {"check", f.label}, {"lhs", cjson(f.lhs)}, {"rhs", cjson(f.rhs)},
                              {"err", e}});
        }
        J mre = std::isfinite(r.max_rel_err) ? J(r.max_rel_err) : J(nullptr);
        arr.push_back(J{{"id", r.id},
                        {"paper_ref", r.paper_ref},
                        {"seed", r.seed},
                        {"draws", r.draws},
                        {"max_rel_err", mre},
                        {"status", to_string(r.status)},
                        {"failures", fails},
                        {"rejected_samples", r.rejected_samples}});
    }
    return arr.dump(2);
}

}  // namespace qpsi::identities
