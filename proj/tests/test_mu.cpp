#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qpsi/mu.hpp"

using namespace qpsi;

namespace {

double rel(Complex a, Complex b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30});
}

MuPoint point(Complex tau, Complex u, Complex v, Complex alpha)
{
    return {u, v, alpha, QContext::from_tau(tau)};
}

// mpmath at 30 digits, window |n| <= 60
const Complex kTau{0.13, 0.28};
const Complex kU{0.31, 0.05}, kV{0.17, -0.04}, kAlpha{0.7, 0.2};
const Complex kMuRef{-0.235022486875573642, -0.591393201384911402};
const Complex kMu1Ref{-0.0706239418291424217, -0.615826904021876869};
const Complex kWRef{-6.06079141128683720, 9.87770129566399488};

}  // namespace

TEST_CASE("frozen reference point")
{
    auto p = point(kTau, kU, kV, kAlpha);
    CHECK(rel(mu_def(p).value, kMuRef) < 1e-12);
    CHECK(rel(mu_psi12(p).value, kMuRef) < 1e-12);
    CHECK(rel(mu_psi22(p).value, kMuRef) < 1e-12);
    CHECK(rel(mu_psi02(p).value, kMuRef) < 1e-12);
    CHECK(rel(mu_psi48(p).value, kMuRef) < 1e-11);
    CHECK(rel(mu_psi48_sum(p).value, kMuRef) < 1e-11);
    Complex w = w_func(p.ctx, p.x() * p.y() / (p.a() * p.ctx.q), p.x() / p.a(), p.y() / p.a());
    CHECK(rel(w, kWRef) < 1e-12);
    auto p1 = point(kTau, kU, kV, 1.0);
    CHECK(rel(mu_def(p1).value, kMu1Ref) < 1e-12);
    CHECK(rel(zwegers_mu(p1.ctx, kU, kV), kMu1Ref) < 1e-12);
}

TEST_CASE("small alpha specializations")
{
    auto p = point({0.05, 0.3}, {0.21, 0.03}, {-0.12, 0.02}, 0.0);
    Complex c = -kI * q_power(p.ctx, Ratio{-1, 8});
    CHECK(rel(mu_def(p).value, c) < 1e-12);
    p.alpha = -1.0;
    CHECK(rel(mu_def(p).value, c * 2.0 * std::cos(kPi * (p.u - p.v))) < 1e-12);
    CHECK(mu(p).representation == Representation::QHERMITE);
}

TEST_CASE("q-Hermite polynomials")
{
    auto ctx = QContext::from_q(0.3);
    Complex w{0.17, 0.05};
    CHECK(cont_q_hermite(ctx, 0, w) == Complex(1.0));
    CHECK(rel(cont_q_hermite(ctx, 1, w), 2.0 * std::cos(kPi * w)) < 1e-14);
    CHECK(rel(cont_q_hermite(ctx, 2, w), 2.0 * std::cos(2.0 * kPi * w) + 1.0 + ctx.q) < 1e-14);
    for (long k = 0; k <= 10; ++k) {
        MuPoint p{{0.3, 0.02}, {0.11, -0.03}, Complex(-double(k)), QContext::from_q(std::polar(0.3, 0.4))};
        Complex expect = -kI * q_power(p.ctx, Ratio{-1, 8}) * cont_q_hermite(p.ctx, k, p.u - p.v);
        CHECK(rel(mu_def(p).value, expect) < 1e-9);
    }
}

TEST_CASE("representations agree on random draws")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int checked = 0;
    for (int d = 0; d < 60; ++d) {
        double mq = std::exp(std::log(0.05) + U(rng) * (std::log(0.5) - std::log(0.05)));
        Complex tau = std::log(std::polar(mq, 2.0 * kPi * U(rng))) / (2.0 * kPi * kI);
        QContext ctx = QContext::from_tau(tau);
        double h = tau.imag();
        Complex u{U(rng), (U(rng) - 0.5) * 0.6 * h};
        Complex v{U(rng), (U(rng) - 0.5) * 0.6 * h};
        Complex al{-2.0 + 4.0 * U(rng), (U(rng) - 0.5) * 0.4};
        MuPoint p{u, v, al, ctx};
        std::vector<Complex> vals;
        try {
            vals.push_back(mu_def(p).value);
            vals.push_back(mu_psi12(p).value);
            vals.push_back(mu_psi48(p).value);
            vals.push_back(mu_psi48_sum(p).value);
            if (std::abs(p.a()) < 0.9) {
                vals.push_back(mu_psi22(p).value);
                vals.push_back(mu_psi02(p).value);
            }
        } catch (const PoleError&) {
            continue;
        } catch (const Error& e) {
            MESSAGE(e.what(), " tau=", tau.real(), ",", tau.imag(), " u=", u.real(), ",", u.imag(), " v=", v.real(), ",",
                    v.imag(), " al=", al.real(), ",", al.imag(), " n=", vals.size());
            FAIL("");
        }
        for (size_t i = 1; i < vals.size(); ++i) CHECK(rel(vals[0], vals[i]) < 1e-8);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("W relation and its two prefactors")
{
    auto p = point(kTau, kU, kV, kAlpha);
    Complex m = mu_def(p).value;
    CHECK(rel(mu_from_w(p, WPrefactor::Shifted), m) < 1e-11);
    CHECK(rel(mu_from_w(p, WPrefactor::Plain), m) > 1e-3);
}

TEST_CASE("W series")
{
    auto ctx = QContext::from_q(std::polar(0.3, 0.2));
    Complex a{0.4, 0.1}, b{0.9, -0.3}, c{1.2, 0.5};
    Complex brute = 0.0;
    for (long n = -20; n <= 20; ++n)
        brute += (1.0 - a * std::pow(ctx.q, 2 * n)) * pochhammer(ctx, {b, c}, n)
                 / pochhammer(ctx, {a / b, a / c}, n + 1) * std::pow(ctx.q, 2 * n * n)
                 * std::pow(a * a * a / (b * c), n);
    CHECK(rel(w_func(ctx, a, b, c), brute) < 1e-12);
    CHECK(std::isfinite(std::abs(w_func(ctx, a, b, b))));
}

TEST_CASE("a = q forms")
{
    auto ctx = QContext::from_tau(kTau);
    auto f = zwegers_forms(ctx, kU, kV);
    CHECK(rel(f.psi48, kMu1Ref) < 1e-11);
    CHECK(rel(f.vwp_sum, kMu1Ref) < 1e-11);
    CHECK(rel(f.split, f.vwp_sum) < 1e-12);
    CHECK(rel(f.w_form, kMu1Ref) < 1e-11);
}

TEST_CASE("Zwegers symmetries at alpha = 1")
{
    auto ctx = QContext::from_q(std::polar(0.2, 1.0));
    Complex u{0.27, 0.04}, v{0.62, -0.02};
    Complex m = zwegers_mu(ctx, u, v);
    CHECK(rel(zwegers_mu(ctx, u + 1.0, v), -m) < 1e-10);
    CHECK(rel(zwegers_mu(ctx, u + ctx.tau, v + ctx.tau), m) < 1e-10);
    CHECK(rel(zwegers_mu(ctx, -u, -v), m) < 1e-10);
    CHECK(rel(zwegers_mu(ctx, v, u), m) < 1e-10);
    MuPoint p{u, v, 1.0, ctx};
    CHECK(rel(mu_psi22(p).value, m) < 1e-10);
}

TEST_CASE("Phi, j and the connection with them")
{
    auto p = point(kTau, kU, kV, kAlpha);
    MuPoint same = p;
    same.v = same.u;
    CHECK(rel(phi_factor(same), 1.0) < 1e-13);
    CHECK(rel(variation_rhs(p), mu_def(p).value) < 1e-10);
    // j has a pole at alpha = 1 from (q^{1-alpha})_inf; the 1phi1 itself collapses to 1
    CHECK_THROWS_AS(j_func(p.ctx, 0.2, 1.0), PoleError);
    CHECK(phi(p.ctx, {1.0}, {0.0}, Complex{0.3, 0.1}) == Complex(1.0));
}

TEST_CASE("translation")
{
    auto p = point(kTau, kU, kV, kAlpha);
    Complex z{0.07, 0.03};
    MuPoint s = p;
    s.u += z;
    s.v += z;
    CHECK(rel(translation_rhs(p, z), mu_def(s).value) < 1e-10);
}

TEST_CASE("recursion and symmetry")
{
    auto p = point({0.02, 0.25}, {0.31, 0.05}, {0.17, -0.04}, {0.7, 0.2});
    Residual r = recursion_residual(p);
    CHECK(std::abs(r.residual) <= 1e-8 * r.scale);
    CHECK(rel(symmetry_transform(p), mu_def(p).value) < 1e-9);
    MuPoint z = p;
    z.alpha = 0.0;
    CHECK(std::abs(recursion_residual(z).residual) < 1e-12);
    MuPoint one = p;
    one.alpha = 1.0;
    MuPoint neg{-p.u, -p.v, 1.0, p.ctx};
    CHECK(std::abs(recursion_residual(one).residual - recursion_residual(neg).residual) < 1e-9);
}

TEST_CASE("poles")
{
    auto ctx = QContext::from_q(0.2);
    // x/a = 1 puts theta(x/a) at a zero
    MuPoint p{{0.25, 0.0}, {0.1, 0.01}, 0.0, ctx};
    p.alpha = p.u / ctx.tau;
    CHECK_THROWS_AS(mu_psi22(p), PoleError);
    CHECK_THROWS_AS(mu_def(MuPoint{{0.2, 0.0}, 0.0, 0.5, ctx}), PoleError);
}
