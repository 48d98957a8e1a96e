#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpsi/series.hpp"

using namespace qpsi;

namespace {

double rel(Complex a, Complex b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30});
}

HypergeometricSpec bil(std::vector<Complex> up, std::vector<Complex> lo, Complex x)
{
    return {std::move(up), std::move(lo), x, SeriesKind::Bilateral};
}

HypergeometricSpec uni(std::vector<Complex> up, std::vector<Complex> lo, Complex x)
{
    return {std::move(up), std::move(lo), x, SeriesKind::Unilateral};
}

// brute force with a fixed window, terms formed independently of the walker
Complex brute(const QContext& ctx, const HypergeometricSpec& s, long N)
{
    Complex acc = 0.0;
    long lo = s.kind == SeriesKind::Bilateral ? -N : 0;
    for (long n = lo; n <= N; ++n) acc += term(ctx, s, n);
    return acc;
}

}  // namespace

TEST_CASE("convergence classes")
{
    auto ctx = QContext::from_q(0.3);
    CHECK(convergence_check(ctx, bil({1.0, 1.0}, {0.1, 1.0}, 0.5)) == Convergence::Convergent);
    CHECK(convergence_check(ctx, bil({1.0, 1.0}, {0.1, 1.0}, 1.2)) == Convergence::Divergent);
    CHECK(convergence_check(ctx, bil({1.0, 1.0}, {0.1, 1.0}, 0.05)) == Convergence::Divergent);
    CHECK(convergence_check(ctx, bil({0.5, 0.7, 0.2, 0.3}, {0.0, 0.0, 0.0, 0.0, 0.9, 0.8, 0.7, 0.6}, 1e-3))
          == Convergence::Convergent);
    CHECK(convergence_check(ctx, bil({0.5, 0.7, 0.2}, {0.4, 0.1}, 0.1)) == Convergence::Divergent);
    CHECK(convergence_check(ctx, bil({0.5}, {0.4, 0.1}, 0.01)) == Convergence::Divergent);
    CHECK(convergence_check(ctx, bil({0.5}, {0.4, 0.1}, 0.1)) == Convergence::Convergent);
    CHECK(convergence_check(ctx, uni({0.5, 0.3}, {0.2}, 1.0)) == Convergence::Conditional);
    CHECK(convergence_check(ctx, uni({0.5, 0.3}, {0.2}, 1.5)) == Convergence::Divergent);
    CHECK(convergence_check(ctx, uni({0.5, 0.3, 0.1}, {0.2}, 1e-3)) == Convergence::Divergent);
    CHECK(convergence_check(ctx, uni({0.5}, {0.0}, 50.0)) == Convergence::Convergent);
    // margin shrinks the annulus
    CHECK(convergence_check(ctx, bil({1.0}, {0.1}, 0.95), 0.1) == Convergence::Conditional);
}

TEST_CASE("divergent eval reports the reason")
{
    auto ctx = QContext::from_q(0.3);
    try {
        eval(ctx, uni({0.2, 0.4}, {0.5}, 1.5));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("divergent: |x| >= 1") != std::string::npos);
    }
}

TEST_CASE("term")
{
    auto ctx = QContext::from_q({0.2, 0.1});
    Complex a{0.3, 0.4}, b{-0.2, 0.5}, x{0.7, -0.1}, q = ctx.q;
    CHECK(term(ctx, bil({a, 2.0 * a}, {b, 0.0}, x), 0) == Complex(1.0));
    CHECK(rel(term(ctx, uni({a}, {b}, x), 1), -(1.0 - a) * x / ((1.0 - b) * (1.0 - q))) < 1e-14);
    // 1psi2 at n = -1: (a)_{-1} / (b)_{-1} * (-1)^{-1} q^{1} x^{-1}
    Complex expect = (1.0 - b / q) / (1.0 - a / q) * (-q) / x;
    CHECK(rel(term(ctx, bil({a}, {0.0, b}, x), -1), expect) < 1e-13);
    CHECK(term(ctx, uni({a}, {b}, x), -3) == Complex(0.0));
    CHECK_THROWS_AS(term(ctx, bil({q}, {0.5}, x), -1), PoleError);
}

TEST_CASE("walker matches brute force and index shift")
{
    auto ctx = QContext::from_q(std::polar(0.4, 0.8));
    auto s = bil({Complex{0.9, 0.3}, Complex{-0.6, 1.1}}, {Complex{0.04, 0.02}, Complex{0.03, -0.02}}, Complex{0.04, 0.03});
    REQUIRE(convergence_check(ctx, s) == Convergence::Convergent);
    SeriesValue v = eval(ctx, s);
    CHECK(v.report.converged);
    CHECK(v.report.tail_estimate <= ctx.tol * std::abs(v.value));
    long N = std::max(-v.report.n_min, v.report.n_max);
    Complex wider = brute(ctx, s, std::min(N + 3, 20L));
    CHECK(std::abs(wider - v.value) <= std::max(v.report.tail_estimate, 1e-13 * std::abs(v.value)) * 10);
}

TEST_CASE("Ramanujan 1psi1")
{
    auto ctx = QContext::from_q(0.3);
    Complex a = 0.4, b = 0.1, x = 0.5, q = ctx.q;
    Complex lhs = psi(ctx, {a}, {b}, x);
    Complex rhs = pochhammer(ctx, {a * x, q / (a * x), q, b / a}, kInf)
                  / pochhammer(ctx, {x, b / (a * x), b, q / a}, kInf);
    CHECK(rel(lhs, rhs) < 1e-10);
    CHECK(rel(brute(ctx, bil({a}, {b}, x), 30), rhs) < 1e-10);
}

TEST_CASE("inversion")
{
    auto ctx = QContext::from_q(std::polar(0.25, -1.2));
    Complex q = ctx.q;
    Complex a1{0.9, 0.4}, a2{-1.1, 0.2}, b1{0.3, 0.1}, b2{-0.2, 0.4}, x{0.5, -0.3};
    Complex lhs = psi(ctx, {a1, a2}, {b1, b2}, x);
    Complex rhs = psi(ctx, {q / b1, q / b2}, {q / a1, q / a2}, b1 * b2 / (a1 * a2 * x));
    CHECK(rel(lhs, rhs) < 1e-11);
}

TEST_CASE("classical unilateral sums")
{
    auto ctx = QContext::from_q(std::polar(0.45, 2.0));
    Complex x{0.3, 0.5}, a{1.7, -0.4};
    // Euler: sum x^n/(q)_n = 1/(x)_inf
    CHECK(rel(phi(ctx, {0.0}, {}, x), 1.0 / pochhammer(ctx, x, kInf)) < 1e-12);
    // q-binomial theorem
    CHECK(rel(phi(ctx, {a}, {}, x), pochhammer(ctx, a * x, kInf) / pochhammer(ctx, x, kInf)) < 1e-12);
    // 0phi0 has the full quadratic factor: sum (-1)^n q^{n(n-1)/2} x^n/(q)_n = (x)_inf
    Complex big{3.0, 2.0};
    CHECK(rel(phi(ctx, {}, {}, big), pochhammer(ctx, big, kInf)) < 1e-11);
    CHECK(phi(ctx, {a}, {0.3}, 0.0) == Complex(1.0));
    // terminating: a = q^{-3}
    Complex qm3 = std::pow(ctx.q, -3);
    CHECK(rel(phi(ctx, {qm3}, {}, x), pochhammer(ctx, qm3 * x, 3 + 0) * 0.0 + pochhammer(ctx, x * qm3, 3)) < 1e-12);
}

TEST_CASE("triple product as 0psi1")
{
    auto ctx = QContext::from_q(std::polar(0.3, 0.4));
    Complex x{0.8, 0.9}, q = ctx.q;
    Complex lhs = psi(ctx, {}, {0.0}, x);
    CHECK(rel(lhs, pochhammer(ctx, {q, x, q / x}, kInf)) < 1e-12);
}

TEST_CASE("limits")
{
    auto ctx = QContext::from_q(0.3);
    ctx.max_terms = 20;
    auto s = bil({1.0}, {0.0, 0.0}, 0.0);
    s.arg = 0.5;
    // geometric series barely inside: needs far more than 20 terms
    auto slow = bil({0.99}, {0.985}, 0.99999);
    CHECK_THROWS_AS(eval(ctx, slow), NonConvergence);
}
