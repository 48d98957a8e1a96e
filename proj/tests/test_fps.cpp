#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qpsi/fps.hpp"
#include "qpsi/mu.hpp"

using namespace qpsi;
using namespace qpsi::fps;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

FormalSeries poly(std::map<long, long> c, long order = FormalSeries::kExact, long D = 1)
{
    std::map<long, Rational> m;
    for (auto [k, v] : c) m[k] = v;
    return FormalSeries::from_units(D, m, order);
}

Monomial mono(long c, long e) { return {R(c), R(e)}; }

// integer polynomial oracle, truncated at L
using IntPoly = std::vector<long>;

IntPoly times_binomial(IntPoly a, long c, long k)
{
    for (long i = long(a.size()) - 1; i >= k; --i) a[i] -= c * a[i - k];
    return a;
}

FormalSeries random_sparse(std::mt19937& g, long D, long order)
{
    std::uniform_int_distribution<long> ex(-2 * D, 6 * D), co(-5, 5);
    std::map<long, Rational> m;
    for (int i = 0; i < 5; ++i) m[ex(g)] = R(co(g), 1 + std::abs(co(g)));
    m[-3 * D] = R(1 + std::abs(co(g)));
    return FormalSeries::from_units(D, m, order);
}

}  // namespace

TEST_CASE("basic arithmetic")
{
    auto a = poly({{0, 1}, {1, 1}}), b = poly({{0, 1}, {1, -1}});
    auto p = a * b;
    CHECK(p.exact());
    CHECK(p.units() == poly({{0, 1}, {2, -1}}).units());

    auto f = poly({{0, 3}, {2, -1}, {7, 4}}, 9);
    auto z = f + (-f);
    CHECK(z.is_zero());
    CHECK(z.order() == 9);

    // q^2 + O(q^5) times 1 + O(q^3): O(q^5)
    auto g = poly({{2, 1}}, 5), h = poly({{0, 1}}, 3);
    CHECK((g * h).order() == 5);
    // q^{-1} + O(q^4) times q^3 + O(q^6): min(-1+6, 4+3) = 5
    CHECK((poly({{-1, 1}}, 4) * poly({{3, 1}}, 6)).order() == 5);
    // exact monomial keeps the order shifted
    CHECK((poly({{2, 1}}) * h).order() == 5);
}

TEST_CASE("mixed denominators merge to lcm")
{
    auto a = poly({{1, 1}}, 10, 2);  // q^{1/2}
    auto b = poly({{1, 1}}, 9, 3);   // q^{1/3}
    auto s = a * b;
    CHECK(s.denom() == 6);
    CHECK(s.coeff(R(5, 6)) == 1);
    CHECK(s.order() == R(1, 2) + 3);
    CHECK((a + b).order() == 3);
}

TEST_CASE("invert")
{
    auto inv = poly({{0, 1}, {1, -1}}).invert(R(10));
    CHECK(inv.order() == 10);
    for (long k = 0; k < 10; ++k) CHECK(inv.coeff(R(k)) == 1);
    CHECK(inv.units().size() == 10);

    auto lau = poly({{1, 1}, {2, -1}}).invert(R(8));
    CHECK(lau.order() == 8);
    for (long k = -1; k < 8; ++k) CHECK(lau.coeff(R(k)) == 1);

    // inverse order is ord - 2 val
    CHECK(poly({{2, 1}, {3, 1}}, 10).invert().order() == 6);

    CHECK_THROWS_AS(poly({{0, 1}, {1, 1}}).invert(), Instability);
    CHECK_THROWS_AS(FormalSeries::zero(R(4)).invert(), NonUnit);
    CHECK(poly({{3, 2}}).invert().coeff(R(-3)) == R(1, 2));
}

TEST_CASE("ring laws and two-sided inverse on random sparse series")
{
    std::mt19937 g(20240611);
    for (int trial = 0; trial < 25; ++trial) {
        long D = trial % 3 == 0 ? 2 : 1;
        auto f = random_sparse(g, D, 15 * D), h = random_sparse(g, D, 12 * D), k = random_sparse(g, 1, 14);
        Rational N = std::min({f.order(), h.order(), k.order()}) - 12;
        auto eq = [&](const FormalSeries& x, const FormalSeries& y) {
            CHECK(!first_difference(x, y, N));
        };
        eq(f * h, h * f);
        eq((f * h) * k, f * (h * k));
        eq(f * (h + k), f * h + f * k);
        auto fi = f.invert();
        auto one = f * fi, one2 = fi * f;
        CHECK(one.order() > 0);
        eq(one, FormalSeries::constant(1));
        eq(one2, FormalSeries::constant(1));
    }
}

TEST_CASE("pochhammer expansions")
{
    auto e = poch_fs(mono(1, 1), mono(1, 1), std::nullopt, R(6));
    CHECK(e.units() == poly({{0, 1}, {1, -1}, {2, -1}, {5, 1}}).units());
    CHECK(e.order() == 6);

    auto f = poch_fs(mono(-1, 1), mono(1, 1), 1, R(10));
    CHECK(f.units() == poly({{0, 1}, {1, 1}}).units());
    CHECK(poch_fs({R(0), R(1)}, mono(1, 1), 5, R(10)).units() == poly({{0, 1}}).units());
    CHECK(poch_fs(mono(1, 2), mono(1, 1), 0, R(10)).units() == poly({{0, 1}}).units());

    // negative length: (a;q)_{-1} = 1/(1 - a/q)
    auto neg = poch_fs(mono(1, 3), mono(1, 1), -1, R(12));
    CHECK(!first_difference(neg, poly({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}}), R(12)));

    // base q^2 against an integer oracle: (q;q^2)_inf
    IntPoly o(40, 0);
    o[0] = 1;
    for (long k = 1; k < 40; k += 2) o = times_binomial(o, 1, k);
    auto p = poch_fs(mono(1, 1), mono(1, 2), std::nullopt, R(40));
    for (long k = 0; k < 40; ++k) CHECK(p.coeff(R(k)) == o[k]);

    CHECK_THROWS_AS(poch_fs(mono(1, 1), mono(1, 0), std::nullopt, R(4)), Instability);
    CHECK_THROWS_AS(poch_fs(mono(1, 1), mono(1, -1), std::nullopt, R(4)), Instability);
}

TEST_CASE("half-integer base")
{
    // (q^{1/2}; q^{1/2})_1 = 1 - q^{1/2}
    auto p = poch_fs({R(1), R(1, 2)}, {R(1), R(1, 2)}, 1, R(3));
    CHECK(p.denom() == 2);
    CHECK(p.coeff(R(1, 2)) == -1);
}

TEST_CASE("theta products")
{
    // theta_{q^4}(-q^5) = sum (-1)^n q^{2n^2+3n}, valuation -1
    auto t = theta_fs(mono(-1, 5), mono(1, 4), R(40));
    auto s = bilateral_sum_fs(
        [](long n) { return std::optional<Rational>(R(2 * n * n + 3 * n)); },
        [](long n) { return poly({{2 * n * n + 3 * n, n % 2 ? -1 : 1}}); }, R(40));
    CHECK(t.valuation() == R(-1));
    CHECK(t.order() == 40);
    CHECK(!first_difference(t, s, R(40)));

    // direct product oracle: (q^4, q^5, q^{-1}; q^4)_inf = -q^{-1} (1 - q) (q^4, q^5, q^3; q^4)_inf
    IntPoly o(45, 0);
    o[0] = 1;
    o = times_binomial(o, 1, 1);
    for (long k = 4; k < 45; k += 4) o = times_binomial(o, 1, k);
    for (long k = 5; k < 45; k += 4) o = times_binomial(o, 1, k);
    for (long k = 3; k < 45; k += 4) o = times_binomial(o, 1, k);
    for (long k = -1; k < 40; ++k) CHECK(t.coeff(R(k)) == -o[k + 1]);

    auto z = theta_fs(mono(-1, 0), mono(1, 1), R(30));
    CHECK(z.is_zero());
    CHECK(z.order() == 30);
}

TEST_CASE("triple product to order 200")
{
    // theta_q(q) = (q, -q, -1; q)_inf = sum q^{n(n+1)/2}
    auto t = theta_fs(mono(1, 1), mono(1, 1), R(200));
    auto s = bilateral_sum_fs([](long n) { return std::optional<Rational>(R(n * (n + 1) / 2)); },
                              [](long n) { return poly({{n * (n + 1) / 2, 1}}); }, R(200));
    CHECK(!first_difference(t, s, R(200)));
    CHECK(t.order() == 200);

    // (q;q)_inf = theta_{q^3}(-q) = sum (-1)^n q^{n(3n-1)/2}
    auto e = poch_fs(mono(1, 1), mono(1, 1), std::nullopt, R(200));
    auto p = bilateral_sum_fs([](long n) { return std::optional<Rational>(R(n * (3 * n - 1) / 2)); },
                              [](long n) { return poly({{n * (3 * n - 1) / 2, n % 2 ? -1 : 1}}); }, R(200));
    CHECK(!first_difference(e, p, R(200)));
    CHECK(!first_difference(theta_fs(mono(-1, 1), mono(1, 3), R(200)), e, R(200)));
}

TEST_CASE("bilateral windows")
{
    long calls = 0;
    auto s = bilateral_sum_fs([](long n) { return std::optional<Rational>(R(2 * n * n)); },
                              [&](long n) {
                                  ++calls;
                                  return poly({{2 * n * n, 1}});
                              },
                              R(40));
    CHECK(calls == 9);  // |n| <= 4
    CHECK(s.coeff(R(32)) == 2);

    auto e = bilateral_sum_fs([](long n) { return std::optional<Rational>(R(2 * n * n + 50)); },
                              [](long n) { return poly({{2 * n * n + 50, 1}}); }, R(40));
    CHECK(e.is_zero());
    CHECK(e.order() == 40);

    CHECK_THROWS_AS(bilateral_sum_fs([](long) { return std::optional<Rational>(R(0)); },
                                     [](long) { return poly({{0, 1}}); }, R(10)),
                    RangeOverflow);
}

TEST_CASE("eulerian sums")
{
    Monomial q = mono(1, 1);
    // sum q^{n^2}/(-q;q)_n^2
    auto f = eulerian_sum_fs(
        [&](long n) {
            ProductTerm t;
            t.exp = R(n * n);
            t.inv_poch(mono(-1, 1), q, n);
            t.inv_poch(mono(-1, 1), q, n);
            return t;
        },
        0, R(4));
    CHECK(f.units() == poly({{0, 1}, {1, 1}, {2, -2}, {3, 3}}).units());

    // sum q^{n+1} (-q^2;q^2)_n / (q;q^2)_{n+1}
    auto Aterm = [&](long n) {
        ProductTerm t;
        t.exp = R(n + 1);
        t.poch(mono(-1, 2), mono(1, 2), n);
        t.inv_poch(mono(1, 1), mono(1, 2), n + 1);
        return t;
    };
    // only n = 0, 1 give q + 2q^2 + 2q^3; the n = 2 term adds q^3
    auto partial = Aterm(0).expand(R(4)) + Aterm(1).expand(R(4));
    CHECK(partial.units() == poly({{1, 1}, {2, 2}, {3, 2}}).units());
    auto A = eulerian_sum_fs(Aterm, 0, R(8));
    CHECK(A.units() == poly({{1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 8}, {6, 11}, {7, 16}}).units());
}

TEST_CASE("W formal against numeric at q = 0.1")
{
    Monomial q = mono(1, 1);
    Monomial a = mono(1, 3), b = mono(-1, 1), c = mono(-1, 2);
    auto w = w_fs(a, b, c, q, R(30));
    auto ctx = QContext::from_q(0.1);
    Complex num = w_func(ctx, 1e-3, -0.1, -1e-2);
    CHECK(std::abs(w.evaluate(0.1) - num.real()) < 1e-10);
    CHECK(std::abs(num.imag()) < 1e-10);
}

TEST_CASE("numeric consistency of a theta quotient")
{
    auto t = theta_fs(mono(-1, 5), mono(1, 4), R(30));
    auto inv = t.invert();
    double q = 0.1, p = 1;
    for (long j = 0; j < 60; ++j) {
        double Q = std::pow(q, 4.0 * j);
        p *= (1 - Q * std::pow(q, 4)) * (1 - Q * std::pow(q, 5)) * (1 - Q / q);
    }
    CHECK(std::abs(t.evaluate(q) - p) < std::pow(q, 30) * 10 / q);
    CHECK(std::abs(inv.evaluate(q) - 1 / p) < 1e-14 * std::abs(1 / p));
}

TEST_CASE("zero terms and poles in product terms")
{
    ProductTerm t;
    t.num.push_back({R(1), R(0)});
    CHECK(!t.valuation());
    CHECK(t.expand(R(5)).is_zero());

    ProductTerm u;
    u.den.push_back({R(1), R(0)});
    CHECK_THROWS_AS(u.expand(R(5)), PoleError);

    // (1 - 2 q^{-1}) = -2 q^{-1} (1 - q/2)
    ProductTerm l;
    l.num.push_back({R(2), R(-1)});
    auto e = l.expand(R(3));
    CHECK(e.coeff(R(-1)) == -2);
    CHECK(e.coeff(R(0)) == 1);
}

TEST_CASE("csv dump and truncation")
{
    auto f = poly({{1, 3}, {4, -1}}, 10, 2);
    auto csv = f.to_csv();
    CHECK(csv.find("1,2,3,1") != std::string::npos);
    CHECK(csv.find("4,2,-1,1") != std::string::npos);
    auto g = f.truncated(R(2));
    CHECK(g.order() == 2);
    CHECK(g.coeff(R(2)) == 0);
    CHECK(g.coeff(R(1, 2)) == 3);
    CHECK(f.to_string() == "3*q^(1/2) - q^2 + O(q^5)");
}
