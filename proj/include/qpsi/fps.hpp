#pragma once

#include <gmpxx.h>

#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpsi/errors.hpp"

namespace qpsi::fps {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
// exponent k over denominator D as a reduced rational
Rational exponent_of(long k, long D);
long lcm_long(long a, long b);

// c q^e
struct Monomial {
    Rational coeff{1};
    Rational exp{0};
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial inverse(const Monomial& a);
Monomial power(const Monomial& a, long n);

// Truncated Laurent series in q^{1/D}: exact for exponents below order().
class FormalSeries {
public:
    static constexpr long kExact = LONG_MAX / 4;

    FormalSeries() = default;
    static FormalSeries zero(const Rational& order);
    static FormalSeries constant(const Rational& c);
    static FormalSeries monomial(const Monomial& m);
    // coefficient map in units of 1/D; order_k may be kExact
    static FormalSeries from_units(long D, std::map<long, Rational> coeffs, long order_k);

    long denom() const { return D_; }
    bool exact() const { return ord_ == kExact; }
    long order_units() const { return ord_; }
    // meaningless when exact()
    Rational order() const;
    const std::map<long, Rational>& units() const { return c_; }

    Rational coeff(const Rational& e) const;
    // first exponent with a nonzero coefficient; order() if none
    std::optional<Rational> valuation() const;
    long valuation_units() const;
    bool is_zero() const { return c_.empty(); }

    FormalSeries with_denom(long D) const;
    FormalSeries reduced() const;
    FormalSeries truncated(const Rational& N) const;
    FormalSeries shifted(const Rational& e) const;  // times q^e

    FormalSeries operator-() const;
    FormalSeries& operator+=(const FormalSeries& g);
    FormalSeries& operator-=(const FormalSeries& g);
    FormalSeries& operator*=(const Rational& c);

    // an exact non-monomial series needs a target order
    FormalSeries invert(std::optional<Rational> order = std::nullopt) const;
    FormalSeries pow(long n) const;

    double evaluate(double q) const;
    std::string to_string(long max_terms = 12) const;

    // (exponent_numerator, denominator, coefficient_numerator, coefficient_denominator)
    std::string to_csv() const;

    friend FormalSeries operator+(FormalSeries f, const FormalSeries& g) { return f += g; }
    friend FormalSeries operator-(FormalSeries f, const FormalSeries& g) { return f -= g; }
    friend FormalSeries operator*(const FormalSeries& f, const FormalSeries& g);
    friend FormalSeries operator*(FormalSeries f, const Rational& c) { return f *= c; }
    friend FormalSeries operator*(const Rational& c, FormalSeries f) { return f *= c; }

private:
    long D_ = 1;
    std::map<long, Rational> c_;
    long ord_ = kExact;

    void normalize();
};

struct Difference {
    Rational exponent;
    Rational lhs;
    Rational rhs;
};

// first exponent below min(N, both orders) where f and g differ
std::optional<Difference> first_difference(const FormalSeries& f, const FormalSeries& g, const Rational& N);

// (1 - c q^e)
struct Binomial {
    Rational c;
    Rational e;
};

// (a; base)_inf raised to power (negative = denominator); base exponent > 0
struct InfiniteFactor {
    Monomial a;
    Monomial base;
    long power = 1;
};

// coeff q^exp prod num / prod den times infinite products; the valuation is exact
struct ProductTerm {
    Rational coeff{1};
    Rational exp{0};
    std::vector<Binomial> num;
    std::vector<Binomial> den;
    std::vector<InfiniteFactor> inf;

    // append (a; base)_n, n of either sign
    void poch(const Monomial& a, const Monomial& base, long n);
    void inv_poch(const Monomial& a, const Monomial& base, long n);
    void times(const Monomial& m);
    void poch_inf(const Monomial& a, const Monomial& base, long power = 1);
    void theta(const Monomial& x, const Monomial& base, long power = 1);
    // (base; base)_inf^power
    void eta(const Monomial& base, long power = 1);

    // nullopt for an identically zero term
    std::optional<Rational> valuation() const;
    FormalSeries expand(const Rational& N) const;
};

// (a; base)_n; n = nullopt means infinity. Base exponent must be positive.
FormalSeries poch_fs(const Monomial& a, const Monomial& base, std::optional<long> n, const Rational& N);
// theta_base(x) = (base, -x, -base/x; base)_inf
FormalSeries theta_fs(const Monomial& x, const Monomial& base, const Rational& N);

// exact sum of all terms with valuation below N; the valuation is assumed to
// grow once it has passed N in each direction
constexpr long kDefaultWindow = 1000000;
FormalSeries bilateral_sum_fs(const std::function<ProductTerm(long)>& term, const Rational& N,
                              long max_window = kDefaultWindow);
// nullopt valuation marks a vanishing term
FormalSeries bilateral_sum_fs(const std::function<std::optional<Rational>(long)>& valuation,
                              const std::function<FormalSeries(long)>& term, const Rational& N,
                              long max_window = kDefaultWindow);
FormalSeries eulerian_sum_fs(const std::function<ProductTerm(long)>& term, long start, const Rational& N,
                             long max_window = kDefaultWindow);

// W(a; b, c; base) as a formal bilateral sum
ProductTerm w_term(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& base, long n);
FormalSeries w_fs(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& base, const Rational& N);

}  // namespace qpsi::fps
