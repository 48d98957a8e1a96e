#include "qpsi/fps.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qpsi::fps {

namespace {

long ceil_units(const Rational& x, long D) {
    mpq_class y = x * D;
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    if (!r.fits_slong_p()) throw RangeOverflow("fps: exponent out of range");
    return r.get_si();
}

long exact_units(const Rational& x, long D) {
    mpq_class y = x * D;
    if (y.get_den() != 1) throw Error("fps: exponent not representable in denominator");
    if (!y.get_num().fits_slong_p()) throw RangeOverflow("fps: exponent out of range");
    return y.get_num().get_si();
}

long den_of(const Rational& x) {
    if (!x.get_den().fits_slong_p()) throw RangeOverflow("fps: exponent denominator too large");
    return x.get_den().get_si();
}

long clamp_ord(long k) { return std::min(k, FormalSeries::kExact); }

Rational pow_q(const Rational& c, long n) {
    Rational r = 1;
    Rational b = n >= 0 ? c : Rational(1) / c;
    unsigned long m = n >= 0 ? static_cast<unsigned long>(n) : static_cast<unsigned long>(-n);
    while (m) {
        if (m & 1) r *= b;
        b *= b;
        m >>= 1;
    }
    return r;
}

}  // namespace

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational exponent_of(long k, long D) { return make_rational(k, D); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

Monomial operator*(const Monomial& a, const Monomial& b) { return {a.coeff * b.coeff, a.exp + b.exp}; }

Monomial inverse(const Monomial& a) {
    if (a.coeff == 0) throw NonUnit("fps: inverse of zero monomial");
    return {Rational(1) / a.coeff, -a.exp};
}

Monomial power(const Monomial& a, long n) { return {pow_q(a.coeff, n), a.exp * n}; }

// FormalSeries

FormalSeries FormalSeries::zero(const Rational& order) {
    FormalSeries f;
    f.D_ = den_of(order);
    f.ord_ = ceil_units(order, f.D_);
    return f;
}

FormalSeries FormalSeries::constant(const Rational& c) {
    FormalSeries f;
    if (c != 0) f.c_[0] = c;
    return f;
}

FormalSeries FormalSeries::monomial(const Monomial& m) {
    FormalSeries f;
    f.D_ = den_of(m.exp);
    if (m.coeff != 0) f.c_[exact_units(m.exp, f.D_)] = m.coeff;
    return f;
}

FormalSeries FormalSeries::from_units(long D, std::map<long, Rational> coeffs, long order_k) {
    if (D <= 0) throw Error("fps: denominator must be positive");
    FormalSeries f;
    f.D_ = D;
    f.c_ = std::move(coeffs);
    f.ord_ = clamp_ord(order_k);
    f.normalize();
    return f;
}

void FormalSeries::normalize() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0 || it->first >= ord_)
            it = c_.erase(it);
        else
            ++it;
    }
}

Rational FormalSeries::order() const { return make_rational(ord_, D_); }

Rational FormalSeries::coeff(const Rational& e) const {
    mpq_class y = e * D_;
    if (y.get_den() != 1) return 0;
    auto it = c_.find(y.get_num().get_si());
    return it == c_.end() ? Rational(0) : it->second;
}

std::optional<Rational> FormalSeries::valuation() const {
    if (c_.empty()) {
        if (exact()) return std::nullopt;
        return order();
    }
    return make_rational(c_.begin()->first, D_);
}

long FormalSeries::valuation_units() const { return c_.empty() ? ord_ : c_.begin()->first; }

FormalSeries FormalSeries::with_denom(long D) const {
    if (D % D_ != 0) throw Error("fps: denominator is not a multiple");
    if (D == D_) return *this;
    long s = D / D_;
    FormalSeries f;
    f.D_ = D;
    for (const auto& [k, c] : c_) f.c_.emplace(k * s, c);
    f.ord_ = exact() ? kExact : ord_ * s;
    return f;
}

FormalSeries FormalSeries::reduced() const {
    long g = D_;
    for (const auto& [k, c] : c_) g = std::gcd(g, k);
    if (!exact()) g = std::gcd(g, ord_);
    if (g <= 1) return *this;
    FormalSeries f;
    f.D_ = D_ / g;
    for (const auto& [k, c] : c_) f.c_.emplace(k / g, c);
    f.ord_ = exact() ? kExact : ord_ / g;
    return f;
}

FormalSeries FormalSeries::truncated(const Rational& N) const {
    long D = lcm_long(D_, den_of(N));
    FormalSeries f = with_denom(D);
    f.ord_ = std::min(f.ord_, ceil_units(N, D));
    f.normalize();
    return f.reduced();
}

FormalSeries FormalSeries::shifted(const Rational& e) const {
    long D = lcm_long(D_, den_of(e));
    FormalSeries f = with_denom(D);
    long s = exact_units(e, D);
    FormalSeries g;
    g.D_ = D;
    for (const auto& [k, c] : f.c_) g.c_.emplace(k + s, c);
    g.ord_ = f.exact() ? kExact : clamp_ord(f.ord_ + s);
    return g;
}

FormalSeries FormalSeries::operator-() const {
    FormalSeries f = *this;
    for (auto& [k, c] : f.c_) c = -c;
    return f;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& g) {
    long D = lcm_long(D_, g.D_);
    *this = with_denom(D);
    FormalSeries h = g.with_denom(D);
    ord_ = std::min(ord_, h.ord_);
    for (const auto& [k, c] : h.c_) {
        if (k >= ord_) break;
        c_[k] += c;
    }
    normalize();
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& g) { return *this += -g; }

FormalSeries& FormalSeries::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [k, v] : c_) v *= c;
    return *this;
}

FormalSeries operator*(const FormalSeries& f0, const FormalSeries& g0) {
    long D = lcm_long(f0.D_, g0.D_);
    FormalSeries f = f0.with_denom(D), g = g0.with_denom(D);
    FormalSeries h;
    h.D_ = D;
    if (f.exact() && g.exact()) {
        h.ord_ = FormalSeries::kExact;
    } else {
        long vf = f.valuation_units(), vg = g.valuation_units();
        long a = f.exact() ? FormalSeries::kExact : clamp_ord(f.ord_ + vg);
        long b = g.exact() ? FormalSeries::kExact : clamp_ord(vf + g.ord_);
        // an exact zero factor keeps the product exact
        if ((f.exact() && f.c_.empty()) || (g.exact() && g.c_.empty()))
            h.ord_ = FormalSeries::kExact;
        else
            h.ord_ = std::min(a, b);
    }
    for (const auto& [i, a] : f.c_) {
        for (const auto& [j, b] : g.c_) {
            if (i + j >= h.ord_) break;
            h.c_[i + j] += a * b;
        }
    }
    h.normalize();
    return h;
}

FormalSeries FormalSeries::invert(std::optional<Rational> order) const {
    if (c_.empty()) throw NonUnit("fps: cannot invert a zero series");
    long v = c_.begin()->first;
    Rational lead = c_.begin()->second;
    long D = D_;
    long ord = ord_;
    if (exact()) {
        if (c_.size() == 1) {
            FormalSeries f;
            f.D_ = D_;
            f.c_[-v] = Rational(1) / lead;
            return f;
        }
        if (!order) throw Instability("fps: inverse of a polynomial needs an order");
        D = lcm_long(D_, den_of(*order));
        // want the inverse exact below order: the normalized part to order + v
        ord = ceil_units(*order, D) + 2 * v * (D / D_);
    }
    FormalSeries f = with_denom(D);
    v = f.c_.begin()->first;
    long L = ord - 2 * v;  // result order in units
    long len = L + v;       // length of normalized inverse (units from 0)
    FormalSeries h;
    h.D_ = D;
    h.ord_ = L;
    if (len <= 0) return h;
    std::vector<std::pair<long, Rational>> g;
    for (const auto& [k, c] : f.c_) {
        if (k == v) continue;
        if (k - v >= len) break;
        g.emplace_back(k - v, c / lead);
    }
    std::vector<Rational> a(static_cast<size_t>(len));
    a[0] = 1;
    for (long k = 1; k < len; ++k) {
        Rational s = 0;
        for (const auto& [j, c] : g) {
            if (j > k) break;
            s += c * a[k - j];
        }
        a[k] = -s;
    }
    Rational il = Rational(1) / lead;
    for (long k = 0; k < len; ++k)
        if (a[k] != 0) h.c_[k - v] = a[k] * il;
    h.normalize();
    return h;
}

FormalSeries FormalSeries::pow(long n) const {
    if (n < 0) return invert().pow(-n);
    FormalSeries r = constant(1), b = *this;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

double FormalSeries::evaluate(double q) const {
    double s = 0;
    for (const auto& [k, c] : c_) s += c.get_d() * std::pow(q, static_cast<double>(k) / D_);
    return s;
}

std::string FormalSeries::to_string(long max_terms) const {
    std::ostringstream os;
    long n = 0;
    for (const auto& [k, c] : c_) {
        if (n == max_terms) {
            os << " + ...";
            break;
        }
        Rational e = make_rational(k, D_);
        if (n) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << (e.get_den() == 1 ? e.get_str() : "(" + e.get_str() + ")");
        }
        ++n;
    }
    if (n == 0) os << "0";
    if (!exact()) os << " + O(q^" << order().get_str() << ")";
    return os.str();
}

std::string FormalSeries::to_csv() const {
    std::ostringstream os;
    os << "exponent_numerator,denominator,coefficient_numerator,coefficient_denominator\n";
    for (const auto& [k, c] : c_) os << k << "," << D_ << "," << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
    return os.str();
}

std::optional<Difference> first_difference(const FormalSeries& f0, const FormalSeries& g0, const Rational& N) {
    long D = lcm_long(lcm_long(f0.denom(), g0.denom()), den_of(N));
    FormalSeries f = f0.with_denom(D), g = g0.with_denom(D);
    long lim = std::min({ceil_units(N, D), f.order_units(), g.order_units()});
    auto fi = f.units().begin(), gi = g.units().begin();
    while (true) {
        long kf = fi == f.units().end() ? FormalSeries::kExact : fi->first;
        long kg = gi == g.units().end() ? FormalSeries::kExact : gi->first;
        long k = std::min(kf, kg);
        if (k >= lim) return std::nullopt;
        Rational a = kf == k ? fi->second : Rational(0);
        Rational b = kg == k ? gi->second : Rational(0);
        if (a != b) return Difference{make_rational(k, D), a, b};
        if (kf == k) ++fi;
        if (kg == k) ++gi;
    }
}

// ProductTerm

void ProductTerm::poch(const Monomial& a, const Monomial& base, long n) {
    if (a.coeff == 0) return;
    if (n >= 0) {
        for (long j = 0; j < n; ++j) {
            Monomial m = a * power(base, j);
            num.push_back({m.coeff, m.exp});
        }
    } else {
        for (long j = 1; j <= -n; ++j) {
            Monomial m = a * power(base, -j);
            den.push_back({m.coeff, m.exp});
        }
    }
}

void ProductTerm::inv_poch(const Monomial& a, const Monomial& base, long n) {
    ProductTerm t;
    t.poch(a, base, n);
    den.insert(den.end(), t.num.begin(), t.num.end());
    num.insert(num.end(), t.den.begin(), t.den.end());
}

void ProductTerm::times(const Monomial& m) {
    coeff *= m.coeff;
    exp += m.exp;
}

void ProductTerm::poch_inf(const Monomial& a, const Monomial& base, long pw) {
    if (base.exp <= 0) throw Instability("fps: infinite product needs a base with positive exponent");
    if (a.coeff == 0 || pw == 0) return;
    inf.push_back({a, base, pw});
}

void ProductTerm::theta(const Monomial& x, const Monomial& base, long pw) {
    if (x.coeff == 0) throw PoleError("fps: theta of zero");
    poch_inf(base, base, pw);
    poch_inf({-x.coeff, x.exp}, base, pw);
    Monomial r = base * inverse(x);
    poch_inf({-r.coeff, r.exp}, base, pw);
}

void ProductTerm::eta(const Monomial& base, long pw) { poch_inf(base, base, pw); }

namespace {

struct Flat {
    bool zero = false;
    Rational coeff = 1;
    Rational exp = 0;
    // positive-exponent factors (1 - c q^e) with multiplicity (negative = denominator)
    std::vector<std::tuple<Rational, Rational, long>> fac;
    // infinite products with the nonpositive factors split off
    std::vector<std::pair<InfiniteFactor, long>> tails;  // (factor, first index j with positive exponent)
};

void absorb(Flat& f, const Rational& c, const Rational& e, long mult) {
    if (c == 0) return;
    if (e == 0) {
        Rational k = 1 - c;
        if (k == 0) {
            if (mult < 0) throw PoleError("fps: vanishing denominator factor");
            f.zero = true;
            return;
        }
        f.coeff *= pow_q(k, mult);
        return;
    }
    if (e < 0) {
        // 1 - c q^e = -c q^e (1 - q^{-e}/c)
        f.coeff *= pow_q(-c, mult);
        f.exp += e * mult;
        f.fac.emplace_back(Rational(1) / c, -e, mult);
        return;
    }
    f.fac.emplace_back(c, e, mult);
}

Flat flatten(const ProductTerm& t) {
    Flat f;
    f.coeff = t.coeff;
    f.exp = t.exp;
    if (t.coeff == 0) f.zero = true;
    for (const auto& b : t.num) absorb(f, b.c, b.e, 1);
    for (const auto& b : t.den) absorb(f, b.c, b.e, -1);
    for (const auto& inf : t.inf) {
        long j = 0;
        while (true) {
            Monomial m = inf.a * power(inf.base, j);
            if (m.exp > 0) break;
            absorb(f, m.coeff, m.exp, inf.power);
            ++j;
        }
        f.tails.emplace_back(inf, j);
    }
    return f;
}

}  // namespace

std::optional<Rational> ProductTerm::valuation() const {
    Flat f = flatten(*this);
    if (f.zero) return std::nullopt;
    return f.exp;
}

FormalSeries ProductTerm::expand(const Rational& N) const {
    Flat f = flatten(*this);
    if (f.zero) return FormalSeries::zero(N);
    long D = lcm_long(den_of(f.exp), den_of(N));
    for (const auto& [c, e, m] : f.fac) D = lcm_long(D, den_of(e));
    for (const auto& [inf, j] : f.tails) D = lcm_long(lcm_long(D, den_of(inf.a.exp)), den_of(inf.base.exp));
    long E = exact_units(f.exp, D);
    long Nk = ceil_units(N, D);
    long L = Nk - E;
    if (L <= 0) return FormalSeries::from_units(D, {}, Nk);
    std::vector<Rational> a(static_cast<size_t>(L));
    a[0] = 1;
    auto apply = [&](const Rational& c, long k, long mult) {
        if (k >= L) return;
        for (long r = 0; r < std::abs(mult); ++r) {
            if (mult > 0) {
                for (long i = L - 1; i >= k; --i)
                    if (a[i - k] != 0) a[i] -= c * a[i - k];
            } else {
                for (long i = k; i < L; ++i)
                    if (a[i - k] != 0) a[i] += c * a[i - k];
            }
        }
    };
    for (const auto& [c, e, m] : f.fac) apply(c, exact_units(e, D), m);
    for (const auto& [inf, j0] : f.tails) {
        for (long j = j0;; ++j) {
            Monomial m = inf.a * power(inf.base, j);
            long k = exact_units(m.exp, D);
            if (k >= L) break;
            apply(m.coeff, k, inf.power);
        }
    }
    std::map<long, Rational> out;
    for (long i = 0; i < L; ++i)
        if (a[i] != 0) out.emplace(i + E, a[i] * f.coeff);
    return FormalSeries::from_units(D, std::move(out), Nk).reduced();
}

FormalSeries poch_fs(const Monomial& a, const Monomial& base, std::optional<long> n, const Rational& N) {
    ProductTerm t;
    if (n)
        t.poch(a, base, *n);
    else
        t.poch_inf(a, base);
    return t.expand(N);
}

FormalSeries theta_fs(const Monomial& x, const Monomial& base, const Rational& N) {
    ProductTerm t;
    t.theta(x, base);
    return t.expand(N);
}

namespace {

// walks n = start, start+dir, ... until the valuation has passed N and kept growing
template <class Val, class Term>
void walk(long start, long dir, const Val& val, const Term& add, const Rational& N, long max_window) {
    std::optional<Rational> prev;
    int above = 0;
    for (long i = 0;; ++i) {
        if (i > max_window)
            throw RangeOverflow("fps: valuation did not pass the order within " + std::to_string(max_window) + " terms");
        long n = start + dir * i;
        std::optional<Rational> v = val(n);
        if (v && *v < N) {
            add(n);
            above = 0;
        } else {
            bool growing = !v || !prev || *v >= *prev;
            above = growing ? above + 1 : 0;
            if (above >= 3) return;
        }
        if (v) prev = v;
    }
}

}  // namespace

FormalSeries bilateral_sum_fs(const std::function<std::optional<Rational>(long)>& valuation,
                              const std::function<FormalSeries(long)>& term, const Rational& N, long max_window) {
    FormalSeries s = FormalSeries::zero(N);
    auto add = [&](long n) { s += term(n); };
    walk(0, 1, valuation, add, N, max_window);
    walk(-1, -1, valuation, add, N, max_window);
    return s.reduced();
}

FormalSeries bilateral_sum_fs(const std::function<ProductTerm(long)>& term, const Rational& N, long max_window) {
    return bilateral_sum_fs([&](long n) { return term(n).valuation(); }, [&](long n) { return term(n).expand(N); }, N,
                            max_window);
}

FormalSeries eulerian_sum_fs(const std::function<ProductTerm(long)>& term, long start, const Rational& N,
                             long max_window) {
    FormalSeries s = FormalSeries::zero(N);
    walk(start, 1, [&](long n) { return term(n).valuation(); }, [&](long n) { s += term(n).expand(N); }, N,
         max_window);
    return s.reduced();
}

ProductTerm w_term(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& base, long n) {
    ProductTerm t;
    Monomial top = a * power(base, 2 * n);
    t.num.push_back({top.coeff, top.exp});
    t.poch(b, base, n);
    t.poch(c, base, n);
    t.inv_poch(a * inverse(b), base, n + 1);
    t.inv_poch(a * inverse(c), base, n + 1);
    // base^{2n^2} (a^3/(bc))^n
    Monomial g = power(a, 3) * inverse(b * c);
    t.times(power(base, 2 * n * n));
    t.times(power(g, n));
    return t;
}

FormalSeries w_fs(const Monomial& a, const Monomial& b, const Monomial& c, const Monomial& base, const Rational& N) {
    return bilateral_sum_fs([&](long n) { return w_term(a, b, c, base, n); }, N);
}

}  // namespace qpsi::fps
