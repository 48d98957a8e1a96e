#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "qpsi/qcore.hpp"

namespace qpsi {

enum class SeriesKind { Unilateral, Bilateral };
enum class Convergence { Convergent, Conditional, Divergent };

const char* to_string(Convergence c);

// r-phi-s (unilateral) or r-psi-s (bilateral) with the usual
// ((-1)^n q^{n(n-1)/2})^{1+s-r} resp. ^{s-r} factor
struct HypergeometricSpec {
    std::vector<Complex> upper;
    std::vector<Complex> lower;
    Complex arg{};
    SeriesKind kind = SeriesKind::Unilateral;
};

struct ConvergenceInfo {
    Convergence status = Convergence::Convergent;
    std::string reason;
};

struct TruncationReport {
    long n_min = 0;
    long n_max = 0;
    long terms_used = 0;
    bool converged = false;
    double tail_estimate = 0.0;
    Convergence convergence = Convergence::Convergent;
};

struct SeriesValue {
    Complex value{};
    TruncationReport report;
};

// log_margin shrinks the convergence region by that much in log-modulus
ConvergenceInfo classify(const QContext& ctx, const HypergeometricSpec& spec, double log_margin = 0.0);
Convergence convergence_check(const QContext& ctx, const HypergeometricSpec& spec, double log_margin = 0.0);

Complex term(const QContext& ctx, const HypergeometricSpec& spec, long n);

// throws DomainError when the series is divergent (or only conditionally
// convergent) under the given margin
SeriesValue eval(const QContext& ctx, const HypergeometricSpec& spec, double log_margin = 0.0);

Complex phi(const QContext& ctx, std::vector<Complex> upper, std::vector<Complex> lower, Complex x);
Complex psi(const QContext& ctx, std::vector<Complex> upper, std::vector<Complex> lower, Complex x);

// Generic term walker. t(0) = start, t(n+1) = t(n) * up(n),
// t(n-1) = t(n) * down(n); the summand is weight(n) * t(n).
// Windows double until the last doubling and the boundary terms are
// below tol relative to the running sum.
struct TermWalker {
    Complex start{1.0};
    std::function<Complex(long)> up;
    std::function<Complex(long)> down;  // empty for one-sided sums
    std::function<Complex(long)> weight;  // optional
};

// log(1 - c q^m), stable when |c q^m| is huge; -inf at an exact zero
Complex log_one_minus(Complex c, double m, Complex log_q);

// exp(sum log(1 - num) - sum log(1 - den) + extra), each factor (c, m) meaning
// 1 - c q^m. Nothing is formed at full size, so huge q^m cannot overflow.
struct QFactor {
    Complex c;
    double m;
};
Complex factor_ratio(const QContext& ctx, std::initializer_list<QFactor> num, std::initializer_list<QFactor> den,
                     Complex extra_log);

SeriesValue sum_terms(const QContext& ctx, const TermWalker& w);

// plain bilateral sum of an explicit term function, for terms that are
// cheap and safe to form directly
SeriesValue sum_bilateral(const QContext& ctx, const std::function<Complex(long)>& t);

}  // namespace qpsi
