#include "qpsi/series.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qpsi {

const char* to_string(Convergence c)
{
    switch (c) {
    case Convergence::Convergent: return "convergent";
    case Convergence::Conditional: return "conditional";
    case Convergence::Divergent: return "divergent";
    }
    return "?";
}

namespace {

// verdict for "lhs < rhs" in log-modulus
Convergence strict_less(double lhs, double rhs, double margin, double eps)
{
    double d = rhs - lhs;
    if (d > std::max(margin, eps)) return Convergence::Convergent;
    if (d < -eps) return Convergence::Divergent;
    return Convergence::Conditional;
}

Convergence worst(Convergence a, Convergence b)
{
    return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

double logabs(Complex z)
{
    return std::log(std::abs(z));
}

}  // namespace

ConvergenceInfo classify(const QContext& ctx, const HypergeometricSpec& spec, double log_margin)
{
    const long r = static_cast<long>(spec.upper.size());
    const long s = static_cast<long>(spec.lower.size());
    const double eps = ctx.pole_eps;
    const Complex x = spec.arg;
    ConvergenceInfo out;
    if (spec.kind == SeriesKind::Unilateral) {
        if (r < s + 1) return out;
        if (x == Complex(0.0)) return out;
        if (r > s + 1) {
            out.status = Convergence::Divergent;
            out.reason = "divergent: r > s+1 with x != 0";
            return out;
        }
        out.status = strict_less(logabs(x), 0.0, log_margin, eps);
        if (out.status != Convergence::Convergent) out.reason = std::string(to_string(out.status)) + ": |x| >= 1";
        return out;
    }

    if (x == Complex(0.0)) {
        out.status = Convergence::Divergent;
        out.reason = "divergent: bilateral series with x = 0";
        return out;
    }
    // n -> +inf
    if (r > s) {
        out.status = Convergence::Divergent;
        out.reason = "divergent: r > s";
        return out;
    }
    if (r == s) {
        Convergence c = strict_less(logabs(x), 0.0, log_margin, eps);
        if (c != Convergence::Convergent) {
            out.status = c;
            out.reason = std::string(to_string(c)) + ": |x| >= 1";
        }
    }
    // n -> -inf; vanishing parameters change the growth rate
    long za = 0, zb = 0;
    double lb = 0.0;
    for (Complex a : spec.upper) {
        if (a == Complex(0.0)) ++za;
        else lb -= logabs(a);
    }
    for (Complex b : spec.lower) {
        if (b == Complex(0.0)) ++zb;
        else lb += logabs(b);
    }
    long k = za - zb;
    if (k > 0) {
        out.status = Convergence::Divergent;
        out.reason = "divergent: vanishing upper parameters";
    } else if (k == 0) {
        Convergence c = strict_less(lb, logabs(x), log_margin, eps);
        if (c != Convergence::Convergent && worst(out.status, c) != out.status) {
            out.status = c;
            out.reason = std::string(to_string(c)) + ": |x| <= |b1...bs/(a1...ar)|";
        }
    }
    return out;
}

Convergence convergence_check(const QContext& ctx, const HypergeometricSpec& spec, double log_margin)
{
    return classify(ctx, spec, log_margin).status;
}

Complex term(const QContext& ctx, const HypergeometricSpec& spec, long n)
{
    const long r = static_cast<long>(spec.upper.size());
    const long s = static_cast<long>(spec.lower.size());
    long e = s - r;
    if (spec.kind == SeriesKind::Unilateral) {
        if (n < 0) return 0.0;
        e += 1;
    }
    Complex num = pochhammer(ctx, spec.upper, n);
    Complex den = pochhammer(ctx, spec.lower, n);
    if (spec.kind == SeriesKind::Unilateral) den *= pochhammer(ctx, ctx.q, n);
    if (den == Complex(0.0)) throw PoleError("term: vanishing denominator");
    double nn = double(n);
    Complex power = std::exp(double(e) * nn * (nn - 1) / 2.0 * ctx.log_q());
    if ((e * n) % 2 != 0) power = -power;
    return num / den * power * std::pow(spec.arg, static_cast<int>(n));
}

Complex log_one_minus(Complex c, double m, Complex log_q)
{
    if (c == Complex(0.0)) return 0.0;
    Complex lz = std::log(c) + m * log_q;
    if (lz.real() > 0.0) return lz + Complex(0.0, kPi) + std::log(1.0 - std::exp(-lz));
    return std::log(1.0 - std::exp(lz));
}

Complex factor_ratio(const QContext& ctx, std::initializer_list<QFactor> num, std::initializer_list<QFactor> den,
                     Complex extra_log)
{
    const Complex lq = ctx.log_q();
    Complex acc = extra_log;
    for (const QFactor& f : num) acc += log_one_minus(f.c, f.m, lq);
    for (const QFactor& f : den) {
        if (f.c == Complex(0.0)) continue;
        Complex lz = std::log(f.c) + f.m * lq;
        if (lz.real() < 1.0 && std::abs(1.0 - std::exp(lz)) < ctx.pole_eps)
            throw PoleError("series: vanishing denominator factor");
        acc -= log_one_minus(f.c, f.m, lq);
    }
    if (!std::isfinite(acc.real())) return acc.real() < 0 ? Complex(0.0) : Complex(INFINITY);
    return std::exp(acc);
}

SeriesValue sum_terms(const QContext& ctx, const TermWalker& w)
{
    const bool two_sided = static_cast<bool>(w.down);
    auto weight = [&](long n) { return w.weight ? w.weight(n) : Complex(1.0); };

    SeriesValue out;
    Complex S = weight(0) * w.start;
    Complex tp = w.start, tm = w.start;
    Complex last_p = S, prev_p = 0.0, last_m = S, prev_m = 0.0;
    long hi = 0, lo = 0;
    bool up_done = (w.start == Complex(0.0)), down_done = !two_sided || up_done;
    long N = 8;
    for (;;) {
        Complex added = 0.0;
        while (!up_done && hi < N) {
            tp *= w.up(hi);
            ++hi;
            if (tp == Complex(0.0)) {
                up_done = true;
                last_p = prev_p = 0.0;
                break;
            }
            Complex t = weight(hi) * tp;
            prev_p = last_p;
            last_p = t;
            added += t;
        }
        while (!down_done && -lo < N) {
            tm *= w.down(lo);
            --lo;
            if (tm == Complex(0.0)) {
                down_done = true;
                last_m = prev_m = 0.0;
                break;
            }
            Complex t = weight(lo) * tm;
            prev_m = last_m;
            last_m = t;
            added += t;
        }
        S += added;
        if (!std::isfinite(S.real()) || !std::isfinite(S.imag()))
            throw NonConvergence("series: overflow while summing");

        auto side_tail = [](bool done, Complex last, Complex prev) {
            if (done) return 0.0;
            double l = std::abs(last), p = std::abs(prev);
            if (l == 0.0) return 0.0;
            if (p == 0.0) return l;
            double rho = l / p;
            if (rho >= 1.0) return std::numeric_limits<double>::infinity();
            return l * rho / (1.0 - rho);
        };
        double tail = side_tail(up_done, last_p, prev_p);
        if (two_sided) tail += side_tail(down_done, last_m, prev_m);
        double scale = std::max(std::abs(S), 1e-300);
        out.report.terms_used = hi - lo + 1;
        out.report.n_min = lo;
        out.report.n_max = hi;
        out.report.tail_estimate = tail;
        if (std::abs(added) <= ctx.tol * scale && tail <= ctx.tol * scale) break;
        if ((up_done && down_done)) break;
        if (out.report.terms_used > ctx.max_terms)
            throw NonConvergence("series: max_terms exceeded before reaching tol");
        N *= 2;
    }
    out.value = S;
    out.report.converged = true;
    return out;
}

SeriesValue sum_bilateral(const QContext& ctx, const std::function<Complex(long)>& t)
{
    TermWalker w;
    w.start = 1.0;
    w.up = [](long) { return Complex(1.0); };
    w.down = [](long) { return Complex(1.0); };
    w.weight = t;
    return sum_terms(ctx, w);
}

SeriesValue eval(const QContext& ctx, const HypergeometricSpec& spec, double log_margin)
{
    ConvergenceInfo ci = classify(ctx, spec, log_margin);
    if (ci.status != Convergence::Convergent) throw DomainError(ci.reason);

    const long r = static_cast<long>(spec.upper.size());
    const long s = static_cast<long>(spec.lower.size());
    const bool uni = spec.kind == SeriesKind::Unilateral;
    const long e = s - r + (uni ? 1 : 0);
    const Complex lq = ctx.log_q();
    const Complex x = spec.arg;
    const double peps = ctx.pole_eps;

    // factor lists in log form; the q-power and argument go into extra_log
    const Complex lx = std::log(x);
    const Complex sign_log = (e % 2 != 0) ? Complex(0.0, kPi) : Complex(0.0);
    std::vector<Complex> ups = spec.upper, lows = spec.lower;
    auto accumulate = [&](const std::vector<Complex>& num, const std::vector<Complex>& den, double m, Complex extra) {
        Complex acc = extra;
        for (Complex a : num) acc += log_one_minus(a, m, lq);
        for (Complex b : den) {
            if (b == Complex(0.0)) continue;
            Complex lz = std::log(b) + m * lq;
            if (lz.real() < 1.0 && std::abs(1.0 - std::exp(lz)) < peps)
                throw PoleError("series: vanishing denominator factor");
            acc -= log_one_minus(b, m, lq);
        }
        if (!std::isfinite(acc.real())) return acc.real() < 0 ? Complex(0.0) : Complex(INFINITY);
        return std::exp(acc);
    };
    if (uni) lows.push_back(ctx.q);

    TermWalker w;
    w.start = 1.0;
    w.up = [&](long n) {
        return accumulate(ups, lows, double(n), double(e * n) * lq + sign_log + lx);
    };
    if (!uni) {
        w.down = [&](long n) {
            return accumulate(lows, ups, double(n - 1), -double(e * (n - 1)) * lq + sign_log - lx);
        };
    }
    SeriesValue v = sum_terms(ctx, w);
    v.report.convergence = ci.status;
    return v;
}

Complex phi(const QContext& ctx, std::vector<Complex> upper, std::vector<Complex> lower, Complex x)
{
    return eval(ctx, {std::move(upper), std::move(lower), x, SeriesKind::Unilateral}).value;
}

Complex psi(const QContext& ctx, std::vector<Complex> upper, std::vector<Complex> lower, Complex x)
{
    return eval(ctx, {std::move(upper), std::move(lower), x, SeriesKind::Bilateral}).value;
}

}  // namespace qpsi
