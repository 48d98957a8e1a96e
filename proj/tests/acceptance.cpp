// acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qpsi/catalog.hpp"
#include "qpsi/elliptic.hpp"
#include "qpsi/fps.hpp"
#include "qpsi/identities.hpp"

using namespace qpsi;
namespace id = qpsi::identities;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::uint64_t g_seed = 42;

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// every id must pass at tol with the full number of accepted draws
Outcome identities_pass(const std::vector<std::string>& ids, long draws, double tol)
{
    id::VerifyOptions o;
    o.check_tol = tol;
    Outcome out;
    double worst = 0.0;
    std::string worst_id;
    for (const auto& r : id::run_suite(o, ids, g_seed, draws)) {
        if (r.status != id::Status::Pass || r.draws != draws) {
            out.pass = false;
            out.detail += r.id + " " + id::to_string(r.status) + fmt(" (max err %.2e); ", r.max_rel_err);
        }
        if (r.max_rel_err >= worst) worst = r.max_rel_err, worst_id = r.id;
    }
    out.detail += std::to_string(ids.size()) + " ids x " + std::to_string(draws) + " draws, worst " +
                  fmt("%.2e", worst) + " (" + worst_id + ")";
    return out;
}

Outcome with_budget(Outcome o, std::chrono::steady_clock::time_point t0, double budget)
{
    double t = seconds_since(t0);
    if (t >= budget) o.pass = false;
    o.detail += fmt(", %.2f s", t) + fmt(" of %.0f s budget", budget);
    return o;
}

Outcome c1()
{
    auto t0 = std::chrono::steady_clock::now();
    return with_budget(identities_pass({"RAMANUJAN_1PSI1", "BAILEY_6PSI6"}, 20, 1e-8), t0, 10);
}

Outcome c2()
{
    auto t0 = std::chrono::steady_clock::now();
    return with_budget(identities_pass({"MU_EXPR_EQUIV", "THM12"}, 50, 1e-8), t0, 60);
}

Outcome c3()
{
    return identities_pass({"THM11_1", "THM11_2", "THM11_3", "THM11_2_QBESSEL_FORM", "TRANS_110", "TRANS_VARIATION"},
                           20, 1e-8);
}

Outcome c4()
{
    return identities_pass({"SLATER_A2_1", "SLATER_A2_2", "SLATER_A2_3", "BAILEY_VWP_A", "BAILEY_VWP_B", "BAILEY_T0",
                            "BAILEY_T1", "BAILEY_T2", "BAILEY_T3", "INV_R", "SLATER_A_R1", "SLATER_A_R2",
                            "SLATER_A_R3", "SLATER_BC_R1", "SLATER_BC_R2", "SLATER_BC_8PSI8"},
                           20, 1e-8);
}

Outcome c5()
{
    auto a = identities_pass({"MU_CQH"}, 20, 1e-9);
    auto b = identities_pass({"MU_QBESSEL_REC"}, 20, 1e-8);
    return {a.pass && b.pass, a.detail + "; " + b.detail};
}

// A display that disagrees with its definition counts as handled when it comes back
// as a localized finding: first bad exponent and both coefficients.
Outcome c6()
{
    auto t0 = std::chrono::steady_clock::now();
    auto reps = catalog::verify_all(fps::Rational(40));
    Outcome o;
    int exact = 0, localized = 0, bad = 0;
    std::string names;
    for (const auto& r : reps) {
        if (r.status == catalog::EntryStatus::Pass) {
            ++exact;
            continue;
        }
        bool ok = r.status == catalog::EntryStatus::Finding && !r.findings.empty();
        for (const auto& f : r.findings) ok = ok && f.error.empty() && f.lhs_coeff != f.form_coeff;
        if (ok) {
            ++localized;
            const auto& f = r.findings[0];
            names += " " + r.name + "[" + f.form + " q^" + f.exponent.get_str() + ": definition " +
                     f.lhs_coeff.get_str() + ", display " + f.form_coeff.get_str() +
                     (f.passing_variants.empty() ? "" : ", corrected: " + f.passing_variants[0]) + "]";
        } else {
            ++bad;
            names += " " + r.name + "[unlocalized: " + r.error + "]";
        }
    }
    o.pass = reps.size() == 46 && bad == 0;
    o.detail = std::to_string(reps.size()) + " entries, " + std::to_string(exact) + " exact, " +
               std::to_string(localized) + " localized findings" + (names.empty() ? "" : ":" + names);
    return with_budget(o, t0, 300);
}

Outcome c7()
{
    auto o = identities_pass({"WP_FORMS", "M_PERIODICITY", "JACOBI_FORMS", "CURIOUS_RELATION"}, 20, 1e-8);
    auto r = elliptic::resolve_curious(g_seed, 20);
    int passing = 0;
    for (const auto& c : r.candidates) passing += c.pass;
    if (passing != 1 || !r.resolved) o.pass = false;
    o.detail += "; curious relation: " + std::to_string(passing) + " of " + std::to_string(r.candidates.size()) +
                " candidates pass" +
                (r.resolved ? std::string(", resolved to ") + elliptic::to_string(*r.resolved) : "");
    return o;
}

fps::FormalSeries random_sparse(std::mt19937_64& g, long D, long order_units)
{
    std::uniform_int_distribution<long> ex(-2 * D, 6 * D), co(-7, 7);
    std::map<long, fps::Rational> m;
    for (int i = 0; i < 6; ++i) m[ex(g)] = fps::make_rational(co(g), 1 + std::abs(co(g)));
    m[-3 * D] = fps::make_rational(1 + std::abs(co(g)));
    return fps::FormalSeries::from_units(D, m, order_units);
}

Outcome c8()
{
    using fps::make_rational;
    Outcome o;
    const fps::Rational N(200);
    auto mono = [](long c, long e) { return fps::Monomial{make_rational(c), make_rational(e)}; };
    auto single = [](long e, long c) {
        return fps::FormalSeries::from_units(1, {{e, make_rational(c)}}, fps::FormalSeries::kExact);
    };

    // (q, -q, -1; q)_inf = sum q^{n(n+1)/2};  (q;q)_inf = sum (-1)^n q^{n(3n-1)/2}
    bool formal =
        !fps::first_difference(
            fps::theta_fs(mono(1, 1), mono(1, 1), N),
            fps::bilateral_sum_fs([&](long n) { return std::optional<fps::Rational>(make_rational(n * (n + 1) / 2)); },
                                  [&](long n) { return single(n * (n + 1) / 2, 1); }, N),
            N) &&
        !fps::first_difference(
            fps::poch_fs(mono(1, 1), mono(1, 1), std::nullopt, N),
            fps::bilateral_sum_fs(
                [&](long n) { return std::optional<fps::Rational>(make_rational(n * (3 * n - 1) / 2)); },
                [&](long n) { return single(n * (3 * n - 1) / 2, n % 2 ? -1 : 1); }, N),
            N);

    // product against bilateral sum at sampled (q, x)
    Sampler s(g_seed, "acceptance.jtp");
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        QContext ctx = s.nome(0.05, 0.6);
        double r = std::abs(ctx.q);
        Complex x = s.annulus("x", r, 1.0 / r);
        worst = std::max(worst, id::rel_err(theta_jtp(ctx, x), theta_jtp_sum(ctx, x)));
    }
    const double jtp_tol = 1e-12;  // the evaluator tolerance
    bool numeric = worst <= jtp_tol;

    // ring laws, exact
    std::mt19937_64 g(g_seed);
    int law_failures = 0;
    for (int t = 0; t < 40; ++t) {
        long D = t % 3 == 0 ? 2 : 1;
        auto f = random_sparse(g, D, 15 * D), h = random_sparse(g, D, 12 * D), k = random_sparse(g, 1, 14);
        fps::Rational M = std::min({f.order(), h.order(), k.order()}) - 12;
        auto eq = [&](const fps::FormalSeries& x, const fps::FormalSeries& y) {
            law_failures += fps::first_difference(x, y, M).has_value();
        };
        eq(f * h, h * f);
        eq((f * h) * k, f * (h * k));
        eq(f * (h + k), f * h + f * k);
        eq((f + h) + k, f + (h + k));
        eq(f - f, fps::FormalSeries::zero(f.order()));
        auto fi = f.invert();
        eq(f * fi, fps::FormalSeries::constant(1));
        eq(fi * f, fps::FormalSeries::constant(1));
    }

    // identical bytes per seed regardless of thread count; a new seed changes them
    id::VerifyOptions one, many;
    one.threads = 1;
    many.threads = 8;
    auto a = id::report_json(id::run_suite(one, {}, g_seed, 20));
    auto b = id::report_json(id::run_suite(many, {}, g_seed, 20));
    auto c = id::report_json(id::run_suite(many, {}, g_seed + 1, 20));
    std::vector<std::string> few{"order3.f", "order5.f1", "order6.phi_minus", "order8.S0"};
    std::vector<catalog::EntryReport> ca, cb;
    for (const auto& n : few) ca.push_back(catalog::verify_entry(n, fps::Rational(20)));
    for (auto it = few.rbegin(); it != few.rend(); ++it) cb.insert(cb.begin(), catalog::verify_entry(*it, fps::Rational(20)));
    bool determ = a == b && a != c && catalog::report_json(ca) == catalog::report_json(cb);

    o.pass = formal && numeric && law_failures == 0 && determ;
    o.detail = std::string("triple product to q^200 ") + (formal ? "exact" : "MISMATCH") + ", numeric worst " +
               fmt("%.2e", worst) + fmt(" (tol %.0e)", jtp_tol) + ", ring laws " +
               std::to_string(280 - law_failures) + "/280, suite reports " + (determ ? "byte-identical" : "DIFFER");
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc > 1) g_seed = std::strtoull(argv[1], nullptr, 10);
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"summation oracles (1psi1, 6psi6)", c1},
        {"mu representation equivalence", c2},
        {"three-term relations and translations", c3},
        {"Slater/Bailey layer", c4},
        {"q-Hermite degeneration and q-Bessel recursion", c5},
        {"mock theta catalog to q^40", c6},
        {"elliptic corollary", c7},
        {"infrastructure properties", c8},
    };
    bool all = true;
    int n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::printf("criterion %d %s: %s  %s\n", n, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
    return all ? 0 : 1;
}
