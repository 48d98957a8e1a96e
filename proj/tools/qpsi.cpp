// qpsi command line: eval, verify, suite, expand, catalog

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qpsi/catalog.hpp"
#include "qpsi/elliptic.hpp"
#include "qpsi/identities.hpp"
#include "qpsi/mu.hpp"
#include "qpsi/series.hpp"

using namespace qpsi;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error { using std::runtime_error::runtime_error; };

double parse_real(const std::string& s, const std::string& what)
{
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("bad number in " + what + ": '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("bad number in " + what + ": '" + s + "'");
    return v;
}

// "a", "bi", "a+bi", "a-bi", "i", "-i"; exponents allowed ("1e-3-2.5e1i")
Complex parse_complex(std::string s, const std::string& what = "complex literal")
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw UsageError("empty " + what);
    if (t.back() != 'i' && t.back() != 'j') return {parse_real(t, what), 0.0};
    t.pop_back();
    // split at the last sign that is not the leading one and not part of an exponent
    std::size_t cut = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            cut = k;
            break;
        }
    std::string re = cut == std::string::npos ? "" : t.substr(0, cut);
    std::string im = cut == std::string::npos ? t : t.substr(cut);
    if (im.empty() || im == "+") im = "1";
    if (im == "-") im = "-1";
    return {re.empty() ? 0.0 : parse_real(re, what), parse_real(im, what)};
}

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(Complex z)
{
    std::string s = fmt(z.real());
    std::string im = fmt(z.imag());
    if (im[0] != '-') im = "+" + im;
    return s + im + "i";
}

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

std::vector<Complex> parse_list(const std::vector<std::string>& items, const std::string& what)
{
    std::vector<Complex> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(parse_complex(tok, what));
    }
    return out;
}

// --q / --tau to a context; exactly one for numeric commands
struct Nome {
    std::string q, tau;
    double tol = 1e-12;

    bool given() const { return !q.empty() || !tau.empty(); }
    QContext context() const
    {
        if (!given()) throw UsageError("one of --q or --tau is required");
        QContext ctx;
        if (!q.empty()) {
            Complex v = parse_complex(q, "--q");
            if (!(std::abs(v) > 0.0 && std::abs(v) < 1.0)) throw UsageError("--q needs 0 < |q| < 1");
            ctx = QContext::from_q(v, tol);
        } else {
            Complex v = parse_complex(tau, "--tau");
            if (!(v.imag() > 0.0)) throw UsageError("--tau needs Im tau > 0");
            ctx = QContext::from_tau(v, tol);
        }
        return ctx;
    }
    std::optional<Complex> fixed_q() const
    {
        if (!given()) return std::nullopt;
        return context().q;
    }
};

struct EvalArgs {
    std::string name;
    std::map<std::string, std::string> named;  // u, v, alpha, a, b, c, x, w, n, k
    std::vector<std::string> params;           // name=value
    std::vector<std::string> upper, lower;
    std::string repr, kind = "div", format = "text";

    std::string get(const std::string& key) const
    {
        auto it = named.find(key);
        if (it == named.end() || it->second.empty()) throw UsageError(name + " needs --" + key);
        return it->second;
    }
    bool has(const std::string& key) const
    {
        auto it = named.find(key);
        return it != named.end() && !it->second.empty();
    }
    Complex c(const std::string& key) const { return parse_complex(get(key), "--" + key); }
};

struct Output {
    Complex value;
    std::optional<TruncationReport> report;
    std::vector<std::pair<std::string, Complex>> extra;
    std::vector<std::pair<std::string, std::string>> notes;
};

Output run_eval(const EvalArgs& a, const QContext& ctx)
{
    Output o;
    const std::string& n = a.name;
    if (n == "pochhammer") {
        std::string len = a.get("n");
        PochhammerValue pv = len == "inf" ? pochhammer_value(ctx, a.c("a"), kInf)
                                          : pochhammer_value(ctx, a.c("a"), std::stol(len));
        o.value = pv.value;
        TruncationReport r;
        r.terms_used = pv.truncation_terms;
        r.n_max = pv.truncation_terms;
        r.tail_estimate = pv.tail_bound;
        r.converged = true;
        o.report = r;
    } else if (n == "theta") {
        if (a.kind == "div") o.value = theta_div(ctx, a.c("x"));
        else if (a.kind == "jtp") o.value = theta_jtp(ctx, a.c("x"));
        else throw UsageError("--kind is div or jtp");
        o.notes.push_back({"kind", a.kind});
    } else if (n == "vartheta11") {
        o.value = vartheta11(ctx, a.c("u"));
    } else if (n == "phi" || n == "psi") {
        HypergeometricSpec spec{parse_list(a.upper, "--upper"), parse_list(a.lower, "--lower"), a.c("x"),
                                n == "phi" ? SeriesKind::Unilateral : SeriesKind::Bilateral};
        SeriesValue v = eval(ctx, spec);
        o.value = v.value;
        o.report = v.report;
    } else if (n == "mu") {
        MuPoint p{a.c("u"), a.c("v"), a.has("alpha") ? a.c("alpha") : Complex(1.0), ctx};
        MuValue v = a.repr.empty() ? mu(p) : mu(p, representation_from_string(a.repr));
        o.value = v.value;
        o.report = v.report;
        o.notes.push_back({"representation", to_string(v.representation)});
    } else if (n == "w") {
        o.value = w_func(ctx, a.c("a"), a.c("b"), a.c("c"));
    } else if (n == "hermite") {
        long k = std::stol(a.get("k"));
        o.value = cont_q_hermite(ctx, k, a.c("w"));
        o.notes.push_back({"argument", "cos(pi w)"});
    } else if (n == "wp_diff") {
        auto ec = elliptic::make_context(ctx);
        Complex u = a.c("u"), v = a.c("v");
        o.value = elliptic::wp_diff_oracle(ec, u, v);
        auto b = elliptic::wp_diff_bailey_forms(ec, u, v);
        o.extra = {{"2psi6", elliptic::wp_diff_psi26(ec, u, v)},
                   {"bilateral", elliptic::wp_diff_bilateral(ec, u, v)},
                   {"split", elliptic::wp_diff_split(ec, u, v)},
                   {"bailey_6psi6", b.psi66},
                   {"bailey_sum", b.vwp_sum},
                   {"m_difference", elliptic::m_func(ec, u) - elliptic::m_func(ec, v)}};
    } else if (n == "jacobi_combo") {
        auto ec = elliptic::make_context(ctx);
        Complex u = a.c("u");
        o.value = elliptic::jacobi_combo_oracle(ec, u);
        auto f = elliptic::jacobi_combo_forms(ec, u);
        o.extra = {{"4psi8", f.psi48}, {"bilateral", f.bilateral}, {"split", f.split}};
    } else {
        throw UsageError("unknown expression: " + n);
    }
    return o;
}

void print_eval(const EvalArgs& a, const Output& o)
{
    if (a.format == "json") {
        json j{{"expr", a.name}, {"value", cjson(o.value)}};
        for (const auto& [k, v] : o.notes) j[k] = v;
        if (o.report) {
            j["window"] = json::array({o.report->n_min, o.report->n_max});
            j["terms_used"] = o.report->terms_used;
            j["tail_estimate"] = o.report->tail_estimate;
        }
        for (const auto& [k, v] : o.extra) j["forms"][k] = cjson(v);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "value: " << fmt(o.value) << "\n";
    for (const auto& [k, v] : o.notes) std::cout << k << ": " << v << "\n";
    if (o.report) {
        std::cout << "window: [" << o.report->n_min << ", " << o.report->n_max << "], " << o.report->terms_used
                  << " terms\n";
        std::cout << "tail: " << fmt(o.report->tail_estimate) << "\n";
    }
    for (const auto& [k, v] : o.extra) std::cout << k << ": " << fmt(v) << "\n";
}

void write_out(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text << "\n";
}

bool is_catalog_name(const std::string& id) { return id.rfind("order", 0) == 0; }

std::vector<std::string> split_ids(const std::vector<std::string>& in)
{
    std::vector<std::string> out;
    for (const auto& s : in) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

struct SuiteArgs {
    std::vector<std::string> ids;
    std::uint64_t seed = 42;
    long draws = 20;
    long order = 40;
    std::string out;
    bool printed = false;
    bool catalog = false;
    double check_tol = 0.0;
};

// identities and catalog entries, one JSON document; true iff everything passed
bool run_checks(const SuiteArgs& s, const Nome& nome, bool all_identities, bool all_catalog)
{
    identities::VerifyOptions opts;
    opts.q = nome.fixed_q();
    opts.tol = nome.tol;
    opts.max_terms = env_max_terms(opts.max_terms);
    if (s.check_tol > 0.0) opts.check_tol = s.check_tol;

    std::vector<std::string> ids, entries;
    for (const auto& id : s.ids) (is_catalog_name(id) ? entries : ids).push_back(id);
    if (all_identities && s.ids.empty()) {
        for (const auto& d : identities::registry()) ids.push_back(d.id);
        if (s.printed)
            for (const auto& d : identities::printed_registry()) ids.push_back(d.id);
    }
    for (const auto& e : entries) catalog::entry(e);  // unknown names fail before work

    bool ok = true;
    json doc = json::object();
    std::vector<identities::IdentityReport> reps;
    if (!ids.empty()) {
        reps = identities::run_suite(opts, ids, s.seed, s.draws);
        doc["identities"] = json::parse(identities::report_json(reps));
        for (const auto& r : reps) ok &= r.status == identities::Status::Pass;
    }
    std::vector<catalog::EntryReport> cat;
    if (!entries.empty() || all_catalog) {
        fps::Rational N(s.order);
        if (entries.empty()) cat = catalog::verify_all(N);
        else
            for (const auto& e : entries) cat.push_back(catalog::verify_entry(e, N));
        doc["catalog"] = json::parse(catalog::report_json(cat));
        for (const auto& r : cat) ok &= r.status == catalog::EntryStatus::Pass;
    }
    write_out(s.out, doc.dump(2));
    if (!s.out.empty() && s.out != "-") {
        for (const auto& r : reps)
            std::cout << r.id << " " << identities::to_string(r.status) << " max_rel_err=" << fmt(r.max_rel_err)
                      << " draws=" << r.draws << " rejected=" << r.rejected_samples << "\n";
        for (const auto& r : cat) std::cout << r.name << " " << catalog::to_string(r.status) << "\n";
    }
    return ok;
}

std::string expansion_text(const fps::FormalSeries& f, const std::string& format)
{
    if (format == "csv") return f.to_csv();
    if (format == "text") return f.to_string(1000000);
    json arr = json::array();
    long D = f.denom();
    for (const auto& [k, c] : f.units()) arr.push_back(json::array({fps::make_rational(k, D).get_str(), c.get_str()}));
    return arr.dump();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"q-series, generalized mu and mock theta toolkit"};
    app.require_subcommand(1);
    Nome nome;

    auto add_nome = [&](CLI::App* c) {
        auto* q = c->add_option("--q", nome.q, "nome q as a complex literal, 0 < |q| < 1");
        auto* t = c->add_option("--tau", nome.tau, "tau with Im tau > 0");
        q->excludes(t);
        c->add_option("--tol", nome.tol, "numerical tolerance")->capture_default_str();
    };

    // eval
    EvalArgs ea;
    auto* ev = app.add_subcommand("eval", "evaluate one function");
    ev->add_option("name", ea.name, "pochhammer|theta|vartheta11|phi|psi|mu|w|hermite|wp_diff|jacobi_combo")
        ->required()
        ->check(CLI::IsMember({"pochhammer", "theta", "vartheta11", "phi", "psi", "mu", "w", "hermite", "wp_diff",
                               "jacobi_combo"}));
    for (const char* k : {"u", "v", "alpha", "a", "b", "c", "x", "w", "n", "k"})
        ev->add_option(std::string("--") + k, ea.named[k]);
    ev->add_option("--param", ea.params, "name=value, repeatable");
    ev->add_option("--upper", ea.upper, "upper parameters, repeatable or comma separated");
    ev->add_option("--lower", ea.lower, "lower parameters, repeatable or comma separated");
    ev->add_option("--repr", ea.repr, "mu representation (DEF, PSI12, PSI22, PSI02, PSI48, QHERMITE)");
    ev->add_option("--kind", ea.kind, "theta: div (theta(y)) or jtp (theta_q(x))")->capture_default_str();
    ev->add_option("--format", ea.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    add_nome(ev);

    // verify / suite
    SuiteArgs va, sa;
    auto* vf = app.add_subcommand("verify", "check named identities or catalog entries");
    vf->add_option("ids", va.ids, "identity ids or catalog names (orderN.name)")->required();
    vf->add_option("--seed", va.seed)->capture_default_str();
    vf->add_option("--draws", va.draws)->check(CLI::PositiveNumber)->capture_default_str();
    vf->add_option("--order", va.order, "catalog order")->check(CLI::PositiveNumber)->capture_default_str();
    vf->add_option("--out", va.out, "report file (stdout when absent)");
    vf->add_option("--check-tol", va.check_tol, "override each identity's tolerance");
    add_nome(vf);

    auto* su = app.add_subcommand("suite", "run the identity registry");
    su->add_option("--ids", sa.ids, "subset, repeatable or comma separated");
    su->add_option("--seed", sa.seed)->capture_default_str();
    su->add_option("--draws", sa.draws)->check(CLI::PositiveNumber)->capture_default_str();
    su->add_option("--order", sa.order, "catalog order")->check(CLI::PositiveNumber)->capture_default_str();
    su->add_option("--out", sa.out, "report file (stdout when absent)");
    su->add_flag("--printed", sa.printed, "also run the displays kept as printed (expected to fail)");
    su->add_flag("--catalog", sa.catalog, "also verify the mock theta catalog");
    su->add_option("--check-tol", sa.check_tol, "override each identity's tolerance");
    add_nome(su);

    // expand
    std::string ex_name, ex_format = "json";
    long ex_order = 40;
    auto* ex = app.add_subcommand("expand", "q-expansion of a catalog entry");
    ex->add_option("name", ex_name)->required();
    ex->add_option("--order", ex_order)->check(CLI::PositiveNumber)->capture_default_str();
    ex->add_option("--format", ex_format)->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();

    // catalog
    auto* ca = app.add_subcommand("catalog", "the mock theta catalog");
    ca->require_subcommand(1);
    auto* ca_list = ca->add_subcommand("list", "entry names");
    bool with_exp = false;
    long exp_order = 10;
    auto* ca_exp = ca->add_subcommand("export", "entries as JSON");
    ca_exp->add_flag("--expansions", with_exp);
    ca_exp->add_option("--order", exp_order)->capture_default_str();
    SuiteArgs cv;
    auto* ca_ver = ca->add_subcommand("verify", "coefficient check of every display");
    ca_ver->add_option("--order", cv.order)->check(CLI::PositiveNumber)->capture_default_str();
    ca_ver->add_option("--out", cv.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*ev) {
            for (const auto& p : ea.params) {
                auto eq = p.find('=');
                if (eq == std::string::npos) throw UsageError("--param wants name=value: " + p);
                std::string k = p.substr(0, eq), v = p.substr(eq + 1);
                if (k == "upper") ea.upper.push_back(v);
                else if (k == "lower") ea.lower.push_back(v);
                else if (ea.named.count(k)) ea.named[k] = v;
                else throw UsageError("unknown parameter: " + k);
            }
            QContext ctx = nome.context();
            print_eval(ea, run_eval(ea, ctx));
            return kOk;
        }
        if (*vf) {
            va.ids = split_ids(va.ids);
            return run_checks(va, nome, false, false) ? kOk : kFail;
        }
        if (*su) {
            sa.ids = split_ids(sa.ids);
            return run_checks(sa, nome, true, sa.catalog) ? kOk : kFail;
        }
        if (*ex) {
            std::cout << expansion_text(catalog::expand(ex_name, fps::Rational(ex_order)), ex_format);
            if (ex_format != "csv") std::cout << "\n";
            return kOk;
        }
        if (*ca_list) {
            for (const auto& e : catalog::list_entries()) std::cout << e.name << "\n";
            return kOk;
        }
        if (*ca_exp) {
            std::cout << catalog::export_json(with_exp, exp_order) << "\n";
            return kOk;
        }
        if (*ca_ver) return run_checks(cv, nome, false, true) ? kOk : kFail;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownIdentity& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const UnknownEntry& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: bad integer argument\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage: integer argument out of range\n";
        return kUsage;
    }
    return kOk;
}
