#include "qpsi/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace qpsi::catalog {

using fps::ProductTerm;

namespace {

Rational R(long n, long d = 1) { return fps::make_rational(n, d); }

bool odd(long n) { return n % 2 != 0; }

fps::Binomial binomial(const LinearFactor& f, long n) {
    Rational c = f.c;
    if (f.alternating && odd(n)) c = -c;
    return {c, f.slope * n + f.offset};
}

ProductTerm eulerian_term(const EulerianSpec& s, long n) {
    ProductTerm t;
    t.coeff = s.scale;
    if (s.alternating && odd(n)) t.coeff = -t.coeff;
    t.exp = s.a2 * n * n + s.a1 * n + s.a0;
    for (const auto& p : s.poch) {
        Monomial a{p.c, p.a_slope * n + p.a_off};
        long len = p.len_slope * n + p.len_off;
        for (long k = 0; k < std::abs(p.power); ++k) {
            if (p.power > 0)
                t.poch(a, p.base, len);
            else
                t.inv_poch(a, p.base, len);
        }
    }
    for (const auto& f : s.extra) t.num.push_back(binomial(f, n));
    return t;
}

ProductTerm w_summand(const WTerm& w, long n) {
    ProductTerm t = fps::w_term(w.w.a, w.w.b, w.w.c, w.w.base, n);
    t.coeff *= w.coeff;
    t.exp += w.qexp;
    t.theta(w.theta.x, w.theta.base, -1);
    return t;
}

ProductTerm bilateral_summand(const BilateralTerm& b, long n) {
    ProductTerm t;
    t.coeff = b.coeff;
    t.exp = b.qexp + b.summand.a2 * n * n + b.summand.a1 * n + b.summand.a0;
    for (const auto& f : b.summand.num) t.num.push_back(binomial(f, n));
    for (const auto& f : b.summand.den) t.den.push_back(binomial(f, n));
    t.theta(b.theta.x, b.theta.base, -1);
    return t;
}

ProductTerm correction_term(const Correction& c) {
    ProductTerm t;
    t.coeff = c.coeff;
    t.exp = c.qexp;
    for (const auto& f : c.factors) {
        if (f.kind == ProductFactor::Kind::Poch)
            t.poch_inf(f.a, f.base, f.power);
        else
            t.theta(f.a, f.base, f.power);
    }
    return t;
}

// rendering

std::string rat(const Rational& r) { return r.get_den() == 1 ? r.get_str() : "(" + r.get_str() + ")"; }

std::string qpow(const Rational& e) {
    if (e == 0) return "1";
    if (e == 1) return "q";
    return "q^" + rat(e);
}

std::string mono(const Monomial& m) {
    std::string body = qpow(m.exp);
    if (m.coeff == 1) return body;
    if (m.coeff == -1) return "-" + body;
    return rat(m.coeff) + (m.exp == 0 ? "" : "*" + body);
}

std::string linear_exp(const Rational& a2, const Rational& a1, const Rational& a0) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& c, const std::string& var) {
        if (c == 0) return;
        Rational a = abs(c);
        if (!first) os << (c < 0 ? "-" : "+");
        else if (c < 0) os << "-";
        if (var.empty())
            os << a.get_str();
        else if (a == 1)
            os << var;
        else
            os << a.get_str() << var;
        first = false;
    };
    term(a2, "n^2");
    term(a1, "n");
    term(a0, "");
    if (first) os << "0";
    return os.str();
}

std::string lin(const LinearFactor& f) {
    std::string s = "(1";
    bool plus = f.c < 0;
    s += plus ? "+" : "-";
    Rational a = abs(f.c);
    if (a != 1) s += rat(a) + "*";
    if (f.alternating) s += "(-1)^n*";
    s += "q^(" + linear_exp(0, f.slope, f.offset) + "))";
    return s;
}

std::string poch_len(long s, long o) { return linear_exp(0, s, o); }

std::string coeff_prefix(const Rational& c, const Rational& qexp) {
    std::string s;
    if (c == -1)
        s = "-";
    else if (c != 1)
        s = rat(c) + "*";
    if (qexp != 0) s += qpow(qexp) + "*";
    return s;
}

std::string theta_str(const ThetaRef& t) { return "theta_{" + mono(t.base) + "}(" + mono(t.x) + ")"; }

}  // namespace

long window_cap(const Rational& N) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), N.get_num_mpz_t(), N.get_den_mpz_t());
    return 4 * c.get_si() + 200;
}

FormalSeries eval_lhs(const EulerianSpec& s, const Rational& N) {
    FormalSeries sum = fps::eulerian_sum_fs([&](long n) { return eulerian_term(s, n); }, s.start, N, window_cap(N));
    if (s.constant != 0) sum += FormalSeries::constant(s.constant);
    return sum.reduced();
}

FormalSeries eval_rhs(const RhsForm& f, const Rational& N) {
    FormalSeries sum = FormalSeries::zero(N);
    if (f.constant != 0) sum += FormalSeries::constant(f.constant);
    long cap = window_cap(N);
    // a summand far below the order means a malformed variant; expanding it would be huge
    auto guarded = [&](ProductTerm t) {
        auto v = t.valuation();
        if (v && *v < -cap) throw RangeOverflow("catalog: summand valuation below -" + std::to_string(cap));
        return t;
    };
    for (const auto& w : f.w)
        sum += fps::bilateral_sum_fs([&](long n) { return guarded(w_summand(w, n)); }, N, cap);
    for (const auto& b : f.bilateral)
        sum += fps::bilateral_sum_fs([&](long n) { return guarded(bilateral_summand(b, n)); }, N, cap);
    for (const auto& c : f.corrections) sum += correction_term(c).expand(N);
    return sum.reduced();
}

FormalSeries expand(const std::string& name, const Rational& N) { return eval_lhs(entry(name).lhs, N); }

std::string render(const EulerianSpec& s) {
    std::ostringstream os;
    if (s.constant != 0) os << rat(s.constant) << " + ";
    if (s.scale != 1) os << rat(s.scale) << "*";
    os << "sum_{n>=" << s.start << "} ";
    if (s.alternating) os << "(-1)^n*";
    os << "q^(" << linear_exp(s.a2, s.a1, s.a0) << ")";
    for (const auto& f : s.extra) os << "*" << lin(f);
    std::string num, den;
    for (const auto& p : s.poch) {
        std::string a = p.a_slope == 0 ? mono({p.c, p.a_off}) : (p.c == -1 ? "-" : "") + std::string("q^(") +
                                                                        linear_exp(0, p.a_slope, p.a_off) + ")";
        std::string f = "(" + a + ";" + mono(p.base) + ")_{" + poch_len(p.len_slope, p.len_off) + "}";
        if (std::abs(p.power) != 1) f += "^" + std::to_string(std::abs(p.power));
        (p.power > 0 ? num : den) += f;
    }
    if (!num.empty()) os << "*" << num;
    if (!den.empty()) os << "/" << den;
    return os.str();
}

std::string render(const RhsForm& f) {
    std::vector<std::string> parts;
    if (f.constant != 0) parts.push_back(rat(f.constant));
    for (const auto& w : f.w)
        parts.push_back(coeff_prefix(w.coeff, w.qexp) + "W(" + mono(w.w.a) + ";" + mono(w.w.b) + "," + mono(w.w.c) +
                        ";" + mono(w.w.base) + ")/" + theta_str(w.theta));
    for (const auto& b : f.bilateral) {
        std::string s = coeff_prefix(b.coeff, b.qexp) + "sum_{n in Z} q^(" +
                        linear_exp(b.summand.a2, b.summand.a1, b.summand.a0) + ")";
        for (const auto& x : b.summand.num) s += "*" + lin(x);
        if (!b.summand.den.empty()) {
            s += "/(";
            for (size_t i = 0; i < b.summand.den.size(); ++i) s += (i ? "*" : "") + lin(b.summand.den[i]);
            s += ")";
        }
        parts.push_back(s + "/" + theta_str(b.theta));
    }
    for (const auto& c : f.corrections) {
        std::string num, den;
        for (const auto& p : c.factors) {
            std::string s = p.kind == ProductFactor::Kind::Poch ? "(" + mono(p.a) + ";" + mono(p.base) + ")_inf"
                                                               : theta_str({p.a, p.base});
            if (std::abs(p.power) != 1) s += "^" + std::to_string(std::abs(p.power));
            (p.power > 0 ? num : den) += (p.power > 0 ? (num.empty() ? "" : "*") : (den.empty() ? "" : "*")) + s;
        }
        std::string s = coeff_prefix(c.coeff, c.qexp) + (num.empty() ? "1" : num);
        if (!den.empty()) s += "/(" + den + ")";
        parts.push_back(s);
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (i == 0)
            out = p;
        else if (!p.empty() && p[0] == '-')
            out += " - " + p.substr(1);
        else
            out += " + " + p;
    }
    return out.empty() ? "0" : out;
}

// variant search

namespace {

struct Token {
    std::string where;
    enum class Kind { Negate, Step, Toggle, Power } kind;
    Rational* value = nullptr;
    bool* flag = nullptr;
    long* power = nullptr;
};

void tokens(RhsForm& f, std::vector<Token>& out) {
    using K = Token::Kind;
    auto monomial = [&](Monomial& m, const std::string& where) {
        out.push_back({where + " sign", K::Negate, &m.coeff});
        out.push_back({where + " exponent", K::Step, &m.exp});
    };
    out.push_back({"constant", K::Step, &f.constant});
    for (size_t i = 0; i < f.w.size(); ++i) {
        auto& w = f.w[i];
        std::string p = "W term " + std::to_string(i + 1);
        out.push_back({p + " coefficient", K::Negate, &w.coeff});
        out.push_back({p + " q-power", K::Step, &w.qexp});
        monomial(w.theta.x, p + " theta argument");
        monomial(w.w.a, p + " W a");
        monomial(w.w.b, p + " W b");
        monomial(w.w.c, p + " W c");
    }
    for (size_t i = 0; i < f.bilateral.size(); ++i) {
        auto& b = f.bilateral[i];
        std::string p = "bilateral term " + std::to_string(i + 1);
        out.push_back({p + " coefficient", K::Negate, &b.coeff});
        out.push_back({p + " q-power", K::Step, &b.qexp});
        monomial(b.theta.x, p + " theta argument");
        out.push_back({p + " n^2 exponent", K::Step, &b.summand.a2});
        out.push_back({p + " n exponent", K::Step, &b.summand.a1});
        out.push_back({p + " constant exponent", K::Step, &b.summand.a0});
        auto factors = [&](std::vector<LinearFactor>& v, const std::string& side) {
            for (size_t j = 0; j < v.size(); ++j) {
                std::string q = p + " " + side + " factor " + std::to_string(j + 1);
                out.push_back({q + " sign", K::Negate, &v[j].c});
                out.push_back({q + " (-1)^n", K::Toggle, nullptr, &v[j].alternating});
                out.push_back({q + " slope", K::Step, &v[j].slope});
                out.push_back({q + " offset", K::Step, &v[j].offset});
            }
        };
        factors(b.summand.num, "numerator");
        factors(b.summand.den, "denominator");
    }
    for (size_t i = 0; i < f.corrections.size(); ++i) {
        auto& c = f.corrections[i];
        std::string p = "correction " + std::to_string(i + 1);
        out.push_back({p + " coefficient", K::Negate, &c.coeff});
        out.push_back({p + " q-power", K::Step, &c.qexp});
        for (size_t j = 0; j < c.factors.size(); ++j) {
            std::string q = p + " factor " + std::to_string(j + 1);
            auto& fa = c.factors[j];
            out.push_back({q + " power", K::Power, nullptr, nullptr, &fa.power});
            monomial(fa.a, q + " argument");
        }
    }
}

}  // namespace

namespace {

// candidate replacements for one exponent-like token
std::vector<Rational> step_values(const Rational& v, long denom) {
    std::vector<Rational> c{v + 1, v - 1};
    if (denom == 2) {
        c.push_back(v + R(1, 2));
        c.push_back(v - R(1, 2));
    }
    if (v != 0) {
        c.push_back(0);
        c.push_back(v * 2);
        Rational h = v / 2;
        if (Rational(h * denom).get_den() == 1) c.push_back(h);
    }
    std::vector<Rational> out;
    for (const auto& x : c)
        if (x != v && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

bool quadratic(const Token& t) {
    const std::string tail = "n^2 exponent";
    return t.where.size() >= tail.size() && t.where.compare(t.where.size() - tail.size(), tail.size(), tail) == 0;
}

// the term a token belongs to: "W term 2", "bilateral term 1", "correction 3", "constant"
std::string group_of(const std::string& where) {
    for (const char* p : {"W term ", "bilateral term ", "correction "}) {
        if (where.rfind(p, 0) == 0) {
            size_t e = where.find(' ', std::string(p).size());
            return where.substr(0, e);
        }
    }
    return where;
}

}  // namespace

std::vector<Variant> variants(const RhsForm& f, long denom) {
    RhsForm probe = f;
    std::vector<Token> base;
    tokens(probe, base);
    std::vector<Variant> out;
    for (size_t i = 0; i < base.size(); ++i) {
        auto make = [&](auto&& edit) {
            Variant v{std::string(), f, 1};
            std::vector<Token> t;
            tokens(v.form, t);
            v.description = t[i].where + ": " + edit(t[i]);
            out.push_back(std::move(v));
        };
        switch (base[i].kind) {
        case Token::Kind::Negate:
            make([](Token& t) {
                std::string old = t.value->get_str();
                *t.value = -*t.value;
                return old + " -> " + t.value->get_str();
            });
            break;
        case Token::Kind::Toggle:
            make([](Token& t) {
                *t.flag = !*t.flag;
                return std::string(*t.flag ? "(-1)^n added" : "(-1)^n removed");
            });
            break;
        case Token::Kind::Power:
            for (long d : {1L, -1L}) {
                if (*base[i].power + d == 0) continue;
                make([d](Token& t) {
                    std::string old = std::to_string(*t.power);
                    *t.power += d;
                    return old + " -> " + std::to_string(*t.power);
                });
            }
            break;
        case Token::Kind::Step:
            for (const auto& nv : step_values(*base[i].value, denom)) {
                // without quadratic growth the bilateral sum is not even formally convergent
                if (quadratic(base[i]) && nv <= 0) continue;
                make([&nv](Token& t) {
                    std::string old = t.value->get_str();
                    *t.value = nv;
                    return old + " -> " + nv.get_str();
                });
            }
            break;
        }
    }
    return out;
}

std::vector<Variant> paired_variants(const RhsForm& f, long denom) {
    RhsForm probe = f;
    std::vector<Token> base;
    tokens(probe, base);
    std::vector<Variant> out;
    for (size_t i = 0; i < base.size(); ++i) {
        if (base[i].kind != Token::Kind::Step || *base[i].value == 0) continue;
        for (size_t j = i + 1; j < base.size(); ++j) {
            if (base[j].kind != Token::Kind::Step || *base[j].value != *base[i].value) continue;
            if (group_of(base[i].where) != group_of(base[j].where)) continue;
            for (const auto& nv : step_values(*base[i].value, denom)) {
                if (nv <= 0 && (quadratic(base[i]) || quadratic(base[j]))) continue;
                if (nv == 0) continue;
                Variant v{std::string(), f, 2};
                std::vector<Token> t;
                tokens(v.form, t);
                std::string old = t[i].value->get_str();
                *t[i].value = nv;
                *t[j].value = nv;
                v.description = t[i].where + " and " + t[j].where + ": " + old + " -> " + nv.get_str();
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

std::string to_string(EntryStatus s) {
    switch (s) {
    case EntryStatus::Pass: return "pass";
    case EntryStatus::Finding: return "finding";
    case EntryStatus::Error: return "error";
    }
    return "?";
}

Rational entry_order(const MockThetaEntry& e, const Rational& N) { return e.denom == 2 ? Rational(N / 2) : N; }

namespace {

Comparison compare(const std::string& l, const std::string& r, const std::optional<FormalSeries>& a,
                   const std::optional<FormalSeries>& b, const Rational& N) {
    Comparison c;
    c.left = l;
    c.right = r;
    if (!a || !b) {
        c.error = "not evaluated";
        return c;
    }
    c.first_difference = fps::first_difference(*a, *b, N);
    c.agree = !c.first_difference;
    return c;
}

}  // namespace

EntryReport verify_entry(const std::string& name, const Rational& N0, bool search_variants) {
    const MockThetaEntry& e = entry(name);
    Rational N = entry_order(e, N0);
    EntryReport rep;
    rep.name = name;
    rep.order = N;
    std::optional<FormalSeries> lhs, w, b;
    std::string werr, berr;
    try {
        lhs = eval_lhs(e.lhs, N);
    } catch (const std::exception& ex) {
        rep.status = EntryStatus::Error;
        rep.error = std::string("definition: ") + ex.what();
        return rep;
    }
    try {
        w = eval_rhs(e.rhs_w, N);
    } catch (const std::exception& ex) {
        werr = ex.what();
    }
    try {
        b = eval_rhs(e.rhs_bilateral, N);
    } catch (const std::exception& ex) {
        berr = ex.what();
    }
    rep.comparisons.push_back(compare("lhs", "w", lhs, w, N));
    rep.comparisons.push_back(compare("lhs", "bilateral", lhs, b, N));
    rep.comparisons.push_back(compare("w", "bilateral", w, b, N));
    rep.lhs_matches_some_form = rep.comparisons[0].agree || rep.comparisons[1].agree;

    auto examine = [&](const std::string& form, const RhsForm& f, const Comparison& c, const std::string& err) {
        if (c.agree) return;
        Finding fd;
        fd.form = form;
        if (c.first_difference) {
            fd.exponent = c.first_difference->exponent;
            fd.lhs_coeff = c.first_difference->lhs;
            fd.form_coeff = c.first_difference->rhs;
        }
        fd.error = err;
        if (search_variants) {
            // candidates that pass at N are confirmed at 3N, which separates accidental agreements
            Rational N3 = N * 3;
            std::optional<FormalSeries> lhs3;
            auto search = [&](const std::vector<Variant>& vs) {
                for (const auto& v : vs) {
                    try {
                        if (fps::first_difference(*lhs, eval_rhs(v.form, N), N)) continue;
                        if (!lhs3) lhs3 = eval_lhs(e.lhs, N3);
                        if (fps::first_difference(*lhs3, eval_rhs(v.form, N3), N3)) continue;
                        fd.passing_variants.push_back(v.description);
                        fd.variant_distance = v.distance;
                    } catch (const std::exception&) {
                    }
                }
            };
            search(variants(f, e.denom));
            if (fd.passing_variants.empty()) search(paired_variants(f, e.denom));
        }
        rep.findings.push_back(std::move(fd));
    };
    examine("w", e.rhs_w, rep.comparisons[0], werr);
    examine("bilateral", e.rhs_bilateral, rep.comparisons[1], berr);
    rep.status = rep.findings.empty() ? EntryStatus::Pass : EntryStatus::Finding;
    return rep;
}

std::vector<EntryReport> verify_all(const Rational& N, bool search_variants, unsigned threads) {
    const auto& entries = list_entries();
    std::vector<EntryReport> out(entries.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(entries.size()));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < entries.size(); i = next++) out[i] = verify_entry(entries[i].name, N, search_variants);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

namespace {

nlohmann::ordered_json rjson(const Rational& r) { return r.get_str(); }

}  // namespace

std::string export_json(bool with_expansions, long N) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : list_entries()) {
        nlohmann::ordered_json j;
        j["name"] = e.name;
        j["order"] = e.order;
        j["symbol"] = e.symbol;
        j["paper_ref"] = e.paper_ref;
        j["denom"] = e.denom;
        j["definition"] = render(e.lhs);
        j["w_form"] = render(e.rhs_w);
        j["bilateral_form"] = render(e.rhs_bilateral);
        if (!e.note.empty()) j["note"] = e.note;
        if (with_expansions) {
            auto f = eval_lhs(e.lhs, entry_order(e, R(N)));
            nlohmann::ordered_json co = nlohmann::ordered_json::array();
            for (const auto& [k, c] : f.units()) co.push_back({fps::exponent_of(k, f.denom()).get_str(), c.get_str()});
            j["expansion"] = {{"order", f.order().get_str()}, {"coefficients", co}};
        }
        arr.push_back(j);
    }
    nlohmann::ordered_json root;
    root["entries"] = arr;
    root["count"] = list_entries().size();
    return root.dump(2);
}

std::string report_json(const std::vector<EntryReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["order"] = rjson(r.order);
        j["status"] = to_string(r.status);
        j["lhs_matches_some_form"] = r.lhs_matches_some_form;
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : r.comparisons) {
            nlohmann::ordered_json cj{{"left", c.left}, {"right", c.right}, {"agree", c.agree}};
            if (c.first_difference)
                cj["first_difference"] = {{"exponent", rjson(c.first_difference->exponent)},
                                          {c.left, rjson(c.first_difference->lhs)},
                                          {c.right, rjson(c.first_difference->rhs)}};
            if (!c.error.empty()) cj["error"] = c.error;
            cs.push_back(cj);
        }
        j["comparisons"] = cs;
        nlohmann::ordered_json fs = nlohmann::ordered_json::array();
        for (const auto& f : r.findings) {
            nlohmann::ordered_json fj{{"form", f.form},
                                      {"exponent", rjson(f.exponent)},
                                      {"lhs_coefficient", rjson(f.lhs_coeff)},
                                      {"form_coefficient", rjson(f.form_coeff)},
                                      {"passing_variants", f.passing_variants},
                                      {"variant_distance", f.variant_distance}};
            if (!f.error.empty()) fj["error"] = f.error;
            fs.push_back(fj);
        }
        j["findings"] = fs;
        if (!r.error.empty()) j["error"] = r.error;
        arr.push_back(j);
    }
    return arr.dump(2);
}

}  // namespace qpsi::catalog
