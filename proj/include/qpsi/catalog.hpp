#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpsi/fps.hpp"

namespace qpsi::catalog {

using fps::FormalSeries;
using fps::Monomial;
using fps::Rational;

// theta_base(x)
struct ThetaRef {
    Monomial x;
    Monomial base;
};

// W(a; b, c; base)
struct WRef {
    Monomial a, b, c, base;
};

// coeff q^qexp W(...) / theta(...)
struct WTerm {
    Rational coeff;
    Rational qexp;
    ThetaRef theta;
    WRef w;
};

// 1 - c (-1)^{n alt} q^{slope n + offset}
struct LinearFactor {
    Rational c{1};
    bool alternating = false;
    Rational slope;
    Rational offset;
};

// q^{a2 n^2 + a1 n + a0} prod num / prod den
struct Summand {
    Rational a2, a1, a0;
    std::vector<LinearFactor> num;
    std::vector<LinearFactor> den;
};

// coeff q^qexp / theta(...) times the sum over n of the summand
struct BilateralTerm {
    Rational coeff;
    Rational qexp;
    ThetaRef theta;
    Summand summand;
};

// (a; base)_inf^power, or theta_base(a)^power
struct ProductFactor {
    enum class Kind { Poch, Theta } kind = Kind::Poch;
    Monomial a;
    Monomial base;
    long power = 1;
};

struct Correction {
    Rational coeff;
    Rational qexp;
    std::vector<ProductFactor> factors;
};

struct RhsForm {
    Rational constant{0};
    std::vector<WTerm> w;
    std::vector<BilateralTerm> bilateral;
    std::vector<Correction> corrections;
};

// (c q^{a_slope n + a_off}; base)_{len_slope n + len_off}^power
struct PochFactor {
    Rational c{1};
    Rational a_slope, a_off;
    Monomial base;
    long len_slope = 1, len_off = 0;
    long power = 1;
};

// constant + scale sum_{n >= start} (-1)^{n alt} q^{a2 n^2 + a1 n + a0} prod poch prod extra
struct EulerianSpec {
    Rational constant{0};
    Rational scale{1};
    long start = 0;
    bool alternating = false;
    Rational a2, a1, a0;
    std::vector<PochFactor> poch;
    std::vector<LinearFactor> extra;
};

struct MockThetaEntry {
    std::string name;   // "order3.f"
    int order = 0;
    std::string symbol;  // "f(q)"
    std::string paper_ref;
    long denom = 1;
    EulerianSpec lhs;
    RhsForm rhs_w;
    RhsForm rhs_bilateral;
    std::string note;
};

const std::vector<MockThetaEntry>& list_entries();
const MockThetaEntry& entry(const std::string& name);

// summation windows are capped so a malformed variant fails fast
long window_cap(const Rational& N);

FormalSeries eval_lhs(const EulerianSpec& s, const Rational& N);
FormalSeries eval_rhs(const RhsForm& f, const Rational& N);
FormalSeries expand(const std::string& name, const Rational& N);

std::string render(const EulerianSpec& s);
std::string render(const RhsForm& f);

struct Variant {
    std::string description;
    RhsForm form;
    int distance = 1;
};
// every form differing from f in one token: a sign, a (-1)^n, a power, or one exponent
// moved by +-1 (+-1/2 with half-integer exponents), to 0, doubled or halved
std::vector<Variant> variants(const RhsForm& f, long denom);
// the same wrong number in two places of one term, both replaced by the same value
std::vector<Variant> paired_variants(const RhsForm& f, long denom);

struct Comparison {
    std::string left, right;  // "lhs", "w", "bilateral"
    bool agree = false;
    std::optional<fps::Difference> first_difference;
    std::string error;
};

struct Finding {
    std::string form;  // which printed form disagrees with the definition
    Rational exponent, lhs_coeff, form_coeff;
    std::vector<std::string> passing_variants;
    int variant_distance = 0;  // 0 when nothing passed
    std::string error;
};

enum class EntryStatus { Pass, Finding, Error };
std::string to_string(EntryStatus s);

struct EntryReport {
    std::string name;
    Rational order;  // in q-units
    EntryStatus status = EntryStatus::Pass;
    std::vector<Comparison> comparisons;
    std::vector<Finding> findings;
    bool lhs_matches_some_form = false;
    std::string error;
};

// order used for an entry when the catalog-wide order is N (halved for half-integer bases)
Rational entry_order(const MockThetaEntry& e, const Rational& N);

EntryReport verify_entry(const std::string& name, const Rational& N, bool search_variants = true);
// registry order, entries run concurrently
std::vector<EntryReport> verify_all(const Rational& N, bool search_variants = true, unsigned threads = 0);

std::string export_json(bool with_expansions = false, long N = 10);
std::string report_json(const std::vector<EntryReport>& reports);

}  // namespace qpsi::catalog
