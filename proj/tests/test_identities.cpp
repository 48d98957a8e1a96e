#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "json.hpp"
#include "qpsi/identities.hpp"

using namespace qpsi;
using namespace qpsi::identities;

namespace {

bool has(const std::string& id)
{
    for (const auto& d : registry())
        if (d.id == id) return true;
    return false;
}

}  // namespace

TEST_CASE("registry contents")
{
    CHECK(registry().size() >= 22);
    for (const char* id : {"INV_R", "SLATER_A_R1", "SLATER_A_R2", "SLATER_A_R3", "SLATER_BC_R1", "SLATER_BC_R2",
                           "RAMANUJAN_1PSI1", "BAILEY_6PSI6", "SLATER_A2_1", "SLATER_A2_2", "SLATER_A2_3",
                           "BAILEY_VWP_A", "BAILEY_VWP_B", "SLATER_BC_8PSI8", "BAILEY_T0", "BAILEY_T1", "BAILEY_T2",
                           "BAILEY_T3", "MU_EXPR_EQUIV", "THM11_1", "THM11_2", "THM11_3", "THM11_2_QBESSEL_FORM",
                           "THM12", "TRANS_110", "TRANS_VARIATION", "MU_SYMMETRY", "MU_CQH", "MU_QBESSEL_REC"})
        CHECK_MESSAGE(has(id), id);
    std::set<std::string> seen;
    for (const auto* l : {&registry(), &printed_registry()})
        for (const auto& d : *l) {
            CHECK(!d.paper_ref.empty());
            CHECK(!d.domain.empty());
            CHECK(d.default_tol > 0.0);
            CHECK(seen.insert(d.id).second);
        }
    CHECK(find("MU_CQH").default_tol == 1e-9);
}

TEST_CASE("unknown ids")
{
    VerifyOptions o;
    CHECK_THROWS_AS(verify(o, "nonexistent", 1, 5), UnknownIdentity);
    CHECK_THROWS_AS(run_suite(o, {"INV_R", "NOPE"}, 1, 5), UnknownIdentity);
    VerifyOptions bad;
    bad.q = Complex(1.2, 0.0);
    CHECK_THROWS_AS(verify(bad, "INV_R", 1, 5), DomainError);
}

TEST_CASE("Ramanujan 1psi1 against its product")
{
    auto r = verify({}, "RAMANUJAN_1PSI1", 1, 20);
    CHECK(r.status == Status::Pass);
    CHECK(r.draws == 20);
    CHECK(r.max_rel_err <= 1e-9);
}

TEST_CASE("three-term relation with free x', y'")
{
    auto r = verify({}, "THM11_1", 7, 20);
    CHECK(r.status == Status::Pass);
    // the printed arrangement fails; its failures carry the free parameters
    auto p = verify({}, "THM11_1_PRINTED", 7, 20);
    REQUIRE(p.status == Status::Fail);
    bool xp = false, yp = false;
    for (const auto& [k, v] : p.failures[0].params) {
        xp |= k == "x'";
        yp |= k == "y'";
    }
    CHECK(xp);
    CHECK(yp);
}

TEST_CASE("q-Hermite sub-cases are fixed")
{
    Sampler s(3, "MU_CQH");
    std::vector<Check> checks;
    for (int i = 0; i < 100 && checks.empty(); ++i) {
        s.clear();
        try {
            checks = find("MU_CQH").trial(s);
        } catch (const Error&) {
        }
    }
    REQUIRE(checks.size() == 11);
    for (int k = 0; k <= 10; ++k) CHECK(checks[k].label == "k = " + std::to_string(k));
    CHECK(verify({}, "MU_CQH", 3, 20).status == Status::Pass);
}

TEST_CASE("whole suite passes and is deterministic")
{
    VerifyOptions one, many;
    one.threads = 1;
    many.threads = 8;
    auto a = run_suite(one, {}, 42, 20);
    auto b = run_suite(many, {}, 42, 20);
    REQUIRE(a.size() == registry().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == registry()[i].id);
        CHECK_MESSAGE(a[i].status == Status::Pass, a[i].id << " " << a[i].max_rel_err);
        CHECK(a[i].rejected_samples <= 100 * 20);
    }
    CHECK(report_json(a) == report_json(b));
    auto c = run_suite(one, {}, 43, 20);
    CHECK(report_json(a) != report_json(c));
}

TEST_CASE("fixed nome")
{
    VerifyOptions o;
    o.q = Complex(0.2, 0.0);
    for (const auto& r : run_suite(o, {}, 42, 10)) CHECK_MESSAGE(r.status == Status::Pass, r.id);
    // outside an identity's domain nothing is accepted
    o.q = Complex(0.45, 0.0);
    auto r = verify(o, "RAMANUJAN_1PSI1", 1, 5);
    CHECK(r.status == Status::Inconclusive);
    CHECK(r.draws == 0);
    CHECK(r.rejected_samples == 500);
}

TEST_CASE("displays as printed fail")
{
    for (const auto& d : printed_registry()) {
        auto r = verify({}, d.id, 42, 20);
        CHECK_MESSAGE(r.status == Status::Fail, d.id);
        CHECK(r.max_rel_err > 1e-3);
    }
}

TEST_CASE("BC 8psi8 to A-type chain on one seed")
{
    for (std::uint64_t seed : {5u, 17u, 123u})
        for (const char* id : {"SLATER_BC_8PSI8", "BAILEY_VWP_B", "SLATER_A2_1"})
            CHECK_MESSAGE(verify({}, id, seed, 20).status == Status::Pass, id << " seed " << seed);
}

TEST_CASE("report schema")
{
    auto reps = run_suite({}, {"INV_R", "CURIOUS_X2"}, 9, 3);
    auto j = nlohmann::json::parse(report_json(reps));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    for (const auto& r : j)
        for (const char* k : {"id", "paper_ref", "seed", "draws", "max_rel_err", "status", "failures", "rejected_samples"})
            CHECK_MESSAGE(r.contains(k), k);
    CHECK(j[0]["status"] == "pass");
    CHECK(j[1]["status"] == "fail");
    const auto& f = j[1]["failures"][0];
    CHECK(f["params"].contains("q"));
    CHECK(f["lhs"].size() == 2);
    CHECK(f["err"].get<double>() > 1e-3);
}
