#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpsi/qcore.hpp"
#include "qpsi/sampling.hpp"

namespace qpsi::identities {

// one side-by-side comparison inside a trial
struct Check {
    std::string label;
    Complex lhs{};
    Complex rhs{};
};

// A trial draws its own parameters from the sampler and returns the checks.
// Throwing RejectSample (or any qpsi::Error) discards the draw.
using Trial = std::function<std::vector<Check>(Sampler&)>;

struct IdentityDescriptor {
    std::string id;
    std::string paper_ref;
    int arity = 0;            // free complex parameters, q included
    std::string domain;       // sampling domain in words
    double default_tol = 1e-8;
    Trial trial;
};

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);

struct Failure {
    std::vector<std::pair<std::string, Complex>> params;
    std::string label;
    Complex lhs{}, rhs{};
    double err = 0.0;
};

struct IdentityReport {
    std::string id;
    std::string paper_ref;
    std::uint64_t seed = 0;
    long draws = 0;  // accepted draws
    double max_rel_err = 0.0;
    std::vector<Failure> failures;
    long rejected_samples = 0;
    Status status = Status::Inconclusive;
};

struct VerifyOptions {
    std::optional<Complex> q;         // fixed nome instead of sampling
    double tol = 1e-12;               // numerical tolerance for the evaluators
    long max_terms = 100000;
    std::optional<double> check_tol;  // overrides each descriptor's default_tol
    unsigned threads = 0;             // run_suite only; 0 = hardware
};

// the built-in set; all of these are expected to pass
const std::vector<IdentityDescriptor>& registry();
// displays kept exactly as printed where they are known to be off; expected to fail
const std::vector<IdentityDescriptor>& printed_registry();
// looks in both lists; throws UnknownIdentity
const IdentityDescriptor& find(const std::string& id);

double rel_err(Complex lhs, Complex rhs);

IdentityReport verify(const VerifyOptions& opts, const std::string& id, std::uint64_t seed, long draws);

// empty ids = the whole registry; reports come back in the order asked for
std::vector<IdentityReport> run_suite(const VerifyOptions& opts, const std::vector<std::string>& ids,
                                      std::uint64_t seed, long draws);

std::string report_json(const std::vector<IdentityReport>& reports);

}  // namespace qpsi::identities
