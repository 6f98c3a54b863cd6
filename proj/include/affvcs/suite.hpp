#ifndef AFFVCS_SUITE_HPP
#define AFFVCS_SUITE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "affvcs/coherent.hpp"
#include "affvcs/realization.hpp"
#include "affvcs/verma.hpp"

namespace affvcs {

struct RunConfig {
    int lambda = 0;
    Scalar c = 1;
    /// Truncation degree: polynomial degree of tested inputs and depth of
    /// tested weight spaces.
    int degree = 3;
    Scalar d0 = 0;
    unsigned jobs = 1;
    /// Largest weight-space dimension a run may touch.
    std::size_t cap = 2000;
    Transcription transcription = Transcription::Corrected;
    /// Generators e[n], h[n], f[n] with |n| <= max_mode take part in the
    /// operator suites.
    int max_mode = 3;
    std::size_t random_pairs = 200;
    std::uint64_t seed = 20240601;

    void validate() const;
};

struct SuiteFailure {
    std::string suite;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    std::vector<SuiteFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Loop generators with |mode| <= max_mode, plus kappa.
std::vector<Generator> test_generators(int max_mode, bool with_kappa = true);

/// Integrable highest weight data: c an integer with c - lambda >= 0.
bool is_integrable(int lambda, const Scalar& c);

// Individual suites. Each appends failures (at most `keep` per suite) to
// `report` and returns its tally.
SuiteResult check_homomorphism(const Realizer& r, const RunConfig& cfg, VerifyReport& report);
SuiteResult check_grading(const Realizer& r, const RunConfig& cfg, VerifyReport& report);
SuiteResult check_contravariance(const VermaModule& m, const RunConfig& cfg, VerifyReport& report);
SuiteResult check_module_axiom(const VermaModule& m, const RunConfig& cfg, VerifyReport& report);
SuiteResult check_intertwining(const Realizer& r, const VermaModule& m, const RunConfig& cfg, VerifyReport& report);
SuiteResult check_random_intertwining(const Realizer& r, const VermaModule& m, const RunConfig& cfg,
                                      VerifyReport& report);
SuiteResult check_kernel_theorem(const Realizer& r, const VermaModule& m, const RunConfig& cfg, VerifyReport& report);
SuiteResult check_gram_blocks(const VermaModule& m, const RunConfig& cfg, VerifyReport& report);
SuiteResult check_local_finiteness(const VermaModule& m, const RunConfig& cfg, VerifyReport& report);

/// Runs every suite for the configured (lambda, c, degree).
VerifyReport run_verify(const RunConfig& cfg);

/// Random element of W: a combination of up to three basis vectors of depth
/// <= max_depth with small nonzero rational coefficients.
WVector random_wvector(const VermaModule& m, int max_depth, std::mt19937_64& rng);

}  // namespace affvcs

#endif
