#pragma once

// The full verification suite: one runner per classification statement,
// shared by the verify-paper command and the acceptance tests.
//
// A runner returns an aggregate TheoremReport and a list of named sub-checks
// (one per parameter combination). Sub-check ids are stable, which lets two
// builds of the library be compared check by check.

#include "gi/verifier.hpp"

#include <string>
#include <vector>

namespace gi {

struct SubCheck {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    TheoremReport report;
    std::vector<SubCheck> subchecks;
    /// Informational results do not count towards the overall verdict.
    bool informational = false;
};

struct SuiteConfig {
    std::vector<FinAbGroup> transpose_groups = {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4}),
                                                FinAbGroup({2, 2})};
    std::vector<FinAbGroup> groups = {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4})};
    size_t transpose_max_n = 3;
    size_t max_n = 4;
    size_t epsilon_max_n = 4;
    size_t oracle_max_n = 3;
    size_t renumbering_max_n = 3;
    size_t ut_min_n = 2;
    size_t ut_max_n = 4;
    size_t cc_max_n = 5;
    size_t cc_samples = 100;
    size_t sn_max_n = 4;
    size_t sn_samples = 50;
    size_t random_samples = 40;
    size_t max_k = 2;
    size_t max_size = 8;
    unsigned seed = 1234567;
};

SuiteResult run_transpose_lemma(const SuiteConfig& cfg);
SuiteResult run_epsilon_lemma(const SuiteConfig& cfg);
SuiteResult run_elementary_proposition(const SuiteConfig& cfg, RelationSet relations = RelationSet::as_stated);
SuiteResult run_renumbering(const SuiteConfig& cfg, RelationSet relations = RelationSet::as_stated);
SuiteResult run_ut_condition(const SuiteConfig& cfg);
SuiteResult run_cc_star(const SuiteConfig& cfg);
SuiteResult run_dual_action(const SuiteConfig& cfg);
SuiteResult run_skolem_noether(const SuiteConfig& cfg);
SuiteResult run_main_theorem(const SuiteConfig& cfg, RelationSet relations = RelationSet::as_stated);
SuiteResult run_graded_involutions(const SuiteConfig& cfg);
SuiteResult run_diagonal_lemma(const SuiteConfig& cfg);
SuiteResult run_B_homogeneity(const SuiteConfig& cfg);
SuiteResult run_fine_support(const SuiteConfig& cfg);

struct SuiteJob {
    std::string key;
    std::function<SuiteResult()> run;
};

/// Every report of the verify-paper command, in emission order.
std::vector<SuiteJob> paper_suite(const SuiteConfig& cfg);

/// Runs the jobs on `workers` threads; results come back in job order.
std::vector<SuiteResult> run_jobs(const std::vector<SuiteJob>& jobs, size_t workers);

} // namespace gi
