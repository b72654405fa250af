#pragma once

// Exhaustive checks of the classification statements at small sizes.
//
// Every cross-validation pits a tuple-condition checker against the direct
// basis-level degree test on each enumerated instance. A disagreement is a
// counterexample; the first one is serialized in the report.

#include "gi/serialize.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gi {

struct TheoremReport {
    std::string theorem;
    size_t checked = 0;
    size_t failures = 0;
    bool pass = true;
    /// First failing instance; null when pass.
    io::json counterexample;
    /// Auxiliary values (verdict counts, accepted sets).
    io::json data = io::json::object();
    std::string note;

    /// Counts the instance; records it as the counterexample when it is the first failure.
    void record(bool ok, const std::function<io::json()>& instance);
    io::json to_json() const;
};

struct ConditionVerdict {
    bool pass = false;
    std::string reason;

    explicit operator bool() const { return pass; }
};

/// Which tuple relations to test for degree inversion. as_stated is the
/// published list; corrected replaces the mixed case (l, m > 0) by
/// g_i = g_{i+l} for i <= l with g_{2l+1}, ..., g_n free, which is what the
/// canonical form forces.
enum class RelationSet { as_stated, corrected };

std::string to_string(RelationSet r);

/// Tuple relations for a degree-inverting canonical form, in the given order.
/// Throws DimensionMismatch when the tuple length is not 2l + m or the split is invalid.
ConditionVerdict check_elementary_conditions(const std::vector<GroupElement>& tuple, Symmetry kind, size_t l,
                                             size_t m, RelationSet relations = RelationSet::as_stated);

/// Tuple relations for a degree-preserving canonical form:
/// g_1 g_{l+1} = ... = g_l g_{2l} = g_{2l+1}^2 = ... = g_n^2 (symmetric),
/// g_1 g_{l+1} = ... = g_l g_{2l} (skew).
ConditionVerdict check_graded_conditions(const std::vector<GroupElement>& tuple, Symmetry kind, size_t l, size_t m);

/// Permutation pi (0-based, new position k holds tuple[pi[k]]) with the
/// renumbered tuple satisfying the relations; nullopt if none exists.
std::optional<std::vector<size_t>> find_renumbering(const std::vector<GroupElement>& tuple, Symmetry kind, size_t l,
                                                    size_t m, RelationSet relations = RelationSet::as_stated);

/// Calls f on every tuple in G^n (lexicographic, last entry fastest).
void for_each_tuple(const FinAbGroup& group, size_t n, const std::function<void(const std::vector<GroupElement>&)>& f);

/// Condition checker vs is_degree_inverting(canonical_phi) on every tuple of G^n.
TheoremReport cross_validate_elementary(const FinAbGroup& group, size_t n, Symmetry kind, size_t l, size_t m,
                                        RelationSet relations = RelationSet::as_stated);

/// Existential form of the renumbering clause: some permutation satisfies the
/// relations iff some permutation makes the canonical form degree-inverting.
TheoremReport cross_validate_renumbering(const FinAbGroup& group, size_t n, Symmetry kind, size_t l, size_t m,
                                         RelationSet relations = RelationSet::as_stated);

struct FormCandidate {
    GroupElement degree;
    SquareMatrix phi;
    /// X -> phi^{-1} X^t phi maps every R_g into R_{g^{-1}}.
    bool degree_inverting = false;
    /// phi^t = +-phi.
    bool involution = false;
    std::optional<Symmetry> symmetry;

    bool accepted() const { return degree_inverting && involution; }
};

/// All n^2 homogeneous candidates phi = C_h of the epsilon grading.
std::vector<FormCandidate> epsilon_form_search(size_t n);

/// Fully general phi: for every (alpha, gamma) in mu_n^2 and sign s, solves
/// X_a^t Phi = alpha Phi X_a^{-1}, X_b^t Phi = gamma Phi X_b^{-1}, Phi^t = s Phi
/// and returns the normalized nonsingular solutions found.
std::vector<SquareMatrix> epsilon_symbolic_forms(size_t n);

/// g_i^{-1} g_{n+1-i} is the same for all i.
ConditionVerdict ut_circ_condition(const std::vector<GroupElement>& tuple);

/// ut_circ_condition vs circ degree inversion, and circ vs s for even n.
TheoremReport ut_cross_validate(const FinAbGroup& group, size_t n);

/// lambda(X) = T_lambda^{-1} X T_lambda with T_lambda = diag(lambda(g_1), ..., lambda(g_n)).
SquareMatrix character_action(const Character& lambda, const ElementaryGrading& grading, const SquareMatrix& x);

/// [inv degree-inverting] iff (lambda(a))^* = lambda(g)^2 lambda(a^*) for all
/// lambda, g and a in the basis of R_g. data holds both sides.
TheoremReport dual_action_check(const ElementaryGrading& grading, const Involution& inv);

/// R_g = intersection over lambda of {a : lambda(a) = lambda(g) a} for every g.
TheoremReport eigenspace_reconstruction(const ElementaryGrading& grading);

/// B in UT_n, D diagonal, B^{-1} D B diagonal: b_ij = 0 whenever d_i != d_j.
/// Throws InvariantViolation when the hypotheses fail.
ConditionVerdict diagonal_lemma_check(const SquareMatrix& b, const SquareMatrix& d);

/// If X -> B^{-1} X^o B is degree-inverting, B is homogeneous of degree e.
TheoremReport ut_B_homogeneity_check(const ElementaryGrading& grading, const SquareMatrix& b);

/// Forms of the Klein-graded M_2 factors.
enum class FineForm { identity, xa, xb, xaxb };

std::string to_string(FineForm f);
SquareMatrix fine_form_matrix(FineForm f);

struct ElementarySpec {
    FinAbGroup group;
    std::vector<GroupElement> tuple;
    Symmetry kind = Symmetry::symmetric;
    size_t l = 0;
    size_t m = 0;
};

/// Assembles M_{2^k} (x) M_m with the tensor of k Klein-graded epsilon factors
/// and the elementary grading, graded by (Z_2 x Z_2)^k x G, and the form
/// phi_1 (x) ... (x) phi_k (x) canonical_phi; checks that it is a
/// degree-inverting involution. Throws InvalidArgument unless the tuple passes
/// check_elementary_conditions(relations) and 2^k m <= max_size.
TheoremReport main_theorem_harness(const std::vector<FineForm>& fine_forms, const ElementarySpec& spec,
                                   RelationSet relations = RelationSet::as_stated, size_t max_size = 8);

/// Degree-preserving mirror of cross_validate_elementary; over exponent-2
/// groups also checks preserve <=> invert on every instance.
TheoremReport graded_involution_suite(const FinAbGroup& group, size_t n, Symmetry kind, size_t l, size_t m);

/// Valid (l, m) splits of n for the kind.
std::vector<std::pair<size_t, size_t>> valid_splits(size_t n, Symmetry kind);

} // namespace gi
