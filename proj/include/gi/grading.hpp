#pragma once

// Group gradings on M_n(F) and UT_n(F).
//
// Every grading is ultimately a GeneralGrading: a basis of the algebra (a
// BasisFrame) whose elements carry group degrees. The elementary, epsilon and
// induced constructions build such a basis; the frame knows how to expand an
// arbitrary matrix in it, which is what homogeneous decomposition and every
// degree test reduce to.

#include "gi/abelian_group.hpp"
#include "gi/matrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gi {

/// An ordered family of matrices in M_n (or UT_n) with coordinate extraction.
class BasisFrame {
public:
    virtual ~BasisFrame() = default;

    size_t matrix_size() const { return n_; }
    bool triangular() const { return triangular_; }
    size_t size() const { return elements_.size(); }
    const SquareMatrix& element(size_t k) const { return elements_[k]; }
    /// Dimension of the ambient algebra: n^2, or n(n+1)/2 for UT_n.
    size_t algebra_dimension() const;

    /// The family is a basis of the ambient algebra.
    virtual bool is_basis() const = 0;
    /// Coefficients of `m` in this basis. Requires is_basis().
    virtual std::vector<CycloScalar> coordinates(const SquareMatrix& m) const = 0;

protected:
    BasisFrame(size_t n, bool triangular) : n_(n), triangular_(triangular) {}

    size_t n_;
    bool triangular_;
    std::vector<SquareMatrix> elements_;
};

/// Matrix units e_ij in row-major order (i <= j when triangular).
std::shared_ptr<const BasisFrame> unit_frame(size_t n, bool triangular);
/// Arbitrary family; coordinates through a precomputed inverse.
std::shared_ptr<const BasisFrame> dense_frame(size_t n, bool triangular, std::vector<SquareMatrix> elements);
/// kron(a_i, b_j) indexed i * b.size() + j.
std::shared_ptr<const BasisFrame> tensor_frame(std::shared_ptr<const BasisFrame> a,
                                               std::shared_ptr<const BasisFrame> b);

class GeneralGrading {
public:
    using Components = std::map<GroupElement, std::vector<SquareMatrix>>;

    GeneralGrading(FinAbGroup group, size_t n, bool triangular, const Components& components);
    GeneralGrading(FinAbGroup group, std::shared_ptr<const BasisFrame> frame, std::vector<GroupElement> labels);

    const FinAbGroup& group() const { return group_; }
    size_t n() const { return frame_->matrix_size(); }
    bool triangular() const { return frame_->triangular(); }

    size_t basis_size() const { return frame_->size(); }
    const SquareMatrix& basis(size_t k) const { return frame_->element(k); }
    const GroupElement& basis_degree(size_t k) const { return labels_[k]; }
    const std::shared_ptr<const BasisFrame>& frame() const { return frame_; }

    Components components() const;
    std::vector<size_t> component_indices(const GroupElement& g) const;
    size_t component_dimension(const GroupElement& g) const;
    std::vector<GroupElement> support() const;

    /// The homogeneous bases together form a basis of the algebra.
    bool basis_is_complete() const { return frame_->is_basis(); }
    /// Throws InvalidArgument when the bases do not form a basis of the algebra.
    std::vector<CycloScalar> coordinates(const SquareMatrix& m) const;

private:
    FinAbGroup group_;
    std::shared_ptr<const BasisFrame> frame_;
    std::vector<GroupElement> labels_;
};

/// deg(e_ij) = g_i^{-1} g_j. With triangular_only the grading lives on UT_n.
class ElementaryGrading {
public:
    ElementaryGrading(FinAbGroup group, std::vector<GroupElement> tuple, bool triangular_only = false);

    const FinAbGroup& group() const { return general_.group(); }
    const std::vector<GroupElement>& tuple() const { return tuple_; }
    size_t n() const { return tuple_.size(); }
    bool triangular_only() const { return general_.triangular(); }
    /// 0-based; throws for i > j on UT_n.
    GroupElement degree(size_t i, size_t j) const;

    const GeneralGrading& general() const { return general_; }

private:
    std::vector<GroupElement> tuple_;
    GeneralGrading general_;
};

/// Fine Z_n x Z_n grading spanned by C_(i,j) = X_a^i X_b^j.
class EpsilonGrading {
public:
    size_t n() const { return xa_.size(); }
    const FinAbGroup& group() const { return general_.group(); }
    const CycloScalar& epsilon() const { return epsilon_; }
    const SquareMatrix& xa() const { return xa_; }
    const SquareMatrix& xb() const { return xb_; }
    SquareMatrix c(const GroupElement& g) const;
    const GeneralGrading& general() const { return general_; }

private:
    friend EpsilonGrading build_epsilon(size_t n);
    EpsilonGrading(CycloScalar epsilon, SquareMatrix xa, SquareMatrix xb, GeneralGrading general);

    CycloScalar epsilon_;
    SquareMatrix xa_;
    SquareMatrix xb_;
    GeneralGrading general_;
};

ElementaryGrading build_elementary(const FinAbGroup& group, const std::vector<GroupElement>& tuple,
                                   bool triangular_only = false);

/// Throws InternalError if the defining relations fail on the constructed matrices.
EpsilonGrading build_epsilon(size_t n);

/// Tensor grading on M_p (x) M_q by a.group() x b.group(): deg(x (x) y) = (deg x, deg y).
GeneralGrading tensor_product(const GeneralGrading& a, const GeneralGrading& b);
/// Factors graded by T_1 x ... x T_k.
GeneralGrading tensor_product(const std::vector<EpsilonGrading>& factors);

/// Induced grading span{a (x) e_ij : a in A_h} of degree g_i^{-1} h g_j. When
/// both gradings use the same group the degrees multiply inside it; otherwise
/// the grading group is fine.group() x elementary.group().
GeneralGrading build_induced_tensor(const GeneralGrading& fine, const ElementaryGrading& elementary);
GeneralGrading build_induced_tensor(const EpsilonGrading& fine, const ElementaryGrading& elementary);
GeneralGrading build_induced_tensor(const std::vector<EpsilonGrading>& fine, const ElementaryGrading& elementary);

/// Nonzero homogeneous components; they sum to m.
std::map<GroupElement, SquareMatrix> homogeneous_components(const SquareMatrix& m, const GeneralGrading& grading);
/// Degree of a nonzero matrix, nullopt when it is not homogeneous.
std::optional<GroupElement> degree_of(const SquareMatrix& m, const GeneralGrading& grading);
/// m lies in R_g (the zero matrix lies in every component).
bool in_component(const SquareMatrix& m, const GeneralGrading& grading, const GroupElement& g);

struct GradingVerdict {
    bool pass = false;
    std::string reason;
    std::optional<GroupElement> g;
    std::optional<GroupElement> h;
    std::optional<size_t> first;
    std::optional<size_t> second;

    explicit operator bool() const { return pass; }
};

GradingVerdict verify_grading(const GeneralGrading& grading);

struct SupportVerdict {
    bool pass = false;
    std::string reason;
    std::vector<GroupElement> support;

    explicit operator bool() const { return pass; }
};

/// Support is a subgroup and every homogeneous basis element is invertible.
/// Requires a fine grading (throws InvalidArgument otherwise).
SupportVerdict fine_support_checks(const GeneralGrading& grading);

} // namespace gi
