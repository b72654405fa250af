#include "gi/grading.hpp"

#include "gi/errors.hpp"

#include <set>
#include <utility>

namespace gi {
namespace {

using Position = std::pair<size_t, size_t>;

std::vector<Position> algebra_positions(size_t n, bool triangular) {
    std::vector<Position> out;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = triangular ? i : 0; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

void require_member(const SquareMatrix& m, size_t n, bool triangular) {
    if (m.size() != n)
        throw DimensionMismatch("expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix, got size " + std::to_string(m.size()));
    if (triangular && !m.is_upper_triangular())
        throw InvariantViolation("matrix has nonzero entries below the diagonal of UT_" + std::to_string(n));
}

class UnitFrame final : public BasisFrame {
public:
    UnitFrame(size_t n, bool triangular) : BasisFrame(n, triangular) {
        for (auto [i, j] : algebra_positions(n, triangular)) {
            SquareMatrix e = SquareMatrix::unit(n, i, j);
            elements_.push_back(triangular ? e.as_upper_triangular() : e);
        }
    }

    bool is_basis() const override { return true; }

    std::vector<CycloScalar> coordinates(const SquareMatrix& m) const override {
        require_member(m, n_, triangular_);
        std::vector<CycloScalar> out;
        out.reserve(elements_.size());
        for (auto [i, j] : algebra_positions(n_, triangular_))
            out.push_back(m(i, j));
        return out;
    }
};

class DenseFrame final : public BasisFrame {
public:
    DenseFrame(size_t n, bool triangular, std::vector<SquareMatrix> elements)
        : BasisFrame(n, triangular), positions_(algebra_positions(n, triangular)) {
        for (const auto& e : elements)
            require_member(e, n, triangular);
        elements_ = std::move(elements);
        if (elements_.size() != positions_.size())
            return;
        Matrix b(positions_.size(), elements_.size());
        for (size_t k = 0; k < elements_.size(); ++k)
            for (size_t p = 0; p < positions_.size(); ++p)
                b(p, k) = elements_[k](positions_[p].first, positions_[p].second);
        inverse_ = gi::inverse(std::move(b));
    }

    bool is_basis() const override { return inverse_.has_value(); }

    std::vector<CycloScalar> coordinates(const SquareMatrix& m) const override {
        if (!inverse_)
            throw InvalidArgument("family is not a basis of the algebra");
        require_member(m, n_, triangular_);
        std::vector<CycloScalar> out(elements_.size());
        for (size_t p = 0; p < positions_.size(); ++p) {
            const CycloScalar& v = m(positions_[p].first, positions_[p].second);
            if (v.is_zero())
                continue;
            for (size_t k = 0; k < out.size(); ++k) {
                const CycloScalar& w = (*inverse_)(k, p);
                if (!w.is_zero())
                    out[k] += w * v;
            }
        }
        return out;
    }

private:
    std::vector<Position> positions_;
    std::optional<Matrix> inverse_;
};

class TensorFrame final : public BasisFrame {
public:
    TensorFrame(std::shared_ptr<const BasisFrame> a, std::shared_ptr<const BasisFrame> b)
        : BasisFrame(a->matrix_size() * b->matrix_size(), false), a_(std::move(a)), b_(std::move(b)) {
        if (a_->triangular() || b_->triangular())
            throw InvalidArgument("tensor products of UT_n frames are not supported");
        elements_.reserve(a_->size() * b_->size());
        for (size_t i = 0; i < a_->size(); ++i)
            for (size_t j = 0; j < b_->size(); ++j)
                elements_.push_back(kron(a_->element(i), b_->element(j)));
    }

    bool is_basis() const override { return a_->is_basis() && b_->is_basis(); }

    std::vector<CycloScalar> coordinates(const SquareMatrix& m) const override {
        if (!is_basis())
            throw InvalidArgument("family is not a basis of the algebra");
        require_member(m, n_, false);
        const size_t p = a_->matrix_size();
        const size_t q = b_->matrix_size();
        const size_t nb = b_->size();
        // m = sum_{ij} e_ij (x) M_ij; expand every block in b, then regroup the
        // b-coefficients as p x p matrices and expand those in a.
        std::vector<SquareMatrix> regrouped(nb, SquareMatrix(p));
        for (size_t i = 0; i < p; ++i)
            for (size_t j = 0; j < p; ++j) {
                SquareMatrix block(q);
                bool nonzero = false;
                for (size_t k = 0; k < q; ++k)
                    for (size_t l = 0; l < q; ++l) {
                        const CycloScalar& v = m(i * q + k, j * q + l);
                        if (!v.is_zero()) {
                            block.set(k, l, v);
                            nonzero = true;
                        }
                    }
                if (!nonzero)
                    continue;
                std::vector<CycloScalar> beta = b_->coordinates(block);
                for (size_t t = 0; t < nb; ++t)
                    if (!beta[t].is_zero())
                        regrouped[t].set(i, j, beta[t]);
            }
        std::vector<CycloScalar> out(a_->size() * nb);
        for (size_t t = 0; t < nb; ++t) {
            if (regrouped[t].is_zero())
                continue;
            std::vector<CycloScalar> alpha = a_->coordinates(regrouped[t]);
            for (size_t s = 0; s < alpha.size(); ++s)
                out[s * nb + t] = std::move(alpha[s]);
        }
        return out;
    }

private:
    std::shared_ptr<const BasisFrame> a_;
    std::shared_ptr<const BasisFrame> b_;
};

// Span membership by rank, for families that are not a basis.
bool in_span(const SquareMatrix& m, const std::vector<SquareMatrix>& family) {
    const size_t n = m.size();
    Matrix with(family.size() + 1, n * n);
    Matrix without(family.size(), n * n);
    for (size_t r = 0; r < family.size(); ++r)
        for (size_t p = 0; p < n * n; ++p) {
            with(r, p) = family[r].entries()[p];
            without(r, p) = family[r].entries()[p];
        }
    for (size_t p = 0; p < n * n; ++p)
        with(family.size(), p) = m.entries()[p];
    return rank(std::move(with)) == rank(std::move(without));
}

} // namespace

size_t BasisFrame::algebra_dimension() const {
    return triangular_ ? n_ * (n_ + 1) / 2 : n_ * n_;
}

std::shared_ptr<const BasisFrame> unit_frame(size_t n, bool triangular) {
    return std::make_shared<UnitFrame>(n, triangular);
}

std::shared_ptr<const BasisFrame> dense_frame(size_t n, bool triangular, std::vector<SquareMatrix> elements) {
    return std::make_shared<DenseFrame>(n, triangular, std::move(elements));
}

std::shared_ptr<const BasisFrame> tensor_frame(std::shared_ptr<const BasisFrame> a,
                                               std::shared_ptr<const BasisFrame> b) {
    return std::make_shared<TensorFrame>(std::move(a), std::move(b));
}

// GeneralGrading

GeneralGrading::GeneralGrading(FinAbGroup group, size_t n, bool triangular, const Components& components)
    : group_(std::move(group)) {
    std::vector<SquareMatrix> elements;
    for (const auto& [g, basis] : components) {
        if (!group_.contains(g))
            throw GroupMismatch("degree " + g.to_string() + " is not an element of " + group_.to_string());
        for (const auto& b : basis) {
            elements.push_back(triangular ? b.as_upper_triangular() : b);
            labels_.push_back(g);
        }
    }
    frame_ = dense_frame(n, triangular, std::move(elements));
}

GeneralGrading::GeneralGrading(FinAbGroup group, std::shared_ptr<const BasisFrame> frame,
                               std::vector<GroupElement> labels)
    : group_(std::move(group)), frame_(std::move(frame)), labels_(std::move(labels)) {
    if (labels_.size() != frame_->size())
        throw DimensionMismatch("one degree per basis element is required");
    for (const auto& g : labels_)
        if (!group_.contains(g))
            throw GroupMismatch("degree " + g.to_string() + " is not an element of " + group_.to_string());
}

GeneralGrading::Components GeneralGrading::components() const {
    Components out;
    for (size_t k = 0; k < labels_.size(); ++k)
        out[labels_[k]].push_back(frame_->element(k));
    return out;
}

std::vector<size_t> GeneralGrading::component_indices(const GroupElement& g) const {
    std::vector<size_t> out;
    for (size_t k = 0; k < labels_.size(); ++k)
        if (labels_[k] == g)
            out.push_back(k);
    return out;
}

size_t GeneralGrading::component_dimension(const GroupElement& g) const {
    return component_indices(g).size();
}

std::vector<GroupElement> GeneralGrading::support() const {
    std::set<GroupElement> s(labels_.begin(), labels_.end());
    return {s.begin(), s.end()};
}

std::vector<CycloScalar> GeneralGrading::coordinates(const SquareMatrix& m) const {
    return frame_->coordinates(m);
}

// Elementary

ElementaryGrading::ElementaryGrading(FinAbGroup group, std::vector<GroupElement> tuple, bool triangular_only)
    : tuple_(std::move(tuple)),
      general_([&] {
          if (tuple_.empty())
              throw InvalidArgument("an elementary grading needs n >= 1");
          for (const auto& g : tuple_)
              if (!group.contains(g))
                  throw GroupMismatch("tuple entry " + g.to_string() + " is not in " + group.to_string());
          std::vector<GroupElement> labels;
          const size_t n = tuple_.size();
          for (auto [i, j] : algebra_positions(n, triangular_only))
              labels.push_back(op(inverse(tuple_[i]), tuple_[j]));
          return GeneralGrading(group, unit_frame(n, triangular_only), std::move(labels));
      }()) {}

GroupElement ElementaryGrading::degree(size_t i, size_t j) const {
    if (i >= n() || j >= n())
        throw DimensionMismatch("matrix unit index out of range");
    if (triangular_only() && i > j)
        throw InvalidArgument("e_ij with i > j is not in UT_n");
    return op(inverse(tuple_[i]), tuple_[j]);
}

ElementaryGrading build_elementary(const FinAbGroup& group, const std::vector<GroupElement>& tuple,
                                   bool triangular_only) {
    return ElementaryGrading(group, tuple, triangular_only);
}

// Epsilon

EpsilonGrading::EpsilonGrading(CycloScalar epsilon, SquareMatrix xa, SquareMatrix xb, GeneralGrading general)
    : epsilon_(std::move(epsilon)), xa_(std::move(xa)), xb_(std::move(xb)), general_(std::move(general)) {}

SquareMatrix EpsilonGrading::c(const GroupElement& g) const {
    if (!group().contains(g))
        throw GroupMismatch(g.to_string() + " is not in " + group().to_string());
    return xa_.pow(g.residues()[0]) * xb_.pow(g.residues()[1]);
}

EpsilonGrading build_epsilon(size_t n) {
    if (n < 2)
        throw InvalidArgument("the epsilon grading needs n >= 2");
    const CycloScalar eps = zeta(static_cast<int>(n));
    std::vector<CycloScalar> diag(n);
    for (size_t r = 0; r < n; ++r)
        diag[r] = eps.pow(static_cast<long>(n - 1 - r));
    SquareMatrix xa = SquareMatrix::diagonal(diag);
#if defined(GI_MUTANT) && GI_MUTANT == 2
    xa.set(0, 0, xa(0, 0) * CycloScalar(2));
#endif
    SquareMatrix xb(n);
    for (size_t r = 0; r < n; ++r)
        xb.set(r, (r + 1) % n, 1);

    const SquareMatrix id = SquareMatrix::identity(n);
    if (!(xa * xb == eps * (xb * xa)) || !(xa.pow(static_cast<long>(n)) == id) ||
        !(xb.pow(static_cast<long>(n)) == id))
        throw InternalError("X_a, X_b violate X_a X_b = eps X_b X_a, X_a^n = X_b^n = I");

    const int ni = static_cast<int>(n);
    FinAbGroup group({ni, ni});
    std::vector<SquareMatrix> basis;
    std::vector<GroupElement> labels;
    for (const auto& g : group.elements()) {
        basis.push_back(xa.pow(g.residues()[0]) * xb.pow(g.residues()[1]));
        labels.push_back(g);
    }
    GeneralGrading general(group, dense_frame(n, false, std::move(basis)), std::move(labels));
    return EpsilonGrading(eps, std::move(xa), std::move(xb), std::move(general));
}

// Tensor and induced gradings

namespace {

GeneralGrading tensor_grading(const GeneralGrading& a, const GeneralGrading& b, bool same_group) {
    if (same_group && !(a.group() == b.group()))
        throw GroupMismatch("factors are graded by different groups");
    FinAbGroup group = same_group ? a.group() : direct_product(a.group(), b.group());
    std::vector<GroupElement> labels;
    labels.reserve(a.basis_size() * b.basis_size());
    for (size_t i = 0; i < a.basis_size(); ++i)
        for (size_t j = 0; j < b.basis_size(); ++j)
            labels.push_back(same_group ? op(a.basis_degree(i), b.basis_degree(j))
                                        : pair_element(a.basis_degree(i), b.basis_degree(j)));
    return GeneralGrading(std::move(group), tensor_frame(a.frame(), b.frame()), std::move(labels));
}

} // namespace

GeneralGrading tensor_product(const GeneralGrading& a, const GeneralGrading& b) {
    return tensor_grading(a, b, false);
}

GeneralGrading tensor_product(const std::vector<EpsilonGrading>& factors) {
    if (factors.empty())
        throw InvalidArgument("tensor product of no factors");
    GeneralGrading out = factors.front().general();
    for (size_t k = 1; k < factors.size(); ++k)
        out = tensor_product(out, factors[k].general());
    return out;
}

GeneralGrading build_induced_tensor(const GeneralGrading& fine, const ElementaryGrading& elementary) {
    if (fine.triangular() || elementary.triangular_only())
        throw DimensionMismatch("induced gradings are defined on full matrix algebras only");
    // a (x) e_ij has degree h * g_i^{-1} g_j.
    return tensor_grading(fine, elementary.general(), fine.group() == elementary.group());
}

GeneralGrading build_induced_tensor(const EpsilonGrading& fine, const ElementaryGrading& elementary) {
    return build_induced_tensor(fine.general(), elementary);
}

GeneralGrading build_induced_tensor(const std::vector<EpsilonGrading>& fine, const ElementaryGrading& elementary) {
    return build_induced_tensor(tensor_product(fine), elementary);
}

// Decomposition

std::map<GroupElement, SquareMatrix> homogeneous_components(const SquareMatrix& m, const GeneralGrading& grading) {
    const std::vector<CycloScalar> coords = grading.coordinates(m);
    std::map<GroupElement, SquareMatrix> out;
    for (size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero())
            continue;
        const GroupElement& g = grading.basis_degree(k);
        auto it = out.find(g);
        if (it == out.end())
            it = out.emplace(g, SquareMatrix(grading.n(), grading.triangular())).first;
        it->second += coords[k] * grading.basis(k);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero())
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

std::optional<GroupElement> degree_of(const SquareMatrix& m, const GeneralGrading& grading) {
    if (m.is_zero())
        throw InvalidArgument("the zero matrix has no degree");
    const std::vector<CycloScalar> coords = grading.coordinates(m);
    std::optional<GroupElement> found;
    for (size_t k = 0; k < coords.size(); ++k) {
        if (coords[k].is_zero())
            continue;
        if (!found)
            found = grading.basis_degree(k);
        else if (!(grading.basis_degree(k) == *found))
            return std::nullopt;
    }
    return found;
}

bool in_component(const SquareMatrix& m, const GeneralGrading& grading, const GroupElement& g) {
    const std::vector<CycloScalar> coords = grading.coordinates(m);
    for (size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero() && !(grading.basis_degree(k) == g))
            return false;
    return true;
}

GradingVerdict verify_grading(const GeneralGrading& grading) {
    GradingVerdict v;
    const BasisFrame& frame = *grading.frame();
    const size_t dim = frame.algebra_dimension();
    if (grading.basis_size() != dim) {
        v.reason = "homogeneous bases have " + std::to_string(grading.basis_size()) +
                   " elements in total, the algebra has dimension " + std::to_string(dim);
        return v;
    }
    for (size_t k = 0; k < grading.basis_size(); ++k) {
        if (grading.basis(k).is_zero()) {
            v.reason = "basis element " + std::to_string(k) + " is zero";
            v.first = k;
            v.g = grading.basis_degree(k);
            return v;
        }
    }

    const auto components = grading.components();
    auto product_ok = [&](const SquareMatrix& p, const GroupElement& target) {
        if (p.is_zero())
            return true;
        if (frame.is_basis())
            return in_component(p, grading, target);
        auto it = components.find(target);
        return it != components.end() && in_span(p, it->second);
    };
    for (size_t a = 0; a < grading.basis_size(); ++a)
        for (size_t b = 0; b < grading.basis_size(); ++b) {
            const GroupElement target = op(grading.basis_degree(a), grading.basis_degree(b));
            if (product_ok(grading.basis(a) * grading.basis(b), target))
                continue;
            v.g = grading.basis_degree(a);
            v.h = grading.basis_degree(b);
            v.first = a;
            v.second = b;
            v.reason = "product of basis elements " + std::to_string(a) + " (degree " + v.g->to_string() +
                       ") and " + std::to_string(b) + " (degree " + v.h->to_string() +
                       ") is not in the component of degree " + target.to_string();
            return v;
        }
    if (!frame.is_basis()) {
        v.reason = "homogeneous bases are linearly dependent";
        return v;
    }
    v.pass = true;
    return v;
}

SupportVerdict fine_support_checks(const GeneralGrading& grading) {
    SupportVerdict v;
    for (const auto& g : grading.support())
        if (grading.component_dimension(g) > 1)
            throw InvalidArgument("component of degree " + g.to_string() + " has dimension " +
                                  std::to_string(grading.component_dimension(g)) + "; grading is not fine");
    v.support = grading.support();
    const std::set<GroupElement> support(v.support.begin(), v.support.end());
    for (const auto& g : support) {
        if (!support.contains(inverse(g))) {
            v.reason = "support contains " + g.to_string() + " but not its inverse";
            return v;
        }
        for (const auto& h : support)
            if (!support.contains(op(g, h))) {
                v.reason = "support is not closed: " + g.to_string() + " * " + h.to_string();
                return v;
            }
    }
    for (size_t k = 0; k < grading.basis_size(); ++k) {
        const SquareMatrix& b = grading.basis(k);
        if (b.rank() != b.size()) {
            v.reason = "homogeneous element of degree " + grading.basis_degree(k).to_string() + " is not invertible";
            return v;
        }
    }
    v.pass = true;
    return v;
}

} // namespace gi
