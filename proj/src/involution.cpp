#include "gi/involution.hpp"

#include "gi/errors.hpp"

namespace gi {
namespace {

std::optional<Symmetry> symmetry_of(const SquareMatrix& phi) {
    const SquareMatrix t = phi.transpose();
    if (t == phi)
        return Symmetry::symmetric;
    if (t == -phi)
        return Symmetry::skew;
    return std::nullopt;
}

struct DegreeRule {
    bool invert;
    const char* name;
};

DegreeVerdict check_degrees(const Involution& inv, const GeneralGrading& grading, DegreeRule rule) {
    if (involution_size(inv) != grading.n())
        throw DimensionMismatch("involution acts on size " + std::to_string(involution_size(inv)) +
                                ", grading on size " + std::to_string(grading.n()));
    if (acts_on_triangular(inv) != grading.triangular())
        throw DimensionMismatch(acts_on_triangular(inv) ? "UT_n involution on a grading of M_n"
                                                        : "M_n involution on a grading of UT_n");
    DegreeVerdict v;
    for (size_t k = 0; k < grading.basis_size(); ++k) {
        const GroupElement& g = grading.basis_degree(k);
        const GroupElement expected = rule.invert ? inverse(g) : g;
        const SquareMatrix image = gi::apply(inv, grading.basis(k));
        if (in_component(image, grading, expected))
            continue;
        v.basis_index = k;
        v.degree = g;
        v.expected = expected;
        v.image_degree = degree_of(image, grading);
        v.reason = "basis element " + std::to_string(k) + " of degree " + g.to_string() + " maps to " +
                   (v.image_degree ? "degree " + v.image_degree->to_string() : std::string("a non-homogeneous matrix")) +
                   ", " + rule.name + " requires " + expected.to_string();
        return v;
    }
    if (rule.invert) {
        for (const auto& g : grading.support()) {
            if (grading.component_dimension(g) != grading.component_dimension(inverse(g))) {
                v.degree = g;
                v.expected = inverse(g);
                v.reason = "dim R_" + g.to_string() + " differs from dim R_" + inverse(g).to_string();
                return v;
            }
        }
    }
    v.pass = true;
    return v;
}

// Coordinates of X in the matrix-unit basis, as a column of a work matrix.
void put_column(Matrix& m, size_t col, const SquareMatrix& x) {
    for (size_t p = 0; p < x.entries().size(); ++p)
        m(p, col) = x.entries()[p];
}

} // namespace

std::string to_string(Symmetry s) {
    return s == Symmetry::symmetric ? "symmetric" : "skew";
}

std::string to_string(UTKind k) {
    switch (k) {
    case UTKind::circ:
        return "circ";
    case UTKind::s:
        return "s";
    case UTKind::conjugated:
        return "conjugated";
    }
    return "?";
}

InvolutionVerdict is_involution(const SquareMatrix& phi) {
    InvolutionVerdict v;
    if (phi.size() == 0) {
        v.reason = "empty matrix";
        return v;
    }
    if (phi.rank() != phi.size()) {
        v.reason = "phi is singular";
        return v;
    }
    v.symmetry = symmetry_of(phi);
    if (!v.symmetry) {
        v.reason = "phi is neither symmetric nor skew-symmetric, so X -> phi^{-1} X^t phi does not square to the identity";
        return v;
    }
    v.pass = true;
    return v;
}

// FormInvolution

FormInvolution::FormInvolution(SquareMatrix phi) : phi_(phi.as_full()) {
    if (phi_.size() == 0 || phi_.rank() != phi_.size())
        throw SingularMatrix("form matrix is singular");
    const auto s = symmetry_of(phi_);
    if (!s)
        throw NotAnInvolution("form matrix is neither symmetric nor skew-symmetric");
    symmetry_ = *s;
    phi_inv_ = phi_.inverse();
}

FormInvolution FormInvolution::transpose(size_t n) {
    return FormInvolution(SquareMatrix::identity(n));
}

SquareMatrix FormInvolution::apply(const SquareMatrix& x) const {
    if (x.size() != n())
        throw DimensionMismatch("matrix size does not match the involution");
    return phi_inv_ * x.as_full().transpose() * phi_;
}

FormInvolution kronecker_involution(const FormInvolution& a, const FormInvolution& b) {
    return FormInvolution(kron(a.phi(), b.phi()));
}

// UT_n involutions

SquareMatrix secondary_transpose(const SquareMatrix& a) {
    const size_t n = a.size();
    SquareMatrix out(n, a.upper_triangular());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!a(n - 1 - j, n - 1 - i).is_zero())
                out.set(i, j, a(n - 1 - j, n - 1 - i));
    return out;
}

SquareMatrix j_matrix(size_t n) {
    if (n == 0 || n % 2)
        throw InvalidArgument("J = diag(I_m, -I_m) needs even n");
    std::vector<CycloScalar> d(n, CycloScalar(1));
    for (size_t i = n / 2; i < n; ++i)
        d[i] = CycloScalar(-1);
    return SquareMatrix::diagonal(d);
}

UTInvolution UTInvolution::circ(size_t n) {
    if (n == 0)
        throw InvalidArgument("n must be >= 1");
    return UTInvolution(UTKind::circ, n);
}

UTInvolution UTInvolution::s(size_t n) {
    if (n == 0 || n % 2)
        throw InvalidArgument("the s involution is defined for even n only");
    return UTInvolution(UTKind::s, n);
}

UTInvolution UTInvolution::conjugated(const SquareMatrix& b) {
    if (!b.is_upper_triangular())
        throw InvariantViolation("B must be upper triangular");
    if (b.rank() != b.size())
        throw SingularMatrix("B is singular");
    const SquareMatrix bo = secondary_transpose(b);
    if (!(bo == b) && !(bo == -b))
        throw NotAnInvolution("B^o is not +-B");
    UTInvolution inv(UTKind::conjugated, b.size());
    inv.b_ = b.as_upper_triangular();
    inv.b_inv_ = b.inverse().as_upper_triangular();
    return inv;
}

SquareMatrix UTInvolution::apply(const SquareMatrix& x) const {
    if (x.size() != n_)
        throw DimensionMismatch("matrix size does not match the involution");
    if (!x.is_upper_triangular())
        throw InvariantViolation("UT_n involutions act on upper triangular matrices only");
    SquareMatrix r = secondary_transpose(x.as_upper_triangular());
    switch (kind_) {
    case UTKind::circ:
        return r;
    case UTKind::s: {
        // J r J flips the sign of the off-diagonal m x m block.
        const size_t m = n_ / 2;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = m; j < n_; ++j)
                if (!r(i, j).is_zero())
                    r.set(i, j, -r(i, j));
        return r;
    }
    case UTKind::conjugated:
        return (*b_inv_ * r * *b_).as_upper_triangular();
    }
    throw InternalError("unknown UT involution kind");
}

UTInvolution ut_conjugated(const SquareMatrix& b) {
    UTInvolution inv = UTInvolution::conjugated(b);
    const size_t n = b.size();
    if (proportional(b, SquareMatrix::identity(n)))
        return UTInvolution::circ(n);
    if (n % 2 == 0 && proportional(b, j_matrix(n)))
        return UTInvolution::s(n);
    return inv;
}

SquareMatrix apply(const Involution& inv, const SquareMatrix& x) {
    return std::visit([&](const auto& i) { return i.apply(x); }, inv);
}

size_t involution_size(const Involution& inv) {
    return std::visit([](const auto& i) { return i.n(); }, inv);
}

bool acts_on_triangular(const Involution& inv) {
    return std::holds_alternative<UTInvolution>(inv);
}

DegreeVerdict is_graded_involution(const Involution& inv, const GeneralGrading& grading) {
    return check_degrees(inv, grading, {false, "degree preservation"});
}

DegreeVerdict is_degree_inverting(const Involution& inv, const GeneralGrading& grading) {
    return check_degrees(inv, grading, {true, "degree inversion"});
}

SquareMatrix canonical_phi(Symmetry kind, size_t l, size_t m) {
    const size_t n = 2 * l + m;
    if (n == 0)
        throw InvalidArgument("canonical form needs n = 2l + m >= 1");
    if (kind == Symmetry::skew && (m != 0 || l == 0))
        throw InvalidArgument("a skew canonical form needs m = 0 and l >= 1");
    SquareMatrix phi(n);
    for (size_t i = 0; i < l; ++i) {
        phi.set(i, l + i, 1);
#if defined(GI_MUTANT) && GI_MUTANT == 1
        phi.set(l + i, i, 1);
#else
        phi.set(l + i, i, kind == Symmetry::skew ? -1 : 1);
#endif
    }
    for (size_t j = 2 * l; j < n; ++j)
        phi.set(j, j, 1);
    return phi;
}

// Automorphisms and Skolem-Noether

SquareMatrix LinearMap::operator()(const SquareMatrix& x) const {
    if (x.size() != n)
        throw DimensionMismatch("matrix size does not match the linear map");
    SquareMatrix out(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (!x(i, j).is_zero())
                out += x(i, j) * images[i * n + j];
    return out;
}

LinearMap conjugation_map(const SquareMatrix& p) {
    const SquareMatrix pinv = p.inverse();
    LinearMap f{p.size(), {}};
    for (size_t i = 0; i < f.n; ++i)
        for (size_t j = 0; j < f.n; ++j)
            f.images.push_back(pinv * SquareMatrix::unit(f.n, i, j) * p);
    return f;
}

AutomorphismVerdict is_automorphism(const LinearMap& f) {
    AutomorphismVerdict v;
    const size_t n = f.n;
    if (n == 0 || f.images.size() != n * n) {
        v.reason = "a map on M_n needs n^2 images";
        return v;
    }
    for (const auto& im : f.images)
        if (im.size() != n) {
            v.reason = "image of wrong size";
            return v;
        }
    SquareMatrix unit_image(n);
    for (size_t i = 0; i < n; ++i)
        unit_image += f.images[i * n + i];
    if (!(unit_image == SquareMatrix::identity(n))) {
        v.reason = "f(I) != I";
        return v;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l) {
                    const SquareMatrix lhs = f.images[i * n + j] * f.images[k * n + l];
                    const bool ok = j == k ? lhs == f.images[i * n + l] : lhs.is_zero();
                    if (!ok) {
                        v.reason = "f(e_" + std::to_string(i + 1) + std::to_string(j + 1) + ") f(e_" +
                                   std::to_string(k + 1) + std::to_string(l + 1) + ") is wrong";
                        return v;
                    }
                }
    Matrix images(n * n, n * n);
    for (size_t k = 0; k < n * n; ++k)
        put_column(images, k, f.images[k]);
    if (rank(std::move(images)) != n * n) {
        v.reason = "f is not bijective";
        return v;
    }
    v.pass = true;
    return v;
}

SkolemNoetherResult skolem_noether_solve(const LinearMap& f, const GeneralGrading* grading) {
    if (auto v = is_automorphism(f); !v)
        throw NotAnAutomorphism(v.reason);
    const size_t n = f.n;
    // For each matrix unit X = e_ij: X P - P f(X) = 0, linear in the n^2 entries of P.
    Matrix system(n * n * n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const SquareMatrix& fx = f.images[i * n + j];
            const size_t base = (i * n + j) * n * n;
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) {
                    const size_t row = base + r * n + c;
                    // (e_ij P)_rc = [r == i] P_jc
                    if (r == i)
                        system(row, j * n + c) += CycloScalar(1);
                    // (P f(X))_rc = sum_k P_rk f(X)_kc
                    for (size_t k = 0; k < n; ++k)
                        if (!fx(k, c).is_zero())
                            system(row, r * n + k) -= fx(k, c);
                }
        }
    const auto basis = nullspace(std::move(system));
    SkolemNoetherResult out;
    out.solution_dimension = basis.size();
    if (basis.size() != 1)
        throw InternalError("solution space of X P = P f(X) has dimension " + std::to_string(basis.size()) +
                            " for an automorphism of M_" + std::to_string(n));
    SquareMatrix p(n);
    for (size_t k = 0; k < n * n; ++k)
        if (!basis[0][k].is_zero())
            p.set(k / n, k % n, basis[0][k]);
    out.p = p.normalized();
    if (out.p.rank() != n)
        throw InternalError("solution P is singular");
    for (size_t k = 0; k < n * n; ++k)
        if (!(out.p * f.images[k] == SquareMatrix::unit(n, k / n, k % n) * out.p))
            throw InternalError("solution P does not reproduce f");

    if (grading) {
        if (grading->n() != n || grading->triangular())
            throw DimensionMismatch("grading does not live on M_" + std::to_string(n));
        bool graded = true;
        for (size_t k = 0; k < grading->basis_size() && graded; ++k)
            graded = in_component(f(grading->basis(k)), *grading, grading->basis_degree(k));
        if (graded) {
            out.degree = degree_of(out.p, *grading);
            if (!out.degree)
                throw InternalError("graded automorphism with a non-homogeneous conjugating matrix");
        }
    }
    return out;
}

// D = C C^*

CCStarResult cc_star_decompose(const SquareMatrix& d, UTKind star) {
    const size_t n = d.size();
    if (star == UTKind::conjugated)
        throw InvalidArgument("cc_star_decompose supports star = circ or s");
    if (n == 0)
        throw InvalidArgument("empty matrix");
    if (star == UTKind::s && n % 2)
        throw InvalidArgument("the s involution needs even n");
    if (!d.is_upper_triangular())
        throw InvariantViolation("D must be upper triangular");
    if (d.rank() != n)
        throw SingularMatrix("D is singular");
    const UTInvolution inv = star == UTKind::circ ? UTInvolution::circ(n) : UTInvolution::s(n);
    const SquareMatrix du = d.as_upper_triangular();
    if (!(inv.apply(du) == du))
        throw InvariantViolation("D is not symmetric for the involution");

    const size_t m = n / 2;
    CCStarResult out{SquareMatrix(n, true), CycloScalar(1)};
    SquareMatrix dd = du;
    if (n % 2) {
        out.scale = du(m, m);
        dd *= out.scale.inv();
    }
    // Rows below the first m are those of D. The first m rows are those of
    // I except for the top-right m x m block, which is half of D's.
    const CycloScalar half = CycloScalar(Rational(1, 2));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            CycloScalar v;
            if (i >= m)
                v = dd(i, j);
            else if (j >= n - m)
                v = half * dd(i, j);
            else if (i == j)
                v = CycloScalar(1);
            if (!v.is_zero())
                out.c.set(i, j, v);
        }
    if (!(out.scale * (out.c * inv.apply(out.c)) == du))
        throw InternalError("C C^* does not reproduce D");
    return out;
}

} // namespace gi
