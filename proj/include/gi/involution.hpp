#pragma once

// Involutions of M_n(F) and UT_n(F).
//
// On M_n every involution is X -> Phi^{-1} X^t Phi with Phi symmetric or
// skew-symmetric and unique up to a scalar. On UT_n the basic involutions are
// the reflection along the secondary diagonal and its twist by J; every other
// one is B^{-1} X^o B with B^o = +-B.

#include "gi/grading.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gi {

enum class Symmetry { symmetric, skew };

std::string to_string(Symmetry s);

struct InvolutionVerdict {
    bool pass = false;
    std::string reason;
    std::optional<Symmetry> symmetry;

    explicit operator bool() const { return pass; }
};

/// Phi nonsingular with Phi^t = +-Phi.
InvolutionVerdict is_involution(const SquareMatrix& phi);

class FormInvolution {
public:
    /// Throws SingularMatrix or NotAnInvolution.
    explicit FormInvolution(SquareMatrix phi);
    static FormInvolution transpose(size_t n);

    size_t n() const { return phi_.size(); }
    const SquareMatrix& phi() const { return phi_; }
    Symmetry symmetry() const { return symmetry_; }
    /// Phi rescaled so its first nonzero entry is 1.
    SquareMatrix normalized_phi() const { return phi_.normalized(); }

    SquareMatrix apply(const SquareMatrix& x) const;

private:
    SquareMatrix phi_;
    SquareMatrix phi_inv_;
    Symmetry symmetry_;
};

/// Kronecker product of forms; the sign is the product of the signs.
FormInvolution kronecker_involution(const FormInvolution& a, const FormInvolution& b);

enum class UTKind { circ, s, conjugated };

std::string to_string(UTKind k);

/// A^o = S A^t S with S the anti-diagonal unit matrix: (A^o)_ij = A_{n+1-j, n+1-i}.
SquareMatrix secondary_transpose(const SquareMatrix& a);
/// diag(I_m, -I_m), n = 2m.
SquareMatrix j_matrix(size_t n);

class UTInvolution {
public:
    static UTInvolution circ(size_t n);
    /// Even n only.
    static UTInvolution s(size_t n);
    /// X -> B^{-1} X^o B. Throws unless B is an invertible element of UT_n with B^o = +-B.
    static UTInvolution conjugated(const SquareMatrix& b);

    UTKind kind() const { return kind_; }
    size_t n() const { return n_; }
    /// Conjugating matrix for kind conjugated.
    const std::optional<SquareMatrix>& b() const { return b_; }

    /// Requires X upper triangular.
    SquareMatrix apply(const SquareMatrix& x) const;

private:
    UTInvolution(UTKind kind, size_t n) : kind_(kind), n_(n) {}

    UTKind kind_;
    size_t n_;
    std::optional<SquareMatrix> b_;
    std::optional<SquareMatrix> b_inv_;
};

/// Simplest representative of X -> B^{-1} X^o B: circ when B is scalar,
/// s when B is a multiple of J, otherwise conjugated.
UTInvolution ut_conjugated(const SquareMatrix& b);

using Involution = std::variant<FormInvolution, UTInvolution>;

SquareMatrix apply(const Involution& inv, const SquareMatrix& x);
size_t involution_size(const Involution& inv);
bool acts_on_triangular(const Involution& inv);

struct DegreeVerdict {
    bool pass = false;
    std::string reason;
    /// First offending basis element.
    std::optional<size_t> basis_index;
    std::optional<GroupElement> degree;
    std::optional<GroupElement> expected;
    /// Degree of the image; empty when the image is not homogeneous.
    std::optional<GroupElement> image_degree;

    explicit operator bool() const { return pass; }
};

/// (R_g)^* subset R_g for every g.
DegreeVerdict is_graded_involution(const Involution& inv, const GeneralGrading& grading);
/// (R_g)^* subset R_{g^{-1}} for every g; also checks dim R_g = dim R_{g^{-1}}.
DegreeVerdict is_degree_inverting(const Involution& inv, const GeneralGrading& grading);

/// [[0,I_l,0],[I_l,0,0],[0,0,I_m]] or [[0,I_l],[-I_l,0]] (m = 0).
SquareMatrix canonical_phi(Symmetry kind, size_t l, size_t m);

/// Linear map on M_n given by images[i*n + j] = f(e_ij).
struct LinearMap {
    size_t n = 0;
    std::vector<SquareMatrix> images;

    SquareMatrix operator()(const SquareMatrix& x) const;
};

/// X -> P^{-1} X P.
LinearMap conjugation_map(const SquareMatrix& p);

struct AutomorphismVerdict {
    bool pass = false;
    std::string reason;

    explicit operator bool() const { return pass; }
};

/// Unital, multiplicative on matrix units, bijective.
AutomorphismVerdict is_automorphism(const LinearMap& f);

struct SkolemNoetherResult {
    /// Leading entry 1.
    SquareMatrix p;
    size_t solution_dimension = 0;
    /// Degree of P when a grading is given and f is graded.
    std::optional<GroupElement> degree;
};

/// P with f(X) = P^{-1} X P. Throws NotAnAutomorphism; for a graded f a
/// non-homogeneous P is an InternalError.
SkolemNoetherResult skolem_noether_solve(const LinearMap& f, const GeneralGrading* grading = nullptr);

struct CCStarResult {
    SquareMatrix c;
    /// D = scale * C * C^star; scale is 1 for even n.
    CycloScalar scale;
};

/// star is circ or s.
CCStarResult cc_star_decompose(const SquareMatrix& d, UTKind star);

} // namespace gi
