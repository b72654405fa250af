#include "gi/errors.hpp"
#include "gi/involution.hpp"

#include <doctest.h>

#include <random>

using namespace gi;

namespace {

std::vector<GroupElement> cyclic_tuple(const FinAbGroup& g, std::vector<int> residues) {
    std::vector<GroupElement> out;
    for (int r : residues)
        out.push_back(g.element({r}));
    return out;
}

SquareMatrix random_matrix(std::mt19937& rng, size_t n, bool triangular = false, int range = 4) {
    std::uniform_int_distribution<int> d(-range, range);
    SquareMatrix m(n, triangular);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = triangular ? i : 0; j < n; ++j)
            m.set(i, j, d(rng));
    return m;
}

SquareMatrix random_invertible_ut(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<int> d(-3, 3), nz(1, 3);
    SquareMatrix m(n, true);
    for (size_t i = 0; i < n; ++i) {
        m.set(i, i, nz(rng) * (rng() % 2 ? 1 : -1));
        for (size_t j = i + 1; j < n; ++j)
            m.set(i, j, d(rng));
    }
    return m;
}

// (A^o)_ij = A_{n-1-j, n-1-i}, 0-based
SquareMatrix oracle_circ(const SquareMatrix& a) {
    const size_t n = a.size();
    SquareMatrix out(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out.set(i, j, a(n - 1 - j, n - 1 - i));
    return out;
}

// deg(e_ij^*) = -deg(e_ij) on every matrix unit, checked without the library predicate
bool oracle_inverting(const Involution& inv, const ElementaryGrading& e) {
    const size_t n = e.n();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = e.triangular_only() ? i : 0; j < n; ++j) {
            const SquareMatrix img = gi::apply(inv, SquareMatrix::unit(n, i, j));
            const GroupElement want = inverse(e.degree(i, j));
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q)
                    if (!img(p, q).is_zero() && e.degree(p, q) != want)
                        return false;
        }
    return true;
}

} // namespace

TEST_SUITE("involution") {

TEST_CASE("apply examples") {
    const Involution t = FormInvolution::transpose(2);
    CHECK(gi::apply(t, SquareMatrix::unit(2, 0, 1)) == SquareMatrix::unit(2, 1, 0));
    const Involution skew = FormInvolution(SquareMatrix{{0, 1}, {-1, 0}});
    CHECK(gi::apply(skew, SquareMatrix{{1, 2}, {3, 4}}) == SquareMatrix{{4, -2}, {-3, 1}});
    const Involution circ = UTInvolution::circ(3);
    CHECK(gi::apply(circ, SquareMatrix::unit(3, 0, 1).as_upper_triangular()) == SquareMatrix::unit(3, 1, 2));
}

TEST_CASE("form involution matches phi^-1 X^t phi") {
    std::mt19937 rng(21);
    const SquareMatrix phis[] = {canonical_phi(Symmetry::symmetric, 1, 2), canonical_phi(Symmetry::skew, 2, 0),
                                 SquareMatrix{{2, 1, 0}, {1, 3, 0}, {0, 0, 5}}};
    for (const auto& phi : phis) {
        const FormInvolution f(phi);
        for (int t = 0; t < 5; ++t) {
            const SquareMatrix x = random_matrix(rng, phi.size());
            CHECK(f.apply(x) == phi.inverse() * x.transpose() * phi);
        }
    }
}

TEST_CASE("involutions are antiautomorphisms of order two") {
    std::mt19937 rng(22);
    std::vector<Involution> invs = {FormInvolution::transpose(4), FormInvolution(canonical_phi(Symmetry::skew, 2, 0)),
                                    FormInvolution(canonical_phi(Symmetry::symmetric, 1, 2))};
    for (const auto& inv : invs)
        for (int t = 0; t < 5; ++t) {
            const SquareMatrix x = random_matrix(rng, 4), y = random_matrix(rng, 4);
            CHECK(gi::apply(inv, x * y) == gi::apply(inv, y) * gi::apply(inv, x));
            CHECK(gi::apply(inv, gi::apply(inv, x)) == x);
        }
    std::vector<Involution> uts = {UTInvolution::circ(4), UTInvolution::s(4)};
    for (const auto& inv : uts)
        for (int t = 0; t < 5; ++t) {
            const SquareMatrix x = random_matrix(rng, 4, true), y = random_matrix(rng, 4, true);
            CHECK(gi::apply(inv, x * y) == gi::apply(inv, y) * gi::apply(inv, x));
            CHECK(gi::apply(inv, gi::apply(inv, x)) == x);
        }
}

TEST_CASE("circ and s formulas") {
    std::mt19937 rng(23);
    for (size_t n = 1; n <= 5; ++n) {
        const SquareMatrix a = random_matrix(rng, n, true);
        CHECK(secondary_transpose(a) == oracle_circ(a));
        CHECK(UTInvolution::circ(n).apply(a) == oracle_circ(a));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j)
                CHECK(UTInvolution::circ(n).apply(SquareMatrix::unit(n, i, j).as_upper_triangular()) ==
                      SquareMatrix::unit(n, n - 1 - j, n - 1 - i));
        if (n % 2 == 0) {
            const SquareMatrix j = j_matrix(n);
            CHECK(UTInvolution::s(n).apply(a) == j * oracle_circ(a) * j);
        } else {
            CHECK_THROWS_AS(UTInvolution::s(n), InvalidArgument);
        }
    }
    CHECK(j_matrix(4) == SquareMatrix::diagonal({1, 1, -1, -1}));
    CHECK_THROWS_AS(UTInvolution::circ(2).apply(SquareMatrix{{1, 0}, {1, 1}}), InvariantViolation);
}

TEST_CASE("is_involution") {
    const auto i3 = is_involution(SquareMatrix::identity(3));
    CHECK(i3.pass);
    CHECK(i3.symmetry == Symmetry::symmetric);
    const auto sk = is_involution(SquareMatrix{{0, 1}, {-1, 0}});
    CHECK(sk.pass);
    CHECK(sk.symmetry == Symmetry::skew);
    CHECK_FALSE(is_involution(SquareMatrix{{1, 1}, {0, 1}}).pass);
    CHECK_FALSE(is_involution(SquareMatrix{{1, 1}, {1, 1}}).pass);
    // for phi = [[1,1],[0,1]] the induced map does not square to the identity
    const SquareMatrix phi{{1, 1}, {0, 1}};
    const SquareMatrix x = SquareMatrix::unit(2, 0, 0);
    const SquareMatrix once = phi.inverse() * x.transpose() * phi;
    CHECK_FALSE(phi.inverse() * once.transpose() * phi == x);
    CHECK_THROWS_AS(FormInvolution(SquareMatrix{{1, 1}, {0, 1}}), NotAnInvolution);
    CHECK_THROWS_AS(FormInvolution(SquareMatrix{{1, 1}, {1, 1}}), SingularMatrix);
}

TEST_CASE("canonical forms") {
    CHECK(canonical_phi(Symmetry::symmetric, 0, 3) == SquareMatrix::identity(3));
    CHECK(canonical_phi(Symmetry::symmetric, 1, 0) == SquareMatrix{{0, 1}, {1, 0}});
    CHECK(canonical_phi(Symmetry::skew, 1, 0) == SquareMatrix{{0, 1}, {-1, 0}});
    const SquareMatrix s = canonical_phi(Symmetry::symmetric, 1, 1);
    CHECK(s == SquareMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    for (size_t l = 1; l <= 3; ++l) {
        const SquareMatrix k = canonical_phi(Symmetry::skew, l, 0);
        CHECK(k.transpose() == -k);
        CHECK(FormInvolution(k).symmetry() == Symmetry::skew);
        for (size_t m = 0; m <= 2; ++m)
            CHECK(FormInvolution(canonical_phi(Symmetry::symmetric, l, m)).symmetry() == Symmetry::symmetric);
    }
    CHECK_THROWS_AS(canonical_phi(Symmetry::skew, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(canonical_phi(Symmetry::symmetric, 0, 0), InvalidArgument);
}

TEST_CASE("Kronecker products of forms") {
    const auto t = kronecker_involution(FormInvolution::transpose(2), FormInvolution::transpose(2));
    CHECK(t.phi() == SquareMatrix::identity(4));
    const FormInvolution sk(canonical_phi(Symmetry::skew, 1, 0));
    const auto ss = kronecker_involution(sk, sk);
    CHECK(ss.symmetry() == Symmetry::symmetric);
    CHECK(ss.phi().transpose() == ss.phi());
    const auto xa = kronecker_involution(FormInvolution(SquareMatrix::diagonal({-1, 1})), FormInvolution::transpose(2));
    CHECK(xa.symmetry() == Symmetry::symmetric);
    std::mt19937 rng(24);
    const SquareMatrix x = random_matrix(rng, 4);
    CHECK(xa.apply(xa.apply(x)) == x);
    // (phi1 (x) phi2)-involution acts factorwise on pure tensors
    const SquareMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
    CHECK(ss.apply(kron(a, b)) == kron(sk.apply(a), sk.apply(b)));
}

TEST_CASE("graded involution examples") {
    const FinAbGroup z2({2}), z4({4});
    const Involution t2 = FormInvolution::transpose(2);
    CHECK(is_graded_involution(t2, build_elementary(z2, cyclic_tuple(z2, {0, 0})).general()).pass);
    // in Z_2 every element is its own inverse, so preserve and invert coincide
    CHECK(is_graded_involution(t2, build_elementary(z2, cyclic_tuple(z2, {0, 1})).general()).pass);
    CHECK(is_degree_inverting(t2, build_elementary(z2, cyclic_tuple(z2, {0, 1})).general()).pass);

    // circ fixes e_12 on UT_2: degree kept (1), inversion would need 3
    const auto ut = build_elementary(z4, cyclic_tuple(z4, {0, 1}), true);
    const Involution circ = UTInvolution::circ(2);
    CHECK(is_graded_involution(circ, ut.general()).pass);
    const DegreeVerdict v = is_degree_inverting(circ, ut.general());
    CHECK_FALSE(v.pass);
    CHECK(v.degree == z4.element({1}));
    CHECK(v.expected == z4.element({3}));
    CHECK(v.image_degree == z4.element({1}));
}

TEST_CASE("transpose inverts every elementary grading with n <= 4") {
    for (const FinAbGroup& g : {FinAbGroup({2}), FinAbGroup({3}), FinAbGroup({4})}) {
        const auto els = g.elements();
        for (size_t n = 1; n <= 4; ++n) {
            std::vector<size_t> idx(n, 0);
            while (true) {
                std::vector<GroupElement> tuple;
                for (size_t k : idx)
                    tuple.push_back(els[k]);
                CHECK(is_degree_inverting(FormInvolution::transpose(n), build_elementary(g, tuple).general()).pass);
                size_t p = 0;
                while (p < n && ++idx[p] == els.size())
                    idx[p++] = 0;
                if (p == n)
                    break;
            }
        }
    }
}

TEST_CASE("skew form on Z_4 tuples") {
    const FinAbGroup z4({4});
    const Involution sk = FormInvolution(canonical_phi(Symmetry::skew, 1, 0));
    const DegreeVerdict bad = is_degree_inverting(sk, build_elementary(z4, cyclic_tuple(z4, {0, 1})).general());
    CHECK_FALSE(bad.pass);
    CHECK(bad.basis_index.has_value());
    CHECK(is_degree_inverting(sk, build_elementary(z4, cyclic_tuple(z4, {0, 2})).general()).pass);
}

TEST_CASE("degree inversion agrees with the matrix-unit oracle") {
    const FinAbGroup z3({3}), z4({4});
    const std::vector<SquareMatrix> phis = {SquareMatrix::identity(3), canonical_phi(Symmetry::symmetric, 1, 1),
                                            SquareMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
    for (const FinAbGroup& g : {z3, z4})
        for (const auto& a : g.elements())
            for (const auto& b : g.elements())
                for (const auto& c : g.elements()) {
                    const auto e = build_elementary(g, {a, b, c});
                    for (const auto& phi : phis) {
                        const Involution inv = FormInvolution(phi);
                        const bool direct = is_degree_inverting(inv, e.general()).pass;
                        CHECK(direct == oracle_inverting(inv, e));
                        // inverting iff phi is homogeneous
                        CHECK(direct == degree_of(phi, e.general()).has_value());
                    }
                    const auto ut = build_elementary(g, {a, b, c}, true);
                    const Involution circ = UTInvolution::circ(3);
                    CHECK(is_degree_inverting(circ, ut.general()).pass == oracle_inverting(circ, ut));
                }
}

TEST_CASE("rescaling phi changes no verdict") {
    const FinAbGroup z4({4});
    const SquareMatrix phi = canonical_phi(Symmetry::skew, 1, 0);
    for (const auto& a : z4.elements())
        for (const auto& b : z4.elements()) {
            const auto e = build_elementary(z4, {a, b});
            const Involution p = FormInvolution(phi);
            const Involution q = FormInvolution(zeta(3) * phi);
            CHECK(is_degree_inverting(p, e.general()).pass == is_degree_inverting(q, e.general()).pass);
            CHECK(is_graded_involution(p, e.general()).pass == is_graded_involution(q, e.general()).pass);
            CHECK(is_involution(zeta(3) * phi).symmetry == Symmetry::skew);
        }
}

TEST_CASE("size and kind mismatches") {
    const FinAbGroup z2({2});
    const auto e = build_elementary(z2, cyclic_tuple(z2, {0, 1}));
    CHECK_THROWS_AS(is_degree_inverting(FormInvolution::transpose(3), e.general()), DimensionMismatch);
    CHECK_THROWS_AS(is_degree_inverting(UTInvolution::circ(2), e.general()), DimensionMismatch);
}

TEST_CASE("ut_conjugated") {
    CHECK(ut_conjugated(SquareMatrix::identity(3).as_upper_triangular()).kind() == UTKind::circ);
    CHECK(ut_conjugated((CycloScalar(2) * SquareMatrix::identity(2)).as_upper_triangular()).kind() == UTKind::circ);
    CHECK(ut_conjugated(j_matrix(4).as_upper_triangular()).kind() == UTKind::s);
    CHECK_THROWS_AS(ut_conjugated(SquareMatrix::diagonal({1, 2}).as_upper_triangular()), NotAnInvolution);
    const SquareMatrix b = SquareMatrix{{1, 2}, {0, 1}}.as_upper_triangular();
    const UTInvolution c = ut_conjugated(b);
    CHECK(c.kind() == UTKind::conjugated);
    std::mt19937 rng(25);
    const SquareMatrix x = random_matrix(rng, 2, true);
    CHECK(c.apply(x) == b.inverse() * oracle_circ(x) * b);
    CHECK(c.apply(c.apply(x)) == x);
    CHECK_THROWS_AS(UTInvolution::conjugated(SquareMatrix{{1, 0}, {1, 1}}), InvariantViolation);
}

TEST_CASE("Skolem-Noether examples") {
    const FinAbGroup z2({2});
    const auto e = build_elementary(z2, cyclic_tuple(z2, {0, 1}));
    const auto d = skolem_noether_solve(conjugation_map(SquareMatrix::diagonal({1, -1})), &e.general());
    CHECK(proportional(d.p, SquareMatrix::diagonal({1, -1})));
    CHECK(d.solution_dimension == 1);
    CHECK(d.degree == z2.identity());
    const auto x = skolem_noether_solve(conjugation_map(SquareMatrix{{0, 1}, {1, 0}}), &e.general());
    CHECK(x.p == SquareMatrix{{0, 1}, {1, 0}});
    CHECK(x.degree == z2.element({1}));
    const auto id = skolem_noether_solve(conjugation_map(SquareMatrix::identity(3)));
    CHECK(id.p == SquareMatrix::identity(3));
    CHECK_FALSE(id.degree.has_value());
}

TEST_CASE("Skolem-Noether recovers random homogeneous P") {
    std::mt19937 rng(26);
    const FinAbGroup z3({3});
    const auto e = build_elementary(z3, cyclic_tuple(z3, {0, 1, 1, 2}));
    for (int t = 0; t < 8; ++t) {
        // homogeneous of degree h: a combination of units e_ij with g_j - g_i = h
        const GroupElement h = z3.element({static_cast<int>(rng() % 3)});
        SquareMatrix p(4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                if (e.degree(i, j) == h)
                    p.set(i, j, 1 + static_cast<int>(rng() % 3));
        if (p.determinant().is_zero())
            continue;
        const auto r = skolem_noether_solve(conjugation_map(p), &e.general());
        CHECK(r.solution_dimension == 1);
        CHECK(proportional(r.p, p));
        CHECK(r.p.leading_entry().is_one());
        CHECK(r.degree == h);
    }
}

TEST_CASE("Skolem-Noether rejects non-automorphisms") {
    LinearMap t{2, {}};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            t.images.push_back(SquareMatrix::unit(2, j, i));
    CHECK_FALSE(is_automorphism(t).pass);
    CHECK_THROWS_AS(skolem_noether_solve(t), NotAnAutomorphism);
    CHECK(is_automorphism(conjugation_map(SquareMatrix{{1, 1}, {0, 1}})).pass);
}

TEST_CASE("CC* examples") {
    const auto r = cc_star_decompose(SquareMatrix{{1, 3}, {0, 1}}.as_upper_triangular(), UTKind::circ);
    CHECK(r.c == SquareMatrix{{1, CycloScalar(Rational(3, 2))}, {0, 1}});
    CHECK(r.scale == CycloScalar(1));
    CHECK(r.c * secondary_transpose(r.c) == SquareMatrix{{1, 3}, {0, 1}});
    for (size_t n = 1; n <= 4; ++n)
        CHECK(cc_star_decompose(SquareMatrix::identity(n).as_upper_triangular(), UTKind::circ).c ==
              SquareMatrix::identity(n));
    const SquareMatrix d3 = SquareMatrix{{1, 1, 2}, {0, 1, 1}, {0, 0, 1}}.as_upper_triangular();
    REQUIRE(secondary_transpose(d3) == d3);
    const auto r3 = cc_star_decompose(d3, UTKind::circ);
    CHECK(r3.scale * (r3.c * secondary_transpose(r3.c)) == d3);
}

TEST_CASE("CC* on random symmetric D") {
    std::mt19937 rng(27);
    for (size_t n = 2; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) {
            const SquareMatrix c = random_invertible_ut(rng, n);
            const SquareMatrix d = (c * secondary_transpose(c)).as_upper_triangular();
            const auto r = cc_star_decompose(d, UTKind::circ);
            CHECK(r.scale * (r.c * secondary_transpose(r.c)) == d);
            CHECK(r.c.is_upper_triangular());
            if (n % 2 == 0) {
                const UTInvolution s = UTInvolution::s(n);
                const SquareMatrix ds = (c * s.apply(c.as_upper_triangular())).as_upper_triangular();
                const auto rs = cc_star_decompose(ds, UTKind::s);
                CHECK(rs.scale * (rs.c * s.apply(rs.c.as_upper_triangular())) == ds);
            }
        }
}

TEST_CASE("CC* rejects invalid input") {
    CHECK_THROWS_AS(cc_star_decompose(SquareMatrix{{1, 1}, {0, 2}}.as_upper_triangular(), UTKind::circ),
                    InvariantViolation);
    CHECK_THROWS_AS(cc_star_decompose(SquareMatrix{{1, 0}, {1, 1}}, UTKind::circ), InvariantViolation);
    CHECK_THROWS_AS(cc_star_decompose(SquareMatrix{{0, 1}, {0, 0}}.as_upper_triangular(), UTKind::circ),
                    SingularMatrix);
    CHECK_THROWS_AS(cc_star_decompose(SquareMatrix::identity(3).as_upper_triangular(), UTKind::s), InvalidArgument);
}

} // TEST_SUITE
