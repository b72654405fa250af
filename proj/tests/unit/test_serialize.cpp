#include "gi/errors.hpp"
#include "gi/serialize.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace gi;
using io::json;

namespace {

json fixture(const std::string& name) {
    std::ifstream in(std::string(GI_FIXTURES) + "/" + name);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return json::parse(ss.str());
}

std::vector<GroupElement> cyclic_tuple(const FinAbGroup& g, std::vector<int> residues) {
    std::vector<GroupElement> out;
    for (int r : residues)
        out.push_back(g.element({r}));
    return out;
}

// grading equality: same group, same labelled basis
bool same_grading(const GeneralGrading& a, const GeneralGrading& b) {
    if (!(a.group() == b.group()) || a.n() != b.n() || a.triangular() != b.triangular() ||
        a.basis_size() != b.basis_size())
        return false;
    for (size_t k = 0; k < a.basis_size(); ++k)
        if (!(a.basis(k) == b.basis(k)) || a.basis_degree(k) != b.basis_degree(k))
            return false;
    return true;
}

} // namespace

TEST_SUITE("serialize") {

TEST_CASE("scalar round trip") {
    std::mt19937 rng(31);
    for (int n : {1, 2, 3, 4, 5, 12}) {
        std::vector<Rational> c(static_cast<size_t>(n));
        for (auto& v : c)
            v = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
        const CycloScalar x = CycloScalar::from_polynomial(n, c);
        CHECK(io::scalar_from_json(io::to_json(x)) == x);
        CHECK(io::scalar_from_json(json::parse(io::to_json(x).dump())) == x);
    }
    CHECK(io::scalar_from_json(json(7)) == CycloScalar(7));
    CHECK(io::scalar_from_json(json("1/2")) == CycloScalar(Rational(1, 2)));
    CHECK_THROWS_AS(io::scalar_from_json(json(1.5)), ParseError);
    CHECK_THROWS_AS(io::scalar_from_json(json::array()), ParseError);
}

TEST_CASE("group, element and character round trips") {
    for (const FinAbGroup& g : {FinAbGroup({1}), FinAbGroup({4}), FinAbGroup({2, 2}), FinAbGroup({2, 3, 4})}) {
        CHECK(io::group_from_json(io::to_json(g)) == g);
        for (const auto& e : g.elements())
            CHECK(io::element_from_json(io::to_json(e), g) == e);
        for (const auto& c : dual_characters(g))
            CHECK(io::character_from_json(io::to_json(c), g) == c);
    }
    const FinAbGroup z4({4});
    CHECK(io::element_from_json(json(3), z4) == z4.element({3}));
    CHECK_THROWS_AS(io::element_from_json(json(1), FinAbGroup({2, 2})), ParseError);
    CHECK_THROWS_AS(io::element_from_json(json::array({1, 2}), z4), ParseError);
    CHECK_THROWS_AS(io::group_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(io::group_from_json(json{{"orders", json::array({0})}}), ParseError);
    const auto tuple = io::tuple_from_json(json::parse("[0, [1], 2]"), FinAbGroup({3}));
    CHECK(tuple == cyclic_tuple(FinAbGroup({3}), {0, 1, 2}));
}

TEST_CASE("matrix round trip") {
    const SquareMatrix m{{1, zeta(3)}, {CycloScalar(Rational(-2, 3)), 0}};
    CHECK(io::matrix_from_json(io::to_json(m)) == m);
    const SquareMatrix u = SquareMatrix{{1, 2}, {0, 3}}.as_upper_triangular();
    const json ju = io::to_json(u);
    CHECK(ju.at("upper_triangular") == true);
    const SquareMatrix back = io::matrix_from_json(ju);
    CHECK(back == u);
    CHECK(back.upper_triangular());
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1, 2], [3]]")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[]")), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse(R"({"upper_triangular": true, "rows": [[1, 2], [1, 1]]})")),
                    Error);
}

TEST_CASE("grading round trips") {
    const FinAbGroup z3({3});
    const auto e = build_elementary(z3, cyclic_tuple(z3, {0, 2, 1}), true);
    const io::ParsedGrading pe = io::grading_from_json(io::to_json(e));
    CHECK(pe.kind == "elementary");
    REQUIRE(pe.elementary.has_value());
    CHECK(pe.elementary->tuple() == e.tuple());
    CHECK(same_grading(pe.grading, e.general()));

    const auto eps = build_epsilon(3);
    const io::ParsedGrading pp = io::grading_from_json(io::to_json(eps));
    CHECK(pp.kind == "epsilon");
    CHECK(same_grading(pp.grading, eps.general()));

    // explicit components of any grading parse back to the same grading
    const GeneralGrading ind = build_induced_tensor(build_epsilon(2), build_elementary(FinAbGroup({2}), cyclic_tuple(FinAbGroup({2}), {0, 1})));
    const io::ParsedGrading pg = io::grading_from_json(io::to_json(ind));
    CHECK(pg.kind == "general");
    CHECK(pg.grading.components() == ind.components());
    CHECK(verify_grading(pg.grading).pass);
}

TEST_CASE("grading fixtures") {
    CHECK(io::grading_from_json(fixture("elementary_z3.json")).elementary->tuple() ==
          cyclic_tuple(FinAbGroup({3}), {0, 1, 2}));
    const auto explicit2 = io::grading_from_json(fixture("epsilon2_explicit.json"));
    CHECK(explicit2.grading.components() == build_epsilon(2).general().components());
    const auto induced = io::grading_from_json(fixture("induced_klein_z2.json"));
    CHECK(induced.grading.n() == 4);
    CHECK(verify_grading(induced.grading).pass);
    CHECK_FALSE(verify_grading(io::grading_from_json(fixture("epsilon2_swapped.json")).grading).pass);
}

TEST_CASE("malformed grading descriptors") {
    CHECK_THROWS_AS(io::grading_from_json(json::parse(R"({"kind": "elementary", "tuple": [0]})")), ParseError);
    CHECK_THROWS_AS(io::grading_from_json(json::parse(R"({"kind": "bogus"})")), ParseError);
    CHECK_THROWS_AS(io::grading_from_json(json::parse(R"({"kind": "epsilon", "n": "two"})")), ParseError);
    CHECK_THROWS_AS(io::grading_from_json(json::parse(R"([1, 2])")), ParseError);
    CHECK_THROWS_AS(io::grading_from_json(json::parse(R"({"kind": "elementary", "group": {"orders": [2]}, "tuple": [0, 5, [1, 1]]})")),
                    Error);
    try {
        io::grading_from_json(json::parse(R"({"kind": "elementary", "group": {"orders": [2]}})"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("tuple") != std::string::npos);
    }
}

TEST_CASE("involution round trips") {
    const std::vector<Involution> invs = {
        FormInvolution::transpose(3), FormInvolution(canonical_phi(Symmetry::skew, 1, 0)), UTInvolution::circ(3),
        UTInvolution::s(4), UTInvolution::conjugated(SquareMatrix{{1, 2}, {0, 1}}.as_upper_triangular())};
    for (const auto& inv : invs) {
        const Involution back = io::involution_from_json(io::to_json(inv));
        REQUIRE(back.index() == inv.index());
        CHECK(involution_size(back) == involution_size(inv));
        const size_t n = involution_size(inv);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = acts_on_triangular(inv) ? i : 0; j < n; ++j) {
                SquareMatrix x = SquareMatrix::unit(n, i, j);
                if (acts_on_triangular(inv))
                    x = x.as_upper_triangular();
                CHECK(gi::apply(back, x) == gi::apply(inv, x));
            }
    }
    const Involution c = io::involution_from_json(json::parse(R"({"kind": "circ"})"), 3);
    CHECK(involution_size(c) == 3);
    CHECK_THROWS_AS(io::involution_from_json(json::parse(R"({"kind": "circ"})")), ParseError);
    CHECK_THROWS_AS(io::involution_from_json(json::parse(R"({"kind": "form", "phi": [[1, 1], [0, 1]]})")),
                    NotAnInvolution);
    CHECK_THROWS_AS(io::involution_from_json(json::parse(R"({"kind": "form", "phi": [[1, 1], [1, 1]]})")),
                    SingularMatrix);
    CHECK_THROWS_AS(io::involution_from_json(json::parse(R"({"kind": "form"})")), ParseError);
}

TEST_CASE("automorphism descriptors") {
    const SquareMatrix p{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    const LinearMap f = conjugation_map(p);
    const LinearMap back = io::automorphism_from_json(io::to_json(f));
    CHECK(back.n == 3);
    CHECK(back.images == f.images);
    const LinearMap fx = io::automorphism_from_json(fixture("cyclic_shift_conjugation.json"));
    CHECK(fx.images == f.images);
    CHECK_THROWS_AS(io::automorphism_from_json(json::parse(R"({"kind": "images", "images": [[[1]], [[0]]]})")),
                    Error);
    CHECK_THROWS_AS(io::automorphism_from_json(json::parse(R"({"kind": "conjugation"})")), ParseError);
}

TEST_CASE("documents carry the schema tag") {
    CHECK(io::to_json(build_epsilon(2)).at("schema") == io::kSchema);
    CHECK(io::to_json(Involution(FormInvolution::transpose(2))).at("schema") == io::kSchema);
}

} // TEST_SUITE
