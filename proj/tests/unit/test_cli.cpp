#include "cli.hpp"

#include "gi/errors.hpp"
#include "gi/serialize.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace gi;
using gi::io::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(GI_FIXTURES) + "/" + name; }

json run_json(std::vector<std::string> args, int expected) {
    args.push_back("--format");
    args.push_back("json");
    const Run r = run(args);
    CHECK_MESSAGE(r.code == expected, r.err);
    return json::parse(r.out);
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("group and tuple specs") {
    CHECK(cli::parse_group_spec("Z2xZ2") == FinAbGroup({2, 2}));
    CHECK(cli::parse_group_spec("2x3") == FinAbGroup({2, 3}));
    CHECK(cli::parse_group_spec("Z4") == FinAbGroup({4}));
    CHECK(cli::parse_group_spec("[2,2]") == FinAbGroup({2, 2}));
    CHECK(cli::parse_group_spec(R"({"orders": [3]})") == FinAbGroup({3}));
    CHECK_THROWS_AS(cli::parse_group_spec("Zx"), std::exception);
    CHECK_THROWS_AS(cli::parse_group_spec("Z0"), std::exception);

    const FinAbGroup z3({3}), k({2, 2});
    CHECK(cli::parse_tuple_spec("0,1,2", z3) ==
          std::vector<GroupElement>{z3.element({0}), z3.element({1}), z3.element({2})});
    CHECK(cli::parse_tuple_spec("(1,0),(0,1)", k) == std::vector<GroupElement>{k.element({1, 0}), k.element({0, 1})});
    CHECK(cli::parse_tuple_spec("[[1,1],[0,0]]", k) == std::vector<GroupElement>{k.element({1, 1}), k.element({0, 0})});
    CHECK_THROWS_AS(cli::parse_tuple_spec("0,a", z3), std::exception);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kExitInput);
    CHECK(run({"--help"}).code == cli::kExitPass);
    CHECK(run({"frobnicate"}).code == cli::kExitInput);
    CHECK(run({"check-involution", fx("elementary_z3.json")}).code == cli::kExitInput);
    CHECK(run({"--format", "xml", "check-grading", fx("elementary_z3.json")}).code == cli::kExitInput);
    CHECK(run({"check-grading", "/nonexistent/grading.json"}).code == cli::kExitInput);
}

TEST_CASE("check-grading") {
    CHECK(run({"check-grading", fx("elementary_z3.json")}).code == cli::kExitPass);
    CHECK(run({"check-grading", fx("ut_elementary_z4.json")}).code == cli::kExitPass);
    CHECK(run({"check-grading", fx("induced_klein_z2.json")}).code == cli::kExitPass);
    CHECK(run({"check-grading", "--group", "Z2xZ2", "--tuple", "(0,0),(1,1)"}).code == cli::kExitPass);
    CHECK(run({"check-grading", "--group", "Z3", "--tuple", "0,1", "--triangular"}).code == cli::kExitPass);

    const json ok = run_json({"check-grading", fx("epsilon2.json"), "--fine"}, cli::kExitPass);
    CHECK(ok.at("schema") == io::kSchema);
    CHECK(ok.at("command") == "check-grading");
    CHECK(ok.at("verdict") == "pass");
    CHECK(ok.at("n") == 2);
    CHECK(ok.at("fine_support").at("pass") == true);

    const json bad = run_json({"check-grading", fx("epsilon2_swapped.json")}, cli::kExitFail);
    CHECK(bad.at("verdict") == "fail");
    CHECK(bad.contains("violating_pair"));
    CHECK(bad.contains("first"));
    CHECK_FALSE(bad.at("reason").get<std::string>().empty());
}

TEST_CASE("malformed descriptors exit with an input error") {
    const Run t = run({"check-grading", fx("truncated.json")});
    CHECK(t.code == cli::kExitInput);
    CHECK(t.err.find("malformed JSON at byte") != std::string::npos);
    CHECK(run({"check-grading", fx("corrupted.json")}).code == cli::kExitInput);
    CHECK(run({"check-grading", "--group", "Z3"}).code == cli::kExitInput);
}

TEST_CASE("check-involution") {
    CHECK(run({"check-involution", fx("elementary_z3.json"), fx("transpose3.json"), "--mode", "invert"}).code ==
          cli::kExitPass);
    CHECK(run({"check-involution", fx("elementary_z3.json"), fx("transpose3.json"), "--mode", "preserve"}).code ==
          cli::kExitFail);
    CHECK(run({"check-involution", fx("epsilon2.json"), fx("not_involution_phi.json")}).code == cli::kExitInput);
    CHECK(run({"check-involution", fx("epsilon2.json"), fx("singular_phi.json")}).code == cli::kExitInput);
    // size mismatch: transpose on M_3 against a grading of M_2
    CHECK(run({"check-involution", fx("epsilon2.json"), fx("transpose3.json")}).code == cli::kExitInput);
    // circ against a grading of full M_n
    CHECK(run({"check-involution", fx("elementary_z3.json"), fx("circ.json")}).code == cli::kExitInput);

    const json f = run_json({"check-involution", fx("ut_elementary_z4.json"), fx("circ.json")}, cli::kExitFail);
    CHECK(f.at("verdict") == "fail");
    CHECK(f.at("mode") == "invert");
    CHECK(f.contains("basis_index"));
    CHECK(f.contains("expected_degree"));
    CHECK(f.contains("image_degree"));

    const json s = run_json({"check-involution", fx("epsilon2.json"), fx("skew_phi2.json")}, cli::kExitPass);
    CHECK(s.at("symmetry") == "skew");
}

TEST_CASE("decompose") {
    const json c = run_json({"decompose", fx("xa_plus_xb.json"), fx("epsilon2.json")}, cli::kExitPass);
    REQUIRE(c.at("components").size() == 2);
    // the components sum back to the input
    SquareMatrix sum(2);
    for (const auto& part : c.at("components"))
        sum = sum + io::matrix_from_json(part.at("matrix"));
    CHECK(sum == SquareMatrix{{-1, 1}, {1, 1}});

    const json d = run_json({"decompose", fx("cc_d.json"), "--star", "circ"}, cli::kExitPass);
    const SquareMatrix cm = io::matrix_from_json(d.at("C"));
    CHECK(cm == SquareMatrix{{1, CycloScalar(Rational(3, 2))}, {0, 1}}.as_upper_triangular());
    CHECK(run({"decompose", fx("xa_plus_xb.json")}).code == cli::kExitInput);
    CHECK(run({"decompose", fx("xa_plus_xb.json"), fx("elementary_z3.json")}).code == cli::kExitInput);
}

TEST_CASE("skolem-noether") {
    const json j = run_json({"skolem-noether", fx("cyclic_shift_conjugation.json"), fx("elementary_z3.json")},
                            cli::kExitPass);
    CHECK(j.at("solution_dimension") == 1);
    CHECK(j.contains("degree"));
    const SquareMatrix p = io::matrix_from_json(j.at("P"));
    const SquareMatrix shift{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK(proportional(p, shift));
    const json t = run_json({"skolem-noether", fx("transpose_map2.json")}, cli::kExitFail);
    CHECK(t.at("verdict") == "fail");
}

TEST_CASE("enumerate-forms") {
    const json two = run_json({"enumerate-forms", "--n", "2", "--symbolic"}, cli::kExitPass);
    CHECK(two.at("candidates").size() == 4);
    CHECK(two.at("accepted").size() == 4);
    CHECK(two.at("symbolic").size() == 4);
    const json three = run_json({"enumerate-forms", "--n", "3"}, cli::kExitPass);
    CHECK(three.at("candidates").size() == 9);
    CHECK(three.at("accepted").empty());
    CHECK(run({"enumerate-forms", "--n", "5"}).code == cli::kExitInput);
    CHECK(run({"enumerate-forms", "--n", "0"}).code == cli::kExitInput);
}

TEST_CASE("verify-paper on the trivial group") {
    const std::vector<std::string> args = {"verify-paper", "--group", "Z1", "--workers", "1"};
    json a = run_json(args, cli::kExitPass);
    json b = run_json(args, cli::kExitPass);
    CHECK(a.at("verdict") == "pass");
    CHECK_FALSE(a.at("reports").empty());
    for (const auto& r : a.at("reports"))
        CHECK(r.contains("key"));
    a.erase("timestamp");
    b.erase("timestamp");
    CHECK(a == b);
}

TEST_CASE("verify-paper bounds") {
    CHECK(run({"verify-paper", "--bounds", "max_n=9"}).code == cli::kExitInput);
    CHECK(run({"verify-paper", "--bounds", "foo=1"}).code == cli::kExitInput);
    CHECK(run({"verify-paper", "--bounds", "max_n=-1"}).code == cli::kExitInput);
    CHECK(run({"verify-paper", "--bounds", "max_n"}).code == cli::kExitInput);
    CHECK(run({"verify-paper", "--bounds", "ut_min_n=4,ut_max_n=3"}).code == cli::kExitInput);
    const json j = run_json({"verify-paper", "--group", "Z1", "--bounds", "max_n=2,seed=7"}, cli::kExitPass);
    CHECK(j.at("bounds").at("max_n") == 2);
    CHECK(j.at("bounds").at("seed") == 7);
}

TEST_CASE("GI_MAX_ORDER caps the enumeration groups") {
    CHECK(run({"verify-paper", "--group", "Z9"}).code == cli::kExitInput);
    setenv("GI_MAX_ORDER", "1", 1);
    CHECK(run({"verify-paper", "--group", "Z2"}).code == cli::kExitInput);
    CHECK(run({"verify-paper", "--group", "Z1"}).code == cli::kExitPass);
    setenv("GI_MAX_ORDER", "zero", 1);
    CHECK(run({"verify-paper", "--group", "Z1"}).code == cli::kExitInput);
    unsetenv("GI_MAX_ORDER");
}

} // TEST_SUITE
