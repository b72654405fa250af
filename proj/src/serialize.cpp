#include "gi/serialize.hpp"

#include "gi/errors.hpp"

namespace gi::io {
namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object())
        throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(where + ": missing field \"" + key + "\"");
    return *it;
}

std::string kind_of(const json& j, const std::string& where) {
    const json& k = field(j, "kind", where);
    if (!k.is_string())
        throw ParseError(where + ": \"kind\" must be a string");
    return k.get<std::string>();
}

size_t size_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer() || v.get<long>() < 0)
        throw ParseError(where + ": \"" + key + "\" must be a non-negative integer");
    return v.get<size_t>();
}

std::vector<int> int_array(const json& j, const std::string& where) {
    if (!j.is_array())
        throw ParseError(where + ": expected an integer array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError(where + ": expected an integer array");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<std::vector<CycloScalar>> rows_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix: expected a nonempty array of rows");
    std::vector<std::vector<CycloScalar>> rows;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != j.size())
            throw ParseError("matrix: rows must be arrays of length " + std::to_string(j.size()));
        std::vector<CycloScalar> row;
        for (const auto& v : r)
            row.push_back(scalar_from_json(v));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

json to_json(const CycloScalar& x) {
    return x.to_string();
}

CycloScalar scalar_from_json(const json& j) {
    if (j.is_number_integer())
        return CycloScalar(j.get<long>());
    if (j.is_string()) {
        try {
            return CycloScalar::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError("scalar \"" + j.get<std::string>() + "\": " + e.what());
        }
    }
    throw ParseError("scalar: expected a string or an integer");
}

json to_json(const FinAbGroup& g) {
    return {{"orders", g.orders()}};
}

FinAbGroup group_from_json(const json& j) {
    std::vector<int> orders = int_array(field(j, "orders", "group"), "group.orders");
    try {
        return FinAbGroup(std::move(orders));
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("group: ") + e.what());
    }
}

json to_json(const GroupElement& g) {
    return g.residues();
}

GroupElement element_from_json(const json& j, const FinAbGroup& group) {
    if (j.is_number_integer()) {
        if (group.rank() != 1)
            throw ParseError("element: a bare integer needs a cyclic group");
        return group.element({j.get<int>()});
    }
    std::vector<int> r = int_array(j, "element");
    if (r.size() != group.rank())
        throw ParseError("element: " + std::to_string(r.size()) + " components for a group of rank " +
                         std::to_string(group.rank()));
    return group.element(r);
}

json to_json(const Character& c) {
    return c.exponents();
}

Character character_from_json(const json& j, const FinAbGroup& group) {
    std::vector<int> e = j.is_number_integer() ? std::vector<int>{j.get<int>()} : int_array(j, "character");
    if (e.size() != group.rank())
        throw ParseError("character: exponent count does not match the group");
    return Character(group, std::move(e));
}

std::vector<GroupElement> tuple_from_json(const json& j, const FinAbGroup& group) {
    if (!j.is_array() || j.empty())
        throw ParseError("tuple: expected a nonempty array of group elements");
    std::vector<GroupElement> out;
    for (const auto& v : j)
        out.push_back(element_from_json(v, group));
    return out;
}

json to_json(const SquareMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.size(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    if (m.upper_triangular())
        return {{"upper_triangular", true}, {"rows", rows}};
    return rows;
}

SquareMatrix matrix_from_json(const json& j) {
    if (j.is_object()) {
        SquareMatrix m = SquareMatrix::from_rows(rows_from_json(field(j, "rows", "matrix")));
        auto it = j.find("upper_triangular");
        if (it != j.end() && it->is_boolean() && it->get<bool>()) {
            if (!m.is_upper_triangular())
                throw InvariantViolation("matrix flagged upper_triangular has nonzero entries below the diagonal");
            return m.as_upper_triangular();
        }
        return m;
    }
    return SquareMatrix::from_rows(rows_from_json(j));
}

json to_json(const ElementaryGrading& g) {
    json tuple = json::array();
    for (const auto& x : g.tuple())
        tuple.push_back(to_json(x));
    return {{"schema", kSchema},
            {"kind", "elementary"},
            {"group", to_json(g.group())},
            {"tuple", tuple},
            {"triangular", g.triangular_only()}};
}

json to_json(const EpsilonGrading& g) {
    return {{"schema", kSchema}, {"kind", "epsilon"}, {"n", g.n()}};
}

json to_json(const GeneralGrading& g) {
    json components = json::array();
    for (const auto& [degree, basis] : g.components()) {
        json b = json::array();
        for (const auto& m : basis)
            b.push_back(to_json(m.as_full()));
        components.push_back({{"degree", to_json(degree)}, {"basis", b}});
    }
    return {{"schema", kSchema}, {"kind", "general"},     {"group", to_json(g.group())},
            {"n", g.n()},        {"triangular", g.triangular()}, {"components", components}};
}

namespace {

ElementaryGrading elementary_from_json(const json& j) {
    const FinAbGroup group = group_from_json(field(j, "group", "elementary grading"));
    auto tuple = tuple_from_json(field(j, "tuple", "elementary grading"), group);
    bool triangular = false;
    if (auto it = j.find("triangular"); it != j.end()) {
        if (!it->is_boolean())
            throw ParseError("elementary grading: \"triangular\" must be a boolean");
        triangular = it->get<bool>();
    }
    return ElementaryGrading(group, std::move(tuple), triangular);
}

EpsilonGrading epsilon_from_json(const json& j) {
    const size_t n = size_field(j, "n", "epsilon grading");
    if (n < 2)
        throw ParseError("epsilon grading: n must be >= 2");
    return build_epsilon(n);
}

GeneralGrading fine_from_json(const json& j) {
    if (j.is_array()) {
        if (j.empty())
            throw ParseError("induced grading: \"fine\" list is empty");
        std::vector<EpsilonGrading> factors;
        for (const auto& f : j)
            factors.push_back(epsilon_from_json(f));
        return tensor_product(factors);
    }
    const std::string kind = kind_of(j, "fine grading");
    if (kind == "epsilon")
        return epsilon_from_json(j).general();
    return grading_from_json(j).grading;
}

} // namespace

ParsedGrading grading_from_json(const json& j) {
    const std::string kind = kind_of(j, "grading");
    if (kind == "elementary") {
        ElementaryGrading e = elementary_from_json(j);
        return {kind, e.general(), e};
    }
    if (kind == "epsilon")
        return {kind, epsilon_from_json(j).general(), std::nullopt};
    if (kind == "induced") {
        GeneralGrading fine = fine_from_json(field(j, "fine", "induced grading"));
        ElementaryGrading e = elementary_from_json(field(j, "elementary", "induced grading"));
        return {kind, build_induced_tensor(fine, e), std::nullopt};
    }
    if (kind == "general") {
        const FinAbGroup group = group_from_json(field(j, "group", "general grading"));
        const size_t n = size_field(j, "n", "general grading");
        bool triangular = false;
        if (auto it = j.find("triangular"); it != j.end() && it->is_boolean())
            triangular = it->get<bool>();
        const json& comps = field(j, "components", "general grading");
        if (!comps.is_array())
            throw ParseError("general grading: \"components\" must be an array");
        GeneralGrading::Components components;
        for (const auto& c : comps) {
            GroupElement g = element_from_json(field(c, "degree", "component"), group);
            const json& basis = field(c, "basis", "component");
            if (!basis.is_array())
                throw ParseError("component: \"basis\" must be an array of matrices");
            for (const auto& m : basis)
                components[g].push_back(matrix_from_json(m));
        }
        return {kind, GeneralGrading(group, n, triangular, components), std::nullopt};
    }
    throw ParseError("grading: unknown kind \"" + kind + "\"");
}

json to_json(const Involution& inv) {
    if (const auto* f = std::get_if<FormInvolution>(&inv))
        return {{"schema", kSchema}, {"kind", "form"}, {"phi", to_json(f->phi())}, {"symmetry", to_string(f->symmetry())}};
    const auto& u = std::get<UTInvolution>(inv);
    json j = {{"schema", kSchema}, {"kind", to_string(u.kind())}, {"n", u.n()}};
    if (u.b())
        j["B"] = to_json(u.b()->as_full());
    return j;
}

Involution involution_from_json(const json& j, std::optional<size_t> n) {
    const std::string kind = kind_of(j, "involution");
    if (kind == "form")
        return FormInvolution(matrix_from_json(field(j, "phi", "form involution")));
    if (kind == "conjugated")
        return ut_conjugated(matrix_from_json(field(j, "B", "conjugated involution")));
    if (kind == "circ" || kind == "s") {
        size_t size = 0;
        if (j.contains("n"))
            size = size_field(j, "n", "involution");
        else if (n)
            size = *n;
        else
            throw ParseError("involution: \"" + kind + "\" needs a size \"n\"");
        return kind == "circ" ? UTInvolution::circ(size) : UTInvolution::s(size);
    }
    throw ParseError("involution: unknown kind \"" + kind + "\"");
}

json to_json(const LinearMap& f) {
    json images = json::array();
    for (const auto& m : f.images)
        images.push_back(to_json(m));
    return {{"schema", kSchema}, {"kind", "images"}, {"n", f.n}, {"images", images}};
}

LinearMap automorphism_from_json(const json& j) {
    const std::string kind = kind_of(j, "automorphism");
    if (kind == "conjugation")
        return conjugation_map(matrix_from_json(field(j, "P", "automorphism")));
    if (kind == "images") {
        const json& images = field(j, "images", "automorphism");
        if (!images.is_array() || images.empty())
            throw ParseError("automorphism: \"images\" must be a nonempty array");
        LinearMap f;
        for (const auto& m : images)
            f.images.push_back(matrix_from_json(m));
        const size_t n = f.images.front().size();
        if (f.images.size() != n * n)
            throw ParseError("automorphism: expected n^2 = " + std::to_string(n * n) + " images");
        f.n = n;
        return f;
    }
    throw ParseError("automorphism: unknown kind \"" + kind + "\"");
}

} // namespace gi::io
