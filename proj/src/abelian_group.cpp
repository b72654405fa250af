#include "gi/abelian_group.hpp"

#include "gi/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gi {
namespace {

int reduce_mod(long value, int n) {
    long r = value % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void require_same(const std::vector<int>& a, const std::vector<int>& b) {
    if (a != b)
        throw GroupMismatch("elements belong to different groups");
}

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

} // namespace

GroupElement::GroupElement(std::vector<int> orders, std::vector<int> residues)
    : orders_(std::move(orders)), residues_(std::move(residues)) {}

bool GroupElement::is_identity() const {
    return std::all_of(residues_.begin(), residues_.end(), [](int r) { return r == 0; });
}

std::string GroupElement::to_string() const {
    return join(residues_);
}

FinAbGroup::FinAbGroup() : orders_{1} {}

FinAbGroup::FinAbGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty())
        throw InvalidArgument("a group needs at least one cyclic factor");
    for (int n : orders_) {
        if (n < 1)
            throw InvalidArgument("cyclic factor orders must be >= 1");
    }
}

long FinAbGroup::order() const {
    long o = 1;
    for (int n : orders_)
        o *= n;
    return o;
}

int FinAbGroup::exponent() const {
    int e = 1;
    for (int n : orders_)
        e = std::lcm(e, n);
    return e;
}

GroupElement FinAbGroup::identity() const {
    return GroupElement(orders_, std::vector<int>(orders_.size(), 0));
}

GroupElement FinAbGroup::element(const std::vector<int>& residues) const {
    if (residues.size() != orders_.size())
        throw GroupMismatch("element has " + std::to_string(residues.size()) +
                            " components, group has " + std::to_string(orders_.size()));
    std::vector<int> r(residues.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = reduce_mod(residues[i], orders_[i]);
    return GroupElement(orders_, std::move(r));
}

std::vector<GroupElement> FinAbGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(order()));
    std::vector<int> r(orders_.size(), 0);
    while (true) {
        out.push_back(GroupElement(orders_, r));
        size_t i = r.size();
        while (i > 0) {
            --i;
            if (++r[i] < orders_[i])
                break;
            r[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

std::string FinAbGroup::to_string() const {
    std::string s;
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (i)
            s += "x";
        s += "Z" + std::to_string(orders_[i]);
    }
    return s;
}

FinAbGroup direct_product(const FinAbGroup& a, const FinAbGroup& b) {
    std::vector<int> o = a.orders();
    o.insert(o.end(), b.orders().begin(), b.orders().end());
    return FinAbGroup(std::move(o));
}

GroupElement pair_element(const GroupElement& g, const GroupElement& h) {
    std::vector<int> o = g.orders();
    o.insert(o.end(), h.orders().begin(), h.orders().end());
    std::vector<int> r = g.residues();
    r.insert(r.end(), h.residues().begin(), h.residues().end());
    return FinAbGroup(std::move(o)).element(r);
}

GroupElement op(const GroupElement& a, const GroupElement& b) {
    require_same(a.orders(), b.orders());
    std::vector<int> r(a.residues().size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (a.residues()[i] + b.residues()[i]) % a.orders()[i];
    return GroupElement(a.orders(), std::move(r));
}

GroupElement inverse(const GroupElement& a) {
    return power(a, -1);
}

GroupElement power(const GroupElement& a, long k) {
    std::vector<int> r(a.residues().size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = reduce_mod(k * a.residues()[i], a.orders()[i]);
    return GroupElement(a.orders(), std::move(r));
}

Character::Character(const FinAbGroup& group, std::vector<int> exponents)
    : orders_(group.orders()), exponents_(std::move(exponents)) {
    if (exponents_.size() != orders_.size())
        throw GroupMismatch("character exponent count does not match the group");
    for (size_t i = 0; i < orders_.size(); ++i)
        exponents_[i] = reduce_mod(exponents_[i], orders_[i]);
}

bool Character::is_trivial() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

std::vector<Character> dual_characters(const FinAbGroup& group) {
    // G^ is isomorphic to G: the exponent tuples range over G itself
    std::vector<Character> out;
    for (const GroupElement& g : group.elements())
        out.emplace_back(group, g.residues());
    return out;
}

CycloScalar eval(const Character& lambda, const GroupElement& g) {
    require_same(lambda.orders(), g.orders());
    const int e = FinAbGroup(g.orders()).exponent();
    long k = 0;
    for (size_t i = 0; i < g.orders().size(); ++i)
        k += static_cast<long>(lambda.exponents()[i]) * g.residues()[i] * (e / g.orders()[i]);
    return zeta(e).pow(k % e);
}

Character operator*(const Character& a, const Character& b) {
    require_same(a.orders(), b.orders());
    std::vector<int> e(a.exponents().size());
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = a.exponents()[i] + b.exponents()[i];
    return Character(FinAbGroup(a.orders()), std::move(e));
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
    return os << g.to_string();
}

std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) {
    return os << g.to_string();
}

} // namespace gi
