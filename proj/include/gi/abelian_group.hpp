#pragma once

// Finite abelian groups Z_{n_1} x ... x Z_{n_t} in additive notation, their
// elements and their characters. The presentation (order of the cyclic
// factors) is kept exactly as given.

#include "gi/scalars.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace gi {

class GroupElement;
GroupElement op(const GroupElement& a, const GroupElement& b);
GroupElement power(const GroupElement& a, long k);

class GroupElement {
public:
    GroupElement() = default;

    const std::vector<int>& orders() const { return orders_; }
    const std::vector<int>& residues() const { return residues_; }
    bool is_identity() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

    /// "(r1,...,rt)"
    std::string to_string() const;

private:
    friend class FinAbGroup;
    friend GroupElement op(const GroupElement&, const GroupElement&);
    friend GroupElement power(const GroupElement&, long);
    GroupElement(std::vector<int> orders, std::vector<int> residues);

    std::vector<int> orders_;
    std::vector<int> residues_;
};

class FinAbGroup {
public:
    /// Trivial group Z_1.
    FinAbGroup();
    explicit FinAbGroup(std::vector<int> orders);
    static FinAbGroup cyclic(int n) { return FinAbGroup({n}); }

    const std::vector<int>& orders() const { return orders_; }
    size_t rank() const { return orders_.size(); }
    long order() const;
    int exponent() const;

    GroupElement identity() const;
    /// Residues are reduced into range; throws on length mismatch.
    GroupElement element(const std::vector<int>& residues) const;
    bool contains(const GroupElement& g) const { return g.orders() == orders_; }

    /// All elements, lexicographic with the last factor varying fastest.
    std::vector<GroupElement> elements() const;

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

    std::string to_string() const;

private:
    std::vector<int> orders_;
};

FinAbGroup direct_product(const FinAbGroup& a, const FinAbGroup& b);
/// (g, h) in G x H.
GroupElement pair_element(const GroupElement& g, const GroupElement& h);

GroupElement op(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, long k);

/// lambda(g) = zeta_E^(sum_i exponents[i] * residues[i] * E / orders[i]),
/// E the group exponent.
class Character {
public:
    Character() = default;
    Character(const FinAbGroup& group, std::vector<int> exponents);

    const std::vector<int>& orders() const { return orders_; }
    const std::vector<int>& exponents() const { return exponents_; }
    bool is_trivial() const;

    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;

private:
    std::vector<int> orders_;
    std::vector<int> exponents_;
};

std::vector<Character> dual_characters(const FinAbGroup& group);
CycloScalar eval(const Character& lambda, const GroupElement& g);
/// Pointwise product.
Character operator*(const Character& a, const Character& b);

std::ostream& operator<<(std::ostream& os, const GroupElement& g);
std::ostream& operator<<(std::ostream& os, const FinAbGroup& g);

} // namespace gi
