#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cayleynut {

using Element = int;

// Finite group given by an explicit multiplication table. table[g][h] is the
// index of the product g*h. Immutable after construction; the constructor
// locates the identity and the inverse of every element and rejects tables
// where either is missing or ambiguous. Full axiom validation (Latin square,
// associativity) lives in validate_group_axioms.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::vector<Element>> table,
                std::vector<std::string> labels);

    int order() const noexcept { return static_cast<int>(table_.size()); }
    Element identity() const noexcept { return identity_; }

    Element mul(Element a, Element b) const;
    Element inverse(Element g) const;

    const std::string& label(Element g) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& name() const noexcept { return name_; }

private:
    void check_index(Element g) const;

    std::string name_;
    std::vector<std::vector<Element>> table_;
    std::vector<Element> inverses_;
    std::vector<std::string> labels_;
    Element identity_ = 0;
};

// Throws std::invalid_argument if the table is not a group: every row and
// column must be a permutation of 0..order-1, the identity must be two-sided,
// inverses unique, and multiplication associative. Intended for orders <= 32
// (the associativity sweep is cubic).
void validate_group_axioms(const FiniteGroup& g);

// Z_n under addition mod n. Element i is the residue i; labels "0".."n-1".
FiniteGroup cyclic_group(int n);

// Direct product on lexicographic pairs: element (a, b) has index
// a * |h| + b, multiplication is componentwise, labels "(a,b)".
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// The quasidihedral (semidihedral) group of order 16,
//   QD16 = <s, t : s^8 = t^2 = 1, t s t = s^3>,
// on normal forms s^i t^j with index 2*i + j. The table is generated from
// the rewriting rule t s^k = s^(3k mod 8) t and then validated against the
// group axioms.
FiniteGroup quasidihedral_16();

// Reduces a word over the QD16 generators to its element index. Accepts the
// letters 's' and 't', optional "^k" exponents (k >= 0) and whitespace, e.g.
// "tsts^2" or "s^2 t". Throws std::invalid_argument on anything else.
Element qd16_reduce_word(std::string_view word);

// Inverse-closed, identity-free subset of a group, stored sorted.
struct GeneratorSet {
    std::vector<Element> elements;
};

// Sorts, deduplicates and validates: every index in range, identity absent,
// set closed under inverse. Throws std::invalid_argument otherwise.
GeneratorSet make_generator_set(const FiniteGroup& g, std::vector<Element> elements);

}  // namespace cayleynut
