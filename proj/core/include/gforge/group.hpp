#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gforge/errors.hpp"

namespace gforge {

/// A finite group given by its multiplication table. Immutable after
/// validation; all entries are element indices in [0, order).
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> table; // table[g][h] = g*h
    int identity = 0;
    std::vector<int> inverses;
    std::vector<std::string> element_names; // optional; empty when unnamed
    std::string name;

    int mul(int g, int h) const { return table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
    int inv(int g) const { return inverses[static_cast<std::size_t>(g)]; }
    int element_order(int g) const;
    std::string element_name(int g) const;
};

/// Validates associativity, identity and inverses; throws NotAssociative,
/// NoIdentity or NoInverse naming the offending triple/element.
FiniteGroup validate_group(const std::vector<std::vector<int>>& table,
                           std::optional<int> identity_hint = std::nullopt);

FiniteGroup make_cyclic(int m);
FiniteGroup make_klein_four();
FiniteGroup make_symmetric3();

/// An inverse-closed generating set, kept in its given order.
struct GenSet {
    std::vector<int> elements;

    std::size_t size() const { return elements.size(); }
};

/// Validates a generating set: no identity, inverse-closed, generates G.
/// Throws ContainsIdentity, NotInverseClosed or DoesNotGenerate.
GenSet check_genset(const FiniteGroup& g, const std::vector<int>& elements);

/// Split of a generating set into involutions (sigma1) and inverse pairs
/// (sigma2[i] paired with sigma3[i]). Pair orientation follows the gen set's
/// list order: the first-seen element of each pair lands in sigma2.
struct GenPartition {
    std::vector<int> sigma1;
    std::vector<int> sigma2;
    std::vector<int> sigma3;

    int m1() const { return static_cast<int>(sigma1.size()); }
    int m2() const { return static_cast<int>(sigma2.size()); }
};

GenPartition partition_generators(const FiniteGroup& g, const GenSet& gens);

} // namespace gforge
