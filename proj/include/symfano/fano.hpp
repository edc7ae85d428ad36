#pragma once

#include "symfano/fan.hpp"
#include "symfano/lattice.hpp"

#include <cstddef>
#include <vector>

namespace symfano {

/// An integral relation sum a_x x = 0 among the generators of a fan, i.e. a
/// numerical 1-cycle class.
struct OneCycle {
    std::vector<Integer> coeffs;

    friend bool operator==(const OneCycle&, const OneCycle&) = default;
};

/// x_1 + ... + x_h - (a_1 y_1 + ... + a_k y_k) = 0 for a primitive collection
/// {x_1..x_h}, where <y_1..y_k> is the minimal cone containing the sum.
struct PrimitiveRelation {
    IndexSet collection;
    IndexSet target_support;
    std::vector<Integer> target_coeffs;
    Integer degree;

    OneCycle cycle(std::size_t num_generators) const;

    friend bool operator==(const PrimitiveRelation&, const PrimitiveRelation&) = default;
};

std::string to_string(const PrimitiveRelation& r);

/// Dual-vertex criterion: for every maximal cone, the integral functional equal
/// to 1 on its generators is < 1 on all other generators.
bool is_fano(const Fan& f);

/// Inclusion-minimal non-faces, sorted lexicographically. `max_size` of 0
/// means dim + 1, the largest size a minimal non-face of a simplicial fan can have.
std::vector<IndexSet> primitive_collections(const Fan& f, std::size_t max_size = 0);

PrimitiveRelation primitive_relation(const Fan& f, const IndexSet& collection);

/// Relations of all primitive collections, in collection order.
std::vector<PrimitiveRelation> primitive_relations(const Fan& f);

/// HNF basis of the lattice of integral relations among the generators.
std::vector<OneCycle> one_cycle_basis(const Fan& f);

std::size_t picard_number(const Fan& f);

Integer anticanonical_degree(const OneCycle& c);

/// Sufficient effectivity test: the generators with negative coefficient span
/// a cone of the fan.
bool is_effective_by_cone_test(const Fan& f, const OneCycle& c);

} // namespace symfano
