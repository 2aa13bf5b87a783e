#pragma once

#include <cstdint>
#include <vector>

#include "burnlab/coset_table.hpp"

namespace burnlab::fp {

// A permutation of {0..degree-1} as its image array.
using Perm = std::vector<std::int32_t>;

struct PermGroupView {
  std::int64_t degree = 0;
  std::vector<Perm> gens;  // one per presentation generator
};

// The action of each generator on cosets by right multiplication.
// StateError on an incomplete table.
PermGroupView regular_representation(const CosetTable& t);

Perm perm_compose(const Perm& f, const Perm& g);  // x -> g[f[x]]
Perm perm_inverse(const Perm& f);
std::uint64_t perm_order(const Perm& f);  // lcm of cycle lengths

// Every group element by breadth-first products of generators and inverses,
// identity first, in deterministic discovery order. CapacityError when the
// element count would exceed element_bound.
std::vector<Perm> perm_group_elements(const PermGroupView& g, std::size_t element_bound);

// lcm of all element orders.
std::uint64_t perm_group_exponent(const PermGroupView& g, std::size_t element_bound);

// True iff the generators pairwise commute (equivalently, the generated group
// is abelian).
bool perm_gens_commute(const PermGroupView& g);

}  // namespace burnlab::fp
