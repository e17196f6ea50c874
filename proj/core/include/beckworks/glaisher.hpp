#pragma once

#include <cstdint>

#include "beckworks/partition.hpp"

// The generalized Glaisher bijection between partitions with every
// multiplicity below k (D_k) and partitions with no part divisible by k (O_k).
// The two directions are written independently of each other.
namespace beckworks::glaisher {

/// D_k -> O_k. A part k^a * d with k not dividing d becomes k^a copies of d.
/// Throws std::invalid_argument if some multiplicity is >= k or k < 2.
Partition split(const Partition& p, std::uint64_t k);

/// O_k -> D_k. m copies of i, with m = sum b_j k^{a_j} in base k, become b_j
/// copies of i * k^{a_j}. Throws std::invalid_argument if some part is
/// divisible by k or k < 2.
Partition merge(const Partition& p, std::uint64_t k);

}  // namespace beckworks::glaisher
