#pragma once

#include <cstdint>
#include <vector>

#include "beckworks/decomposition.hpp"
#include "beckworks/partition.hpp"

namespace beckworks::gapfree {

/// Selects the base family: Odd = gap-free with smallest part 1 and largest
/// part odd (conjugate to distinct partitions of odd length), Even = the same
/// with largest part even.
enum class Parity { Odd, Even };

/// Block decomposition of a nonempty gap-free partition: values
/// start, start+1, ..., start+block_count()-1 with the given multiplicities.
struct BlockProfile {
    std::uint64_t start = 0;
    std::vector<std::uint64_t> multiplicities;

    std::size_t block_count() const noexcept { return multiplicities.size(); }
};

bool is_gap_free(const Partition& p);

/// Throws std::invalid_argument for () or a partition with a gap.
BlockProfile blocks(const Partition& p);

/// Increasing operator: adds 1 to the last part of each of the r smallest
/// blocks. Equivalently, moves one copy of the smallest value v to v + r.
/// Requires 0 <= r <= number of blocks.
Partition raise(const Partition& p, std::uint64_t r);

/// Decreasing operator: subtracts 1 from the first part of each of the r
/// largest blocks, i.e. moves one copy of the largest value L to L - r.
/// Requires 0 <= r <= number of blocks and L - r >= 1.
Partition lower(const Partition& p, std::uint64_t r);

/// rho_i: delete i-1 copies of the largest part, then raise i-1 times with r
/// fixed at the block count of lambda. lambda must be gap-free with smallest
/// part 1, and 1 <= i <= multiplicity of the largest part.
Partition rho(const Partition& lambda, std::uint64_t i);

/// [rho_1(lambda), ..., rho_{m(lambda)}(lambda)].
std::vector<Partition> family_set(const Partition& lambda);

/// True iff p is in the base family for `parity`.
bool in_base_family(const Partition& p, Parity parity);

struct Witness {
    Partition base;
    std::uint64_t index = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Finds the unique (lambda, i) with rho_i(lambda) = mu, lambda in the base
/// family for `parity`. Even parity rejects single-block partitions.
Witness trace_back(const Partition& mu, Parity parity);

/// Odd: rows cover every gap-free partition of n. Even: rows cover every
/// gap-free partition of n with at least two blocks. Rows are ordered by the
/// conjugate of the base (a distinct partition) in table order; image is that
/// conjugate; each row has one set keyed by m(base).
Decomposition cover(std::uint64_t n, Parity parity);

}  // namespace beckworks::gapfree
