#pragma once

#include <cstdint>
#include <vector>

#include "beckworks/decomposition.hpp"
#include "beckworks/partition.hpp"

// Cover of O_{1,k}(n), the partitions with exactly one distinct part value
// divisible by k, by sets generated from the k-regular partitions O_k(n).
namespace beckworks::beck_one {

/// Names the member of O_{1,k} obtained from `base` by replacing
/// repeat * k^exponent copies of `part` with `repeat` copies of
/// part * k^exponent.
struct Witness {
    Partition base;
    std::uint64_t part = 0;
    unsigned exponent = 0;
    std::uint64_t repeat = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Element {
    Witness witness;
    Partition partition;
};

/// Applies the replacement named by `w` to its base.
Partition apply(const Witness& w, std::uint64_t k);

/// Every replacement for one part i of lambda, ordered by (exponent, repeat).
/// Empty when i occurs fewer than k times. Size is (m_i - p(m_i)) / (k - 1).
std::vector<Element> expand(const Partition& lambda, std::uint64_t k, std::uint64_t part);

/// One row per lambda in O_k(n) (table order), image = Glaisher merge, one
/// set per distinct part i of lambda in increasing i.
Decomposition decompose(std::uint64_t n, std::uint64_t k);

/// Inverse of expand: recovers the unique (base, part, exponent, repeat) that
/// generates pi. Throws std::invalid_argument unless pi has exactly one
/// distinct part value divisible by k.
Witness locate(const Partition& pi, std::uint64_t k);

}  // namespace beckworks::beck_one
