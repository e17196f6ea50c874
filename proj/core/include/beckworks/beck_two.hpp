#pragma once

#include <cstdint>
#include <vector>

#include "beckworks/decomposition.hpp"
#include "beckworks/partition.hpp"

// Cover of T_k(n), the partitions with one multiplicity in [k+1, 2k-1] and
// all others below k, by sets generated from D_k(n) one factor class at a
// time. A factor class F_{k,d} is the set of integers k^a * d, k not dividing d.
namespace beckworks::beck_two {

/// The distinct parts of a partition lying in one factor class, as the
/// ascending exponent ladder a_1 < a_2 < ... < a_p.
struct FactorClass {
    std::uint64_t cofactor = 0;
    std::vector<unsigned> exponents;
};

/// Factor classes met by p, in increasing cofactor.
std::vector<FactorClass> factor_classes(const Partition& p, std::uint64_t k);

/// Member number `index` (1-based) of the set generated by `base` and the
/// class with cofactor d.
struct Witness {
    Partition base;
    std::uint64_t cofactor = 0;
    std::uint64_t index = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Element {
    Witness witness;
    Partition partition;
};

/// For each adjacent ladder pair (a_i, a_{i+1}): removes one k^{a_{i+1}} d and
/// adds k copies of k^{a_i} d plus k-1 copies of each k^t d strictly between.
/// Returns p - 1 elements for a ladder of length p.
std::vector<Element> expand_class(const Partition& lambda, std::uint64_t k, std::uint64_t cofactor);

/// One row per lambda in D_k(n) (table order), image = Glaisher split, one set
/// per factor class in increasing d. For k = 1 both sides are empty.
Decomposition decompose(std::uint64_t n, std::uint64_t k);

/// Inverse of expand_class: merges k equal parts upward, starting at the
/// over-full part, until every multiplicity is below k.
Witness carry_merge(const Partition& tau, std::uint64_t k);

}  // namespace beckworks::beck_two
