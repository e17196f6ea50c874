#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "beckworks/partition.hpp"

namespace beckworks {

/// One generated sub-family, tagged by the key that selected it (the part i
/// for the O_{1,k} cover, the cofactor d for the T_k cover, m(base) for the
/// gap-free covers).
struct CoverSet {
    std::uint64_t key = 0;
    std::vector<Partition> members;
};

/// A base partition, its bijective image, and the sets it generates.
struct CoverRow {
    Partition base;
    Partition image;
    std::vector<CoverSet> sets;

    std::size_t member_count() const;
};

/// A disjoint cover record. Rows may carry empty sets; renderers decide
/// whether to show them.
struct Decomposition {
    std::vector<CoverRow> rows;

    std::size_t member_count() const;
    /// Rows with at least one generated member.
    std::size_t nonempty_row_count() const;
    /// All members in row order.
    std::vector<Partition> members() const;
};

}  // namespace beckworks
