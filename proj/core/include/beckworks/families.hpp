#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beckworks/partition.hpp"

namespace beckworks {

enum class FamilyKind {
    All,
    KDistinct,             // every multiplicity <= k-1
    KRegular,              // no part divisible by k
    OneDivisible,          // exactly one distinct part value divisible by k
    OneRepeated,           // exactly one distinct part value occurring >= k times
    TFamily,               // one multiplicity in [k+1, 2k-1], all others <= k-1
    GapFree,               // distinct values are consecutive integers
    GapFreeOneBlock,       // a single block (a rectangle)
    GapFreeBottomOddTop,   // gap-free, smallest part 1, largest part odd
    GapFreeBottomEvenTop,  // gap-free, smallest part 1, largest part even
    DistinctOddLength,
    DistinctEvenLength,
    FranklinLeft,          // exactly m distinct values occurring >= k times
    FranklinRight,         // exactly m distinct values divisible by k
};

/// A named, parameterized family predicate. `k` is used by the k-kinds and
/// the Franklin kinds, `m` only by the Franklin kinds.
///
/// Predicates are evaluated literally on the empty partition: () belongs to a
/// family iff the predicate holds vacuously (All, KDistinct, KRegular,
/// GapFree, DistinctEvenLength, Franklin with m = 0) and not when the predicate
/// asks for a part to exist.
struct FamilySpec {
    FamilyKind kind = FamilyKind::All;
    std::uint64_t k = 0;
    std::uint64_t m = 0;

    static FamilySpec all() { return {FamilyKind::All}; }
    static FamilySpec k_distinct(std::uint64_t k) { return {FamilyKind::KDistinct, k}; }
    static FamilySpec k_regular(std::uint64_t k) { return {FamilyKind::KRegular, k}; }
    static FamilySpec one_divisible(std::uint64_t k) { return {FamilyKind::OneDivisible, k}; }
    static FamilySpec one_repeated(std::uint64_t k) { return {FamilyKind::OneRepeated, k}; }
    static FamilySpec t_family(std::uint64_t k) { return {FamilyKind::TFamily, k}; }
    static FamilySpec gap_free() { return {FamilyKind::GapFree}; }
    static FamilySpec gap_free_one_block() { return {FamilyKind::GapFreeOneBlock}; }
    static FamilySpec gap_free_odd_top() { return {FamilyKind::GapFreeBottomOddTop}; }
    static FamilySpec gap_free_even_top() { return {FamilyKind::GapFreeBottomEvenTop}; }
    static FamilySpec distinct_odd_length() { return {FamilyKind::DistinctOddLength}; }
    static FamilySpec distinct_even_length() { return {FamilyKind::DistinctEvenLength}; }
    static FamilySpec franklin_left(std::uint64_t k, std::uint64_t m) { return {FamilyKind::FranklinLeft, k, m}; }
    static FamilySpec franklin_right(std::uint64_t k, std::uint64_t m) { return {FamilyKind::FranklinRight, k, m}; }

    bool uses_k() const noexcept;
    bool uses_m() const noexcept;

    /// Throws std::invalid_argument when k is required and k < 1.
    void validate() const;

    /// Human-readable label, e.g. "k-distinct(k=3)".
    std::string describe() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// CLI vocabulary: "all", "k-distinct", "k-regular", "one-divisible",
/// "one-repeated", "t-family", "gapfree", "gapfree-one-block",
/// "gapfree-odd-top", "gapfree-even-top", "distinct-odd-length",
/// "distinct-even-length", "franklin-left", "franklin-right", plus the k = 2
/// shorthands "odd" and "distinct".
std::optional<FamilySpec> family_from_name(std::string_view name, std::uint64_t k, std::uint64_t m);
std::span<const std::string_view> family_names();

enum class StatisticKind { Length, DistinctCount, Smallest, PartsCongruentOneModK };

struct Statistic {
    StatisticKind kind = StatisticKind::Length;
    std::uint64_t k = 0;  // PartsCongruentOneModK only

    static Statistic length() { return {StatisticKind::Length}; }
    static Statistic distinct_count() { return {StatisticKind::DistinctCount}; }
    static Statistic smallest() { return {StatisticKind::Smallest}; }
    static Statistic parts_congruent_one_mod(std::uint64_t k) { return {StatisticKind::PartsCongruentOneModK, k}; }
};

/// Value of the statistic on one partition; Smallest of () is 0.
std::uint64_t evaluate(const Statistic& stat, std::span<const Run> runs);

/// Direct membership test.
bool contains(const FamilySpec& spec, const Partition& p);

using RunVisitor = std::function<void(std::span<const Run>)>;

/// Pruned generator. Visits every member of the family of weight n in
/// ascending lexicographic order of the ascending part sequence. The span is
/// only valid for the duration of the call.
void for_each_member(std::uint64_t n, const FamilySpec& spec, const RunVisitor& visit);

std::vector<Partition> enumerate(std::uint64_t n, const FamilySpec& spec);
std::uint64_t count(std::uint64_t n, const FamilySpec& spec);
std::uint64_t aggregate(std::uint64_t n, const FamilySpec& spec, const Statistic& stat);

/// Unpruned oracle path: generates every partition of n with a separate
/// algorithm and keeps the ones `contains` accepts. Same order as enumerate.
std::vector<Partition> enumerate_filtered(std::uint64_t n, const FamilySpec& spec);
std::uint64_t count_filtered(std::uint64_t n, const FamilySpec& spec);
std::uint64_t aggregate_filtered(std::uint64_t n, const FamilySpec& spec, const Statistic& stat);

/// Visits every partition of n as a nonincreasing part list (no order
/// guarantee beyond determinism).
void for_each_partition(std::uint64_t n, const std::function<void(std::span<const std::uint64_t>)>& visit);

}  // namespace beckworks
