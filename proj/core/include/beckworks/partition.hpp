#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beckworks {

/// One block of equal parts: `multiplicity` copies of `value`.
struct Run {
    std::uint64_t value = 0;
    std::uint64_t multiplicity = 0;

    friend bool operator==(const Run&, const Run&) = default;
};

/// An integer partition stored as runs with strictly increasing values.
///
/// The run sequence is the canonical form, so two partitions are equal iff
/// their runs are identical. The empty run sequence is the partition of 0.
/// Instances are immutable; every operator in the library returns a new value.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes an unordered multiset of parts. Throws
    /// std::invalid_argument on a zero part and std::overflow_error when the
    /// weight does not fit 64 bits.
    static Partition from_parts(std::span<const std::uint64_t> parts);
    static Partition from_parts(std::initializer_list<std::uint64_t> parts);

    /// Validates that `runs` is already canonical.
    static Partition from_runs(std::vector<Run> runs);

    std::span<const Run> runs() const noexcept { return runs_; }
    bool empty() const noexcept { return runs_.empty(); }

    std::uint64_t weight() const noexcept { return weight_; }
    std::uint64_t length() const noexcept { return length_; }
    std::size_t distinct_count() const noexcept { return runs_.size(); }

    std::optional<std::uint64_t> smallest() const noexcept;
    std::optional<std::uint64_t> largest() const noexcept;
    /// Multiplicity of the largest part; 0 for the empty partition.
    std::uint64_t largest_multiplicity() const noexcept;
    std::uint64_t multiplicity(std::uint64_t value) const noexcept;

    /// Parts in ascending order, expanded with multiplicity.
    std::vector<std::uint64_t> parts() const;

    friend bool operator==(const Partition& a, const Partition& b) noexcept {
        return a.runs_ == b.runs_;
    }

    /// Lexicographic order of the ascending part sequences.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    struct Unchecked {};
    Partition(Unchecked, std::vector<Run> runs);

    std::vector<Run> runs_;
    std::uint64_t weight_ = 0;
    std::uint64_t length_ = 0;

    friend class PartitionBuilder;
};

/// Lexicographic order of the nonincreasing part sequences. This is the row
/// order used by the correspondence tables, e.g. (1^9) < (1^7,2) < (1^5,4).
bool nonincreasing_lex_less(const Partition& a, const Partition& b) noexcept;

/// Mutable multiset used to assemble a Partition from add/remove steps.
class PartitionBuilder {
public:
    PartitionBuilder() = default;
    explicit PartitionBuilder(const Partition& seed);

    PartitionBuilder& add(std::uint64_t value, std::uint64_t count = 1);
    /// Throws std::invalid_argument if fewer than `count` copies are present.
    PartitionBuilder& remove(std::uint64_t value, std::uint64_t count = 1);

    std::uint64_t multiplicity(std::uint64_t value) const;

    Partition build() const;

private:
    std::map<std::uint64_t, std::uint64_t> counts_;
};

struct PartitionStats {
    std::uint64_t weight = 0;
    std::uint64_t length = 0;
    std::uint64_t distinct_count = 0;
    std::optional<std::uint64_t> smallest;
    std::optional<std::uint64_t> largest;
    std::uint64_t largest_multiplicity = 0;
};

PartitionStats stats(const Partition& p);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// Renders `(1^4,2,6)`: ascending values, `^m` omitted when m = 1.
std::string to_string(const Partition& p);

/// Inverse of to_string. Accepts only the canonical grammar
/// `'(' [item (',' item)*] ')'`, item = `INT ['^' INT]`, no whitespace,
/// values strictly ascending, no leading zeros, no `^1`.
Partition parse_partition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace beckworks

template <>
struct std::hash<beckworks::Partition> {
    std::size_t operator()(const beckworks::Partition& p) const noexcept;
};
