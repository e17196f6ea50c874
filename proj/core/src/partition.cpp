#include "beckworks/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace beckworks {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("partition weight exceeds 64-bit range");
    }
    return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("partition weight exceeds 64-bit range");
    }
    return out;
}

// Walks two run sequences as expanded part sequences, front-to-back or
// back-to-front, and compares at the first differing position.
template <bool Reverse>
std::strong_ordering compare_expanded(std::span<const Run> a, std::span<const Run> b) noexcept {
    std::size_t ia = 0;
    std::size_t ib = 0;
    auto at = [](std::span<const Run> runs, std::size_t i) -> const Run& {
        return Reverse ? runs[runs.size() - 1 - i] : runs[i];
    };
    std::uint64_t left_a = a.empty() ? 0 : at(a, 0).multiplicity;
    std::uint64_t left_b = b.empty() ? 0 : at(b, 0).multiplicity;
    while (ia < a.size() && ib < b.size()) {
        const auto va = at(a, ia).value;
        const auto vb = at(b, ib).value;
        if (va != vb) {
            return va <=> vb;
        }
        const auto step = std::min(left_a, left_b);
        left_a -= step;
        left_b -= step;
        if (left_a == 0 && ++ia < a.size()) {
            left_a = at(a, ia).multiplicity;
        }
        if (left_b == 0 && ++ib < b.size()) {
            left_b = at(b, ib).multiplicity;
        }
    }
    // One sequence is a prefix of the other.
    return (a.size() - ia) <=> (b.size() - ib);
}

}  // namespace

Partition::Partition(Unchecked, std::vector<Run> runs) : runs_(std::move(runs)) {
    for (const auto& r : runs_) {
        weight_ = checked_add(weight_, checked_mul(r.value, r.multiplicity));
        length_ += r.multiplicity;
    }
}

Partition Partition::from_parts(std::span<const std::uint64_t> parts) {
    std::vector<std::uint64_t> sorted(parts.begin(), parts.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Run> runs;
    for (auto v : sorted) {
        if (v == 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (!runs.empty() && runs.back().value == v) {
            ++runs.back().multiplicity;
        } else {
            runs.push_back({v, 1});
        }
    }
    return Partition(Unchecked{}, std::move(runs));
}

Partition Partition::from_parts(std::initializer_list<std::uint64_t> parts) {
    return from_parts(std::span<const std::uint64_t>(parts.begin(), parts.size()));
}

Partition Partition::from_runs(std::vector<Run> runs) {
    std::uint64_t prev = 0;
    for (const auto& r : runs) {
        if (r.value == 0 || r.multiplicity == 0) {
            throw std::invalid_argument("partition runs need positive value and multiplicity");
        }
        if (r.value <= prev) {
            throw std::invalid_argument("partition run values must be strictly increasing");
        }
        prev = r.value;
    }
    return Partition(Unchecked{}, std::move(runs));
}

std::optional<std::uint64_t> Partition::smallest() const noexcept {
    if (runs_.empty()) return std::nullopt;
    return runs_.front().value;
}

std::optional<std::uint64_t> Partition::largest() const noexcept {
    if (runs_.empty()) return std::nullopt;
    return runs_.back().value;
}

std::uint64_t Partition::largest_multiplicity() const noexcept {
    return runs_.empty() ? 0 : runs_.back().multiplicity;
}

std::uint64_t Partition::multiplicity(std::uint64_t value) const noexcept {
    auto it = std::lower_bound(runs_.begin(), runs_.end(), value,
                               [](const Run& r, std::uint64_t v) { return r.value < v; });
    return (it != runs_.end() && it->value == value) ? it->multiplicity : 0;
}

std::vector<std::uint64_t> Partition::parts() const {
    std::vector<std::uint64_t> out;
    out.reserve(length_);
    for (const auto& r : runs_) {
        out.insert(out.end(), r.multiplicity, r.value);
    }
    return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    return compare_expanded<false>(a.runs_, b.runs_);
}

bool nonincreasing_lex_less(const Partition& a, const Partition& b) noexcept {
    return compare_expanded<true>(a.runs(), b.runs()) < 0;
}

PartitionBuilder::PartitionBuilder(const Partition& seed) {
    for (const auto& r : seed.runs()) {
        counts_.emplace_hint(counts_.end(), r.value, r.multiplicity);
    }
}

PartitionBuilder& PartitionBuilder::add(std::uint64_t value, std::uint64_t count) {
    if (value == 0) {
        throw std::invalid_argument("partition parts must be positive");
    }
    if (count != 0) {
        auto& slot = counts_[value];
        slot = checked_add(slot, count);
    }
    return *this;
}

PartitionBuilder& PartitionBuilder::remove(std::uint64_t value, std::uint64_t count) {
    if (count == 0) return *this;
    auto it = counts_.find(value);
    if (it == counts_.end() || it->second < count) {
        throw std::invalid_argument("cannot remove " + std::to_string(count) + " copies of part " +
                                    std::to_string(value));
    }
    it->second -= count;
    if (it->second == 0) {
        counts_.erase(it);
    }
    return *this;
}

std::uint64_t PartitionBuilder::multiplicity(std::uint64_t value) const {
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
}

Partition PartitionBuilder::build() const {
    std::vector<Run> runs;
    runs.reserve(counts_.size());
    for (const auto& [v, m] : counts_) {
        runs.push_back({v, m});
    }
    return Partition(Partition::Unchecked{}, std::move(runs));
}

PartitionStats stats(const Partition& p) {
    return PartitionStats{
        .weight = p.weight(),
        .length = p.length(),
        .distinct_count = p.distinct_count(),
        .smallest = p.smallest(),
        .largest = p.largest(),
        .largest_multiplicity = p.largest_multiplicity(),
    };
}

Partition conjugate(const Partition& p) {
    // Column c of the diagram, for c in (v_{t-1}, v_t], has height equal to the
    // number of parts >= v_t. Walking runs from the top down yields ascending
    // conjugate values.
    const auto runs = p.runs();
    std::vector<Run> out;
    out.reserve(runs.size());
    std::uint64_t height = 0;
    for (std::size_t t = runs.size(); t-- > 0;) {
        height += runs[t].multiplicity;
        const std::uint64_t below = t == 0 ? 0 : runs[t - 1].value;
        out.push_back({height, runs[t].value - below});
    }
    return Partition::from_runs(std::move(out));
}

std::string to_string(const Partition& p) {
    std::string out = "(";
    bool first = true;
    for (const auto& r : p.runs()) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(r.value);
        if (r.multiplicity != 1) {
            out += '^';
            out += std::to_string(r.multiplicity);
        }
    }
    out += ')';
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Partition run() {
        expect('(');
        std::vector<Run> runs;
        if (peek() != ')') {
            for (;;) {
                Run r{integer("value"), 1};
                if (peek() == '^') {
                    ++pos_;
                    r.multiplicity = integer("multiplicity");
                    if (r.multiplicity == 1) {
                        fail("multiplicity 1 must be omitted");
                    }
                }
                if (!runs.empty() && r.value <= runs.back().value) {
                    fail(r.value == runs.back().value ? "duplicate value " + std::to_string(r.value)
                                                      : "values must be strictly ascending");
                }
                runs.push_back(r);
                if (peek() != ',') break;
                ++pos_;
            }
        }
        expect(')');
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return Partition::from_runs(std::move(runs));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::uint64_t integer(const char* what) {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        if (begin == end || *begin < '0' || *begin > '9') {
            fail(std::string("expected ") + what);
        }
        if (*begin == '0') {
            fail(std::string(what) + " must be a positive integer without leading zeros");
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec == std::errc::result_out_of_range) {
            fail(std::string(what) + " out of range");
        }
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("malformed partition \"" + std::string(text_) + "\" at offset " +
                                    std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Partition parse_partition(std::string_view text) {
    return Parser(text).run();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << to_string(p);
}

}  // namespace beckworks

std::size_t std::hash<beckworks::Partition>::operator()(const beckworks::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& r : p.runs()) {
        h ^= std::hash<std::uint64_t>{}(r.value) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= std::hash<std::uint64_t>{}(r.multiplicity) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}
