#include "beckworks/families.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace beckworks {

namespace {

constexpr std::uint64_t kNoCap = std::numeric_limits<std::uint64_t>::max();

// Pruning policies for the ascending-run generator. Each policy decides which
// values and multiplicities may extend the current prefix and whether a
// complete prefix is a member. State is a small value copied down the
// recursion.

struct AllPolicy {
    struct State {};
    static constexpr bool kConsecutive = false;
    bool value_allowed(std::uint64_t, const State&) const { return true; }
    std::uint64_t cap(std::uint64_t, const State&) const { return kNoCap; }
    bool multiplicity_allowed(std::uint64_t, std::uint64_t, const State&) const { return true; }
    State push(const State& s, std::uint64_t, std::uint64_t) const { return s; }
    bool accept(const State&) const { return true; }
};

struct KDistinctPolicy : AllPolicy {
    std::uint64_t k;
    explicit KDistinctPolicy(std::uint64_t k) : k(k) {}
    std::uint64_t cap(std::uint64_t, const State&) const { return k - 1; }
};

struct KRegularPolicy : AllPolicy {
    std::uint64_t k;
    explicit KRegularPolicy(std::uint64_t k) : k(k) {}
    bool value_allowed(std::uint64_t v, const State&) const { return v % k != 0; }
};

// Counts runs matching a run-level condition; the member must have exactly
// `target` of them.
template <class Derived>
struct CountingPolicy {
    struct State {
        std::uint64_t hits = 0;
    };
    static constexpr bool kConsecutive = false;
    std::uint64_t target;
    explicit CountingPolicy(std::uint64_t target) : target(target) {}

    bool value_allowed(std::uint64_t v, const State& s) const {
        return !self().value_hits(v) || s.hits < target;
    }
    std::uint64_t cap(std::uint64_t, const State&) const { return kNoCap; }
    bool multiplicity_allowed(std::uint64_t v, std::uint64_t mu, const State& s) const {
        return !self().run_hits(v, mu) || s.hits < target;
    }
    State push(const State& s, std::uint64_t v, std::uint64_t mu) const {
        return {s.hits + (self().run_hits(v, mu) ? 1 : 0)};
    }
    bool accept(const State& s) const { return s.hits == target; }

    // Defaults: a value-level condition is also a run-level one.
    bool value_hits(std::uint64_t) const { return false; }

private:
    const Derived& self() const { return static_cast<const Derived&>(*this); }
};

struct DivisibleRunsPolicy : CountingPolicy<DivisibleRunsPolicy> {
    std::uint64_t k;
    DivisibleRunsPolicy(std::uint64_t k, std::uint64_t target) : CountingPolicy(target), k(k) {}
    bool value_hits(std::uint64_t v) const { return v % k == 0; }
    bool run_hits(std::uint64_t v, std::uint64_t) const { return v % k == 0; }
};

struct RepeatedRunsPolicy : CountingPolicy<RepeatedRunsPolicy> {
    std::uint64_t k;
    RepeatedRunsPolicy(std::uint64_t k, std::uint64_t target) : CountingPolicy(target), k(k) {}
    bool run_hits(std::uint64_t, std::uint64_t mu) const { return mu >= k; }
};

struct TFamilyPolicy {
    struct State {
        bool has_heavy = false;
    };
    static constexpr bool kConsecutive = false;
    std::uint64_t k;
    explicit TFamilyPolicy(std::uint64_t k) : k(k) {}

    bool value_allowed(std::uint64_t, const State&) const { return true; }
    std::uint64_t cap(std::uint64_t, const State&) const { return 2 * k - 1; }
    bool multiplicity_allowed(std::uint64_t, std::uint64_t mu, const State& s) const {
        if (mu <= k - 1) return true;
        return !s.has_heavy && mu >= k + 1 && mu <= 2 * k - 1;
    }
    State push(const State& s, std::uint64_t, std::uint64_t mu) const {
        return {s.has_heavy || mu >= k};
    }
    bool accept(const State& s) const { return s.has_heavy; }
};

enum class GapFreeVariant { Any, OneBlock, OddTop, EvenTop };

struct GapFreePolicy {
    struct State {
        std::uint64_t runs = 0;
        std::uint64_t top = 0;
    };
    static constexpr bool kConsecutive = true;
    GapFreeVariant variant;
    explicit GapFreePolicy(GapFreeVariant variant) : variant(variant) {}

    bool value_allowed(std::uint64_t v, const State& s) const {
        switch (variant) {
            case GapFreeVariant::OneBlock:
                return s.runs == 0;
            case GapFreeVariant::OddTop:
            case GapFreeVariant::EvenTop:
                return s.runs != 0 || v == 1;
            case GapFreeVariant::Any:
                break;
        }
        return true;
    }
    std::uint64_t cap(std::uint64_t, const State&) const { return kNoCap; }
    bool multiplicity_allowed(std::uint64_t, std::uint64_t, const State&) const { return true; }
    State push(const State& s, std::uint64_t v, std::uint64_t) const { return {s.runs + 1, v}; }
    bool accept(const State& s) const {
        switch (variant) {
            case GapFreeVariant::Any:
                return true;
            case GapFreeVariant::OneBlock:
                return s.runs == 1;
            case GapFreeVariant::OddTop:
                return s.runs != 0 && s.top % 2 == 1;
            case GapFreeVariant::EvenTop:
                return s.runs != 0 && s.top % 2 == 0;
        }
        return false;
    }
};

struct DistinctParityPolicy {
    struct State {
        std::uint64_t length = 0;
    };
    static constexpr bool kConsecutive = false;
    std::uint64_t parity;  // 1 = odd length, 0 = even length
    explicit DistinctParityPolicy(std::uint64_t parity) : parity(parity) {}

    bool value_allowed(std::uint64_t, const State&) const { return true; }
    std::uint64_t cap(std::uint64_t, const State&) const { return 1; }
    bool multiplicity_allowed(std::uint64_t, std::uint64_t, const State&) const { return true; }
    State push(const State& s, std::uint64_t, std::uint64_t mu) const { return {s.length + mu}; }
    bool accept(const State& s) const { return s.length % 2 == parity; }
};

template <class Policy>
class Generator {
public:
    Generator(Policy policy, const RunVisitor& visit) : policy_(std::move(policy)), visit_(visit) {}

    void run(std::uint64_t n) { descend(n, 1, typename Policy::State{}); }

private:
    void descend(std::uint64_t remaining, std::uint64_t min_value, const typename Policy::State& state) {
        if (remaining == 0) {
            if (policy_.accept(state)) {
                visit_(std::span<const Run>(stack_));
            }
            return;
        }
        std::uint64_t max_value = remaining;
        if constexpr (Policy::kConsecutive) {
            if (!stack_.empty()) max_value = std::min(max_value, min_value);
        }
        for (std::uint64_t v = min_value; v <= max_value; ++v) {
            if (!policy_.value_allowed(v, state)) continue;
            const std::uint64_t top = std::min(remaining / v, policy_.cap(v, state));
            // Larger multiplicity first keeps ascending lexicographic order.
            for (std::uint64_t mu = top; mu >= 1; --mu) {
                if (!policy_.multiplicity_allowed(v, mu, state)) continue;
                stack_.push_back({v, mu});
                descend(remaining - v * mu, v + 1, policy_.push(state, v, mu));
                stack_.pop_back();
            }
        }
    }

    Policy policy_;
    const RunVisitor& visit_;
    std::vector<Run> stack_;
};

template <class Policy>
void generate(std::uint64_t n, Policy policy, const RunVisitor& visit) {
    Generator<Policy>(std::move(policy), visit).run(n);
}

bool is_gap_free(std::span<const Run> runs) {
    for (std::size_t i = 1; i < runs.size(); ++i) {
        if (runs[i].value != runs[i - 1].value + 1) return false;
    }
    return true;
}

constexpr std::array<std::string_view, 16> kFamilyNames = {
    "all",
    "k-distinct",
    "k-regular",
    "one-divisible",
    "one-repeated",
    "t-family",
    "gapfree",
    "gapfree-one-block",
    "gapfree-odd-top",
    "gapfree-even-top",
    "distinct-odd-length",
    "distinct-even-length",
    "franklin-left",
    "franklin-right",
    "odd",
    "distinct",
};

}  // namespace

bool FamilySpec::uses_k() const noexcept {
    switch (kind) {
        case FamilyKind::KDistinct:
        case FamilyKind::KRegular:
        case FamilyKind::OneDivisible:
        case FamilyKind::OneRepeated:
        case FamilyKind::TFamily:
        case FamilyKind::FranklinLeft:
        case FamilyKind::FranklinRight:
            return true;
        default:
            return false;
    }
}

bool FamilySpec::uses_m() const noexcept {
    return kind == FamilyKind::FranklinLeft || kind == FamilyKind::FranklinRight;
}

void FamilySpec::validate() const {
    if (uses_k() && k < 1) {
        throw std::invalid_argument("family " + describe() + " requires k >= 1");
    }
}

std::string FamilySpec::describe() const {
    std::string name;
    switch (kind) {
        case FamilyKind::All: name = "all"; break;
        case FamilyKind::KDistinct: name = "k-distinct"; break;
        case FamilyKind::KRegular: name = "k-regular"; break;
        case FamilyKind::OneDivisible: name = "one-divisible"; break;
        case FamilyKind::OneRepeated: name = "one-repeated"; break;
        case FamilyKind::TFamily: name = "t-family"; break;
        case FamilyKind::GapFree: name = "gapfree"; break;
        case FamilyKind::GapFreeOneBlock: name = "gapfree-one-block"; break;
        case FamilyKind::GapFreeBottomOddTop: name = "gapfree-odd-top"; break;
        case FamilyKind::GapFreeBottomEvenTop: name = "gapfree-even-top"; break;
        case FamilyKind::DistinctOddLength: name = "distinct-odd-length"; break;
        case FamilyKind::DistinctEvenLength: name = "distinct-even-length"; break;
        case FamilyKind::FranklinLeft: name = "franklin-left"; break;
        case FamilyKind::FranklinRight: name = "franklin-right"; break;
    }
    if (uses_m()) {
        name += "(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
    } else if (uses_k()) {
        name += "(k=" + std::to_string(k) + ")";
    }
    return name;
}

std::optional<FamilySpec> family_from_name(std::string_view name, std::uint64_t k, std::uint64_t m) {
    if (name == "all") return FamilySpec::all();
    if (name == "k-distinct") return FamilySpec::k_distinct(k);
    if (name == "k-regular") return FamilySpec::k_regular(k);
    if (name == "one-divisible") return FamilySpec::one_divisible(k);
    if (name == "one-repeated") return FamilySpec::one_repeated(k);
    if (name == "t-family") return FamilySpec::t_family(k);
    if (name == "gapfree") return FamilySpec::gap_free();
    if (name == "gapfree-one-block") return FamilySpec::gap_free_one_block();
    if (name == "gapfree-odd-top") return FamilySpec::gap_free_odd_top();
    if (name == "gapfree-even-top") return FamilySpec::gap_free_even_top();
    if (name == "distinct-odd-length") return FamilySpec::distinct_odd_length();
    if (name == "distinct-even-length") return FamilySpec::distinct_even_length();
    if (name == "franklin-left") return FamilySpec::franklin_left(k, m);
    if (name == "franklin-right") return FamilySpec::franklin_right(k, m);
    if (name == "odd") return FamilySpec::k_regular(2);
    if (name == "distinct") return FamilySpec::k_distinct(2);
    return std::nullopt;
}

std::span<const std::string_view> family_names() {
    return kFamilyNames;
}

std::uint64_t evaluate(const Statistic& stat, std::span<const Run> runs) {
    switch (stat.kind) {
        case StatisticKind::Length: {
            std::uint64_t total = 0;
            for (const auto& r : runs) total += r.multiplicity;
            return total;
        }
        case StatisticKind::DistinctCount:
            return runs.size();
        case StatisticKind::Smallest:
            return runs.empty() ? 0 : runs.front().value;
        case StatisticKind::PartsCongruentOneModK: {
            if (stat.k < 1) {
                throw std::invalid_argument("parts-congruent-one statistic requires k >= 1");
            }
            std::uint64_t total = 0;
            for (const auto& r : runs) {
                if (r.value % stat.k == 1 % stat.k) total += r.multiplicity;
            }
            return total;
        }
    }
    return 0;
}

bool contains(const FamilySpec& spec, const Partition& p) {
    spec.validate();
    const auto runs = p.runs();
    const std::uint64_t k = spec.k;
    auto count_runs = [&](auto pred) {
        return static_cast<std::uint64_t>(std::count_if(runs.begin(), runs.end(), pred));
    };
    switch (spec.kind) {
        case FamilyKind::All:
            return true;
        case FamilyKind::KDistinct:
            return count_runs([&](const Run& r) { return r.multiplicity >= k; }) == 0;
        case FamilyKind::KRegular:
            return count_runs([&](const Run& r) { return r.value % k == 0; }) == 0;
        case FamilyKind::OneDivisible:
            return count_runs([&](const Run& r) { return r.value % k == 0; }) == 1;
        case FamilyKind::OneRepeated:
            return count_runs([&](const Run& r) { return r.multiplicity >= k; }) == 1;
        case FamilyKind::TFamily: {
            const auto heavy = count_runs([&](const Run& r) { return r.multiplicity >= k; });
            const auto windowed = count_runs(
                [&](const Run& r) { return r.multiplicity >= k + 1 && r.multiplicity <= 2 * k - 1; });
            return heavy == 1 && windowed == 1;
        }
        case FamilyKind::GapFree:
            return is_gap_free(runs);
        case FamilyKind::GapFreeOneBlock:
            return runs.size() == 1;
        case FamilyKind::GapFreeBottomOddTop:
            return !runs.empty() && is_gap_free(runs) && runs.front().value == 1 && runs.back().value % 2 == 1;
        case FamilyKind::GapFreeBottomEvenTop:
            return !runs.empty() && is_gap_free(runs) && runs.front().value == 1 && runs.back().value % 2 == 0;
        case FamilyKind::DistinctOddLength:
            return p.length() == runs.size() && runs.size() % 2 == 1;
        case FamilyKind::DistinctEvenLength:
            return p.length() == runs.size() && runs.size() % 2 == 0;
        case FamilyKind::FranklinLeft:
            return count_runs([&](const Run& r) { return r.multiplicity >= k; }) == spec.m;
        case FamilyKind::FranklinRight:
            return count_runs([&](const Run& r) { return r.value % k == 0; }) == spec.m;
    }
    return false;
}

void for_each_member(std::uint64_t n, const FamilySpec& spec, const RunVisitor& visit) {
    spec.validate();
    const std::uint64_t k = spec.k;
    switch (spec.kind) {
        case FamilyKind::All:
            return generate(n, AllPolicy{}, visit);
        case FamilyKind::KDistinct:
            return generate(n, KDistinctPolicy{k}, visit);
        case FamilyKind::KRegular:
            return generate(n, KRegularPolicy{k}, visit);
        case FamilyKind::OneDivisible:
            return generate(n, DivisibleRunsPolicy{k, 1}, visit);
        case FamilyKind::OneRepeated:
            return generate(n, RepeatedRunsPolicy{k, 1}, visit);
        case FamilyKind::TFamily:
            return generate(n, TFamilyPolicy{k}, visit);
        case FamilyKind::GapFree:
            return generate(n, GapFreePolicy{GapFreeVariant::Any}, visit);
        case FamilyKind::GapFreeOneBlock:
            return generate(n, GapFreePolicy{GapFreeVariant::OneBlock}, visit);
        case FamilyKind::GapFreeBottomOddTop:
            return generate(n, GapFreePolicy{GapFreeVariant::OddTop}, visit);
        case FamilyKind::GapFreeBottomEvenTop:
            return generate(n, GapFreePolicy{GapFreeVariant::EvenTop}, visit);
        case FamilyKind::DistinctOddLength:
            return generate(n, DistinctParityPolicy{1}, visit);
        case FamilyKind::DistinctEvenLength:
            return generate(n, DistinctParityPolicy{0}, visit);
        case FamilyKind::FranklinLeft:
            return generate(n, RepeatedRunsPolicy{k, spec.m}, visit);
        case FamilyKind::FranklinRight:
            return generate(n, DivisibleRunsPolicy{k, spec.m}, visit);
    }
}

std::vector<Partition> enumerate(std::uint64_t n, const FamilySpec& spec) {
    std::vector<Partition> out;
    for_each_member(n, spec, [&](std::span<const Run> runs) {
        out.push_back(Partition::from_runs(std::vector<Run>(runs.begin(), runs.end())));
    });
    return out;
}

std::uint64_t count(std::uint64_t n, const FamilySpec& spec) {
    std::uint64_t total = 0;
    for_each_member(n, spec, [&](std::span<const Run>) { ++total; });
    return total;
}

std::uint64_t aggregate(std::uint64_t n, const FamilySpec& spec, const Statistic& stat) {
    std::uint64_t total = 0;
    for_each_member(n, spec, [&](std::span<const Run> runs) { total += evaluate(stat, runs); });
    return total;
}

void for_each_partition(std::uint64_t n, const std::function<void(std::span<const std::uint64_t>)>& visit) {
    // Iterative successor in reverse lexicographic order of nonincreasing
    // sequences: (n), (n-1,1), ..., (1^n).
    std::vector<std::uint64_t> parts;
    if (n == 0) {
        visit(parts);
        return;
    }
    parts.push_back(n);
    for (;;) {
        visit(parts);
        // Pop trailing ones into `rest`, then decrement the last part > 1 and
        // refill greedily with copies of the decremented value.
        std::uint64_t rest = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++rest;
        }
        if (parts.empty()) return;
        const std::uint64_t v = --parts.back();
        ++rest;
        while (rest > v) {
            parts.push_back(v);
            rest -= v;
        }
        if (rest > 0) parts.push_back(rest);
    }
}

std::vector<Partition> enumerate_filtered(std::uint64_t n, const FamilySpec& spec) {
    spec.validate();
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const std::uint64_t> parts) {
        auto p = Partition::from_parts(parts);
        if (contains(spec, p)) out.push_back(std::move(p));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_filtered(std::uint64_t n, const FamilySpec& spec) {
    spec.validate();
    std::uint64_t total = 0;
    for_each_partition(n, [&](std::span<const std::uint64_t> parts) {
        if (contains(spec, Partition::from_parts(parts))) ++total;
    });
    return total;
}

std::uint64_t aggregate_filtered(std::uint64_t n, const FamilySpec& spec, const Statistic& stat) {
    spec.validate();
    std::uint64_t total = 0;
    for_each_partition(n, [&](std::span<const std::uint64_t> parts) {
        auto p = Partition::from_parts(parts);
        if (contains(spec, p)) total += evaluate(stat, p.runs());
    });
    return total;
}

}  // namespace beckworks
