#include "beckworks/gapfree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "beckworks/families.hpp"

namespace beckworks::gapfree {

namespace {

void require_gap_free(const Partition& p) {
    if (p.empty()) {
        throw std::invalid_argument("operator needs a nonempty gap-free partition");
    }
    if (!is_gap_free(p)) {
        throw std::invalid_argument(to_string(p) + " is not gap-free");
    }
}

void require_block_count(const Partition& p, std::uint64_t r) {
    if (r > p.distinct_count()) {
        throw std::invalid_argument("r=" + std::to_string(r) + " exceeds the " + std::to_string(p.distinct_count()) +
                                    " blocks of " + to_string(p));
    }
}

void require_base(const Partition& lambda) {
    require_gap_free(lambda);
    if (*lambda.smallest() != 1) {
        throw std::invalid_argument(to_string(lambda) + " does not have smallest part 1");
    }
}

}  // namespace

bool is_gap_free(const Partition& p) {
    const auto runs = p.runs();
    for (std::size_t i = 1; i < runs.size(); ++i) {
        if (runs[i].value != runs[i - 1].value + 1) return false;
    }
    return true;
}

BlockProfile blocks(const Partition& p) {
    require_gap_free(p);
    BlockProfile out{p.runs().front().value, {}};
    for (const auto& r : p.runs()) {
        out.multiplicities.push_back(r.multiplicity);
    }
    return out;
}

Partition raise(const Partition& p, std::uint64_t r) {
    require_gap_free(p);
    require_block_count(p, r);
    if (r == 0) return p;
    const std::uint64_t v = *p.smallest();
    return PartitionBuilder(p).remove(v).add(v + r).build();
}

Partition lower(const Partition& p, std::uint64_t r) {
    require_gap_free(p);
    require_block_count(p, r);
    if (r == 0) return p;
    const std::uint64_t top = *p.largest();
    if (top <= r) {
        throw std::invalid_argument("lowering " + to_string(p) + " by r=" + std::to_string(r) +
                                    " would create a nonpositive part");
    }
    return PartitionBuilder(p).remove(top).add(top - r).build();
}

Partition rho(const Partition& lambda, std::uint64_t i) {
    require_base(lambda);
    const std::uint64_t m = lambda.largest_multiplicity();
    if (i < 1 || i > m) {
        throw std::invalid_argument("rho index " + std::to_string(i) + " outside [1, " + std::to_string(m) +
                                    "] for " + to_string(lambda));
    }
    const std::uint64_t r = lambda.distinct_count();
    auto current = PartitionBuilder(lambda).remove(*lambda.largest(), i - 1).build();
    for (std::uint64_t step = 1; step < i; ++step) {
        current = raise(current, r);
    }
    return current;
}

std::vector<Partition> family_set(const Partition& lambda) {
    require_base(lambda);
    std::vector<Partition> out;
    const std::uint64_t m = lambda.largest_multiplicity();
    out.reserve(m);
    for (std::uint64_t i = 1; i <= m; ++i) {
        out.push_back(rho(lambda, i));
    }
    return out;
}

bool in_base_family(const Partition& p, Parity parity) {
    if (p.empty() || !is_gap_free(p) || *p.smallest() != 1) return false;
    const bool odd_top = *p.largest() % 2 == 1;
    return parity == Parity::Odd ? odd_top : !odd_top;
}

Witness trace_back(const Partition& mu, Parity parity) {
    require_gap_free(mu);
    const std::uint64_t blocks_in_mu = mu.distinct_count();
    if (parity == Parity::Even && blocks_in_mu == 1) {
        throw std::invalid_argument(to_string(mu) + " has a single block and is not covered by the even family");
    }
    if (in_base_family(mu, parity)) {
        return {mu, 1};
    }

    // Largest odd (resp. even) number not exceeding the block count.
    const bool want_odd = parity == Parity::Odd;
    const std::uint64_t r = (blocks_in_mu % 2 == 1) == want_odd ? blocks_in_mu : blocks_in_mu - 1;

    Partition current = mu;
    std::uint64_t step = 1;
    const std::uint64_t budget = mu.weight();
    while (!in_base_family(current, parity)) {
        if (step > budget) {
            throw std::logic_error("trace_back did not reach the base family from " + to_string(mu));
        }
        current = lower(current, r);
        ++step;
    }
    const std::uint64_t index = step;
    Witness w{PartitionBuilder(current).add(r, index - 1).build(), index};

    if (index > w.base.largest_multiplicity() || rho(w.base, index) != mu) {
        throw std::logic_error("trace_back witness does not regenerate " + to_string(mu));
    }
    return w;
}

Decomposition cover(std::uint64_t n, Parity parity) {
    if (n == 0) {
        throw std::invalid_argument("gap-free cover requires n >= 1");
    }
    const auto spec = parity == Parity::Odd ? FamilySpec::gap_free_odd_top() : FamilySpec::gap_free_even_top();
    Decomposition out;
    for (auto& lambda : enumerate(n, spec)) {
        auto image = conjugate(lambda);
        CoverSet set{lambda.largest_multiplicity(), family_set(lambda)};
        out.rows.push_back(CoverRow{std::move(lambda), std::move(image), {std::move(set)}});
    }
    std::stable_sort(out.rows.begin(), out.rows.end(), [](const CoverRow& a, const CoverRow& b) {
        return nonincreasing_lex_less(a.image, b.image);
    });
    return out;
}

}  // namespace beckworks::gapfree
