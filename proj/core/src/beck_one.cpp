#include "beckworks/beck_one.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "beckworks/families.hpp"
#include "beckworks/glaisher.hpp"
#include "beckworks/kadic.hpp"

namespace beckworks::beck_one {

namespace {

void check_base(std::uint64_t k) {
    if (k < 2) {
        throw std::invalid_argument("the O_{1,k} cover requires k >= 2, got " + std::to_string(k));
    }
}

}  // namespace

Partition apply(const Witness& w, std::uint64_t k) {
    const std::uint64_t block = kadic::power(k, w.exponent);
    return PartitionBuilder(w.base)
        .remove(w.part, w.repeat * block)
        .add(w.part * block, w.repeat)
        .build();
}

std::vector<Element> expand(const Partition& lambda, std::uint64_t k, std::uint64_t part) {
    check_base(k);
    if (part % k == 0) {
        throw std::invalid_argument("part " + std::to_string(part) + " is divisible by k=" + std::to_string(k));
    }
    if (!contains(FamilySpec::k_regular(k), lambda)) {
        throw std::invalid_argument(to_string(lambda) + " is not in O_" + std::to_string(k));
    }
    const std::uint64_t m = lambda.multiplicity(part);
    if (m == 0) {
        throw std::invalid_argument(std::to_string(part) + " is not a part of " + to_string(lambda));
    }

    std::vector<Element> out;
    const unsigned top = kadic::highest_exponent(m, k);
    for (unsigned j = 1; j <= top; ++j) {
        const std::uint64_t block = kadic::power(k, j);
        for (std::uint64_t r = 1; r <= m / block; ++r) {
            Witness w{lambda, part, j, r};
            auto pi = apply(w, k);
            out.push_back({std::move(w), std::move(pi)});
        }
    }
    return out;
}

Decomposition decompose(std::uint64_t n, std::uint64_t k) {
    check_base(k);
    auto bases = enumerate(n, FamilySpec::k_regular(k));
    std::stable_sort(bases.begin(), bases.end(), nonincreasing_lex_less);

    Decomposition out;
    out.rows.reserve(bases.size());
    for (auto& lambda : bases) {
        CoverRow row{lambda, glaisher::merge(lambda, k), {}};
        for (const auto& run : lambda.runs()) {
            CoverSet set{run.value, {}};
            for (auto& e : expand(lambda, k, run.value)) {
                set.members.push_back(std::move(e.partition));
            }
            row.sets.push_back(std::move(set));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

Witness locate(const Partition& pi, std::uint64_t k) {
    check_base(k);
    const Run* divisible = nullptr;
    for (const auto& r : pi.runs()) {
        if (r.value % k != 0) continue;
        if (divisible != nullptr) {
            throw std::invalid_argument(to_string(pi) + " is not in O_{1," + std::to_string(k) +
                                        "}: more than one part value divisible by k");
        }
        divisible = &r;
    }
    if (divisible == nullptr) {
        throw std::invalid_argument(to_string(pi) + " is not in O_{1," + std::to_string(k) +
                                    "}: no part divisible by k");
    }

    const auto f = kadic::k_free_factor(divisible->value, k);
    const std::uint64_t repeat = divisible->multiplicity;
    auto base = PartitionBuilder(pi)
                    .remove(divisible->value, repeat)
                    .add(f.cofactor, repeat * kadic::power(k, f.exponent))
                    .build();
    return Witness{std::move(base), f.cofactor, f.exponent, repeat};
}

}  // namespace beckworks::beck_one
