#include "beckworks/beck_two.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "beckworks/families.hpp"
#include "beckworks/glaisher.hpp"
#include "beckworks/kadic.hpp"

namespace beckworks::beck_two {

namespace {

void check_base(std::uint64_t k) {
    if (k < 2) {
        throw std::invalid_argument("T_k construction requires k >= 2, got " + std::to_string(k));
    }
}

}  // namespace

std::vector<FactorClass> factor_classes(const Partition& p, std::uint64_t k) {
    check_base(k);
    std::map<std::uint64_t, std::vector<unsigned>> by_cofactor;
    for (const auto& r : p.runs()) {
        const auto f = kadic::k_free_factor(r.value, k);
        by_cofactor[f.cofactor].push_back(f.exponent);
    }
    std::vector<FactorClass> out;
    out.reserve(by_cofactor.size());
    for (auto& [d, exps] : by_cofactor) {
        // Runs ascend by value, so exponents within a class already ascend.
        out.push_back({d, std::move(exps)});
    }
    return out;
}

std::vector<Element> expand_class(const Partition& lambda, std::uint64_t k, std::uint64_t cofactor) {
    check_base(k);
    if (cofactor == 0 || cofactor % k == 0) {
        throw std::invalid_argument("cofactor " + std::to_string(cofactor) + " must be positive and not divisible by k");
    }
    if (!contains(FamilySpec::k_distinct(k), lambda)) {
        throw std::invalid_argument(to_string(lambda) + " is not in D_" + std::to_string(k));
    }
    const auto classes = factor_classes(lambda, k);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const FactorClass& c) { return c.cofactor == cofactor; });
    if (it == classes.end()) {
        throw std::invalid_argument(to_string(lambda) + " has no part in the factor class of " +
                                    std::to_string(cofactor));
    }

    const auto& ladder = it->exponents;
    std::vector<Element> out;
    for (std::size_t i = 0; i + 1 < ladder.size(); ++i) {
        const unsigned lo = ladder[i];
        const unsigned hi = ladder[i + 1];
        PartitionBuilder b(lambda);
        b.remove(kadic::power(k, hi) * cofactor, 1);
        b.add(kadic::power(k, lo) * cofactor, k);
        for (unsigned t = lo + 1; t < hi; ++t) {
            b.add(kadic::power(k, t) * cofactor, k - 1);
        }
        out.push_back({Witness{lambda, cofactor, i + 1}, b.build()});
    }
    return out;
}

Decomposition decompose(std::uint64_t n, std::uint64_t k) {
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    Decomposition out;
    if (k == 1) {
        return out;
    }
    auto bases = enumerate(n, FamilySpec::k_distinct(k));
    std::stable_sort(bases.begin(), bases.end(), nonincreasing_lex_less);
    out.rows.reserve(bases.size());
    for (auto& lambda : bases) {
        CoverRow row{lambda, glaisher::split(lambda, k), {}};
        for (const auto& cls : factor_classes(lambda, k)) {
            CoverSet set{cls.cofactor, {}};
            for (auto& e : expand_class(lambda, k, cls.cofactor)) {
                set.members.push_back(std::move(e.partition));
            }
            row.sets.push_back(std::move(set));
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

Witness carry_merge(const Partition& tau, std::uint64_t k) {
    check_base(k);
    if (!contains(FamilySpec::t_family(k), tau)) {
        throw std::invalid_argument(to_string(tau) + " is not in T_" + std::to_string(k));
    }
    const auto runs = tau.runs();
    const auto heavy = std::find_if(runs.begin(), runs.end(), [&](const Run& r) { return r.multiplicity >= k; });
    const auto start = kadic::k_free_factor(heavy->value, k);

    PartitionBuilder b(tau);
    std::uint64_t value = heavy->value;
    while (b.multiplicity(value) >= k) {
        b.remove(value, k);
        value *= k;
        b.add(value, 1);
    }
    auto lambda = b.build();
    if (lambda.weight() != tau.weight()) {
        throw std::logic_error("carry_merge changed the weight of " + to_string(tau));
    }

    const auto classes = factor_classes(lambda, k);
    const auto cls = std::find_if(classes.begin(), classes.end(),
                                  [&](const FactorClass& c) { return c.cofactor == start.cofactor; });
    const auto pos = std::find(cls->exponents.begin(), cls->exponents.end(), start.exponent);
    if (pos == cls->exponents.end()) {
        throw std::logic_error("carry_merge lost the over-full part of " + to_string(tau));
    }
    Witness w{std::move(lambda), start.cofactor, static_cast<std::uint64_t>(pos - cls->exponents.begin()) + 1};

    const auto regenerated = expand_class(w.base, k, w.cofactor);
    if (w.index > regenerated.size() || regenerated[w.index - 1].partition != tau) {
        throw std::logic_error("carry_merge witness does not regenerate " + to_string(tau));
    }
    return w;
}

}  // namespace beckworks::beck_two
