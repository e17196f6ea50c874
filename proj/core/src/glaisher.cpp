#include "beckworks/glaisher.hpp"

#include <stdexcept>
#include <string>

#include "beckworks/kadic.hpp"

namespace beckworks::glaisher {

namespace {

void check_base(std::uint64_t k) {
    if (k < 2) {
        throw std::invalid_argument("Glaisher bijection requires k >= 2, got " + std::to_string(k));
    }
}

}  // namespace

Partition split(const Partition& p, std::uint64_t k) {
    check_base(k);
    PartitionBuilder out;
    for (const auto& r : p.runs()) {
        if (r.multiplicity >= k) {
            throw std::invalid_argument(to_string(p) + " is not in D_" + std::to_string(k) + ": part " +
                                        std::to_string(r.value) + " occurs " + std::to_string(r.multiplicity) +
                                        " times");
        }
        const auto f = kadic::k_free_factor(r.value, k);
        out.add(f.cofactor, r.multiplicity * kadic::power(k, f.exponent));
    }
    return out.build();
}

Partition merge(const Partition& p, std::uint64_t k) {
    check_base(k);
    PartitionBuilder out;
    for (const auto& r : p.runs()) {
        if (r.value % k == 0) {
            throw std::invalid_argument(to_string(p) + " is not in O_" + std::to_string(k) + ": part " +
                                        std::to_string(r.value) + " is divisible by " + std::to_string(k));
        }
        for (const auto& t : kadic::digits(r.multiplicity, k).terms) {
            out.add(r.value * kadic::power(k, t.exponent), t.digit);
        }
    }
    return out.build();
}

}  // namespace beckworks::glaisher
