#pragma once

#include <cstdint>
#include <vector>

// Base-k arithmetic on multiplicities and part values. k is always a runtime
// argument; every function rejects k < 2.
namespace beckworks::kadic {

struct Term {
    std::uint64_t digit = 0;  // in [1, k-1]
    unsigned exponent = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Nonzero digits of a base-k expansion, highest exponent first.
struct Digits {
    std::uint64_t base = 0;
    std::vector<Term> terms;

    std::uint64_t value() const;
};

/// n = base^exponent * cofactor with base not dividing cofactor.
struct KFreeFactorization {
    std::uint64_t base = 0;
    unsigned exponent = 0;
    std::uint64_t cofactor = 0;

    friend bool operator==(const KFreeFactorization&, const KFreeFactorization&) = default;
};

Digits digits(std::uint64_t m, std::uint64_t k);

/// p(m): sum of the base-k digits of m.
std::uint64_t digit_sum(std::uint64_t m, std::uint64_t k);

/// a(m): floor(log_k m).
unsigned highest_exponent(std::uint64_t m, std::uint64_t k);

KFreeFactorization k_free_factor(std::uint64_t n, std::uint64_t k);

/// k^e, throwing std::overflow_error past 64 bits.
std::uint64_t power(std::uint64_t k, unsigned e);

}  // namespace beckworks::kadic
