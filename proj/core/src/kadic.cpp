#include "beckworks/kadic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace beckworks::kadic {

namespace {

void check_args(std::uint64_t m, std::uint64_t k) {
    if (k < 2) {
        throw std::invalid_argument("base k must be at least 2, got " + std::to_string(k));
    }
    if (m == 0) {
        throw std::invalid_argument("base-k expansion requires a positive integer");
    }
}

}  // namespace

std::uint64_t Digits::value() const {
    std::uint64_t total = 0;
    for (const auto& t : terms) {
        total += t.digit * power(base, t.exponent);
    }
    return total;
}

Digits digits(std::uint64_t m, std::uint64_t k) {
    check_args(m, k);
    Digits out{k, {}};
    for (unsigned e = 0; m != 0; ++e, m /= k) {
        if (auto b = m % k; b != 0) {
            out.terms.push_back({b, e});
        }
    }
    std::reverse(out.terms.begin(), out.terms.end());
    return out;
}

std::uint64_t digit_sum(std::uint64_t m, std::uint64_t k) {
    check_args(m, k);
    std::uint64_t sum = 0;
    for (; m != 0; m /= k) {
        sum += m % k;
    }
    return sum;
}

unsigned highest_exponent(std::uint64_t m, std::uint64_t k) {
    check_args(m, k);
    unsigned e = 0;
    for (; m >= k; m /= k) {
        ++e;
    }
    return e;
}

KFreeFactorization k_free_factor(std::uint64_t n, std::uint64_t k) {
    check_args(n, k);
    KFreeFactorization out{k, 0, n};
    while (out.cofactor % k == 0) {
        out.cofactor /= k;
        ++out.exponent;
    }
    return out;
}

std::uint64_t power(std::uint64_t k, unsigned e) {
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(out, k, &out)) {
            throw std::overflow_error("k^e exceeds 64-bit range");
        }
    }
    return out;
}

}  // namespace beckworks::kadic
