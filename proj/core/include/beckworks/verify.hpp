#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beckworks::verify {

enum class IdentityKind {
    Euler,            // distinct partitions vs odd partitions
    Glaisher,         // |D_k(n)| = |O_k(n)|
    Franklin,         // m values repeated >= k times vs m values divisible by k
    BeckOneGeneral,   // |O_{1,k}| = (sum of lengths over O_k - over D_k) / (k-1)
    BeckOneK2Triple,  // k = 2: one even part = length difference = one repeated part
    BeckTwoGeneral,   // |T_k| = distinct-part totals over D_k minus over O_k
    BeckTwoK2,        // k = 2 case of the above
    GapFreeOdd,       // gap-free count = sum of smallest parts over odd-length distinct
    GapFreeEven,      // gap-free count - d(n) = same sum over even-length distinct
    DivisorIdentity,  // odd-length minus even-length smallest-part sums = d(n)
    FuTang,           // |O_{1,k}| = |D_{1,k}| = E_k(n)
};

struct IdentityId {
    IdentityKind kind = IdentityKind::Euler;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> m;

    static IdentityId euler() { return {IdentityKind::Euler, std::nullopt, std::nullopt}; }
    static IdentityId glaisher(std::uint64_t k) { return {IdentityKind::Glaisher, k, std::nullopt}; }
    static IdentityId franklin(std::uint64_t k, std::uint64_t m) { return {IdentityKind::Franklin, k, m}; }
    static IdentityId beck_one(std::uint64_t k) { return {IdentityKind::BeckOneGeneral, k, std::nullopt}; }
    static IdentityId beck_one_k2() { return {IdentityKind::BeckOneK2Triple, std::nullopt, std::nullopt}; }
    static IdentityId beck_two(std::uint64_t k) { return {IdentityKind::BeckTwoGeneral, k, std::nullopt}; }
    static IdentityId beck_two_k2() { return {IdentityKind::BeckTwoK2, std::nullopt, std::nullopt}; }
    static IdentityId gap_free_odd() { return {IdentityKind::GapFreeOdd, std::nullopt, std::nullopt}; }
    static IdentityId gap_free_even() { return {IdentityKind::GapFreeEven, std::nullopt, std::nullopt}; }
    static IdentityId divisor() { return {IdentityKind::DivisorIdentity, std::nullopt, std::nullopt}; }
    static IdentityId fu_tang(std::uint64_t k) { return {IdentityKind::FuTang, k, std::nullopt}; }

    /// Catalog name used on the command line and in reports.
    std::string_view name() const noexcept;
    /// Name plus parameters, e.g. "franklin(k=3,m=1)".
    std::string describe() const;
    /// Throws std::invalid_argument on missing or out-of-range parameters.
    void validate() const;

    friend bool operator==(const IdentityId&, const IdentityId&) = default;
};

std::optional<IdentityKind> identity_kind_from_name(std::string_view name);
std::span<const std::string_view> identity_names();

/// Instantiates the named identity over the parameter ranges (k-free
/// identities yield one id; Franklin yields every (k, m) pair).
std::vector<IdentityId> expand_identity(IdentityKind kind, std::uint64_t k_lo, std::uint64_t k_hi,
                                        std::uint64_t m_lo, std::uint64_t m_hi);

/// Every catalog identity, in catalog order, over the given ranges.
std::vector<IdentityId> full_catalog(std::uint64_t k_lo, std::uint64_t k_hi, std::uint64_t m_lo,
                                     std::uint64_t m_hi);

struct IdentityReport {
    IdentityId id;
    std::uint64_t n = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    std::optional<std::int64_t> rhs2;
    bool pass = false;
    /// Set on failure; names the identity, n, and a witness partition when
    /// the mismatch is at partition level.
    std::optional<std::string> counterexample;
};

/// Number of divisors by trial division.
std::uint64_t divisor_count(std::uint64_t n);

/// Evaluates both (or all three) sides of the identity at n through
/// different code paths: pruned enumeration, the unpruned filter oracle, and
/// the constructive covers. Cover-backed identities also check that the cover
/// is duplicate-free and lies inside the target family.
IdentityReport evaluate(const IdentityId& id, std::uint64_t n);

struct SuiteResult {
    std::vector<IdentityReport> reports;
    std::size_t passed = 0;
    std::optional<std::size_t> first_failure;  // index into reports

    bool all_passed() const noexcept { return !first_failure.has_value(); }
};

/// Reports for every (id, n), n = 1..n_max, in (catalog, n) order. Work is
/// spread over `threads` workers (0 = default_thread_count()).
SuiteResult run_suite(std::span<const IdentityId> ids, std::uint64_t n_max, unsigned threads = 0);

/// BECKWORKS_THREADS when set to a positive integer, else the hardware
/// concurrency (at least 1).
unsigned default_thread_count();

}  // namespace beckworks::verify
