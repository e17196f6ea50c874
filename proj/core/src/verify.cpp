#include "beckworks/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "beckworks/beck_one.hpp"
#include "beckworks/beck_two.hpp"
#include "beckworks/families.hpp"
#include "beckworks/gapfree.hpp"

namespace beckworks::verify {

namespace {

constexpr std::array<std::string_view, 11> kNames = {
    "euler", "glaisher", "franklin", "beck1", "beck1-k2", "beck2",
    "beck2-k2", "gapfree-odd", "gapfree-even", "divisor", "futang",
};

bool takes_k(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::Glaisher:
        case IdentityKind::Franklin:
        case IdentityKind::BeckOneGeneral:
        case IdentityKind::BeckTwoGeneral:
        case IdentityKind::FuTang:
            return true;
        default:
            return false;
    }
}

std::uint64_t min_k(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::BeckOneGeneral:
        case IdentityKind::FuTang:
            return 2;
        default:
            return 1;
    }
}

std::int64_t signed_count(std::uint64_t v) {
    return static_cast<std::int64_t>(v);
}

// Checks that a cover is duplicate-free, stays inside `family`, and has
// exactly `expected` members; together these make it equal to the family.
std::optional<std::string> check_cover(const Decomposition& cover, const FamilySpec& family,
                                       std::uint64_t expected, bool (*extra)(const Partition&) = nullptr) {
    std::unordered_set<Partition> seen;
    for (const auto& p : cover.members()) {
        if (!contains(family, p) || (extra != nullptr && !extra(p))) {
            return "cover member " + to_string(p) + " lies outside " + family.describe();
        }
        if (!seen.insert(p).second) {
            return "cover member " + to_string(p) + " generated twice";
        }
    }
    if (seen.size() != expected) {
        return "cover has " + std::to_string(seen.size()) + " members, family has " + std::to_string(expected);
    }
    return std::nullopt;
}

bool has_two_blocks(const Partition& p) {
    return p.distinct_count() >= 2;
}

}  // namespace

std::string_view IdentityId::name() const noexcept {
    return kNames[static_cast<std::size_t>(kind)];
}

std::string IdentityId::describe() const {
    std::string out(name());
    if (m) {
        out += "(k=" + std::to_string(k.value_or(0)) + ",m=" + std::to_string(*m) + ")";
    } else if (k) {
        out += "(k=" + std::to_string(*k) + ")";
    }
    return out;
}

void IdentityId::validate() const {
    if (takes_k(kind)) {
        if (!k) {
            throw std::invalid_argument(std::string(name()) + " needs a k parameter");
        }
        if (*k < min_k(kind)) {
            throw std::invalid_argument(describe() + ": k must be at least " + std::to_string(min_k(kind)));
        }
    } else if (k) {
        throw std::invalid_argument(std::string(name()) + " takes no k parameter");
    }
    if (kind == IdentityKind::Franklin) {
        if (!m) throw std::invalid_argument("franklin needs an m parameter");
    } else if (m) {
        throw std::invalid_argument(std::string(name()) + " takes no m parameter");
    }
}

std::optional<IdentityKind> identity_kind_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return static_cast<IdentityKind>(i);
    }
    return std::nullopt;
}

std::span<const std::string_view> identity_names() {
    return kNames;
}

std::vector<IdentityId> expand_identity(IdentityKind kind, std::uint64_t k_lo, std::uint64_t k_hi,
                                        std::uint64_t m_lo, std::uint64_t m_hi) {
    std::vector<IdentityId> out;
    if (!takes_k(kind)) {
        out.push_back(IdentityId{kind, std::nullopt, std::nullopt});
        return out;
    }
    for (std::uint64_t k = std::max(k_lo, min_k(kind)); k <= k_hi; ++k) {
        if (kind == IdentityKind::Franklin) {
            for (std::uint64_t m = m_lo; m <= m_hi; ++m) out.push_back(IdentityId{kind, k, m});
        } else {
            out.push_back(IdentityId{kind, k, std::nullopt});
        }
    }
    return out;
}

std::vector<IdentityId> full_catalog(std::uint64_t k_lo, std::uint64_t k_hi, std::uint64_t m_lo,
                                     std::uint64_t m_hi) {
    std::vector<IdentityId> out;
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        auto part = expand_identity(static_cast<IdentityKind>(i), k_lo, k_hi, m_lo, m_hi);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) ++total;
    }
    return total;
}

IdentityReport evaluate(const IdentityId& id, std::uint64_t n) {
    id.validate();
    IdentityReport rep;
    rep.id = id;
    rep.n = n;
    std::optional<std::string> structural;

    switch (id.kind) {
        case IdentityKind::Euler:
            rep.lhs = signed_count(count(n, FamilySpec::k_distinct(2)));
            rep.rhs = signed_count(count_filtered(n, FamilySpec::k_regular(2)));
            break;
        case IdentityKind::Glaisher:
            rep.lhs = signed_count(count(n, FamilySpec::k_distinct(*id.k)));
            rep.rhs = signed_count(count_filtered(n, FamilySpec::k_regular(*id.k)));
            break;
        case IdentityKind::Franklin:
            rep.lhs = signed_count(count(n, FamilySpec::franklin_left(*id.k, *id.m)));
            rep.rhs = signed_count(count_filtered(n, FamilySpec::franklin_right(*id.k, *id.m)));
            break;
        case IdentityKind::BeckOneGeneral: {
            const auto k = *id.k;
            const auto target = FamilySpec::one_divisible(k);
            const auto family_size = count(n, target);
            const auto diff = signed_count(aggregate(n, FamilySpec::k_regular(k), Statistic::length())) -
                              signed_count(aggregate(n, FamilySpec::k_distinct(k), Statistic::length()));
            const auto divisor = static_cast<std::int64_t>(k - 1);
            if (diff % divisor != 0) {
                structural = "length difference " + std::to_string(diff) + " not divisible by k-1";
            }
            const auto decomposition = beck_one::decompose(n, k);
            rep.lhs = signed_count(family_size);
            rep.rhs = diff / divisor;
            rep.rhs2 = signed_count(decomposition.member_count());
            if (!structural) structural = check_cover(decomposition, target, family_size);
            break;
        }
        case IdentityKind::BeckOneK2Triple:
            rep.lhs = signed_count(count(n, FamilySpec::one_divisible(2)));
            rep.rhs = signed_count(aggregate(n, FamilySpec::k_regular(2), Statistic::length())) -
                      signed_count(aggregate(n, FamilySpec::k_distinct(2), Statistic::length()));
            rep.rhs2 = signed_count(count_filtered(n, FamilySpec::one_repeated(2)));
            break;
        case IdentityKind::BeckTwoGeneral: {
            const auto k = *id.k;
            const auto target = FamilySpec::t_family(k);
            const auto family_size = count(n, target);
            const auto decomposition = beck_two::decompose(n, k);
            rep.lhs = signed_count(family_size);
            rep.rhs = signed_count(aggregate(n, FamilySpec::k_distinct(k), Statistic::distinct_count())) -
                      signed_count(aggregate(n, FamilySpec::k_regular(k), Statistic::distinct_count()));
            rep.rhs2 = signed_count(decomposition.member_count());
            structural = check_cover(decomposition, target, family_size);
            break;
        }
        case IdentityKind::BeckTwoK2:
            rep.lhs = signed_count(count_filtered(n, FamilySpec::t_family(2)));
            rep.rhs = signed_count(aggregate(n, FamilySpec::k_distinct(2), Statistic::distinct_count())) -
                      signed_count(aggregate(n, FamilySpec::k_regular(2), Statistic::distinct_count()));
            break;
        case IdentityKind::GapFreeOdd: {
            const auto family_size = count(n, FamilySpec::gap_free());
            const auto decomposition = gapfree::cover(n, gapfree::Parity::Odd);
            rep.lhs = signed_count(family_size);
            rep.rhs = signed_count(aggregate(n, FamilySpec::distinct_odd_length(), Statistic::smallest()));
            rep.rhs2 = signed_count(decomposition.member_count());
            structural = check_cover(decomposition, FamilySpec::gap_free(), family_size);
            break;
        }
        case IdentityKind::GapFreeEven: {
            const auto family_size = count(n, FamilySpec::gap_free());
            const auto rectangles = divisor_count(n);
            const auto decomposition = gapfree::cover(n, gapfree::Parity::Even);
            rep.lhs = signed_count(family_size) - signed_count(rectangles);
            rep.rhs = signed_count(aggregate(n, FamilySpec::distinct_even_length(), Statistic::smallest()));
            rep.rhs2 = signed_count(decomposition.member_count());
            structural = check_cover(decomposition, FamilySpec::gap_free(), family_size - rectangles, has_two_blocks);
            break;
        }
        case IdentityKind::DivisorIdentity:
            rep.lhs = signed_count(aggregate(n, FamilySpec::distinct_odd_length(), Statistic::smallest())) -
                      signed_count(aggregate(n, FamilySpec::distinct_even_length(), Statistic::smallest()));
            rep.rhs = signed_count(divisor_count(n));
            break;
        case IdentityKind::FuTang: {
            const auto k = *id.k;
            rep.lhs = signed_count(count(n, FamilySpec::one_divisible(k)));
            rep.rhs = signed_count(count_filtered(n, FamilySpec::one_repeated(k)));
            rep.rhs2 = signed_count(aggregate(n, FamilySpec::k_regular(k), Statistic::parts_congruent_one_mod(k))) -
                       signed_count(aggregate(n, FamilySpec::k_distinct(k), Statistic::distinct_count()));
            break;
        }
    }

    rep.pass = rep.lhs == rep.rhs && (!rep.rhs2 || *rep.rhs2 == rep.lhs) && !structural;
    if (!rep.pass) {
        std::string diag = id.describe() + " fails at n=" + std::to_string(n) + ": lhs=" + std::to_string(rep.lhs) +
                           " rhs=" + std::to_string(rep.rhs);
        if (rep.rhs2) diag += " rhs2=" + std::to_string(*rep.rhs2);
        if (structural) diag += "; " + *structural;
        rep.counterexample = std::move(diag);
    }
    return rep;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("BECKWORKS_THREADS"); env != nullptr) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SuiteResult run_suite(std::span<const IdentityId> ids, std::uint64_t n_max, unsigned threads) {
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    for (const auto& id : ids) id.validate();

    struct Task {
        const IdentityId* id;
        std::uint64_t n;
    };
    std::vector<Task> tasks;
    tasks.reserve(ids.size() * n_max);
    for (const auto& id : ids) {
        for (std::uint64_t n = 1; n <= n_max; ++n) tasks.push_back({&id, n});
    }

    SuiteResult result;
    result.reports.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            try {
                result.reports[i] = evaluate(*tasks[i].id, tasks[i].n);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = tasks.size();
            }
        }
    };

    const unsigned workers = std::max(1u, threads == 0 ? default_thread_count() : threads);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    for (std::size_t i = 0; i < result.reports.size(); ++i) {
        if (result.reports[i].pass) {
            ++result.passed;
        } else if (!result.first_failure) {
            result.first_failure = i;
        }
    }
    return result;
}

}  // namespace beckworks::verify
