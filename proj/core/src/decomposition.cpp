#include "beckworks/decomposition.hpp"

namespace beckworks {

std::size_t CoverRow::member_count() const {
    std::size_t total = 0;
    for (const auto& s : sets) total += s.members.size();
    return total;
}

std::size_t Decomposition::member_count() const {
    std::size_t total = 0;
    for (const auto& r : rows) total += r.member_count();
    return total;
}

std::size_t Decomposition::nonempty_row_count() const {
    std::size_t total = 0;
    for (const auto& r : rows) total += r.member_count() != 0 ? 1 : 0;
    return total;
}

std::vector<Partition> Decomposition::members() const {
    std::vector<Partition> out;
    for (const auto& r : rows) {
        for (const auto& s : r.sets) {
            out.insert(out.end(), s.members.begin(), s.members.end());
        }
    }
    return out;
}

}  // namespace beckworks
