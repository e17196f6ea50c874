#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "beckworks/decomposition.hpp"
#include "beckworks/verify.hpp"

namespace beckworks::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verify found a failing identity
inline constexpr int kExitUsage = 2;    // bad arguments or violated precondition
inline constexpr int kExitIo = 3;

enum class Cover { BeckOne, BeckTwo, GapFreeOdd, GapFreeEven };

/// Tab-separated table: a header line, then one line per row. Empty sets are
/// never printed; with `drop_empty` rows without members are dropped,
/// otherwise they show "{}".
std::string render_text_table(const Decomposition& d, Cover cover, std::uint64_t n, std::uint64_t k,
                              bool drop_empty);

/// One JSON object per report line:
/// {"identity","k"?,"m"?,"n","lhs","rhs","rhs2"?,"pass"}.
std::string report_json_line(const verify::IdentityReport& r);
std::string report_csv_header();
std::string report_csv_line(const verify::IdentityReport& r);

/// Runs the tool. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beckworks::cli
