#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "beckworks/beck_one.hpp"
#include "beckworks/beck_two.hpp"
#include "beckworks/families.hpp"
#include "beckworks/gapfree.hpp"
#include "beckworks/glaisher.hpp"
#include "beckworks/partition.hpp"

namespace beckworks::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Raised for argument combinations CLI11 cannot express; mapped to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw UsageError("invalid " + std::string(what) + " \"" + std::string(s) + "\"");
    }
    return v;
}

// "3" or "2..5".
Range parse_range(std::string_view s, std::string_view what) {
    if (auto dots = s.find(".."); dots != std::string_view::npos) {
        Range r{parse_uint(s.substr(0, dots), what), parse_uint(s.substr(dots + 2), what)};
        if (r.lo > r.hi) {
            throw UsageError(std::string(what) + " range \"" + std::string(s) + "\" is empty");
        }
        return r;
    }
    const auto v = parse_uint(s, what);
    return {v, v};
}

std::string csv_quote(const std::string& s) {
    return "\"" + s + "\"";
}

std::string render_set(const CoverSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (i != 0) out += ',';
        out += to_string(s.members[i]);
    }
    return out + "}";
}

std::string render_sets(const CoverRow& row) {
    std::string out;
    for (const auto& s : row.sets) {
        if (s.members.empty()) continue;
        if (!out.empty()) out += ", ";
        out += render_set(s);
    }
    return out.empty() ? "{}" : out;
}

bool image_first(Cover t) {
    return t == Cover::GapFreeOdd || t == Cover::GapFreeEven;
}

std::string table_header(Cover t, std::uint64_t n, std::uint64_t k) {
    const auto N = "(" + std::to_string(n) + ")";
    const auto K = std::to_string(k);
    switch (t) {
        case Cover::BeckOne:
            return "O_" + K + N + "\tD_" + K + N + "\tO_{1," + K + "}" + N;
        case Cover::BeckTwo:
            return "D_" + K + N + "\tO_" + K + N + "\tT_" + K + N;
        case Cover::GapFreeOdd:
            return "D_O" + N + "\tG_I" + N + "\tG" + N;
        case Cover::GapFreeEven:
            return "D_E" + N + "\tG_I'" + N + "\tG" + N + "-G0" + N;
    }
    return {};
}

Decomposition build_decomposition(Cover t, std::uint64_t n, std::uint64_t k) {
    switch (t) {
        case Cover::BeckOne:
            return beck_one::decompose(n, k);
        case Cover::BeckTwo:
            return beck_two::decompose(n, k);
        case Cover::GapFreeOdd:
            return gapfree::cover(n, gapfree::Parity::Odd);
        case Cover::GapFreeEven:
            return gapfree::cover(n, gapfree::Parity::Even);
    }
    return {};
}

void write_enumeration(std::uint64_t n, const FamilySpec& spec, const std::string& format, std::ostream& out) {
    if (format == "csv") out << "n,partition,length,distinct_count\n";
    for_each_member(n, spec, [&](std::span<const Run> runs) {
        const auto p = Partition::from_runs(std::vector<Run>(runs.begin(), runs.end()));
        if (format == "text") {
            out << to_string(p) << '\n';
        } else if (format == "json") {
            ordered_json j;
            j["n"] = n;
            j["partition"] = to_string(p);
            j["length"] = p.length();
            j["distinct_count"] = p.distinct_count();
            out << j.dump() << '\n';
        } else {
            out << n << ',' << csv_quote(to_string(p)) << ',' << p.length() << ',' << p.distinct_count() << '\n';
        }
    });
}

void write_decomposition(const Decomposition& d, Cover t, std::uint64_t n, std::uint64_t k, bool drop_empty,
                         const std::string& format, std::ostream& out) {
    if (format == "text") {
        out << render_text_table(d, t, n, k, drop_empty);
        return;
    }
    if (format == "csv") out << "base,image,key,member\n";
    for (const auto& row : d.rows) {
        if (drop_empty && row.member_count() == 0) continue;
        if (format == "json") {
            ordered_json j;
            j["base"] = to_string(row.base);
            j["image"] = to_string(row.image);
            j["sets"] = ordered_json::array();
            for (const auto& s : row.sets) {
                ordered_json set;
                set["key"] = s.key;
                set["members"] = ordered_json::array();
                for (const auto& p : s.members) set["members"].push_back(to_string(p));
                j["sets"].push_back(std::move(set));
            }
            out << j.dump() << '\n';
        } else {
            for (const auto& s : row.sets) {
                for (const auto& p : s.members) {
                    out << csv_quote(to_string(row.base)) << ',' << csv_quote(to_string(row.image)) << ','
                        << s.key << ',' << csv_quote(to_string(p)) << '\n';
                }
            }
        }
    }
}

std::vector<verify::IdentityId> select_identities(const std::string& names, Range k, Range m) {
    std::vector<verify::IdentityId> out;
    std::stringstream ss(names);
    for (std::string name; std::getline(ss, name, ',');) {
        if (name == "all") {
            auto all = verify::full_catalog(k.lo, k.hi, m.lo, m.hi);
            out.insert(out.end(), all.begin(), all.end());
            continue;
        }
        const auto kind = verify::identity_kind_from_name(name);
        if (!kind) {
            throw UsageError("unknown identity \"" + name + "\"");
        }
        auto ids = verify::expand_identity(*kind, k.lo, k.hi, m.lo, m.hi);
        if (ids.empty()) {
            throw UsageError("k range " + std::to_string(k.lo) + ".." + std::to_string(k.hi) +
                             " is empty for identity " + name);
        }
        out.insert(out.end(), ids.begin(), ids.end());
    }
    if (out.empty()) {
        throw UsageError("no identities selected");
    }
    return out;
}

}  // namespace

std::string render_text_table(const Decomposition& d, Cover cover, std::uint64_t n, std::uint64_t k,
                              bool drop_empty) {
    std::string out = table_header(cover, n, k) + "\n";
    for (const auto& row : d.rows) {
        if (drop_empty && row.member_count() == 0) continue;
        const auto& first = image_first(cover) ? row.image : row.base;
        const auto& second = image_first(cover) ? row.base : row.image;
        out += to_string(first) + "\t" + to_string(second) + "\t" + render_sets(row) + "\n";
    }
    return out;
}

std::string report_json_line(const verify::IdentityReport& r) {
    ordered_json j;
    j["identity"] = std::string(r.id.name());
    if (r.id.k) j["k"] = *r.id.k;
    if (r.id.m) j["m"] = *r.id.m;
    j["n"] = r.n;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (r.rhs2) j["rhs2"] = *r.rhs2;
    j["pass"] = r.pass;
    return j.dump();
}

std::string report_csv_header() {
    return "identity,k,m,n,lhs,rhs,rhs2,pass";
}

std::string report_csv_line(const verify::IdentityReport& r) {
    std::string out(r.id.name());
    out += ',' + (r.id.k ? std::to_string(*r.id.k) : std::string());
    out += ',' + (r.id.m ? std::to_string(*r.id.m) : std::string());
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.lhs);
    out += ',' + std::to_string(r.rhs);
    out += ',' + (r.rhs2 ? std::to_string(*r.rhs2) : std::string());
    out += r.pass ? ",true" : ",false";
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructive partition bijections and identity verification", "beckworks"};
    app.require_subcommand(1);

    const std::vector<std::string> formats = {"text", "json", "csv"};

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List the partitions of n in a family");
    std::uint64_t enum_n = 0;
    std::string family;
    std::optional<std::uint64_t> enum_k;
    std::uint64_t enum_m = 0;
    std::string enum_format = "text";
    enumerate_cmd->add_option("--n", enum_n, "Weight")->required();
    enumerate_cmd->add_option("--family", family, "Family name")->required();
    enumerate_cmd->add_option("--k", enum_k, "Family parameter k");
    enumerate_cmd->add_option("--m", enum_m, "Franklin parameter m");
    enumerate_cmd->add_option("--format", enum_format)->check(CLI::IsMember(formats));

    // map
    auto* map_cmd = app.add_subcommand("map", "Apply a bijection to one partition");
    std::string bijection;
    std::optional<std::uint64_t> map_k;
    std::string partition_text;
    map_cmd->add_option("--bijection", bijection)
        ->required()
        ->check(CLI::IsMember({"glaisher-split", "glaisher-merge", "conjugate"}));
    map_cmd->add_option("--k", map_k, "Glaisher base k");
    map_cmd->add_option("--partition", partition_text, "Partition, e.g. \"(1^3,2^3)\"")->required();

    // decompose
    auto* decompose_cmd = app.add_subcommand("decompose", "Print a constructive cover as a correspondence table");
    std::string theorem_name;
    std::uint64_t dec_n = 0;
    std::optional<std::uint64_t> dec_k;
    std::optional<std::string> parity_name;
    bool drop_empty = false;
    std::string dec_format = "text";
    decompose_cmd->add_option("--theorem", theorem_name)->required()->check(CLI::IsMember({"beck1", "beck2", "beck3"}));
    decompose_cmd->add_option("--n", dec_n)->required();
    decompose_cmd->add_option("--k", dec_k);
    decompose_cmd->add_option("--parity", parity_name)->check(CLI::IsMember({"odd", "even"}));
    decompose_cmd->add_flag("--paper-table", drop_empty, "Drop rows that generate nothing");
    decompose_cmd->add_option("--format", dec_format)->check(CLI::IsMember(formats));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check identities for n = 1..n-max");
    std::string identity_names = "all";
    std::uint64_t n_max = 0;
    std::string k_range_text = "2..5";
    std::string m_range_text = "0..3";
    std::string out_path = "-";
    std::string verify_format = "json";
    std::optional<unsigned> threads;
    verify_cmd->add_option("--identity", identity_names, "Comma-separated identity names or \"all\"");
    verify_cmd->add_option("--n-max", n_max)->required();
    verify_cmd->add_option("--k", k_range_text, "k or k_lo..k_hi");
    verify_cmd->add_option("--m", m_range_text, "m or m_lo..m_hi (franklin)");
    verify_cmd->add_option("--out", out_path, "Report path, - for stdout");
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--threads", threads, "Worker threads (default: BECKWORKS_THREADS or all cores)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate_cmd->parsed()) {
            auto spec = family_from_name(family, enum_k.value_or(0), enum_m);
            if (!spec) {
                throw UsageError("unknown family \"" + family + "\"");
            }
            if (spec->uses_k() && !enum_k && family != "odd" && family != "distinct") {
                throw UsageError("family " + family + " requires --k");
            }
            spec->validate();
            write_enumeration(enum_n, *spec, enum_format, out);
            return kExitOk;
        }

        if (map_cmd->parsed()) {
            const auto p = parse_partition(partition_text);
            if (bijection == "conjugate") {
                out << to_string(conjugate(p)) << '\n';
                return kExitOk;
            }
            if (!map_k) {
                throw UsageError(bijection + " requires --k");
            }
            const auto image = bijection == "glaisher-split" ? glaisher::split(p, *map_k) : glaisher::merge(p, *map_k);
            out << to_string(image) << '\n';
            return kExitOk;
        }

        if (decompose_cmd->parsed()) {
            Cover cover = Cover::BeckOne;
            if (theorem_name == "beck3") {
                if (!parity_name) throw UsageError("--theorem beck3 requires --parity odd|even");
                if (dec_k) throw UsageError("--theorem beck3 takes no --k");
                cover = *parity_name == "odd" ? Cover::GapFreeOdd : Cover::GapFreeEven;
            } else {
                if (parity_name) throw UsageError("--parity applies only to --theorem beck3");
                if (!dec_k) throw UsageError("--theorem " + theorem_name + " requires --k");
                cover = theorem_name == "beck1" ? Cover::BeckOne : Cover::BeckTwo;
            }
            const auto d = build_decomposition(cover, dec_n, dec_k.value_or(0));
            write_decomposition(d, cover, dec_n, dec_k.value_or(0), drop_empty, dec_format, out);
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            if (n_max < 1) throw UsageError("--n-max must be at least 1");
            const auto ids = select_identities(identity_names, parse_range(k_range_text, "k"),
                                               parse_range(m_range_text, "m"));
            for (const auto& id : ids) id.validate();

            std::ofstream file;
            std::ostream* sink = &out;
            if (out_path != "-") {
                file.open(out_path);
                if (!file) {
                    err << "error: cannot open " << out_path << " for writing\n";
                    return kExitIo;
                }
                sink = &file;
            }

            const auto result = verify::run_suite(ids, n_max, threads.value_or(0));
            if (verify_format == "csv") *sink << report_csv_header() << '\n';
            for (const auto& r : result.reports) {
                *sink << (verify_format == "csv" ? report_csv_line(r) : report_json_line(r)) << '\n';
            }
            sink->flush();
            if (!*sink) {
                err << "error: failed writing report\n";
                return kExitIo;
            }

            err << "verified " << result.passed << "/" << result.reports.size() << " reports";
            if (result.first_failure) {
                err << "; first failure: " << *result.reports[*result.first_failure].counterexample << '\n';
                return kExitFailure;
            }
            err << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace beckworks::cli
