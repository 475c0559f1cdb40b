#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lincor/bounds.hpp"
#include "lincor/gf2.hpp"
#include "lincor/weights.hpp"

namespace lincor {

/// One catalog line: code metadata plus either generator rows (hex) or a
/// cyclic generator polynomial (hex), with an optional weight-distribution
/// reference.
struct CatalogEntry {
    std::string name;
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> claimed_d;
    bool cyclic = false;
    std::vector<std::string> gen_rows;     // non-cyclic construction
    std::optional<std::string> gen_poly;   // cyclic construction
    std::optional<std::string> wd_ref;     // path, relative to the catalog file
    std::filesystem::path base_dir;        // where wd_ref resolves from

    std::optional<std::string> wd_path() const {
        if (!wd_ref)
            return std::nullopt;
        return (base_dir / *wd_ref).string();
    }

    bool wd_file_present() const {
        auto p = wd_path();
        return p && std::filesystem::exists(*p);
    }
};

/// Expands an entry into a validated code (rank, zero columns, k match).
inline BinaryLinearCode build_code(const CatalogEntry& e) {
    BinaryLinearCode code = [&] {
        if (e.gen_poly) {
            BitVector g = bitvector_from_hex(*e.gen_poly, 4 * e.gen_poly->size());
            return expand_cyclic(e.n, g, e.claimed_d, e.name, e.family);
        }
        std::vector<BitVector> rows;
        rows.reserve(e.gen_rows.size());
        for (const auto& hex : e.gen_rows)
            rows.push_back(bitvector_from_hex(hex, e.n));
        return BinaryLinearCode(BitMatrix(std::move(rows)), e.claimed_d, e.name, e.family);
    }();
    if (code.n() != e.n || code.k() != e.k)
        fail(ErrorKind::Integrity, e.name + ": construction expands to [" + std::to_string(code.n()) +
                                       "," + std::to_string(code.k()) + "], catalog says [" +
                                       std::to_string(e.n) + "," + std::to_string(e.k) + "]");
    code.require_no_zero_columns();
    return code;
}

namespace detail {

inline CatalogEntry parse_entry(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.family = j.value("family", std::string{});
    e.n = j.at("n").get<std::size_t>();
    e.k = j.at("k").get<std::size_t>();
    if (j.contains("d"))
        e.claimed_d = j.at("d").get<std::size_t>();
    e.cyclic = j.value("cyclic", false);
    const auto& con = j.at("construction");
    if (con.contains("gen_poly")) {
        e.gen_poly = con.at("gen_poly").get<std::string>();
        if (!e.cyclic)
            fail(ErrorKind::Integrity, e.name + ": gen_poly construction requires cyclic=true");
    } else if (con.contains("gen_rows")) {
        e.gen_rows = con.at("gen_rows").get<std::vector<std::string>>();
    } else {
        fail(ErrorKind::Integrity, e.name + ": construction needs gen_poly or gen_rows");
    }
    if (j.contains("wd_ref"))
        e.wd_ref = j.at("wd_ref").get<std::string>();
    e.base_dir = base_dir;
    return e;
}

} // namespace detail

struct CatalogIssue {
    std::size_t line;
    std::string name;
    std::string message;
};

/// Parses a JSON-lines catalog. Every entry is validated by expanding its
/// construction; invalid entries are reported with line numbers. In strict
/// mode the first invalid entry is fatal.
inline std::vector<CatalogEntry> load_catalog(const std::string& path,
                                              std::vector<CatalogIssue>* issues = nullptr,
                                              bool strict = false) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::Io, "cannot open catalog: " + path);
    std::filesystem::path base_dir = std::filesystem::path(path).parent_path();
    std::vector<CatalogEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            CatalogEntry e = detail::parse_entry(j, base_dir);
            build_code(e); // validation only
            if (e.wd_file_present()) {
                BinaryLinearCode code = build_code(e);
                read_wd_file(*e.wd_path(), e.n, e.k, e.claimed_d);
            }
            entries.push_back(std::move(e));
        } catch (const std::exception& ex) {
            if (strict)
                fail(ErrorKind::Integrity,
                     path + ":" + std::to_string(lineno) + ": " + ex.what());
            if (issues)
                issues->push_back({lineno, "", ex.what()});
        }
    }
    return entries;
}

/// Loads a single-code JSON file (same object schema as one catalog line).
inline CatalogEntry load_code_entry(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::Io, "cannot open code file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        fail(ErrorKind::Integrity, path + ": " + ex.what());
    }
    return detail::parse_entry(j, std::filesystem::path(path).parent_path());
}

/// One corrector with its solved required input rate; the unit of Pareto
/// selection. Non-trivial codes only: 0 < rate < 1.
struct CorrectorRecord {
    CatalogEntry entry;
    double rate;
    double h_in_req;
    BoundKind bound_kind;
    bool req_at_bracket_min = false;
};

struct SkippedEntry {
    std::string name;
    std::string reason;
};

/// Solves H_in_req for every processable entry. Old bound needs claimed_d;
/// new bound needs a weight distribution (ingested or computable within
/// max_dim). Unprocessable entries land on the skip list.
inline std::vector<CorrectorRecord> build_records(const std::vector<CatalogEntry>& entries,
                                                  BoundKind kind, double h_out1,
                                                  std::size_t max_dim = kDefaultMaxDim,
                                                  std::vector<SkippedEntry>* skipped = nullptr,
                                                  unsigned threads = 1) {
    std::vector<CorrectorRecord> records;
    for (const auto& e : entries) {
        auto skip = [&](const std::string& why) {
            if (skipped)
                skipped->push_back({e.name, why});
        };
        if (e.k == 0 || e.k >= e.n) {
            skip("trivial code (rate not in (0,1))");
            continue;
        }
        try {
            SolveResult sr;
            if (kind == BoundKind::OldMinDistance) {
                if (!e.claimed_d) {
                    skip("old bound needs a minimum distance");
                    continue;
                }
                sr = solve_h_in_req(BoundSpec::old_nkd(e.n, e.k, *e.claimed_d), h_out1);
            } else {
                std::optional<std::string> wd_file;
                if (e.wd_ref) {
                    if (!e.wd_file_present() && e.k > max_dim && e.n - e.k > max_dim) {
                        skip("weight distribution file missing: " + *e.wd_path());
                        continue;
                    }
                    if (e.wd_file_present())
                        wd_file = e.wd_path();
                }
                BinaryLinearCode code = build_code(e);
                WeightDistribution wd = wd_for_code(code, max_dim, wd_file, threads);
                sr = solve_h_in_req(BoundSpec::new_wd(wd, e.k), h_out1);
            }
            records.push_back({e, double(e.k) / double(e.n), sr.h_in_req.value, kind,
                               sr.at_bracket_min});
        } catch (const Error& ex) {
            skip(ex.what());
        }
    }
    return records;
}

/// Filters to correctors that genuinely raise the rate: h_in_req < h_out1.
inline std::vector<CorrectorRecord> appropriate(const std::vector<CorrectorRecord>& records,
                                                double h_out1) {
    std::vector<CorrectorRecord> out;
    for (const auto& r : records)
        if (r.h_in_req < h_out1)
            out.push_back(r);
    return out;
}

/// Optimal extracting correctors, sorted by ascending h_in_req with strictly
/// increasing rate: no survivor is dominated in (rate up, h_in_req down).
struct Frontier {
    std::vector<CorrectorRecord> records;
};

inline Frontier pareto_frontier(std::vector<CorrectorRecord> records) {
    if (records.empty())
        fail(ErrorKind::Domain, "pareto_frontier: no records");
    // equal (rate, h_in_req): keep the lexicographically smallest name
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.rate != b.rate)
            return a.rate > b.rate;
        if (a.h_in_req != b.h_in_req)
            return a.h_in_req < b.h_in_req;
        return a.entry.name < b.entry.name;
    });
    Frontier f;
    double best_req = HUGE_VAL;
    double last_rate = -1.0;
    for (const auto& r : records) {
        if (r.rate == last_rate && r.h_in_req >= best_req)
            continue; // dominated or duplicate within equal rate
        if (r.h_in_req < best_req) {
            f.records.push_back(r);
            best_req = r.h_in_req;
            last_rate = r.rate;
        }
    }
    std::reverse(f.records.begin(), f.records.end()); // ascending h_in_req
    return f;
}

/// Record with the largest h_in_req not exceeding the target; by the frontier
/// invariant this is also the highest-rate corrector usable at the target.
inline const CorrectorRecord& select_for_target(const Frontier& f, double h_in_target) {
    const CorrectorRecord* best = nullptr;
    for (const auto& r : f.records) {
        if (r.h_in_req <= h_in_target)
            best = &r;
        else
            break;
    }
    if (!best)
        fail(ErrorKind::Domain, "no corrector usable at h_in " + std::to_string(h_in_target) +
                                    "; frontier minimum h_in_req is " +
                                    std::to_string(f.records.front().h_in_req));
    return *best;
}

} // namespace lincor
