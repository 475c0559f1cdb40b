// lincor: min-entropy bounds, corrector selection and bitstream
// post-processing for binary linear code based correctors.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lincor/bounds.hpp"
#include "lincor/catalog.hpp"
#include "lincor/engine.hpp"
#include "lincor/gf2.hpp"
#include "lincor/oracle.hpp"
#include "lincor/weights.hpp"

namespace {

using namespace lincor;

// deterministic 9-decimal real formatting, no locale
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

BoundKind parse_bound(const std::string& s) {
    if (s == "old")
        return BoundKind::OldMinDistance;
    if (s == "new")
        return BoundKind::NewWeightDistribution;
    fail(ErrorKind::Usage, "--bound must be 'old' or 'new'");
}

struct LoadedCode {
    CatalogEntry entry;
    BinaryLinearCode code;
};

LoadedCode load_code(const std::string& path) {
    CatalogEntry e = load_code_entry(path);
    BinaryLinearCode c = build_code(e);
    return {std::move(e), std::move(c)};
}

WeightDistribution wd_for_entry(const LoadedCode& lc, std::size_t max_dim, unsigned threads) {
    std::optional<std::string> wd_file;
    if (lc.entry.wd_file_present())
        wd_file = lc.entry.wd_path();
    return wd_for_code(lc.code, max_dim, wd_file, threads);
}

void print_kv(const std::string& format, const std::vector<std::pair<std::string, std::string>>& kv) {
    if (format == "json") {
        std::string out = "{";
        for (std::size_t i = 0; i < kv.size(); ++i) {
            if (i)
                out += ",";
            bool numeric = !kv[i].second.empty() &&
                           kv[i].second.find_first_not_of("0123456789.-") == std::string::npos;
            out += "\"" + kv[i].first + "\":";
            out += numeric ? kv[i].second : "\"" + kv[i].second + "\"";
        }
        std::cout << out << "}\n";
    } else if (format == "csv") {
        for (std::size_t i = 0; i < kv.size(); ++i)
            std::cout << kv[i].first << (i + 1 < kv.size() ? "," : "\n");
        for (std::size_t i = 0; i < kv.size(); ++i)
            std::cout << kv[i].second << (i + 1 < kv.size() ? "," : "\n");
    } else {
        for (const auto& [k, v] : kv)
            std::cout << k << ' ' << v << '\n';
    }
}

std::vector<CatalogEntry> load_filtered_catalog(const std::string& path, bool cyclic_only) {
    std::vector<CatalogIssue> issues;
    auto entries = load_catalog(path, &issues);
    for (const auto& i : issues)
        std::cerr << "warning: " << path << ":" << i.line << ": " << i.message << "\n";
    if (cyclic_only)
        std::erase_if(entries, [](const CatalogEntry& e) { return !e.cyclic; });
    return entries;
}

int run(int argc, char** argv) {
    CLI::App app{"min-entropy bounds and selection for linear correctors"};
    app.require_subcommand(1);

    std::string code_path, catalog_path, probs_path, out_path, in_path;
    std::string bound_name = "new", format = "text";
    double h_in = 0.0, h_out1 = 0.999;
    std::size_t max_dim = kDefaultMaxDim;
    unsigned threads = 1;
    bool cyclic_only = false;
    if (const char* env = std::getenv("THREADS"))
        threads = unsigned(std::strtoul(env, nullptr, 10));

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--max-dim", max_dim);
        sub->add_option("--threads", threads);
        sub->add_option("--out", out_path);
    };

    auto* sc_bound = app.add_subcommand("bound", "evaluate an output min-entropy bound");
    sc_bound->add_option("--code", code_path)->required();
    sc_bound->add_option("--bound", bound_name);
    sc_bound->add_option("--h-in", h_in)->required();
    add_common(sc_bound);

    auto* sc_solve = app.add_subcommand("solve", "required input min-entropy for a target output rate");
    sc_solve->add_option("--code", code_path)->required();
    sc_solve->add_option("--bound", bound_name);
    sc_solve->add_option("--h-out1", h_out1);
    add_common(sc_solve);

    auto* sc_wd = app.add_subcommand("wd", "weight distribution of a code");
    sc_wd->add_option("--code", code_path)->required();
    add_common(sc_wd);

    auto* sc_frontier = app.add_subcommand("frontier", "Pareto frontier of a corrector catalog");
    sc_frontier->add_option("--catalog", catalog_path)->required();
    sc_frontier->add_option("--bound", bound_name);
    sc_frontier->add_option("--h-out1", h_out1);
    sc_frontier->add_flag("--cyclic-only", cyclic_only);
    add_common(sc_frontier);

    auto* sc_select = app.add_subcommand("select", "best corrector for a target input min-entropy");
    sc_select->add_option("--catalog", catalog_path)->required();
    sc_select->add_option("--bound", bound_name);
    sc_select->add_option("--h-in", h_in)->required();
    sc_select->add_option("--h-out1", h_out1);
    sc_select->add_flag("--cyclic-only", cyclic_only);
    add_common(sc_select);

    auto* sc_apply = app.add_subcommand("apply", "post-process a raw bitstream");
    sc_apply->add_option("--code", code_path)->required();
    sc_apply->add_option("--in", in_path);
    add_common(sc_apply);

    auto* sc_verify = app.add_subcommand("verify", "brute-force check of the bounds for a small code");
    sc_verify->add_option("--code", code_path)->required();
    sc_verify->add_option("--probs", probs_path)->required();
    add_common(sc_verify);

    CLI11_PARSE(app, argc, argv);

    std::ofstream out_file;
    std::streambuf* saved = nullptr;
    if (!out_path.empty() && !sc_apply->parsed()) {
        out_file.open(out_path);
        if (!out_file)
            fail(ErrorKind::Io, "cannot open output file: " + out_path);
        saved = std::cout.rdbuf(out_file.rdbuf());
    }
    struct Restore {
        std::streambuf* b;
        ~Restore() {
            if (b)
                std::cout.rdbuf(b);
        }
    } restore{saved};

    BoundKind kind = parse_bound(bound_name);

    if (sc_bound->parsed()) {
        LoadedCode lc = load_code(code_path);
        TotalMinEntropy tot{};
        if (kind == BoundKind::OldMinDistance) {
            if (!lc.entry.claimed_d)
                fail(ErrorKind::Usage, "old bound needs a minimum distance in the code file");
            tot = old_bound(lc.code.n(), lc.code.k(), *lc.entry.claimed_d, {h_in});
        } else {
            WeightDistribution wd = wd_for_entry(lc, max_dim, threads);
            tot = new_bound(wd, lc.code.k(), {h_in});
        }
        double per_bit = std::max(tot.value - double(lc.code.k()) + 1.0, 0.0);
        print_kv(format, {{"name", lc.entry.name},
                          {"bound", bound_name},
                          {"h_in", fmt(h_in)},
                          {"h_out_tot", fmt(tot.value)},
                          {"h_out_1", fmt(per_bit)}});
        return 0;
    }

    if (sc_solve->parsed()) {
        LoadedCode lc = load_code(code_path);
        SolveResult sr;
        if (kind == BoundKind::OldMinDistance) {
            if (!lc.entry.claimed_d)
                fail(ErrorKind::Usage, "old bound needs a minimum distance in the code file");
            sr = solve_h_in_req(BoundSpec::old_nkd(lc.code.n(), lc.code.k(), *lc.entry.claimed_d),
                                h_out1);
        } else {
            WeightDistribution wd = wd_for_entry(lc, max_dim, threads);
            sr = solve_h_in_req(BoundSpec::new_wd(wd, lc.code.k()), h_out1);
        }
        print_kv(format, {{"name", lc.entry.name},
                          {"bound", bound_name},
                          {"h_out1", fmt(h_out1)},
                          {"h_in_req", fmt(sr.h_in_req.value)},
                          {"at_bracket_min", sr.at_bracket_min ? "true" : "false"}});
        return 0;
    }

    if (sc_wd->parsed()) {
        LoadedCode lc = load_code(code_path);
        WeightDistribution wd = wd_for_entry(lc, max_dim, threads);
        write_wd_stream(std::cout, wd, lc.code.k());
        return 0;
    }

    if (sc_frontier->parsed() || sc_select->parsed()) {
        auto entries = load_filtered_catalog(catalog_path, cyclic_only);
        std::vector<SkippedEntry> skipped;
        auto records = build_records(entries, kind, h_out1, max_dim, &skipped, threads);
        for (const auto& s : skipped)
            std::cerr << "skipped " << s.name << ": " << s.reason << "\n";
        auto appr = appropriate(records, h_out1);
        Frontier f = pareto_frontier(std::move(appr));
        if (sc_select->parsed()) {
            const CorrectorRecord& r = select_for_target(f, h_in);
            print_kv(format, {{"name", r.entry.name},
                              {"n", std::to_string(r.entry.n)},
                              {"k", std::to_string(r.entry.k)},
                              {"rate", fmt(r.rate)},
                              {"h_in_req", fmt(r.h_in_req)},
                              {"bound", bound_name}});
            return 0;
        }
        std::cout << "name,n,k,d,rate,h_in_req,bound,efficiency_at_req\n";
        for (const auto& r : f.records) {
            double eff = (double(r.entry.k) - 1.0 + h_out1) / (double(r.entry.n) * r.h_in_req);
            std::cout << r.entry.name << ',' << r.entry.n << ',' << r.entry.k << ','
                      << (r.entry.claimed_d ? std::to_string(*r.entry.claimed_d) : std::string{})
                      << ',' << fmt(r.rate) << ',' << fmt(r.h_in_req) << ',' << bound_name << ','
                      << fmt(eff) << '\n';
        }
        return 0;
    }

    if (sc_apply->parsed()) {
        LoadedCode lc = load_code(code_path);
        std::ifstream fin;
        if (!in_path.empty()) {
            fin.open(in_path, std::ios::binary);
            if (!fin)
                fail(ErrorKind::Io, "cannot open input file: " + in_path);
        }
        std::ofstream fout;
        if (!out_path.empty()) {
            fout.open(out_path, std::ios::binary);
            if (!fout)
                fail(ErrorKind::Io, "cannot open output file: " + out_path);
        }
        std::istream& in = in_path.empty() ? std::cin : fin;
        std::ostream& out = out_path.empty() ? std::cout : fout;
        StreamStats stats = apply_stream(lc.code, in, out);
        std::cerr << stats.to_json() << "\n";
        return 0;
    }

    if (sc_verify->parsed()) {
        LoadedCode lc = load_code(code_path);
        BitProbabilities probs = read_probs_file(probs_path, lc.code.n());
        OutputDistribution dist = exact_output_dist(lc.code, probs);
        double exact = exact_min_entropy(dist).value;
        double h = probs.min_entropy_rate();
        WeightDistribution wd = wd_for_entry(lc, max_dim, threads);
        double nb = new_bound(wd, lc.code.k(), {h}).value;
        std::vector<std::pair<std::string, std::string>> kv = {
            {"name", lc.entry.name},
            {"h_in", fmt(h)},
            {"exact_min_entropy", fmt(exact)},
            {"new_bound", fmt(nb)}};
        bool sound = exact >= nb - 1e-9;
        if (lc.entry.claimed_d) {
            double ob = old_bound(lc.code.n(), lc.code.k(), *lc.entry.claimed_d, {h}).value;
            kv.push_back({"old_bound", fmt(ob)});
            sound = sound && exact >= ob - 1e-9;
        }
        bool coset = most_probable_coset_check(lc.code, probs);
        kv.push_back({"most_probable_coset", coset ? "ok" : "violated"});
        kv.push_back({"verdict", sound && coset ? "sound" : "VIOLATION"});
        print_kv(format, kv);
        return sound && coset ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lincor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case lincor::ErrorKind::Domain:
                return 1;
            case lincor::ErrorKind::Usage:
                return 2;
            default:
                return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
