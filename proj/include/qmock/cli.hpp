#pragma once

/// Command-line front end: expand / verify / rank-table / catalog with
/// stable text and JSON output.
///
/// Exit codes: 0 all good, 1 mathematical mismatch, 2 usage or
/// configuration error.

#include <qmock/json_io.hpp>
#include <qmock/oracles.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace qmock {
namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline int default_order() {
    if (const char* env = std::getenv("QMOCK_ORDER")) {
        try {
            int v = std::stoi(env);
            if (v >= 1)
                return v;
        } catch (const std::exception&) {
        }
    }
    return 16;
}

struct ExpandOptions {
    std::string name;
    std::string term_file;
    std::string w = "symbolic";
    int order = 16;
    bool inverted = false;
    std::string format = "text";
};

inline int run_expand(const ExpandOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        WContext ctx = (opt.w == "symbolic") ? WContext::sym()
                                             : WContext::at(Rational::parse(opt.w));
        QSeries series(0);
        std::string label, anchor;
        if (!opt.term_file.empty()) {
            std::ifstream in(opt.term_file);
            if (!in) {
                err << "error: cannot open term file '" << opt.term_file << "'\n";
                return kExitUsage;
            }
            json j = json::parse(in);
            HypergeometricTerm t = term_from_json(j);
            series = opt.inverted ? term_expand_auto(detail::invert_q_raw(t), ctx, opt.order)
                                  : term_expand_auto(t, ctx, opt.order);
            label = "term:" + opt.term_file;
            anchor = "user-supplied summand family";
        } else {
            Catalog cat = Catalog::standard();
            if (!cat.contains(opt.name)) {
                err << "error: unknown catalog entry '" << opt.name << "'\n";
                return kExitUsage;
            }
            series = opt.inverted ? catalog_series_inverted(cat, opt.name, ctx, opt.order)
                                  : catalog_series(cat, opt.name, ctx, opt.order);
            label = opt.name;
            anchor = cat.at(opt.name).anchor;
        }
        if (opt.format == "json") {
            json j{{"name", label},
                   {"anchor", anchor},
                   {"order", opt.order},
                   {"w", opt.w},
                   {"regime", opt.inverted ? "inverted" : "direct"},
                   {"series", series_to_json(series)}};
            out << j.dump(2) << "\n";
        } else {
            out << label << "  [" << anchor << "]\n";
            out << "order " << opt.order << ", w = " << opt.w << ", regime "
                << (opt.inverted ? "inverted" : "direct") << "\n";
            out << series.to_string() << "\n";
        }
        return kExitOk;
    } catch (const NotInvertible& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotFormallySummable& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownName& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

struct VerifyOptions {
    std::string id;
    bool all = false;
    int order = 16;
    int samples = 5;
    int seed = 42;
    std::string format = "text";
};

inline void print_report_text(const Report& r, std::ostream& out) {
    out << r.id << ": " << r.status;
    if (r.mismatch)
        out << " (first mismatch at q^" << r.mismatch->q_power << ": lhs "
            << r.mismatch->lhs << " vs rhs " << r.mismatch->rhs << ")";
    if (!r.error.empty())
        out << " (" << r.error << ")";
    out << "  [" << r.mode << ", order " << r.order << ", "
        << static_cast<long long>(r.elapsed_ms) << " ms]\n";
}

inline int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    Catalog cat = Catalog::standard();
    Registry reg = Registry::standard();
    std::vector<Report> reports;
    try {
        if (opt.all) {
            reports = verify_all(cat, reg, opt.order, opt.samples, opt.seed);
        } else {
            if (!reg.contains(opt.id)) {
                err << "error: unknown identity '" << opt.id << "'\n";
                return kExitUsage;
            }
            reports.push_back(verify_identity(cat, reg, opt.id, opt.order, opt.samples,
                                              opt.seed));
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    int passed = 0, failed = 0, errored = 0;
    for (const auto& r : reports) {
        if (r.status == "pass")
            ++passed;
        else if (r.status == "fail")
            ++failed;
        else
            ++errored;
    }

    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(report_to_json(r));
        json j{{"reports", arr},
               {"summary", {{"passed", passed}, {"failed", failed}, {"errored", errored}}}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports)
            print_report_text(r, out);
        out << passed << " passed / " << failed << " failed / " << errored << " errored\n";
    }
    return (failed == 0 && errored == 0) ? kExitOk : kExitMismatch;
}

struct RankTableOptions {
    int max_n = 10;
    std::string format = "text";
};

inline int run_rank_table(const RankTableOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.max_n < 0 || opt.max_n > oracle::kPartitionCap) {
        err << "error: rank table bound must be between 0 and " << oracle::kPartitionCap
            << "\n";
        return kExitUsage;
    }
    if (opt.format == "json") {
        json arr = json::array();
        for (int n = 0; n <= opt.max_n; ++n)
            for (const auto& [m, count] : oracle::rank_distribution(n))
                arr.push_back(json{{"n", n}, {"m", m}, {"count", count}});
        out << arr.dump(2) << "\n";
    } else {
        out << "n\tm\tR(m,n)\n";
        for (int n = 0; n <= opt.max_n; ++n) {
            long long total = 0;
            for (const auto& [m, count] : oracle::rank_distribution(n)) {
                out << n << "\t" << m << "\t" << count << "\n";
                total += count;
            }
            out << "# p(" << n << ") = " << total << "\n";
        }
    }
    return kExitOk;
}

inline int run_catalog(const std::string& format, std::ostream& out) {
    Catalog cat = Catalog::standard();
    auto listing = catalog_listing(cat);
    if (format == "json") {
        out << listing_to_json(listing).dump(2) << "\n";
    } else {
        for (const auto& l : listing) {
            out << l.name << "\t"
                << (l.w_mode == WMode::symbolic_w ? "symbolic" : "numeric-only") << "\tdirect"
                << (l.inverted ? ",inverted" : "") << "\t" << l.anchor << "\n";
        }
    }
    return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-series engine for mock theta and partial theta identities"};
    app.require_subcommand(1);

    ExpandOptions eo;
    eo.order = default_order();
    auto* expand = app.add_subcommand("expand", "expand a catalog entry as a q-series");
    expand->add_option("--name", eo.name, "catalog entry name");
    expand->add_option("--term-file", eo.term_file, "JSON file with a summand family");
    expand->add_option("--order", eo.order, "truncation order")->check(CLI::PositiveNumber);
    expand->add_option("--w", eo.w, "symbolic or a rational value like 2 or -1/3");
    expand->add_flag("--inverted", eo.inverted, "expand at q -> 1/q");
    expand->add_option("--format", eo.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyOptions vo;
    vo.order = default_order();
    auto* verify = app.add_subcommand("verify", "verify registry identities");
    verify->add_option("--id", vo.id, "identity id");
    verify->add_flag("--all", vo.all, "verify the whole registry");
    verify->add_option("--order", vo.order, "truncation order")->check(CLI::PositiveNumber);
    verify->add_option("--samples", vo.samples, "samples per sampled identity");
    verify->add_option("--seed", vo.seed, "seed for sampled parameters");
    verify->add_option("--format", vo.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    RankTableOptions ro;
    auto* rank = app.add_subcommand("rank-table", "partition rank counts R(m,n)");
    rank->add_option("--max-n", ro.max_n, "largest n");
    rank->add_option("--format", ro.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string catalog_format = "text";
    auto* cata = app.add_subcommand("catalog", "list the named-series catalog");
    cata->add_option("--format", catalog_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (expand->parsed()) {
        if (eo.name.empty() && eo.term_file.empty()) {
            err << "error: expand needs --name or --term-file\n";
            return kExitUsage;
        }
        return run_expand(eo, out, err);
    }
    if (verify->parsed()) {
        if (!vo.all && vo.id.empty()) {
            err << "error: verify needs --id or --all\n";
            return kExitUsage;
        }
        return run_verify(vo, out, err);
    }
    if (rank->parsed())
        return run_rank_table(ro, out, err);
    if (cata->parsed())
        return run_catalog(catalog_format, out);
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace cli
} // namespace qmock
