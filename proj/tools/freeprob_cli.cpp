// Command-line front door: enumeration tables, Meixner moment/cumulant
// tables, law classification, and the verification suite. Machine output
// (JSON or CSV) goes to stdout, human summaries to stderr.
//
// Exit codes: 0 all verdicts pass, 1 verification failure, 2 usage/parse
// error, 3 domain error (b < -1, q outside (-1,1), degenerate converse, ...).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "freeprob/enumerate.hpp"
#include "freeprob/grid.hpp"
#include "freeprob/meixner.hpp"
#include "freeprob/verify.hpp"

namespace {

using freeprob::Rational;

struct Options {
    std::string command;
    std::string kind; // enumerate family or verify claim
    std::string format = "json";
    bool has_format = false;
    std::string grid_file;
    int n = 0;
    int k = 1;
    bool has_order = false, has_nmax = false, has_kmax = false, has_seed = false;
    int order = freeprob::kDefaultSeriesOrder, nmax = 0, kmax = 0;
    std::uint64_t seed = 0;
    std::string a = "0", b = "0", alpha = "1/2", beta = "1/2", q = "1/2", t = "1", s = "2";
    bool has_a = false, has_b = false, has_alpha = false, has_beta = false;
    bool has_q = false, has_t = false, has_s = false;
};

int run_enumerate(const Options& opt) {
    // streamed: a full family at the cap has millions of members
    auto for_each = [&](auto&& fn) {
        if (opt.kind == "all")
            freeprob::for_each_partition(opt.n, fn);
        else if (opt.kind == "nc")
            freeprob::for_each_noncrossing(opt.n, fn);
        else if (opt.kind == "ncfb")
            freeprob::for_each_nc_first_block(opt.k, opt.n, fn);
        else if (opt.kind == "pairings")
            freeprob::for_each_pairing(opt.n, fn);
        else
            throw CLI::ValidationError("enumerate", "unknown family '" + opt.kind + "'");
    };

    long long count = 0;
    for_each([&](const freeprob::SetPartition&) { ++count; });

    if (opt.format == "json") {
        std::cout << "{\n  \"count\": " << count << ",\n  \"family\": \"" << opt.kind << "\",\n";
        if (opt.kind == "ncfb") std::cout << "  \"k\": " << opt.k << ",\n";
        std::cout << "  \"n\": " << opt.n << ",\n  \"partitions\": [";
        long long i = 0;
        for_each([&](const freeprob::SetPartition& p) {
            std::cout << (i++ ? ",\n    " : "\n    ") << freeprob::partition_to_json(p).dump();
        });
        std::cout << (count ? "\n  ]\n}\n" : "]\n}\n");
    } else if (opt.format == "csv") {
        long long i = 0;
        for_each([&](const freeprob::SetPartition& p) {
            std::cout << i++ << "," << freeprob::to_text(p) << "\n";
        });
    } else {
        for_each([&](const freeprob::SetPartition& p) {
            std::cout << freeprob::to_text(p) << "\n";
        });
    }
    std::cerr << count << " partitions\n";
    return 0;
}

int run_table(const Options& opt, bool classify_only) {
    const freeprob::MeixnerParams params(freeprob::parse_rational(opt.a),
                                         freeprob::parse_rational(opt.b));
    if (classify_only) {
        // classify defaults to the bare class name; --format json for the object
        if (opt.has_format && opt.format == "json") {
            nlohmann::json out{{"a", freeprob::to_fraction_string(params.a)},
                               {"b", freeprob::to_fraction_string(params.b)},
                               {"class", freeprob::law_to_string(freeprob::classify(params))}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << freeprob::law_to_string(freeprob::classify(params)) << "\n";
        }
        return 0;
    }
    const int order = opt.order;
    const nlohmann::json out = freeprob::meixner_summary_json(params, order);
    if (opt.format == "csv") {
        for (int i = 1; i <= order; ++i)
            std::cout << i << "," << out.at("moments").at(i - 1).get<std::string>() << ","
                      << out.at("cumulants").at(i - 1).get<std::string>() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

nlohmann::json claim_params(const Options& opt) {
    nlohmann::json p = nlohmann::json::object();
    if (opt.has_a) p["a"] = opt.a;
    if (opt.has_b) p["b"] = opt.b;
    if (opt.has_alpha) p["alpha"] = opt.alpha;
    if (opt.has_beta) p["beta"] = opt.beta;
    if (opt.has_q) p["q"] = opt.q;
    if (opt.has_t) p["t"] = opt.t;
    if (opt.has_s) p["s"] = opt.s;
    if (opt.has_order) p["order"] = opt.order;
    if (opt.has_nmax) p["nmax"] = opt.nmax;
    if (opt.has_kmax) p["kmax"] = opt.kmax;
    if (opt.has_seed) p["seed"] = opt.seed;
    return p;
}

int emit_reports(const std::vector<freeprob::VerificationReport>& reports,
                 const std::string& format) {
    bool all_pass = true;
    if (format == "csv") {
        std::cout << "claim,params,order,verdict,lhs,rhs\n";
        for (const auto& rep : reports)
            for (const auto& row : freeprob::report_to_csv_rows(rep)) std::cout << row << "\n";
    } else if (format == "text") {
        for (const auto& rep : reports) {
            std::string key;
            for (const auto& [name, value] : rep.params)
                key += " " + name + "=" + freeprob::to_fraction_string(value);
            std::cout << (rep.pass() ? "pass" : "FAIL") << "  " << rep.claim << key << "\n";
        }
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reports) arr.push_back(freeprob::report_to_json(rep));
        std::cout << arr.dump(2) << "\n";
    }
    int failed = 0;
    for (const auto& rep : reports) {
        if (!rep.pass()) {
            all_pass = false;
            ++failed;
        }
        std::cerr << (rep.pass() ? "[pass] " : "[FAIL] ") << rep.claim;
        for (const auto& [name, value] : rep.params)
            std::cerr << " " << name << "=" << freeprob::to_fraction_string(value);
        std::cerr << "\n";
    }
    std::cerr << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size()
              << " claims pass\n";
    return all_pass ? 0 : 1;
}

int run_verify(const Options& opt) {
    std::vector<freeprob::VerificationReport> reports;
    if (opt.kind == "all") {
        nlohmann::json grid;
        if (!opt.grid_file.empty()) {
            std::ifstream in(opt.grid_file);
            if (!in) throw CLI::ValidationError("--grid", "cannot open '" + opt.grid_file + "'");
            in >> grid;
        } else {
            grid = freeprob::default_grid();
        }
        reports = freeprob::run_grid(grid);
    } else {
        reports.push_back(freeprob::run_claim(opt.kind, claim_params(opt)));
    }
    return emit_reports(reports, opt.format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact free-probability toolkit: non-crossing partitions, free and "
                 "q-deformed cumulants, free Meixner laws, and machine verification "
                 "of their conditional-moment identities"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->each([&](const std::string&) { opt.has_format = true; });
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list partition families");
    enumerate->add_option("family", opt.kind, "all | nc | ncfb | pairings")->required();
    enumerate->add_option("--n", opt.n, "ground set size")->required();
    enumerate->add_option("--k", opt.k, "first-block size (ncfb)");
    add_format(enumerate);

    CLI::App* moments = app.add_subcommand("moments", "moment/cumulant table of mu_{a,b}");
    CLI::App* cumulants = app.add_subcommand("cumulants", "moment/cumulant table of mu_{a,b}");
    CLI::App* classify = app.add_subcommand("classify", "law class of mu_{a,b}");
    for (CLI::App* cmd : {moments, cumulants, classify}) {
        cmd->add_option("--a", opt.a, "parameter a as p/q")->required();
        cmd->add_option("--b", opt.b, "parameter b as p/q (b >= -1)")->required();
        add_format(cmd);
    }
    moments->add_option("--order", opt.order, "table depth")->capture_default_str();
    cumulants->add_option("--order", opt.order, "table depth")->capture_default_str();

    CLI::App* grid = app.add_subcommand("grid", "print the default verification grid as JSON");

    CLI::App* verify = app.add_subcommand("verify", "machine-verify the identities");
    verify
        ->add_option("claim", opt.kind,
                     "lemma22 | ladder | convolution | regression | thm31 | converse | "
                     "prop34 | prop36 | qgauss | qconverse | all; harness sensitivity "
                     "controls: thm31-perturbed | qgauss-injected (expected to fail)")
        ->required()
        ->check(CLI::IsMember({"lemma22", "ladder", "convolution", "regression", "thm31",
                               "converse", "prop34", "prop36", "qgauss", "qconverse", "all",
                               "thm31-perturbed", "qgauss-injected"}));
    verify->add_option("--grid", opt.grid_file, "JSON grid file (verify all)");
    verify->add_option("--a", opt.a)->each([&](const std::string&) { opt.has_a = true; });
    verify->add_option("--b", opt.b)->each([&](const std::string&) { opt.has_b = true; });
    verify->add_option("--alpha", opt.alpha)->each([&](const std::string&) { opt.has_alpha = true; });
    verify->add_option("--beta", opt.beta)->each([&](const std::string&) { opt.has_beta = true; });
    verify->add_option("--q", opt.q)->each([&](const std::string&) { opt.has_q = true; });
    verify->add_option("--t", opt.t)->each([&](const std::string&) { opt.has_t = true; });
    verify->add_option("--s", opt.s)->each([&](const std::string&) { opt.has_s = true; });
    verify->add_option("--order", opt.order)->each([&](const std::string&) { opt.has_order = true; });
    verify->add_option("--nmax", opt.nmax)->each([&](const std::string&) { opt.has_nmax = true; });
    verify->add_option("--kmax", opt.kmax)->each([&](const std::string&) { opt.has_kmax = true; });
    verify->add_option("--seed", opt.seed)->each([&](const std::string&) { opt.has_seed = true; });
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate(opt);
        if (moments->parsed() || cumulants->parsed()) return run_table(opt, false);
        if (classify->parsed()) return run_table(opt, true);
        if (grid->parsed()) {
            std::cout << freeprob::default_grid().dump(2) << "\n";
            return 0;
        }
        if (verify->parsed()) return run_verify(opt);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const freeprob::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const freeprob::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const freeprob::argument_error& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
