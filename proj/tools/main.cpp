// Command-line front end: verification battery, seeded simulation with
// theory columns, exact tables, law dumps, and asymptotics plot data.
// All output is machine-readable (CSV, or JSON where noted), fractions are
// emitted as "p/q" strings, and every run is deterministic given its flags.
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpqlab/enumerate.hpp"
#include "dpqlab/oracle.hpp"
#include "dpqlab/trials.hpp"
#include "dpqlab/verify.hpp"

namespace {

using dpqlab::Algorithm;
using dpqlab::Metric;
using dpqlab::Rational;
using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

int run_verify(std::size_t n_max, std::size_t dist_cap) {
    const auto results = dpqlab::verify::run_verification(n_max, dist_cap);
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "ok   " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
            ++failed;
        }
    }
    std::cout << results.size() << " checks, " << (results.size() - failed) << " passed, "
              << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

struct SimulateRow {
    Metric metric = Metric::comparisons;
    std::string theory_exact;
    double theory_float = 0;
    double empirical_mean = 0;
    double std_error = 0;
    double z_score = 0;
};

int run_simulate(Algorithm alg, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                 const std::string& format) {
    const dpqlab::experiments::TrialPlan plan{alg, n, trials, seed};
    const auto agg = dpqlab::experiments::run_trials(plan);

    std::vector<SimulateRow> rows;
    for (const Metric m : dpqlab::experiments::supported_metrics(alg)) {
        SimulateRow row;
        row.metric = m;
        if (trials >= 2) {
            const auto rep = dpqlab::experiments::compare(agg, m);
            row.theory_exact = dpqlab::to_fraction_string(rep.theory_mean);
            row.theory_float = dpqlab::to_double(rep.theory_mean);
            row.empirical_mean = rep.empirical_mean;
            row.std_error = rep.std_error;
            row.z_score = rep.z_score;
        } else {
            // A single trial has a mean but no dispersion estimate.
            const Rational theory =
                dpqlab::oracle::dp_expected(alg, m, n).values[n];
            row.theory_exact = dpqlab::to_fraction_string(theory);
            row.theory_float = dpqlab::to_double(theory);
            row.empirical_mean = dpqlab::to_double(Rational(agg.totals(m).sum));
            row.std_error = std::nan("");
            row.z_score = std::nan("");
        }
        rows.push_back(std::move(row));
    }

    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json obj;
            obj["algorithm"] = std::string(name(alg));
            obj["metric"] = std::string(name(row.metric));
            obj["n"] = n;
            obj["trials"] = trials;
            obj["seed"] = seed;
            obj["theory_exact"] = row.theory_exact;
            obj["theory_float"] = row.theory_float;
            obj["empirical_mean"] = row.empirical_mean;
            obj["std_error"] = row.std_error;
            obj["z_score"] = row.z_score;
            out.push_back(std::move(obj));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algorithm,metric,n,trials,seed,theory_exact,theory_float,"
                     "empirical_mean,std_error,z_score\n";
        for (const auto& row : rows) {
            std::cout << name(alg) << ',' << name(row.metric) << ',' << n << ',' << trials
                      << ',' << seed << ',' << row.theory_exact << ','
                      << fmt(row.theory_float) << ',' << fmt(row.empirical_mean) << ','
                      << fmt(row.std_error) << ',' << fmt(row.z_score) << "\n";
        }
    }
    return 0;
}

int run_table(Algorithm alg, const std::vector<std::size_t>& sizes,
              const std::vector<Metric>& metrics) {
    std::size_t max_n = 0;
    for (const std::size_t n : sizes) max_n = std::max(max_n, n);

    std::cout << "algorithm,metric,n,theory_exact,theory_float\n";
    for (const Metric m : metrics) {
        const auto table = dpqlab::oracle::dp_expected(alg, m, max_n);
        for (const std::size_t n : sizes) {
            const Rational& v = table.values[n];
            std::cout << name(alg) << ',' << name(m) << ',' << n << ','
                      << dpqlab::to_fraction_string(v) << ',' << fmt(dpqlab::to_double(v))
                      << "\n";
        }
    }
    return 0;
}

int run_dist(Metric metric, std::size_t n, bool as_float) {
    if (as_float) {
        const auto laws = dpqlab::oracle::cost_distribution_float(metric, n);
        std::cout << "value,probability\n";
        for (const auto& [value, p] : laws[n].probs) {
            std::cout << value << ',' << fmt(p) << "\n";
        }
    } else {
        const auto laws = dpqlab::oracle::cost_distribution(metric, n);
        std::cout << "value,probability\n";
        for (const auto& [value, p] : laws[n].probs) {
            std::cout << value << ',' << dpqlab::to_fraction_string(p) << "\n";
        }
    }
    return 0;
}

int run_plotdata(const std::vector<std::size_t>& grid) {
    const auto rows = dpqlab::oracle::asymptotics_grid(grid);
    std::cout << "n,dual_comparisons_exact,dual_comparisons_asym,dual_comparisons_ratio,"
                 "dual_exchanges_exact,dual_exchanges_asym,dual_exchanges_ratio,"
                 "classic_exchanges_exact,classic_exchanges_asym,classic_exchanges_ratio,"
                 "variance_exact,variance_asym,variance_ratio,"
                 "exchange_ratio,variance_over_n_sq\n";
    for (const auto& r : rows) {
        std::cout << r.n << ',' << fmt(r.dual_comparisons_exact) << ','
                  << fmt(r.dual_comparisons_asym) << ',' << fmt(r.dual_comparisons_ratio)
                  << ',' << fmt(r.dual_exchanges_exact) << ',' << fmt(r.dual_exchanges_asym)
                  << ',' << fmt(r.dual_exchanges_ratio) << ','
                  << fmt(r.classic_exchanges_exact) << ',' << fmt(r.classic_exchanges_asym)
                  << ',' << fmt(r.classic_exchanges_ratio) << ',' << fmt(r.variance_exact)
                  << ',' << fmt(r.variance_asym) << ',' << fmt(r.variance_ratio) << ','
                  << fmt(r.exchange_ratio) << ',' << fmt(r.variance_over_n_sq) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cost laboratory for dual-pivot quicksort: exact theory, "
                 "seeded experiments, and their cross-checks"};
    app.require_subcommand(1);

    const std::map<std::string, Algorithm> alg_names{{"dual", Algorithm::dual},
                                                     {"classic", Algorithm::classic}};
    const std::map<std::string, Metric> metric_names{{"comparisons", Metric::comparisons},
                                                     {"exchanges", Metric::exchanges},
                                                     {"stages", Metric::stages}};

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Run the internal consistency battery");
    std::size_t verify_n_max = 20;
    std::size_t verify_dist_cap = 12;
    verify_cmd->add_option("--n-max", verify_n_max, "Largest size checked against closed forms")
        ->check(CLI::Range(std::size_t{4}, std::size_t{10000}))
        ->capture_default_str();
    verify_cmd
        ->add_option("--dist-cap", verify_dist_cap, "Largest size for exact-law checks")
        ->check(CLI::Range(std::size_t{2}, dpqlab::oracle::kExactDistributionCap))
        ->capture_default_str();

    // simulate
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Run seeded trials and compare against theory");
    Algorithm sim_alg = Algorithm::dual;
    std::size_t sim_n = 0;
    std::uint64_t sim_trials = 0;
    std::uint64_t sim_seed = 0;
    std::string sim_format = "csv";
    simulate_cmd->add_option("--alg", sim_alg, "Algorithm (dual or classic)")
        ->required()
        ->transform(CLI::CheckedTransformer(alg_names, CLI::ignore_case));
    simulate_cmd->add_option("--n", sim_n, "Keys per trial")
        ->required()
        ->check(CLI::Range(std::size_t{0}, dpqlab::oracle::kAsymptoticsMaxN));
    simulate_cmd->add_option("--trials", sim_trials, "Number of trials")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", sim_seed, "Master seed")->required();
    simulate_cmd->add_option("--format", sim_format, "Output format")
        ->transform(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // table
    auto* table_cmd =
        app.add_subcommand("table", "Exact expected costs from the recurrences");
    Algorithm table_alg = Algorithm::dual;
    std::vector<std::size_t> table_sizes;
    std::vector<Metric> table_metrics{Metric::comparisons, Metric::exchanges, Metric::stages};
    table_cmd->add_option("--alg", table_alg, "Algorithm (dual or classic)")
        ->transform(CLI::CheckedTransformer(alg_names, CLI::ignore_case))
        ->capture_default_str();
    table_cmd->add_option("--n", table_sizes, "Comma-separated sizes")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(std::size_t{0}, dpqlab::oracle::kAsymptoticsMaxN));
    table_cmd->add_option("--metrics", table_metrics, "Comma-separated metrics")
        ->delimiter(',')
        ->transform(CLI::CheckedTransformer(metric_names, CLI::ignore_case));

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "Exact cost law of the dual-pivot sort");
    Metric dist_metric = Metric::comparisons;
    std::size_t dist_n = 0;
    bool dist_float = false;
    dist_cmd->add_option("--metric", dist_metric, "Metric")
        ->required()
        ->transform(CLI::CheckedTransformer(metric_names, CLI::ignore_case));
    dist_cmd->add_option("--n", dist_n, "Size")->required();
    dist_cmd->add_flag("--float", dist_float,
                       "Double-precision law (raises the size cap from 16 to 64)");

    // plotdata
    auto* plot_cmd =
        app.add_subcommand("plotdata", "Exact values next to their asymptotic curves");
    std::vector<std::size_t> plot_grid;
    plot_cmd->add_option("--n-grid", plot_grid, "Comma-separated sizes, increasing")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) return run_verify(verify_n_max, verify_dist_cap);
        if (*simulate_cmd) return run_simulate(sim_alg, sim_n, sim_trials, sim_seed, sim_format);
        if (*table_cmd) return run_table(table_alg, table_sizes, table_metrics);
        if (*dist_cmd) return run_dist(dist_metric, dist_n, dist_float);
        if (*plot_cmd) return run_plotdata(plot_grid);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
