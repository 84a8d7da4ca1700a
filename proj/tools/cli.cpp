// Command-line front end. Talks to the library exclusively through the
// public C API in parendist/parendist.h.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parendist/parendist.h"

using nlohmann::json;

namespace {

constexpr uint64_t kDefaultSeed = 0x5eed5eedULL;

struct CommonOpts {
    std::string input;
    uint64_t seed = kDefaultSeed;
    std::string format = "json";
    int threads = 1;
};

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(code);
}

int exit_code_for(pd_status st) {
    switch (st) {
        case PD_OK: return 0;
        case PD_EPARSE: return 3;
        default: return 2;
    }
}

void check(pd_status st) {
    if (st != PD_OK) die(exit_code_for(st), pd_last_error());
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) die(3, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pd_string* load_string(const std::string& path) {
    std::string text = read_input(path);
    pd_string* s = nullptr;
    check(pd_string_parse(text.data(), text.size(), &s));
    return s;
}

int64_t exact_cap_from_env() {
    if (const char* v = std::getenv("PARENDIST_EXACT_CAP")) {
        char* end = nullptr;
        long long cap = std::strtoll(v, &end, 10);
        if (end && *end == '\0' && cap > 0) return cap;
        die(2, "PARENDIST_EXACT_CAP must be a positive integer");
    }
    return 0;  // library default
}

void emit(const CommonOpts& opts, json report) {
    if (opts.format == "json") {
        std::cout << report.dump() << "\n";
        return;
    }
    // csv: one header row plus one value row, params flattened.
    std::vector<std::string> keys, values;
    for (auto& [k, v] : report.items()) {
        if (k == "params") {
            std::string flat;
            for (auto& [pk, pv] : v.items()) {
                if (!flat.empty()) flat += ';';
                flat += pk + "=" + (pv.is_string() ? pv.get<std::string>() : pv.dump());
            }
            keys.push_back(k);
            values.push_back(flat);
        } else {
            keys.push_back(k);
            values.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
    }
    for (size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
    std::cout << "\n";
    for (size_t i = 0; i < values.size(); ++i) std::cout << (i ? "," : "") << values[i];
    std::cout << "\n";
}

json base_report(const char* algorithm, pd_string* s, const CommonOpts& opts, int reduce_kind) {
    size_t reduced = 0;
    check(pd_string_reduced_length(s, reduce_kind, &reduced));
    json j;
    j["algorithm"] = algorithm;
    j["n"] = pd_string_length(s);
    j["n_reduced"] = reduced;
    j["seed"] = opts.seed;
    j["params"] = json::object();
    return j;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

pd_gap_params make_gap_params(int64_t s1, int64_t s2, int64_t delta, double k1, double k2,
                              int threads) {
    pd_gap_params p;
    p.s1 = s1;
    p.s2 = s2;
    p.delta = delta;
    p.k1 = k1;
    p.k2 = k2;
    p.threads = threads;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dyck edit distance and RNA folding distance estimators"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--seed", opts.seed, "Seed for every randomized component");
    app.add_option("--format", opts.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", opts.threads, "Worker threads for data-parallel phases")
        ->check(CLI::PositiveNumber);

    // dyck ------------------------------------------------------------------
    auto* dyck = app.add_subcommand("dyck", "Dyck edit distance algorithms");
    dyck->require_subcommand(1);

    std::string method = "cubic";
    std::string file;
    auto* dyck_exact = dyck->add_subcommand("exact", "Exact distance (cubic or pivot DP)");
    dyck_exact->add_option("--method", method, "cubic | pivots")
        ->check(CLI::IsMember({"cubic", "pivots"}));
    dyck_exact->add_option("file", file, "Input file (- for stdin)")->required();

    double epsilon = 0.5;
    auto* dyck_ptas = dyck->add_subcommand("ptas", "(1+epsilon)-approximation");
    dyck_ptas->add_option("--epsilon", epsilon, "Accuracy in (0,1]")->required();
    dyck_ptas->add_option("file", file, "Input file (- for stdin)")->required();

    int64_t dpar = 1;
    auto* dyck_small = dyck->add_subcommand("small", "(3+epsilon)-approximation under budget d");
    dyck_small->add_option("--d", dpar, "Distance budget")->required();
    dyck_small->add_option("--epsilon", epsilon, "Accuracy in (0,1]")->required();
    dyck_small->add_option("file", file, "Input file (- for stdin)")->required();

    double theta = 0.5;
    int64_t s1 = -1, s2 = -1, delta = -1;
    double k1 = -1, k2 = -1;
    auto* dyck_gap = dyck->add_subcommand("gap", "Gap estimator at threshold theta");
    dyck_gap->add_option("--theta", theta, "Power-of-two threshold in (0,1]")->required();
    dyck_gap->add_option("--s1", s1, "Large window size (power of two)");
    dyck_gap->add_option("--s2", s2, "Small window size (power of two)");
    dyck_gap->add_option("--delta", delta, "Density parameter (power of two)");
    dyck_gap->add_option("--k1", k1, "Sampling constant (sparseness test)");
    dyck_gap->add_option("--k2", k2, "Sampling constant (large windows)");
    dyck_gap->add_option("file", file, "Input file (- for stdin)")->required();

    auto* dyck_est = dyck->add_subcommand("est", "Constant-factor estimator");
    dyck_est->add_option("--s1", s1, "Large window size (power of two)");
    dyck_est->add_option("--s2", s2, "Small window size (power of two)");
    dyck_est->add_option("--delta", delta, "Density parameter (power of two)");
    dyck_est->add_option("--k1", k1, "Sampling constant (sparseness test)");
    dyck_est->add_option("--k2", k2, "Sampling constant (large windows)");
    dyck_est->add_option("file", file, "Input file (- for stdin)")->required();

    // fold ------------------------------------------------------------------
    auto* fold = app.add_subcommand("fold", "RNA folding distance algorithms");
    fold->require_subcommand(1);
    auto* fold_exact = fold->add_subcommand("exact", "Exact folding distance");
    fold_exact->add_option("file", file, "Input file (- for stdin)")->required();
    int64_t tau = 64;
    auto* fold_approx = fold->add_subcommand("approx", "tau-approximation");
    fold_approx->add_option("--tau", tau, "Approximation factor (>= 1)")->required();
    fold_approx->add_option("file", file, "Input file (- for stdin)")->required();

    // gen -------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate a test instance");
    int32_t gen_pairs = 16, gen_types = 1, gen_edits = 0;
    gen->add_option("--pairs", gen_pairs, "Matched pairs in the balanced base")->required();
    gen->add_option("--types", gen_types, "Number of parenthesis types");
    gen->add_option("--edits", gen_edits, "Random edits applied to the base");

    // bench -----------------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Timing ladders, CSV output");
    std::string bench_algo = "ptas";
    std::string bench_sizes = "256,512,1024,2048,4096";
    int bench_reps = 3;
    int64_t bench_tau = 99;
    bench->add_option("--algo", bench_algo, "ptas | small | fold")
        ->check(CLI::IsMember({"ptas", "small", "fold"}));
    bench->add_option("--sizes", bench_sizes, "Comma-separated instance sizes");
    bench->add_option("--reps", bench_reps, "Repetitions per point (median reported)");
    bench->add_option("--epsilon", epsilon, "Accuracy for ptas/small");
    bench->add_option("--d", dpar, "Budget for small");
    bench->add_option("--tau", bench_tau, "Factor for fold");

    CLI11_PARSE(app, argc, argv);

    int64_t cap = exact_cap_from_env();

    if (*dyck_exact) {
        pd_string* s = load_string(file);
        json report = base_report("dyck-exact", s, opts, 0);
        report["params"]["method"] = method;
        Timer t;
        int64_t value = 0;
        check(pd_dyck_exact(s, method.c_str(), cap, &value));
        report["elapsed_ms"] = t.ms();
        report["estimate"] = value;
        report["guarantee"] = "exact";
        emit(opts, report);
        pd_string_free(s);
        return 0;
    }
    if (*dyck_ptas) {
        pd_string* s = load_string(file);
        json report = base_report("dyck-ptas", s, opts, 0);
        report["params"]["epsilon"] = epsilon;
        Timer t;
        int64_t value = 0;
        check(pd_dyck_ptas(s, epsilon, &value));
        report["elapsed_ms"] = t.ms();
        report["estimate"] = value;
        report["guarantee"] = "(1+eps)";
        emit(opts, report);
        pd_string_free(s);
        return 0;
    }
    if (*dyck_small) {
        pd_string* s = load_string(file);
        if (dpar < 1 || dpar > static_cast<int64_t>(pd_string_length(s)))
            die(2, "--d must be in [1..n]");
        json report = base_report("dyck-small", s, opts, 0);
        report["params"]["d"] = dpar;
        report["params"]["epsilon"] = epsilon;
        Timer t;
        int exceeds = 0;
        int64_t value = 0;
        check(pd_dyck_small(s, dpar, epsilon, &exceeds, &value));
        report["elapsed_ms"] = t.ms();
        if (exceeds)
            report["exceeds"] = dpar;
        else
            report["estimate"] = value;
        report["guarantee"] = "(3+eps) or >d";
        emit(opts, report);
        pd_string_free(s);
        return 0;
    }
    if (*dyck_gap) {
        pd_string* s = load_string(file);
        json report = base_report("dyck-gap", s, opts, 0);
        pd_gap_params params = make_gap_params(s1, s2, delta, k1, k2, opts.threads);
        Timer t;
        int64_t value = 0;
        pd_gap_info info{};
        check(pd_gap_est(s, theta, opts.seed, &params, &value, &info));
        report["elapsed_ms"] = t.ms();
        report["estimate"] = value;
        report["guarantee"] = "constant-factor whp";
        report["params"]["theta"] = theta;
        report["params"]["s1"] = info.s1;
        report["params"]["s2"] = info.s2;
        report["params"]["delta"] = info.delta;
        report["params"]["n_padded"] = info.n_padded;
        report["certified_entries"] = info.certified_entries;
        report["grid_large"] = info.grid_large;
        report["grid_small"] = info.grid_small;
        emit(opts, report);
        pd_string_free(s);
        return 0;
    }
    if (*dyck_est) {
        pd_string* s = load_string(file);
        json report = base_report("dyck-est", s, opts, 0);
        pd_gap_params params = make_gap_params(s1, s2, delta, k1, k2, opts.threads);
        Timer t;
        int64_t value = 0;
        int used_gap = 0;
        check(pd_dyck_est(s, opts.seed, &params, &value, &used_gap));
        report["elapsed_ms"] = t.ms();
        report["estimate"] = value;
        report["guarantee"] = "constant-factor whp";
        report["params"]["path"] = used_gap ? "gap" : "small";
        emit(opts, report);
        pd_string_free(s);
        return 0;
    }
    if (*fold_exact) {
        pd_string* s = load_string(file);
        json report = base_report("fold-exact", s, opts, 1);
        Timer t;
        int64_t value = 0;
        check(pd_fold_exact(s, cap, &value));
        report["elapsed_ms"] = t.ms();
        report["estimate"] = value;
        report["guarantee"] = "exact";
        emit(opts, report);
        pd_string_free(s);
        return 0;
    }
    if (*fold_approx) {
        pd_string* s = load_string(file);
        json report = base_report("fold-approx", s, opts, 1);
        report["params"]["tau"] = tau;
        Timer t;
        int64_t value = 0;
        check(pd_fold_approx(s, tau, &value));
        report["elapsed_ms"] = t.ms();
        report["estimate"] = value;
        report["guarantee"] = "tau-factor";
        emit(opts, report);
        pd_string_free(s);
        return 0;
    }
    if (*gen) {
        pd_string* s = nullptr;
        check(pd_generate(gen_pairs, gen_types, opts.seed, gen_edits, &s));
        size_t needed = 0;
        check(pd_string_serialize(s, nullptr, 0, &needed));
        std::string buf(needed + 1, '\0');
        check(pd_string_serialize(s, buf.data(), buf.size(), &needed));
        buf.resize(needed);
        std::cout << "# seed=" << opts.seed << ", edits=" << gen_edits << "\n" << buf;
        pd_string_free(s);
        return 0;
    }
    if (*bench) {
        std::vector<int> sizes;
        std::stringstream ss(bench_sizes);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
        std::cout << "algorithm,n,params,elapsed_ms,estimate,oracle_value\n";
        for (int n : sizes) {
            pd_string* s = nullptr;
            int64_t estimate = 0;
            std::string params_desc;
            double best_ms = -1;
            if (bench_algo == "fold") {
                check(pd_generate(n / 2, 2, opts.seed ^ n, n / 64, &s));
                params_desc = "tau=" + std::to_string(bench_tau);
            } else {
                check(pd_generate_hard(n, 8, 2, opts.seed ^ n, &s));
                params_desc = bench_algo == "ptas"
                                  ? "epsilon=" + std::to_string(epsilon)
                                  : "d=" + std::to_string(dpar) +
                                        ";epsilon=" + std::to_string(epsilon);
            }
            for (int rep = 0; rep < bench_reps; ++rep) {
                Timer t;
                if (bench_algo == "ptas") {
                    check(pd_dyck_ptas(s, epsilon, &estimate));
                } else if (bench_algo == "small") {
                    int exceeds = 0;
                    check(pd_dyck_small(s, dpar, epsilon, &exceeds, &estimate));
                    if (exceeds) estimate = -1;
                } else {
                    check(pd_fold_approx(s, bench_tau, &estimate));
                }
                double ms = t.ms();
                if (best_ms < 0 || ms < best_ms) best_ms = ms;
            }
            std::cout << bench_algo << "," << n << "," << params_desc << "," << best_ms << ","
                      << estimate << ",";
            if (n <= 2048) {
                int64_t oracle = 0;
                pd_status st = bench_algo == "fold" ? pd_fold_exact(s, cap, &oracle)
                                                    : pd_dyck_exact(s, "pivots", cap, &oracle);
                if (st == PD_OK) std::cout << oracle;
            }
            std::cout << "\n";
            pd_string_free(s);
        }
        return 0;
    }
    return 0;
}
