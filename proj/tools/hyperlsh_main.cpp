#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hyperlsh/ann_index.hpp"
#include "hyperlsh/experiments.hpp"
#include "hyperlsh/geometry.hpp"
#include "hyperlsh/io.hpp"
#include "hyperlsh/validators.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitValidation = 3;

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty entry in numeric list");
        double v = 0.0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad number: " + tok);
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

double data_bounding_radius(const hyperlsh::Dataset& data) {
    double best = 0.0;
    if (data.dim == 2) {
        for (const auto& p : hyperlsh::to_poincare(data))
            best = std::max(best, hyperlsh::hyperbolic_norm(p));
    } else {
        for (const auto& p : hyperlsh::to_halfspace(data))
            best = std::max(best, hyperlsh::hyperbolic_norm(p));
    }
    return best;
}

int cmd_gen(std::size_t d, std::size_t n, double radius, std::uint64_t seed, const std::string& out) {
    hyperlsh::Dataset data;
    data.dim = d;
    if (n > 0) {
        hyperlsh::Rng rng(seed);
        data = hyperlsh::sample_uniform_ball(d, radius, n, rng);
    } else if (d < 2) {
        throw std::domain_error("gen: dimension must be at least 2");
    }
    hyperlsh::save_points(out, data);
    std::cerr << "wrote " << n << " points to " << out << "\n";
    return kExitOk;
}

int cmd_rho(const std::string& data_path, double r, const std::string& c_grid_csv, std::size_t reps,
            std::uint64_t seed, const std::string& out, bool boundary, double radius_flag) {
    hyperlsh::Dataset data = hyperlsh::load_points(data_path);
    std::vector<double> c_grid = parse_doubles(c_grid_csv);
    if (c_grid.empty()) throw std::invalid_argument("rho: empty c grid");
    double R = radius_flag > 0.0 ? radius_flag : data_bounding_radius(data) + 1e-6;
    auto rows = hyperlsh::rho_rows(data, r, c_grid, R, reps, seed, boundary);
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open for writing: " + out);
    hyperlsh::write_rho_csv(os, data.dim, data.size(), R, r, seed, rows);
    if (!os) throw std::runtime_error("write failed: " + out);
    for (const auto& row : rows)
        if (!row.ok)
            std::cerr << "c=" << hyperlsh::format_double(row.estimate.c) << ": " << row.note
                      << " (row marked with nan)\n";
    std::cerr << "wrote " << rows.size() << " rows to " << out << "\n";
    return kExitOk;
}

int cmd_index_build(const std::string& data_path, double r, double c, std::uint64_t seed,
                    const std::string& out, std::optional<std::size_t> K,
                    std::optional<std::size_t> L) {
    hyperlsh::Dataset data = hyperlsh::load_points(data_path);
    if (K.has_value() != L.has_value())
        throw std::invalid_argument("index build: give both of --K and --L or neither");
    std::optional<std::pair<std::size_t, std::size_t>> overrides;
    if (K) overrides = {*K, *L};
    hyperlsh::Rng rng(seed);
    hyperlsh::LshIndex index = hyperlsh::build_index(data, r, c, rng, overrides);
    hyperlsh::save_index(out, index);
    std::cout << "n=" << data.size() << " K=" << index.params.K << " L=" << index.params.L
              << " p1=" << hyperlsh::format_double(index.p1)
              << " p2=" << hyperlsh::format_double(index.p2) << "\n";
    return kExitOk;
}

int cmd_index_query(const std::string& index_path, const std::string& point_csv,
                    std::optional<std::size_t> budget) {
    hyperlsh::LshIndex index = hyperlsh::load_index(index_path);
    std::vector<double> q = parse_doubles(point_csv);
    std::optional<std::uint64_t> hit =
        budget ? hyperlsh::query(index, q, *budget) : hyperlsh::query(index, q);
    if (hit) {
        double dist = hyperlsh::query_distance(index, q, *hit);
        std::cout << *hit << "," << hyperlsh::format_double(dist) << "\n";
    } else {
        std::cout << "none\n";
    }
    return kExitOk;
}

int cmd_validate(const std::string& which) {
    std::vector<std::string> suites;
    if (which.empty() || which == "all")
        suites = hyperlsh::validator_names();
    else
        suites.push_back(which);
    bool all_pass = true;
    for (const std::string& name : suites) {
        for (const hyperlsh::CheckResult& check : hyperlsh::run_validator(name)) {
            all_pass = all_pass && check.pass;
            std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
                      << "\n";
        }
    }
    return all_pass ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic locality-sensitive hashing toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "sample points uniformly from a hyperbolic ball");
    std::size_t gen_d = 2, gen_n = 0;
    double gen_radius = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--d", gen_d, "hyperbolic dimension")->required();
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--radius", gen_radius, "ball radius")->required();
    gen->add_option("--seed", gen_seed, "rng seed")->required();
    gen->add_option("--out", gen_out, "output JSONL path")->required();

    // rho
    auto* rho = app.add_subcommand("rho", "estimate p1, p2 and rho over a c grid");
    std::string rho_data, rho_cgrid, rho_out;
    double rho_r = 0.0, rho_radius = 0.0;
    std::size_t rho_reps = 1000;
    std::uint64_t rho_seed = 0;
    bool rho_boundary = false;
    rho->add_option("--data", rho_data, "input JSONL path")->required();
    rho->add_option("--r", rho_r, "near distance threshold")->required();
    rho->add_option("--c-grid", rho_cgrid, "comma-separated approximation factors")->required();
    rho->add_option("--reps", rho_reps, "hash repetitions per estimate");
    rho->add_option("--seed", rho_seed, "rng seed")->required();
    rho->add_option("--out", rho_out, "output CSV path")->required();
    rho->add_option("--radius", rho_radius, "sampler radius (default: data bounding radius)");
    rho->add_flag("--boundary", rho_boundary, "restrict pairs to the [.9r,r] and [cr,1.1cr] annuli");

    // index build / query
    auto* index = app.add_subcommand("index", "build or query an LSH index");
    index->require_subcommand(1);
    auto* build = index->add_subcommand("build", "build and serialize an index");
    std::string build_data, build_out;
    double build_r = 0.0, build_c = 0.0;
    std::uint64_t build_seed = 0;
    std::size_t build_K = 0, build_L = 0;
    build->add_option("--data", build_data, "input JSONL path")->required();
    build->add_option("--r", build_r, "near distance threshold")->required();
    build->add_option("--c", build_c, "approximation factor")->required();
    build->add_option("--seed", build_seed, "rng seed")->required();
    build->add_option("--out", build_out, "output index path")->required();
    auto* optK = build->add_option("--K", build_K, "override concatenation width");
    auto* optL = build->add_option("--L", build_L, "override table count");

    auto* qcmd = index->add_subcommand("query", "query a serialized index");
    std::string query_index, query_point;
    std::size_t query_budget = 0;
    qcmd->add_option("--index", query_index, "index path")->required();
    qcmd->add_option("--point", query_point, "comma-separated query coordinates")->required();
    auto* optBudget = qcmd->add_option("--budget", query_budget, "max candidates examined (default 3L)");

    // validate
    auto* validate = app.add_subcommand("validate", "run numerical validators");
    std::string validate_which;
    validate->add_option("which", validate_which,
                         "integral|log-ratio|monotone-g|lemma-f|puiseux|sandwich|stability|alpha|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_d, gen_n, gen_radius, gen_seed, gen_out);
        if (rho->parsed())
            return cmd_rho(rho_data, rho_r, rho_cgrid, rho_reps, rho_seed, rho_out, rho_boundary,
                           rho_radius);
        if (build->parsed())
            return cmd_index_build(build_data, build_r, build_c, build_seed, build_out,
                                   optK->count() ? std::optional<std::size_t>(build_K) : std::nullopt,
                                   optL->count() ? std::optional<std::size_t>(build_L) : std::nullopt);
        if (qcmd->parsed())
            return cmd_index_query(query_index, query_point,
                                   optBudget->count() ? std::optional<std::size_t>(query_budget)
                                                      : std::nullopt);
        if (validate->parsed()) return cmd_validate(validate_which);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
