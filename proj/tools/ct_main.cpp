#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ct/io.hpp"
#include "ct/localization.hpp"
#include "ct/nullmodel.hpp"
#include "ct/persistence.hpp"
#include "ct/signal.hpp"
#include "ct/summaries.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr const char* kVersion = "0.1.0";
using json = nlohmann::ordered_json;

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void write_manifest(const std::string& path, const std::string& command,
                    const json& config, const std::string& input_digest,
                    const Stopwatch& watch) {
    json doc;
    doc["command"] = command;
    doc["config"] = config;
    doc["input_digest"] = input_digest;
    doc["tool_version"] = kVersion;
    doc["wall_time_s"] = watch.seconds();
    ct::write_text(path, doc.dump(2) + "\n");
}

int run_dichotomize(const std::string& input, const std::string& output,
                    const ct::DichotomizeConfig& cfg) {
    Stopwatch watch;
    auto sm = ct::read_series_csv(input);
    std::vector<std::string> dropped;
    auto bm = ct::dichotomize(sm, cfg, &dropped);
    ct::write_binary_csv(bm, output);

    json config;
    config["domain"] = cfg.domain == ct::Domain::time ? "time" : "fourier";
    config["drop_fraction"] = cfg.drop_fraction;
    config["active_fraction"] = cfg.active_fraction;
    config["power_quantile"] = cfg.power_quantile;
    json meta;
    meta["dropped"] = dropped;
    meta["config"] = config;
    ct::write_text(output + ".meta.json", meta.dump(2) + "\n");
    write_manifest(output + ".manifest.json", "dichotomize", config,
                   ct::file_digest(input), watch);
    return 0;
}

int run_persist(const std::string& input, const std::string& output, int max_dim,
                const std::vector<std::int64_t>& euler_levels) {
    Stopwatch watch;
    auto bm = ct::read_binary_csv(input);
    auto fc = ct::build_filtered_complex(bm, max_dim);
    const std::string digest = ct::file_digest(input);
    auto diagram = ct::compute_persistence(fc, max_dim);
    diagram.provenance = "input=" + digest + ";max_dim=" + std::to_string(max_dim);

    ct::write_text(output + ".diagram.json", ct::diagram_json(diagram, diagram.provenance));
    std::vector<ct::MomentVector> per_dim;
    for (int d = 0; d <= max_dim; ++d) {
        per_dim.push_back(ct::moments(diagram, d));
        ct::write_text(output + ".dim" + std::to_string(d) + ".csv", ct::plot_csv(diagram, d));
        ct::write_text(output + ".dim" + std::to_string(d) + ".svg", ct::plot_svg(diagram, d));
    }
    ct::write_text(output + ".moments.json", ct::moments_json(per_dim));

    json config;
    config["max_dim"] = max_dim;
    if (!euler_levels.empty()) {
        json euler = json::array();
        for (std::int64_t f : euler_levels)
            euler.push_back({{"level", f}, {"chi", ct::euler_characteristic(fc, f)}});
        ct::write_text(output + ".euler.json", euler.dump(2) + "\n");
        config["euler_levels"] = euler_levels;
    }
    write_manifest(output + ".manifest.json", "persist", config, digest, watch);
    return 0;
}

int run_localize(const std::string& input, const std::string& output, int dim,
                 std::vector<std::int64_t> levels) {
    Stopwatch watch;
    auto bm = ct::read_binary_csv(input);
    auto fc = ct::build_filtered_complex(bm, dim);
    ct::Localizer loc(fc);
    if (levels.empty())
        for (std::int64_t f = 1; f <= fc.max_level; ++f) levels.push_back(f);

    std::vector<std::vector<ct::NarrowClass>> narrow;
    std::vector<std::vector<std::pair<int, int>>> adjacent;
    for (std::int64_t f : levels) {
        narrow.push_back(loc.narrow_classes(f, dim));
        adjacent.push_back(loc.adjacent_pairs(f, dim));
    }
    auto records = loc.cycle_lifespans(dim);
    ct::write_text(output, ct::localization_json(fc, narrow, adjacent, levels, records, dim));

    json config;
    config["dim"] = dim;
    config["levels"] = levels;
    write_manifest(output + ".manifest.json", "localize", config,
                   ct::file_digest(input), watch);
    return 0;
}

int run_simulate(const std::string& output, const std::string& fixture, int vars,
                 int obs, double rate, std::uint64_t seed, int planted_dim) {
    Stopwatch watch;
    ct::BinaryMatrix bm;
    json config;
    config["seed"] = seed;
    if (!fixture.empty()) {
        if (fixture == "I") bm = ct::toy_fixture(ct::ToyFixture::I);
        else if (fixture == "II") bm = ct::toy_fixture(ct::ToyFixture::II);
        else if (fixture == "III") bm = ct::toy_fixture(ct::ToyFixture::III);
        else if (fixture == "IV") bm = ct::toy_fixture(ct::ToyFixture::IV);
        else if (fixture == "V") bm = ct::toy_fixture(ct::ToyFixture::V);
        else throw CLI::ValidationError("--fixture must be one of I II III IV V");
        config["fixture"] = fixture;
    } else if (planted_dim >= 0) {
        bm = ct::planted_hole(planted_dim, vars, obs, seed);
        config["planted_dim"] = planted_dim;
        config["vars"] = vars;
        config["noise_obs"] = obs;
    } else {
        bm = ct::generate_independent({obs, vars, rate, seed});
        config["vars"] = vars;
        config["obs"] = obs;
        config["rate"] = rate;
    }
    ct::write_binary_csv(bm, output);
    write_manifest(output + ".manifest.json", "simulate", config, "none", watch);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concurrence homology of binary data"};
    app.set_version_flag("--version", kVersion);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores)");
    app.require_subcommand(1);

    std::string input, output, domain = "time", fixture;
    ct::DichotomizeConfig cfg;
    int max_dim = 1, dim = 1, vars = 32, obs = 192, planted_dim = -1;
    double rate = 0.2;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> levels, euler_levels;

    auto* dichotomize = app.add_subcommand("dichotomize", "series CSV -> binary CSV");
    dichotomize->add_option("--input", input)->required();
    dichotomize->add_option("--output", output)->required();
    dichotomize->add_option("--domain", domain)->check(CLI::IsMember({"time", "fourier"}));
    dichotomize->add_option("--drop-fraction", cfg.drop_fraction);
    dichotomize->add_option("--active-fraction", cfg.active_fraction);
    dichotomize->add_option("--power-quantile", cfg.power_quantile);

    auto* persist = app.add_subcommand("persist", "binary CSV -> diagram, plots, moments");
    persist->add_option("--input", input)->required();
    persist->add_option("--output", output, "output path prefix")->required();
    persist->add_option("--max-dim", max_dim)->required();
    persist->add_option("--euler-levels", euler_levels)->delimiter(',');

    auto* localize = app.add_subcommand("localize", "binary CSV -> localization report");
    localize->add_option("--input", input)->required();
    localize->add_option("--output", output)->required();
    localize->add_option("--dim", dim)->required();
    localize->add_option("--levels", levels)->delimiter(',');

    auto* simulate = app.add_subcommand("simulate", "fixtures and null models -> binary CSV");
    simulate->add_option("--output", output)->required();
    simulate->add_option("--fixture", fixture);
    simulate->add_option("--vars", vars);
    simulate->add_option("--obs", obs);
    simulate->add_option("--rate", rate);
    simulate->add_option("--seed", seed);
    simulate->add_option("--planted-dim", planted_dim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*dichotomize) {
            cfg.domain = domain == "fourier" ? ct::Domain::fourier : ct::Domain::time;
            return run_dichotomize(input, output, cfg);
        }
        if (*persist) return run_persist(input, output, max_dim, euler_levels);
        if (*localize) return run_localize(input, output, dim, levels);
        if (*simulate) return run_simulate(output, fixture, vars, obs, rate, seed, planted_dim);
    } catch (const ct::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ct::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
