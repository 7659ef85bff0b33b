#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "baer/classifier.hpp"
#include "baer/conic.hpp"
#include "baer/harness.hpp"
#include "baer/report_io.hpp"

namespace {

using baer::Format;
using baer::Mode;
using baer::RunConfig;

int run_classify(std::uint32_t q, const std::string& text) {
    const baer::FieldCtx ctx = baer::field_for_order(q);
    const baer::Conic c = baer::make_conic(ctx, baer::parse_coefficients(ctx, text));
    try {
        std::cout << baer::to_json(baer::predict(ctx, c)).dump(2) << '\n';
    } catch (const baer::Refusal& e) {
        const auto count = baer::count_externals_in_subplane(ctx, c);
        nlohmann::json j;
        j["q"] = q;
        j["conic"] = baer::format_conic(ctx, c);
        j["refused"] = e.what();
        j["k"] = count.on_conic;
        j["oracle"] = count.externals;
        std::cout << j.dump(2) << '\n';
    }
    return 0;
}

int run_batch(const RunConfig& cfg, bool acceptance) {
    const baer::RunResult result = baer::verify(cfg);
    nlohmann::json summary = result.aggregate.to_json();
    summary["value_set_violations"] = result.value_set_violations;
    int status = result.ok() ? 0 : 1;
    if (acceptance) {
        const auto failures = baer::acceptance_failures(cfg, result);
        summary["failures"] = failures;
        status = failures.empty() ? 0 : 1;
    }
    std::cout << summary.dump(2) << '\n';
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"External points of conics in a Baer subplane: brute force vs cubic surfaces"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--format", format, "Row format for output files")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

    std::uint32_t q = 3;
    std::string conic_text;
    auto* classify = app.add_subcommand("classify", "Classify one conic and print its report");
    classify->add_option("--q", q, "Order of the subplane field")->required();
    classify->add_option("--conic", conic_text, "Coefficients a,b,c,d,e,f")->required();

    std::string out;
    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive run over conics through (0:1:0)");
    enumerate->add_option("--q", q, "Order of the subplane field (3 only)")->required();
    enumerate->add_option("--out", out, "Output file")->required();

    std::size_t n = 0;
    std::uint64_t seed = 0;
    auto* sample = app.add_subcommand("sample", "Sampled run over conics through (0:1:0)");
    sample->add_option("--q", q, "Order of the subplane field (5, 7 or 9)")->required();
    sample->add_option("--n", n, "Number of conics")->required();
    sample->add_option("--seed", seed, "Generator seed")->required();
    sample->add_option("--out", out, "Output file")->required();

    std::string mode;
    std::optional<std::size_t> verify_n;
    std::uint64_t verify_seed = 42;
    auto* verify = app.add_subcommand("verify", "Acceptance run; nonzero exit on any failure");
    verify->add_option("--q", q, "Order of the subplane field")->required();
    verify->add_option("--mode", mode, "exhaustive (q = 3) or sample (q = 5, 7, 9)")
        ->check(CLI::IsMember({"exhaustive", "sample"}));
    verify->add_option("--n", verify_n, "Sample count (default 10^6 at q = 5, else 10^5)");
    verify->add_option("--seed", verify_seed, "Generator seed")->capture_default_str();
    verify->add_option("--out", out, "Optional output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(q, conic_text);

        RunConfig cfg;
        cfg.q = q;
        cfg.worker_count = workers;
        cfg.format = format == "json" ? Format::Json : Format::Csv;
        cfg.output_path = out;
        if (enumerate->parsed()) {
            cfg.mode = Mode::Exhaustive;
            return run_batch(cfg, false);
        }
        if (sample->parsed()) {
            cfg.mode = Mode::Sample;
            cfg.sample_count = n;
            cfg.rng_seed = seed;
            return run_batch(cfg, false);
        }
        if (mode.empty()) mode = q == 3 ? "exhaustive" : "sample";
        cfg.mode = mode == "exhaustive" ? Mode::Exhaustive : Mode::Sample;
        if (cfg.mode == Mode::Sample) {
            cfg.sample_count = verify_n.value_or(q == 5 ? 1'000'000 : 100'000);
            cfg.rng_seed = verify_seed;
        }
        return run_batch(cfg, true);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
