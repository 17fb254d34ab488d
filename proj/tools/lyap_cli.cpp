// lyap: Lyapunov exponents and CLT variances for products of random 2x2
// matrices tied to random Fibonacci sequences. Subcommands emit CSV (and
// optionally SVG plots); all randomness is controlled by --seed.

#include <CLI11.hpp>

#include <map>
#include <string>
#include <thread>

#include "lyap/commands.hpp"

namespace {

void add_common_flags(CLI::App* sub, lyap::RunConfig& config) {
    sub->add_option("--seed", config.seed, "master seed for all random streams");
    sub->add_option("--workers", config.workers, "worker thread count");
    sub->add_option("--out", config.out, "output stem; writes <out>.csv / <out>.svg");
    const std::map<std::string, lyap::OutputFormat> formats{
        {"csv", lyap::OutputFormat::csv},
        {"svg", lyap::OutputFormat::svg},
        {"both", lyap::OutputFormat::both}};
    sub->add_option("--format", config.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_model_flags(CLI::App* sub, lyap::RunConfig& config) {
    const std::map<std::string, lyap::ModelKind> kinds{
        {"bernoulli", lyap::ModelKind::bernoulli}, {"cauchy", lyap::ModelKind::cauchy}};
    sub->add_option("--model", config.model, "matrix model")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Lyapunov exponents and CLT variances for random Fibonacci matrix products"};
    app.require_subcommand(1);

    lyap::RunConfig config;
    config.workers = std::max(1u, std::thread::hardware_concurrency());

    auto* bounds = app.add_subcommand(
        "bounds", "convergent two-sided Lyapunov bracket from the pair recursion");
    bounds->add_option("--nmax", config.nmax, "highest recursion level");
    const std::map<std::string, lyap::Engine> engines{{"streaming", lyap::Engine::streaming},
                                                      {"multiset", lyap::Engine::multiset}};
    bounds->add_option("--engine", config.engine, "evaluation engine")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
    bounds->add_option("--depth", config.depth_cap, "streaming-engine level cap");
    add_common_flags(bounds, config);

    auto* lambda = app.add_subcommand(
        "lambda-curve", "Monte Carlo Lyapunov estimates across a parameter grid");
    add_model_flags(lambda, config);
    lambda->add_option("--range", [&config](const std::vector<std::string>& vals) {
              config.range_a = std::stod(vals.at(0));
              config.range_b = std::stod(vals.at(1));
              config.range_set = true;
              return true;
          },
          "parameter range a b")
        ->expected(2);
    lambda->add_option("--k", config.k, "grid spacing");
    lambda->add_option("--n", config.n, "chain steps per grid point");
    add_common_flags(lambda, config);

    auto* variance = app.add_subcommand(
        "variance-curve", "CLT variance estimates across a parameter grid");
    add_model_flags(variance, config);
    variance->add_option("--range", [&config](const std::vector<std::string>& vals) {
                config.range_a = std::stod(vals.at(0));
                config.range_b = std::stod(vals.at(1));
                config.range_set = true;
                return true;
            },
            "parameter range a b")
        ->expected(2);
    variance->add_option("--k", config.k, "grid spacing");
    variance->add_option("--n", config.n, "chain steps per replica");
    variance->add_option("--m", config.m, "replicas per grid point");
    variance->add_flag("--paper-scale", config.paper_scale,
                       "use the full-size replica counts instead of desk defaults");
    add_common_flags(variance, config);

    auto* invariant = app.add_subcommand(
        "invariant", "draws from the invariant distribution of the Bernoulli model");
    invariant->add_option("--p", config.p, "Bernoulli parameter");
    invariant->add_option("--count", config.count, "number of independent draws");
    invariant->add_option("--depth", config.depth, "chain depth per draw");
    add_common_flags(invariant, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return lyap::kExitUsage;
    }

    return lyap::execute(app.get_subcommands().front()->get_name(), config);
}
