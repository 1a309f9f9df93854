// Command-line front end: numeric GCRD computations, Sylvester matrix
// inspection, and the randomized experiment harness.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ore/bench.hpp"
#include "ore/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitSeparation = 3;

void write_out(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << body;
}

std::string outcome_text(const ore::GcrdOutcome& outcome) {
    std::ostringstream os;
    if (outcome.kind == ore::GcrdOutcome::Kind::kCoprime) {
        os << "co-prime within the search radius\n";
        return os.str();
    }
    os << "gcrd (degree " << outcome.degree << "): " << ore::render(outcome.gcrd) << "\n";
    os << "residual: " << outcome.residual << "\n";
    if (outcome.has_perturbed_pair) {
        os << "f~: " << ore::render(outcome.f_tilde) << "\n";
        os << "g~: " << ore::render(outcome.g_tilde) << "\n";
        os << "|f - f~|: " << outcome.perturbation_f << "\n";
        os << "|g - g~|: " << outcome.perturbation_g << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate GCRD of differential operators"};
    app.require_subcommand(1);

    std::string f_arg, g_arg, out_path, format = "text";
    double epsilon = 1e-3;
    double cleanup_threshold = 1e-8;
    std::string mode = "first-row", content = "fft";

    auto add_pair_options = [&](CLI::App* cmd) {
        cmd->add_option("f", f_arg, "first operator (file, JSON, or expression in t and D)")->required();
        cmd->add_option("g", g_arg, "second operator")->required();
        cmd->add_option("-e,--epsilon", epsilon, "search radius");
        cmd->add_option("--content", content, "content removal: fft|none")->check(CLI::IsMember({"fft", "none"}));
        cmd->add_option("--cleanup-threshold", cleanup_threshold, "artifact cleanup threshold for content removal");
        cmd->add_option("--format", format, "output format: json|text")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* gcrd_cmd = app.add_subcommand("gcrd", "numeric GCRD of two operators");
    add_pair_options(gcrd_cmd);

    CLI::App* nearest_cmd = app.add_subcommand("nearest", "nearest pair with a nontrivial GCRD");
    add_pair_options(nearest_cmd);
    nearest_cmd->add_option("--mode", mode, "reconstruction: first-row|weighted")
        ->check(CLI::IsMember({"first-row", "weighted"}));

    CLI::App* sylv_cmd = app.add_subcommand("sylvester", "print the differential Sylvester matrix");
    bool inflated = false;
    sylv_cmd->add_option("f", f_arg, "first operator")->required();
    sylv_cmd->add_option("g", g_arg, "second operator")->required();
    sylv_cmd->add_flag("--inflated", inflated, "also print the inflated matrix");
    sylv_cmd->add_option("--format", format, "output format: json|text")->check(CLI::IsMember({"json", "text"}));
    sylv_cmd->add_option("--out", out_path, "write output to a file");

    CLI::App* bench_cmd = app.add_subcommand("bench", "randomized experiment harness");
    std::string protocol = "bounded";
    ore::ExperimentConfig cfg;
    bench_cmd->add_option("--protocol", protocol, "bounded|normalized")
        ->check(CLI::IsMember({"bounded", "normalized"}));
    bench_cmd->add_option("--trials", cfg.trials, "number of trials");
    bench_cmd->add_option("--rho", cfg.rho, "search radius");
    bench_cmd->add_option("--delta", cfg.delta, "noise norm");
    bench_cmd->add_option("--seed", cfg.seed, "RNG seed");
    std::string bench_format = "csv";
    bench_cmd->add_option("--format", bench_format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    bench_cmd->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ore::GcrdOptions opts;
        opts.content = content == "fft" ? ore::ContentMode::kFft : ore::ContentMode::kNone;
        opts.cleanup_threshold = cleanup_threshold;
        if (gcrd_cmd->parsed()) {
            ore::GcrdOutcome outcome = ore::numeric_gcrd(ore::load_operator(f_arg), ore::load_operator(g_arg),
                                                         epsilon, opts);
            write_out(out_path, format == "json" ? ore::to_json(outcome) : outcome_text(outcome));
        } else if (nearest_cmd->parsed()) {
            auto rmode = mode == "weighted" ? ore::ReconstructionMode::kWeighted : ore::ReconstructionMode::kFirstRow;
            ore::GcrdOutcome outcome = ore::nearest_with_gcrd(ore::load_operator(f_arg), ore::load_operator(g_arg),
                                                              epsilon, rmode, opts);
            write_out(out_path, format == "json" ? ore::to_json(outcome) : outcome_text(outcome));
        } else if (sylv_cmd->parsed()) {
            ore::DiffPoly f = ore::load_operator(f_arg), g = ore::load_operator(g_arg);
            ore::SylvesterMatrix<double> v = ore::build_sylvester(f, g);
            std::ostringstream os;
            if (format == "json") {
                os << "{\"m\":" << v.m << ",\"n\":" << v.n << ",\"d\":" << v.d << ",\"mu\":" << v.mu
                   << ",\"entries\":[";
                for (size_t i = 0; i < v.rows.size(); ++i) {
                    os << (i ? ",[" : "[");
                    for (size_t j = 0; j < v.rows[i].size(); ++j)
                        os << (j ? "," : "") << '"' << ore::render(v.rows[i][j], 17) << '"';
                    os << "]";
                }
                os << "]";
                if (inflated) {
                    ore::InflatedMatrix vh = ore::inflate(v);
                    os << ",\"inflated\":[";
                    for (Eigen::Index r = 0; r < vh.data.rows(); ++r) {
                        os << (r ? ",[" : "[");
                        for (Eigen::Index cidx = 0; cidx < vh.data.cols(); ++cidx)
                            os << (cidx ? "," : "") << vh.data(r, cidx);
                        os << "]";
                    }
                    os << "]";
                }
                os << "}";
            } else {
                for (const auto& row : v.rows) {
                    for (size_t j = 0; j < row.size(); ++j) os << (j ? " | " : "") << ore::render(row[j]);
                    os << '\n';
                }
                if (inflated) {
                    os << '\n';
                    os << ore::to_text(ore::inflate(v).data);
                }
            }
            write_out(out_path, os.str());
        } else if (bench_cmd->parsed()) {
            cfg.protocol = protocol == "bounded" ? ore::Protocol::kBounded : ore::Protocol::kNormalized;
            ore::TrialStats stats = cfg.protocol == ore::Protocol::kBounded ? ore::run_bounded_suite(cfg)
                                                                            : ore::run_normalized_suite(cfg);
            std::string body;
            if (bench_format == "json") {
                body = ore::to_json(stats, cfg);
            } else if (bench_format == "csv") {
                body = ore::to_csv(stats, cfg);
            } else {
                std::ostringstream os;
                os << "trials " << stats.trials << ", trivial " << stats.trivial_gcrd_count << ", used "
                   << stats.trial_count_used << "\n"
                   << "f  first-row: max " << stats.f_first.max << " mean " << stats.f_first.mean << " sd "
                   << stats.f_first.stddev << "\n"
                   << "g  first-row: max " << stats.g_first.max << " mean " << stats.g_first.mean << " sd "
                   << stats.g_first.stddev << "\n"
                   << "f  weighted : max " << stats.f_weighted.max << " mean " << stats.f_weighted.mean << " sd "
                   << stats.f_weighted.stddev << "\n"
                   << "g  weighted : max " << stats.g_weighted.max << " mean " << stats.g_weighted.mean << " sd "
                   << stats.g_weighted.stddev << "\n";
                body = os.str();
            }
            write_out(out_path, body);
        }
        return kExitOk;
    } catch (const ore::SeparationFailure& e) {
        std::cerr << "{\"error\":\"separation\",\"message\":\"" << e.what() << "\"}\n";
        return kExitSeparation;
    } catch (const ore::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"computation\",\"message\":\"" << e.what() << "\"}\n";
        return kExitComputation;
    }
}
