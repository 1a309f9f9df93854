#include "ore/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <sstream>
#include <thread>

namespace ore {
namespace {

int thread_budget() {
    if (const char* env = std::getenv("ORE_GCRD_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

DiffPoly normalize_each_coefficient(const DiffPoly& h) {
    std::vector<Poly<double>> out;
    for (int i = 0; i <= h.deg(); ++i) {
        const Poly<double>& c = h.coeff(i);
        out.push_back(c.is_zero() ? c : c * (1.0 / norm2(c)));
    }
    return DiffPoly(std::move(out));
}

struct TrialInputs {
    DiffPoly f, g;
};

TrialInputs make_trial(const ExperimentConfig& cfg, Rng& rng) {
    DiffPoly h1 = random_factor(cfg, rng);
    DiffPoly h2 = random_factor(cfg, rng);
    DiffPoly h3 = random_factor(cfg, rng);
    TrialInputs in;
    if (cfg.protocol == Protocol::kBounded) {
        h1 = normalize_each_coefficient(h1);
        h2 = normalize_each_coefficient(h2);
        h3 = normalize_each_coefficient(h3);
        in.f = h1 * h3;
        in.g = h2 * h3;
    } else {
        in.f = normalize(h1 * h3);
        in.g = normalize(h2 * h3);
    }
    in.f = add_uniform_noise(in.f, cfg.delta, rng);
    in.g = add_uniform_noise(in.g, cfg.delta, rng);
    return in;
}

// One "Nearest With GCRD" pass recording both reconstructions. The inputs
// are fed at their raw scale (the bounded protocol exists to probe
// unnormalized data), and the G extraction is not needed for the
// statistics, so the pipeline stops after the reconstruction step.
TrialRecord run_trial(const ExperimentConfig& cfg, int index) {
    Rng rng(Rng::stream_seed(cfg.seed, static_cast<uint64_t>(index)));
    TrialRecord rec;
    rec.index = index;
    TrialInputs in = make_trial(cfg, rng);
    try {
        SylvesterMatrix<double> v = build_sylvester(in.f, in.g);
        InflatedMatrix vh = inflate(v);
        SvdFactors svd = compute_svd_thin(vh.data);
        std::vector<double> sigma(svd.sigma.data(), svd.sigma.data() + svd.sigma.size());
        RankReport rep = deflated_rank(sigma, cfg.rho, v.m, v.n, v.d, v.mu);
        if (!rep.separation_ok) {
            rec.failed = true;
            rec.trivial = true;
            return rec;
        }
        if (rep.full_rank) {
            rec.trivial = true;
            return rec;
        }
        int degree = v.size() - rep.r;
        int keep = (v.size() - degree) * (v.mu + v.d + 1);
        Mat vtil = vh.data;
        for (int i = keep; i < svd.sigma.size(); ++i)
            vtil.noalias() -= svd.sigma(i) * svd.p.col(i) * svd.q.row(i);
        auto [ff, gf] = reconstruct_pair(vtil, vh, in.f, in.g, ReconstructionMode::kFirstRow);
        auto [fw, gw] = reconstruct_pair(vtil, vh, in.f, in.g, ReconstructionMode::kWeighted);
        rec.pf_first = diff_norm(in.f - ff);
        rec.pg_first = diff_norm(in.g - gf);
        rec.pf_weighted = diff_norm(in.f - fw);
        rec.pg_weighted = diff_norm(in.g - gw);
    } catch (const std::exception&) {
        rec.failed = true;
        rec.trivial = true;
    }
    return rec;
}

QuantityStats summarize(const std::vector<double>& xs) {
    QuantityStats q;
    if (xs.empty()) return q;
    double sum = 0;
    for (double x : xs) {
        q.max = std::max(q.max, x);
        sum += x;
    }
    q.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - q.mean) * (x - q.mean);
        q.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return q;
}

TrialStats run_suite(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
    if (cfg.rho <= 0) throw std::invalid_argument("bench: rho must be positive");
    if (cfg.delta < 0) throw std::invalid_argument("bench: delta must be nonnegative");
    TrialStats stats;
    stats.trials = cfg.trials;
    stats.records.resize(static_cast<size_t>(cfg.trials));

    int workers = std::min(thread_budget(), cfg.trials);
    if (workers <= 1) {
        for (int i = 0; i < cfg.trials; ++i) stats.records[static_cast<size_t>(i)] = run_trial(cfg, i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < cfg.trials; i = next.fetch_add(1))
                    stats.records[static_cast<size_t>(i)] = run_trial(cfg, i);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<double> pf1, pg1, pfw, pgw;
    for (const auto& rec : stats.records) {
        if (rec.failed) ++stats.failure_count;
        if (rec.trivial) {
            ++stats.trivial_gcrd_count;
            continue;
        }
        pf1.push_back(rec.pf_first);
        pg1.push_back(rec.pg_first);
        pfw.push_back(rec.pf_weighted);
        pgw.push_back(rec.pg_weighted);
    }
    stats.trial_count_used = cfg.trials - stats.trivial_gcrd_count;
    stats.f_first = summarize(pf1);
    stats.g_first = summarize(pg1);
    stats.f_weighted = summarize(pfw);
    stats.g_weighted = summarize(pgw);
    return stats;
}

}  // namespace

DiffPoly add_uniform_noise(const DiffPoly& f, double delta, Rng& rng) {
    if (delta < 0) throw std::invalid_argument("add_uniform_noise: delta must be nonnegative");
    if (delta == 0 || f.is_zero()) return f;
    std::vector<std::vector<double>> noise;
    double norm = 0;
    for (int i = 0; i <= f.deg(); ++i) {
        std::vector<double> row(static_cast<size_t>(std::max(f.coeff(i).degree(), -1)) + 1, 0.0);
        for (int j = 0; j <= f.coeff(i).degree(); ++j) {
            if (f.coeff(i).coeff(j) == 0.0) continue;
            double u = rng.next_symmetric();
            row[static_cast<size_t>(j)] = u;
            norm += u * u;
        }
        noise.push_back(std::move(row));
    }
    norm = std::sqrt(norm);
    if (norm == 0) return f;
    std::vector<Poly<double>> out;
    for (int i = 0; i <= f.deg(); ++i) {
        std::vector<double> c(noise[static_cast<size_t>(i)].size());
        for (size_t j = 0; j < c.size(); ++j)
            c[j] = f.coeff(i).coeff(static_cast<int>(j)) + noise[static_cast<size_t>(i)][j] * (delta / norm);
        out.emplace_back(std::move(c));
    }
    return DiffPoly(std::move(out));
}

DiffPoly random_factor(const ExperimentConfig& cfg, Rng& rng) {
    int dd = rng.next_int(cfg.min_deg_d, cfg.max_deg_d);
    std::vector<Poly<double>> coeffs;
    for (int i = 0; i <= dd; ++i) {
        int dt = rng.next_int(0, cfg.max_deg_t);
        std::vector<double> c(static_cast<size_t>(dt) + 1);
        for (auto& v : c) v = rng.next_symmetric();
        coeffs.emplace_back(std::move(c));
    }
    DiffPoly h(std::move(coeffs));
    if (h.deg() != dd) {
        // leading draw vanished (probability ~0); retry
        return random_factor(cfg, rng);
    }
    return h;
}

TrialStats run_bounded_suite(const ExperimentConfig& cfg) {
    if (cfg.protocol != Protocol::kBounded) throw std::invalid_argument("run_bounded_suite: wrong protocol");
    return run_suite(cfg);
}

TrialStats run_normalized_suite(const ExperimentConfig& cfg) {
    if (cfg.protocol != Protocol::kNormalized) throw std::invalid_argument("run_normalized_suite: wrong protocol");
    return run_suite(cfg);
}

std::string to_csv(const TrialStats& stats, const ExperimentConfig& cfg) {
    std::ostringstream out;
    out.precision(6);
    out << "rho,delta,reconstruction,max,mean,stddev,trivial_count,trials\n";
    auto row = [&](const char* name, const QuantityStats& q) {
        out << cfg.rho << ',' << cfg.delta << ',' << name << ',' << q.max << ',' << q.mean << ',' << q.stddev << ','
            << stats.trivial_gcrd_count << ',' << stats.trials << '\n';
    };
    row("f_first", stats.f_first);
    row("g_first", stats.g_first);
    row("f_weighted", stats.f_weighted);
    row("g_weighted", stats.g_weighted);
    return out.str();
}

std::string to_json(const TrialStats& stats, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["protocol"] = cfg.protocol == Protocol::kBounded ? "bounded" : "normalized";
    j["rho"] = cfg.rho;
    j["delta"] = cfg.delta;
    j["seed"] = cfg.seed;
    j["trials"] = stats.trials;
    j["trivial_gcrd_count"] = stats.trivial_gcrd_count;
    j["trial_count_used"] = stats.trial_count_used;
    j["failure_count"] = stats.failure_count;
    auto quantity = [](const QuantityStats& q) {
        return nlohmann::json{{"max", q.max}, {"mean", q.mean}, {"stddev", q.stddev}};
    };
    j["f_first"] = quantity(stats.f_first);
    j["g_first"] = quantity(stats.g_first);
    j["f_weighted"] = quantity(stats.f_weighted);
    j["g_weighted"] = quantity(stats.g_weighted);
    auto records = nlohmann::json::array();
    for (const auto& rec : stats.records)
        records.push_back({{"index", rec.index},
                           {"trivial", rec.trivial},
                           {"failed", rec.failed},
                           {"pf_first", rec.pf_first},
                           {"pg_first", rec.pg_first},
                           {"pf_weighted", rec.pf_weighted},
                           {"pg_weighted", rec.pg_weighted}});
    j["trials_log"] = std::move(records);
    return j.dump();
}

}  // namespace ore
