#pragma once

#include <cstdint>
#include <vector>

#include "ore/gcrd.hpp"

namespace ore {

// Deterministic 64-bit stream (splitmix64 core).
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform on [0, 1)
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    // uniform on [-1, 1)
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }
    int next_int(int lo, int hi) { return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1)); }

    static uint64_t stream_seed(uint64_t seed, uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        return mix.next_u64();
    }

  private:
    uint64_t state_;
};

enum class Protocol { kBounded, kNormalized };

struct ExperimentConfig {
    Protocol protocol = Protocol::kBounded;
    int trials = 100;
    double rho = 0.5;    // search radius
    double delta = 0.0;  // noise norm added to each input
    uint64_t seed = 1;
    ReconstructionMode mode = ReconstructionMode::kFirstRow;
    int min_deg_d = 1, max_deg_d = 2;  // degree of each random factor in D
    int max_deg_t = 2;                 // degree bound of each coefficient in t
};

// Perturb every nonzero coefficient by i.i.d. uniform noise, rescaled so the
// total perturbation norm is exactly delta. Structural zeros stay zero.
DiffPoly add_uniform_noise(const DiffPoly& f, double delta, Rng& rng);

// Random factor with deg_d in [min_deg_d, max_deg_d], each coefficient a
// random polynomial of degree <= max_deg_t with coefficients in [-1, 1).
DiffPoly random_factor(const ExperimentConfig& cfg, Rng& rng);

struct QuantityStats {
    double max = 0, mean = 0, stddev = 0;
};

struct TrialRecord {
    int index = 0;
    bool trivial = false;  // coprime within the search radius
    bool failed = false;   // rank-separation or extraction failure (counted as trivial)
    double pf_first = 0, pg_first = 0, pf_weighted = 0, pg_weighted = 0;
};

struct TrialStats {
    QuantityStats f_first, g_first, f_weighted, g_weighted;
    int trials = 0;
    int trivial_gcrd_count = 0;  // includes failed trials
    int trial_count_used = 0;    // trials - trivial_gcrd_count
    int failure_count = 0;
    std::vector<TrialRecord> records;
};

TrialStats run_bounded_suite(const ExperimentConfig& cfg);
TrialStats run_normalized_suite(const ExperimentConfig& cfg);

std::string to_csv(const TrialStats& stats, const ExperimentConfig& cfg);
std::string to_json(const TrialStats& stats, const ExperimentConfig& cfg);

}  // namespace ore
