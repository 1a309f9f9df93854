#pragma once

#include "ore/fft.hpp"
#include "ore/svd.hpp"
#include "ore/sylvester.hpp"

namespace ore {

struct SeparationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ExtractionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CandidateRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ReconstructionMode { kFirstRow, kWeighted };
enum class ContentMode { kNone, kFft };

struct GcrdOptions {
    ContentMode content = ContentMode::kFft;
    double cleanup_threshold = 1e-8;  // FFT content-removal cleanup
    double extraction_floor = 1e-2;   // smallest ||G|| accepted from an annihilator without fallback
    double degenerate_threshold = 1e-10;
    bool refine = true;  // Gauss-Newton polish of monic primitive candidates
};

struct RankReport {
    int k = 0;               // retained singular values
    int r = 0;               // scaled rank ceil(k / (mu+d+1))
    bool full_rank = false;  // r == m+n
    bool separation_ok = true;
    double upper_threshold = 0;  // eps * sqrt((m+n)(2mu+d+2)) / (mu+d+1)
};

// Numerical rank of V read off the singular values of the inflated matrix:
// k is the largest index with sigma_k above the scaled threshold and
// sigma_{k+1} below eps; separation_ok is false when no such gap exists.
RankReport deflated_rank(const std::vector<double>& sigma, double eps, int m, int n, int d, int mu);

struct GcrdOutcome {
    enum class Kind { kCoprime, kFound };
    Kind kind = Kind::kCoprime;
    DiffPoly gcrd;       // present when kind == kFound
    int degree = 0;      // deg_d of gcrd
    double residual = 0; // largest suppressed trailing coefficient norm, on the returned G's scale
    std::vector<Poly<double>> w;  // annihilator row (u | v), deg_t <= mu
    DiffPoly cofactor_u, cofactor_v;
    bool content_inexact = false;
    bool has_perturbed_pair = false;
    DiffPoly f_tilde, g_tilde;  // original input scale
    double perturbation_f = 0, perturbation_g = 0;
    std::vector<double> singular_values;
    RankReport rank;
};

struct GcrdSolve {
    std::vector<Poly<double>> w;  // length m+n
    DiffPoly raw_gcrd;            // u*f + v*g truncated to degree D, largest coefficient norm 1
    DiffPoly cofactor_u, cofactor_v;
    double residual = 0;
    double score = 0;  // norm of the vectorized extraction, unit annihilator
    int budget = 0;    // t-degree allowed for w
    bool degenerate = true;
};

// Solve w V = (*_0 ... *_D 0 ... 0) for the smallest t-degree budget that
// admits a near-annihilator of the trailing block columns, picking within
// that annihilator space the direction of largest extracted G. null_level,
// when nonnegative, is the largest suppressed singular value of the full
// inflated matrix; the kernel tolerance is tightened to its scale so noisy
// near-annihilators at too-small budgets are not mistaken for solutions.
GcrdSolve solve_gcrd_system(const InflatedMatrix& vhat, int target_degree, double eps,
                            const GcrdOptions& opts = {}, double null_level = -1.0);

// Algorithm "NumericGCRD": rank detection on the inflated Sylvester matrix,
// annihilator extraction, optional FFT content removal. Inputs are
// normalized internally. Throws SeparationFailure, CandidateRejected or
// ExtractionFailure.
GcrdOutcome numeric_gcrd(const DiffPoly& f, const DiffPoly& g, double eps, const GcrdOptions& opts = {});

// Recover (f~, g~) from a perturbed inflated matrix: entries are read from
// the first occurrence of each coefficient (FirstRow) or averaged over all
// t-shifted copies (Weighted); t-degrees never exceed those of f and g.
std::pair<DiffPoly, DiffPoly> reconstruct_pair(const Mat& vtil, const InflatedMatrix& shape, const DiffPoly& f,
                                               const DiffPoly& g, ReconstructionMode mode);

// Algorithm "Nearest With GCRD": truncate the singular spectrum to rank
// (m+n-D)(mu+d+1), rebuild the pair, then run NumericGCRD on it.
GcrdOutcome nearest_with_gcrd(const DiffPoly& f, const DiffPoly& g, double eps, ReconstructionMode mode,
                              const GcrdOptions& opts = {});

struct ContentRemoval {
    DiffPoly op;
    bool inexact = false;
};

// Right-division remainder by an operator whose leading coefficient is a
// (nonzero) constant; stays in float polynomial arithmetic.
DiffPoly monic_remainder(const DiffPoly& f, const DiffPoly& divisor);

// Gauss-Newton polish of a monic-leading candidate: minimizes the stacked
// right-division remainders of f and g over the non-leading coefficients of
// G (t-degrees up to degree_cap). Returns the refined operator; keeps the
// input when the iteration cannot improve the residual.
DiffPoly refine_monic_gcrd(const DiffPoly& f, const DiffPoly& g, DiffPoly candidate, int degree_cap,
                           int iterations = 6);

// Algorithm "Content Removal via Approximate Division": divide every
// coefficient by the leading one via FFT quotients and set the leading
// coefficient to 1. Requires the leading coefficient to have minimal
// t-degree.
ContentRemoval remove_content_fft(const DiffPoly& g, double threshold);

}  // namespace ore
