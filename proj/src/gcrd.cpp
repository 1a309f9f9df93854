#include "ore/gcrd.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace ore {
namespace {

// Inflation of selected block columns of V with w-degree budget delta:
// block (I, J) is Gamma_{delta}(V_IJ) of shape (delta+1) x (delta+d+1).
Mat inflate_budget(const SylvesterMatrix<double>& v, int delta, int first_col, int last_col) {
    int nblocks = last_col - first_col + 1;
    int br = delta + 1, bc = delta + v.d + 1;
    Mat out = Mat::Zero(v.size() * br, nblocks * bc);
    for (int bi = 0; bi < v.size(); ++bi)
        for (int bj = 0; bj < nblocks; ++bj) {
            const Poly<double>& p = v.rows[bi][first_col + bj];
            for (int k = 0; k < br; ++k)
                for (int j = 0; j <= std::max(p.degree(), -1); ++j) out(bi * br + k, bj * bc + k + j) = p.coeff(j);
        }
    return out;
}

std::vector<Poly<double>> devectorize(const Vec& w, int blocks, int budget) {
    std::vector<Poly<double>> out;
    out.reserve(blocks);
    for (int i = 0; i < blocks; ++i) {
        std::vector<double> c(static_cast<size_t>(budget) + 1);
        for (int r = 0; r <= budget; ++r) c[static_cast<size_t>(r)] = w(i * (budget + 1) + r);
        out.emplace_back(std::move(c));
    }
    return out;
}

double max_coeff_norm(const DiffPoly& f) {
    double m = 0;
    for (const auto& c : f.coeffs()) m = std::max(m, norm2(c));
    return m;
}

DiffPoly truncate_degree(const DiffPoly& f, int deg) {
    std::vector<Poly<double>> c;
    for (int i = 0; i <= std::min(deg, f.deg()); ++i) c.push_back(f.coeff(i));
    return DiffPoly(std::move(c));
}

// Algorithm 1 step 2: drop linear-algebra artifacts below a threshold.
DiffPoly trim_artifacts(const DiffPoly& f, double tol) {
    std::vector<Poly<double>> out;
    for (int i = 0; i <= f.deg(); ++i) {
        std::vector<double> c(f.coeff(i).coeffs());
        for (auto& v : c)
            if (std::abs(v) < tol) v = 0.0;
        out.emplace_back(std::move(c));
    }
    return DiffPoly(std::move(out));
}

}  // namespace

RankReport deflated_rank(const std::vector<double>& sigma, double eps, int m, int n, int d, int mu) {
    if (eps <= 0) throw std::invalid_argument("deflated_rank: eps must be positive");
    for (size_t i = 1; i < sigma.size(); ++i)
        if (sigma[i] > sigma[i - 1]) throw std::invalid_argument("deflated_rank: singular values not sorted");
    const int size = m + n;
    const int bc = mu + d + 1;
    RankReport rep;
    rep.upper_threshold = eps * std::sqrt(static_cast<double>(size) * (2 * mu + d + 2)) / bc;

    if (!sigma.empty() && sigma.back() > eps) {
        rep.k = static_cast<int>(sigma.size());
        rep.r = size;
        rep.full_rank = true;
        return rep;
    }
    int ka = 0;
    while (ka < static_cast<int>(sigma.size()) && sigma[static_cast<size_t>(ka)] > rep.upper_threshold) ++ka;
    double next = ka < static_cast<int>(sigma.size()) ? sigma[static_cast<size_t>(ka)] : 0.0;
    if (ka == 0) {
        if (!sigma.empty() && sigma.front() >= eps) {
            // values sit between eps and the upper threshold: no usable gap
            rep.separation_ok = false;
        }
        rep.k = 0;
        rep.r = 0;
    } else {
        rep.k = ka;
        rep.r = (ka + bc - 1) / bc;
        if (next >= eps) rep.separation_ok = false;
    }
    rep.full_rank = rep.r == size;
    return rep;
}

GcrdSolve solve_gcrd_system(const InflatedMatrix& vhat, int target_degree, double eps, const GcrdOptions& opts,
                            double null_level) {
    const SylvesterMatrix<double>& v = vhat.source;
    const int size = v.size();
    if (target_degree < 0 || target_degree >= size)
        throw std::invalid_argument("solve_gcrd_system: target degree out of range");

    // rebuild f and g from the first rows of each block group
    DiffPoly f(std::vector<Poly<double>>(v.rows[0].begin(), v.rows[0].begin() + v.m + 1));
    DiffPoly g(std::vector<Poly<double>>(v.rows[static_cast<size_t>(v.n)].begin(),
                                         v.rows[static_cast<size_t>(v.n)].begin() + v.n + 1));

    GcrdSolve fallback;
    bool have_fallback = false;

    // Extract from the span of the given orthonormal annihilator basis the
    // direction of largest resulting G.
    auto extract = [&](const Mat& kernel, int budget) -> GcrdSolve {
        Mat mk = inflate_budget(v, budget, 0, target_degree);
        Mat t = kernel.transpose() * mk;
        Eigen::BDCSVD<Mat> tsvd(t, Eigen::ComputeThinU);
        double top = tsvd.singularValues().size() ? tsvd.singularValues()(0) : 0.0;
        GcrdSolve cand;
        cand.budget = budget;
        if (top <= opts.degenerate_threshold) {
            if (!have_fallback) {
                // remember the annihilator even though u f + v g vanishes
                fallback.w = devectorize(kernel.col(kernel.cols() - 1), size, budget);
                fallback.budget = budget;
                have_fallback = true;
            }
            return cand;
        }
        Vec what = kernel * tsvd.matrixU().col(0);
        std::vector<Poly<double>> w = devectorize(what, size, budget);
        DiffPoly u(std::vector<Poly<double>>(w.begin(), w.begin() + v.n));
        DiffPoly vv(std::vector<Poly<double>>(w.begin() + v.n, w.end()));
        DiffPoly combo = u * f + vv * g;
        double resid = 0;
        for (int i = target_degree + 1; i <= combo.deg(); ++i) resid = std::max(resid, norm2(combo.coeff(i)));
        DiffPoly raw = truncate_degree(combo, target_degree);
        double norm = max_coeff_norm(raw);
        if (norm <= opts.degenerate_threshold) return cand;
        cand.w = std::move(w);
        cand.cofactor_u = u;
        cand.cofactor_v = vv;
        cand.raw_gcrd = scale(raw, 1.0 / norm);
        cand.residual = resid / norm;
        cand.degenerate = false;
        cand.score = top;
        return cand;
    };

    auto sweep = [&](double tau) -> GcrdSolve {
        GcrdSolve best;
        double best_score = 0;
        for (int budget = 0; budget <= v.mu; ++budget) {
            const int rows = size * (budget + 1);
            std::vector<Mat> kernels;  // tightest annihilator cluster first
            if (target_degree == size - 1) {
                kernels.push_back(Mat::Identity(rows, rows));
            } else {
                Mat mz = inflate_budget(v, budget, target_degree + 1, size - 1);
                Eigen::BDCSVD<Mat> svd(mz, Eigen::ComputeFullU);
                const auto& sig = svd.singularValues();
                double sig_min = rows > sig.size() ? 0.0 : sig(sig.size() - 1);
                if (sig_min > tau) continue;  // no near-annihilator at this budget
                double mach = std::numeric_limits<double>::epsilon() * sig(0) * std::max(mz.rows(), mz.cols());
                for (double tol : {std::min(tau, std::max(3 * sig_min, mach)), std::max(tau, mach)}) {
                    int first = 0;
                    while (first < sig.size() && sig(first) > tol) ++first;
                    if (first == rows) continue;
                    if (!kernels.empty() && kernels.back().cols() == rows - first) continue;
                    kernels.push_back(svd.matrixU().rightCols(rows - first));
                }
            }
            for (const Mat& kernel : kernels) {
                GcrdSolve cand = extract(kernel, budget);
                if (cand.degenerate) continue;
                if (cand.score >= opts.extraction_floor) return cand;  // smallest budget with a solid extraction
                if (cand.score > best_score) {
                    best_score = cand.score;
                    best = std::move(cand);
                }
            }
        }
        return best;
    };

    // tighten the kernel tolerance to the scale of the suppressed singular
    // values; fall back to the plain search radius if that finds nothing
    double tau_strict = null_level >= 0 ? std::min(eps, 10 * null_level) : eps;
    GcrdSolve sol = sweep(tau_strict);
    if (sol.degenerate && tau_strict < eps) sol = sweep(eps);
    if (sol.degenerate && have_fallback) return fallback;
    return sol;
}

GcrdOutcome numeric_gcrd(const DiffPoly& f, const DiffPoly& g, double eps, const GcrdOptions& opts) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("numeric_gcrd: zero operator");
    DiffPoly fn = normalize(f), gn = normalize(g);
    SylvesterMatrix<double> v = build_sylvester(fn, gn);
    InflatedMatrix vh = inflate(v);
    Vec sig = singular_values(vh.data);
    std::vector<double> sigma(sig.data(), sig.data() + sig.size());
    RankReport rep = deflated_rank(sigma, eps, v.m, v.n, v.d, v.mu);

    GcrdOutcome out;
    out.singular_values = sigma;
    out.rank = rep;
    if (!rep.separation_ok)
        throw SeparationFailure("numeric_gcrd: no usable gap in the singular values at radius eps");
    if (rep.full_rank) return out;

    int degree = v.size() - rep.r;
    if (degree > std::min(v.m, v.n))
        throw CandidateRejected("numeric_gcrd: candidate degree exceeds min(deg f, deg g)");
    double null_level = rep.k < static_cast<int>(sigma.size()) ? sigma[static_cast<size_t>(rep.k)] : 0.0;
    GcrdSolve sol = solve_gcrd_system(vh, degree, eps, opts, null_level);
    if (sol.degenerate) throw ExtractionFailure("numeric_gcrd: annihilator extraction degenerated");

    // artifacts in the extracted coefficients live at the scale of the
    // suppressed singular values
    double trim = std::min(0.05, std::max(10 * null_level, opts.cleanup_threshold));
    DiffPoly raw = trim_artifacts(sol.raw_gcrd, trim);
    double raw_norm = max_coeff_norm(raw);
    if (raw.deg() != degree || raw_norm <= opts.degenerate_threshold)
        throw ExtractionFailure("numeric_gcrd: extracted candidate vanished under artifact cleanup");
    raw = scale(raw, 1.0 / raw_norm);

    // leading-coefficient degree heuristic; sound whenever one leading
    // coefficient is a constant (then the leading coefficients are coprime)
    if (std::min(f.leading().degree(), g.leading().degree()) == 0) {
        int lead_deg = raw.leading().degree();
        for (int i = 0; i < raw.deg(); ++i) {
            const Poly<double>& c = raw.coeff(i);
            if (!c.is_zero() && c.degree() < lead_deg)
                throw CandidateRejected("numeric_gcrd: coefficient degrees inconsistent with a primitive GCRD");
        }
    }

    out.kind = GcrdOutcome::Kind::kFound;
    out.degree = degree;
    out.w = sol.w;
    out.cofactor_u = sol.cofactor_u;
    out.cofactor_v = sol.cofactor_v;
    out.residual = sol.residual;
    if (opts.content == ContentMode::kFft) {
        ContentRemoval cr = remove_content_fft(raw, opts.cleanup_threshold);
        out.gcrd = opts.refine ? refine_monic_gcrd(fn, gn, cr.op, v.d) : cr.op;
        out.content_inexact = cr.inexact;
    } else {
        out.gcrd = raw;
    }
    return out;
}

std::pair<DiffPoly, DiffPoly> reconstruct_pair(const Mat& vtil, const InflatedMatrix& shape, const DiffPoly& f,
                                               const DiffPoly& g, ReconstructionMode mode) {
    const int br = shape.block_rows(), bc = shape.block_cols();
    auto read_block_row = [&](int block_row, const DiffPoly& orig) {
        std::vector<Poly<double>> coeffs;
        for (int k = 0; k <= orig.deg(); ++k) {
            const Poly<double>& oc = orig.coeff(k);
            if (oc.is_zero()) {
                coeffs.emplace_back();
                continue;
            }
            std::vector<double> c(static_cast<size_t>(oc.degree()) + 1, 0.0);
            for (int j = 0; j <= oc.degree(); ++j) {
                if (mode == ReconstructionMode::kFirstRow) {
                    c[static_cast<size_t>(j)] = vtil(block_row * br, k * bc + j);
                } else {
                    double acc = 0;
                    for (int r = 0; r < br; ++r) acc += vtil(block_row * br + r, k * bc + j + r);
                    c[static_cast<size_t>(j)] = acc / br;
                }
            }
            coeffs.emplace_back(std::move(c));
        }
        return DiffPoly(std::move(coeffs));
    };
    return {read_block_row(0, f), read_block_row(shape.n, g)};
}

GcrdOutcome nearest_with_gcrd(const DiffPoly& f, const DiffPoly& g, double eps, ReconstructionMode mode,
                              const GcrdOptions& opts) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("nearest_with_gcrd: zero operator");
    const double nf = diff_norm(f), ng = diff_norm(g);
    DiffPoly fn = scale(f, 1.0 / nf), gn = scale(g, 1.0 / ng);
    SylvesterMatrix<double> v = build_sylvester(fn, gn);
    InflatedMatrix vh = inflate(v);
    SvdFactors svd = compute_svd_thin(vh.data);
    std::vector<double> sigma(svd.sigma.data(), svd.sigma.data() + svd.sigma.size());
    RankReport rep = deflated_rank(sigma, eps, v.m, v.n, v.d, v.mu);

    if (!rep.separation_ok)
        throw SeparationFailure("nearest_with_gcrd: no usable gap in the singular values at radius eps");
    if (rep.full_rank) {
        GcrdOutcome out;
        out.singular_values = sigma;
        out.rank = rep;
        return out;
    }

    const int degree = v.size() - rep.r;
    const int keep = (v.size() - degree) * (v.mu + v.d + 1);
    Mat vtil = vh.data;
    for (int i = keep; i < svd.sigma.size(); ++i)
        vtil.noalias() -= svd.sigma(i) * svd.p.col(i) * svd.q.row(i);

    auto [ft, gt] = reconstruct_pair(vtil, vh, fn, gn, mode);
    GcrdOutcome out = numeric_gcrd(ft, gt, eps, opts);
    out.singular_values = sigma;
    out.rank = rep;
    out.has_perturbed_pair = true;
    out.perturbation_f = nf * diff_norm(fn - ft);
    out.perturbation_g = ng * diff_norm(gn - gt);
    out.f_tilde = scale(ft, nf);
    out.g_tilde = scale(gt, ng);
    return out;
}

DiffPoly monic_remainder(const DiffPoly& f, const DiffPoly& divisor) {
    if (divisor.is_zero() || divisor.leading().degree() != 0)
        throw std::invalid_argument("monic_remainder: divisor leading coefficient must be a constant");
    const double lead = divisor.leading().coeff(0);
    if (lead == 0.0) throw std::invalid_argument("monic_remainder: zero leading coefficient");
    DiffPoly r = f;
    while (!r.is_zero() && r.deg() >= divisor.deg()) {
        int k = r.deg() - divisor.deg();
        Poly<double> q = r.leading() * (1.0 / lead);
        DiffPoly shifted = divisor;
        for (int i = 0; i < k; ++i) shifted = DiffPoly::d_shift(shifted);
        r -= DiffPoly::left_scaled(q, shifted);
        if (r.deg() >= divisor.deg() + k) {
            // numerical cancellation failed to drop the degree; force it
            std::vector<Poly<double>> c(r.coeffs().begin(), r.coeffs().begin() + divisor.deg() + k);
            r = DiffPoly(std::move(c));
        }
    }
    return r;
}

namespace {

Vec stacked_remainders(const DiffPoly& f, const DiffPoly& g, const DiffPoly& cand, int rows_f, int rows_g,
                       int tcap_f, int tcap_g) {
    Vec out = Vec::Zero(rows_f * (tcap_f + 1) + rows_g * (tcap_g + 1));
    DiffPoly rf = monic_remainder(f, cand), rg = monic_remainder(g, cand);
    for (int i = 0; i < rows_f; ++i)
        for (int j = 0; j <= tcap_f; ++j) out(i * (tcap_f + 1) + j) = rf.coeff(i).coeff(j);
    int base = rows_f * (tcap_f + 1);
    for (int i = 0; i < rows_g; ++i)
        for (int j = 0; j <= tcap_g; ++j) out(base + i * (tcap_g + 1) + j) = rg.coeff(i).coeff(j);
    return out;
}

}  // namespace

DiffPoly refine_monic_gcrd(const DiffPoly& f, const DiffPoly& g, DiffPoly candidate, int degree_cap,
                           int iterations) {
    if (candidate.is_zero() || candidate.leading().degree() != 0) return candidate;
    const int deg = candidate.deg();
    if (deg < 1) return candidate;
    // remainder t-degrees grow by at most degree_cap per elimination step
    const int tcap_f = std::max(deg_t(f), 0) + degree_cap * std::max(f.deg() - deg + 1, 1) + 1;
    const int tcap_g = std::max(deg_t(g), 0) + degree_cap * std::max(g.deg() - deg + 1, 1) + 1;
    const int params = deg * (degree_cap + 1);

    auto pack = [&](const DiffPoly& c) {
        Vec x = Vec::Zero(params);
        for (int i = 0; i < deg; ++i)
            for (int j = 0; j <= degree_cap; ++j) x(i * (degree_cap + 1) + j) = c.coeff(i).coeff(j);
        return x;
    };
    auto unpack = [&](const Vec& x) {
        std::vector<Poly<double>> coeffs;
        for (int i = 0; i < deg; ++i) {
            std::vector<double> c(static_cast<size_t>(degree_cap) + 1);
            for (int j = 0; j <= degree_cap; ++j) c[static_cast<size_t>(j)] = x(i * (degree_cap + 1) + j);
            coeffs.emplace_back(std::move(c));
        }
        coeffs.push_back(candidate.leading());
        return DiffPoly(std::move(coeffs));
    };
    auto residual = [&](const Vec& x) {
        return stacked_remainders(f, g, unpack(x), deg, deg, tcap_f, tcap_g);
    };

    Vec x = pack(candidate);
    Vec r = residual(x);
    double best = r.norm();
    const double fd_step = 1e-7;
    for (int it = 0; it < iterations; ++it) {
        Mat jac(r.size(), params);
        for (int p = 0; p < params; ++p) {
            Vec xp = x;
            xp(p) += fd_step;
            jac.col(p) = (residual(xp) - r) / fd_step;
        }
        Vec step = jac.colPivHouseholderQr().solve(-r);
        double scale = 1.0;
        bool improved = false;
        for (int half = 0; half < 5; ++half, scale *= 0.5) {
            Vec xn = x + scale * step;
            Vec rn = residual(xn);
            if (rn.norm() < best) {
                x = xn;
                r = rn;
                best = rn.norm();
                improved = true;
                break;
            }
        }
        if (!improved || best < 1e-14) break;
    }
    return unpack(x);
}

ContentRemoval remove_content_fft(const DiffPoly& g, double threshold) {
    if (g.is_zero()) throw std::invalid_argument("remove_content_fft: zero operator");
    const int degree = g.deg();
    const Poly<double>& lead = g.leading();
    ContentRemoval out;
    std::vector<Poly<double>> coeffs(static_cast<size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) {
        const Poly<double>& c = g.coeff(i);
        if (c.is_zero()) continue;
        if (c.degree() < lead.degree())
            throw DivisionInstability("remove_content_fft: leading coefficient does not have minimal degree");
        ApproxDivision div = approx_divide_auto(c, lead, threshold, c.degree());
        coeffs[static_cast<size_t>(i)] = div.quotient;
        out.inexact = out.inexact || div.inexact;
    }
    coeffs[static_cast<size_t>(degree)] = Poly<double>(1.0);
    out.op = DiffPoly(std::move(coeffs));
    return out;
}

}  // namespace ore
