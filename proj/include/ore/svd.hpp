#pragma once

#include "ore/matrix.hpp"

namespace ore {

// Factorization m = p * Sigma * q with p, q orthogonal and Sigma the
// rows x cols diagonal padding of sigma (descending). Note the convention:
// q is the transpose of the usual right-singular-vector matrix.
struct SvdFactors {
    Mat p;
    Vec sigma;
    Mat q;
};

// Full factors: p is rows x rows, q is cols x cols.
SvdFactors compute_svd(const Mat& m);

// Thin factors: p is rows x min, q is min x cols.
SvdFactors compute_svd_thin(const Mat& m);

// Singular values only (descending).
Vec singular_values(const Mat& m);

}  // namespace ore
