#include "ore/svd.hpp"

#include <Eigen/SVD>

namespace ore {

SvdFactors compute_svd(const Mat& m) {
    Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV().transpose()};
}

SvdFactors compute_svd_thin(const Mat& m) {
    Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV().transpose()};
}

Vec singular_values(const Mat& m) {
    Eigen::BDCSVD<Mat> svd(m);
    return svd.singularValues();
}

}  // namespace ore
