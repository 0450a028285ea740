#include "steerlab/random.hpp"

namespace steerlab {

Vec gaussian_vector(int dim, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(i) = cplx(re, im);
    }
    return v;
}

Vec haar_unit_vector(int dim, Rng& rng) {
    Vec v = gaussian_vector(dim, rng);
    return v / v.norm();
}

Mat haar_unitary(int dim, Rng& rng) {
    Mat g(dim, dim);
    for (int j = 0; j < dim; ++j) g.col(j) = gaussian_vector(dim, rng);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        cplx d = r(j, j);
        q.col(j) *= (std::abs(d) > 0) ? d / std::abs(d) : cplx(1.0, 0.0);
    }
    return q;
}

} // namespace steerlab
