#include "flat4/kernels.hpp"

#include <cmath>

namespace flat4::kernels {

double theta_sum_scalar(double c, double r, int M) {
    double s = 0.0;
    for (int m = -M; m <= M; ++m) {
        const double t = m + r;
        s += std::exp(-c * t * t);
    }
    return s;
}

}  // namespace flat4::kernels
