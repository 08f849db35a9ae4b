#pragma once

#include <string_view>

namespace flat4::kernels {

enum class Kernel { scalar, avx2 };

/// sum_{m=-M}^{M} exp(-c (m + r)^2)
double theta_sum_scalar(double c, double r, int M);
double theta_sum_avx2(double c, double r, int M);

/// Best kernel the CPU supports, unless FLAT4SPEC_KERNEL=scalar is set.
Kernel active_kernel();
bool avx2_available();
std::string_view kernel_name(Kernel k);

double theta_sum(double c, double r, int M);
double theta_sum(Kernel k, double c, double r, int M);

}  // namespace flat4::kernels
