#include "flat4/kernels.hpp"

#include <cstdlib>
#include <string>

namespace flat4::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Kernel active_kernel() {
    static const Kernel chosen = [] {
        if (const char* env = std::getenv("FLAT4SPEC_KERNEL"); env && std::string(env) == "scalar")
            return Kernel::scalar;
        return avx2_available() ? Kernel::avx2 : Kernel::scalar;
    }();
    return chosen;
}

std::string_view kernel_name(Kernel k) {
    return k == Kernel::avx2 ? "avx2" : "scalar";
}

double theta_sum(Kernel k, double c, double r, int M) {
    if (k == Kernel::avx2 && avx2_available()) return theta_sum_avx2(c, r, M);
    return theta_sum_scalar(c, r, M);
}

double theta_sum(double c, double r, int M) {
    return theta_sum(active_kernel(), c, r, M);
}

}  // namespace flat4::kernels
