#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flat4/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <string_view>

using namespace flat4::kernels;

namespace {

double reference(double c, double r, int M) {
    double total = 0;
    for (int m = -M; m <= M; ++m) total += std::exp(-c * (m + r) * (m + r));
    return total;
}

}  // namespace

TEST_CASE("scalar kernel matches a plain loop") {
    CHECK(theta_sum_scalar(1.0, 0.0, 0) == doctest::Approx(1.0));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> c(0.01, 20.0), r(0.0, 0.5);
    for (int i = 0; i < 500; ++i) {
        double cc = c(rng), rr = r(rng);
        int M = 1 + static_cast<int>(rng() % 80);
        double ref = reference(cc, rr, M);
        CHECK(std::abs(theta_sum_scalar(cc, rr, M) - ref) <= 1e-13 * ref);
    }
}

TEST_CASE("avx2 kernel agrees with the scalar kernel") {
    if (!avx2_available()) {
        MESSAGE("AVX2 not available on this CPU; equivalence check skipped");
        return;
    }
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> c(0.001, 50.0), r(0.0, 0.5);
    for (int i = 0; i < 2000; ++i) {
        double cc = c(rng), rr = r(rng);
        int M = static_cast<int>(rng() % 100);
        double s = theta_sum_scalar(cc, rr, M), v = theta_sum_avx2(cc, rr, M);
        CAPTURE(cc);
        CAPTURE(rr);
        CAPTURE(M);
        CHECK(std::abs(s - v) <= 1e-13 * std::max(1.0, s));
    }
    // Arguments large enough that every term but one underflows.
    CHECK(theta_sum_avx2(800.0, 0.0, 40) == doctest::Approx(1.0));
    CHECK(theta_sum_avx2(800.0, 0.5, 40) >= 0.0);
}

TEST_CASE("dispatch") {
    CHECK(theta_sum(Kernel::scalar, 0.3, 0.25, 30) == theta_sum_scalar(0.3, 0.25, 30));
    CHECK(kernel_name(Kernel::scalar) == "scalar");
    CHECK(kernel_name(Kernel::avx2) == "avx2");
    const char* forced = std::getenv("FLAT4SPEC_KERNEL");
    if (forced != nullptr && std::string_view(forced) == "scalar")
        CHECK(active_kernel() == Kernel::scalar);
    else
        CHECK(active_kernel() == (avx2_available() ? Kernel::avx2 : Kernel::scalar));
    CHECK(std::abs(theta_sum(0.3, 0.25, 30) - theta_sum_scalar(0.3, 0.25, 30)) < 1e-13);
}
