#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "rcp/kernels.hpp"

using namespace rcp;

namespace {

std::vector<double> random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar and dispatched kernels agree") {
  std::mt19937 rng(42);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 17u, 64u, 257u, 1000u}) {
    auto a = random_vec(rng, n);
    auto b = random_vec(rng, n);

    double ds = kern::dot_scalar(a.data(), b.data(), n);
    double dv = kern::dot(a.data(), b.data(), n);
    double mag = std::abs(ds) + 1.0;
    CHECK(std::abs(ds - dv) <= 1e-12 * mag);

    auto y1 = b, y2 = b;
    kern::axpy_scalar(1.5, a.data(), y1.data(), n);
    kern::axpy(1.5, a.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::abs(y1[i] - y2[i]) <= 1e-12 * (std::abs(y1[i]) + 1.0));

    auto s1 = a, s2 = a;
    kern::scale_scalar(s1.data(), -0.25, n);
    kern::scale(s2.data(), -0.25, n);
    for (std::size_t i = 0; i < n; ++i) CHECK(s1[i] == s2[i]);
  }
}

#if defined(RCP_WITH_AVX2)
TEST_CASE("avx2 lane matches scalar when available") {
  if (std::string(kern::active_lane()) != "avx2") return;
  std::mt19937 rng(7);
  auto a = random_vec(rng, 513);
  auto b = random_vec(rng, 513);
  double ds = kern::dot_scalar(a.data(), b.data(), a.size());
  double dv = kern::dot_avx2(a.data(), b.data(), a.size());
  CHECK(std::abs(ds - dv) <= 1e-11 * (std::abs(ds) + 1.0));
}
#endif
