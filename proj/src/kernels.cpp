#include "rcp/kernels.hpp"

namespace rcp::kern {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, double a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

namespace {

const char* g_lane = "scalar";

struct Dispatch {
  Dispatch() {
#if defined(RCP_WITH_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
      dot = dot_avx2;
      axpy = axpy_avx2;
      scale = scale_avx2;
      g_lane = "avx2";
    }
#endif
  }
};

}  // namespace

DotFn dot = dot_scalar;
AxpyFn axpy = axpy_scalar;
ScaleFn scale = scale_scalar;

static Dispatch g_dispatch;

const char* active_lane() { return g_lane; }

}  // namespace rcp::kern
