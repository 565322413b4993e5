#pragma once

#include <cstddef>

// Dense double-precision kernels used by the LP core. A scalar reference
// implementation is always available; on x86-64 an AVX2/FMA variant is
// selected at runtime when the CPU supports it.
namespace rcp::kern {

using DotFn = double (*)(const double*, const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);
using ScaleFn = void (*)(double*, double, std::size_t);

extern DotFn dot;
extern AxpyFn axpy;    // y += a * x
extern ScaleFn scale;  // x *= a

double dot_scalar(const double* a, const double* b, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void scale_scalar(double* x, double a, std::size_t n);

#if defined(RCP_WITH_AVX2)
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double* x, double a, std::size_t n);
#endif

// Name of the lane selected at startup ("scalar" or "avx2").
const char* active_lane();

}  // namespace rcp::kern
