#pragma once

#include <cstddef>
#include <string_view>

namespace sling {

// Double-precision kernels behind every solver inner loop. The scalar
// implementations are the reference; wider variants (AVX2 on x86-64, NEON on
// aarch64) are selected once at startup from CPU features and must agree with
// the reference up to summation-order rounding (see tests/test_kernels.cpp).
//
// `combine` tolerates exact aliasing (out == a or out == b) but not partial
// overlap; the in-place convex combination x <- (1-t)x + t*u relies on this.
struct KernelOps {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*nrm2sq)(const double* a, std::size_t n);
  double (*dist2sq)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out = wa * a + wb * b
  void (*combine)(double* out, double wa, const double* a, double wb,
                  const double* b, std::size_t n);
  void (*scal)(double alpha, double* x, std::size_t n);
};

const KernelOps& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
const KernelOps& avx2_kernels();
bool avx2_available();
#endif
#if defined(__aarch64__)
const KernelOps& neon_kernels();
#endif

// Active implementation. Chosen at first use: SLING_KERNELS env var if set
// (scalar|avx2|neon), otherwise the widest one the CPU supports.
const KernelOps& kernels();

// Force an implementation by name; returns false if it is not available on
// this machine. Intended for tests and benchmarking.
bool set_kernel_impl(std::string_view name);

}  // namespace sling
