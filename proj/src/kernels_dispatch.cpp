#include <atomic>
#include <cstdlib>
#include <string_view>

#include "sling/kernels.hpp"

namespace sling {
namespace {

const KernelOps* pick_default() {
  if (const char* env = std::getenv("SLING_KERNELS")) {
    const std::string_view want(env);
    if (want == "scalar") return &scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
    if (want == "avx2" && avx2_available()) return &avx2_kernels();
#endif
#if defined(__aarch64__)
    if (want == "neon") return &neon_kernels();
#endif
    // Unknown or unavailable request: fall through to autodetection.
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return &avx2_kernels();
#endif
#if defined(__aarch64__)
  return &neon_kernels();
#endif
  return &scalar_kernels();
}

std::atomic<const KernelOps*>& active_slot() {
  static std::atomic<const KernelOps*> active{pick_default()};
  return active;
}

}  // namespace

#if defined(__x86_64__) || defined(_M_X64)
bool avx2_available() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}
#endif

const KernelOps& kernels() { return *active_slot().load(std::memory_order_relaxed); }

bool set_kernel_impl(std::string_view name) {
  const KernelOps* ops = nullptr;
  if (name == "scalar") ops = &scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
  else if (name == "avx2" && avx2_available()) ops = &avx2_kernels();
#endif
#if defined(__aarch64__)
  else if (name == "neon") ops = &neon_kernels();
#endif
  if (!ops) return false;
  active_slot().store(ops, std::memory_order_relaxed);
  return true;
}

}  // namespace sling
