#include <doctest.h>

#include <cmath>

#include "sling/kernels.hpp"
#include "sling/rng.hpp"
#include "sling/types.hpp"

using namespace sling;

namespace {

Vec random_vec(RngState& rng, std::size_t n, double scale = 1.0) {
  Vec v(n);
  for (double& x : v) x = scale * rng.normal();
  return v;
}

// containers of every implementation available on this machine
std::vector<const KernelOps*> available_impls() {
  std::vector<const KernelOps*> impls = {&scalar_kernels()};
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) impls.push_back(&avx2_kernels());
#endif
#if defined(__aarch64__)
  impls.push_back(&neon_kernels());
#endif
  return impls;
}

}  // namespace

TEST_CASE("simd variants agree with the scalar reference") {
  const KernelOps& ref = scalar_kernels();
  RngState rng(99);
  // odd lengths exercise the remainder loops
  for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{7},
                        std::size_t{8}, std::size_t{33}, std::size_t{257}}) {
    const Vec a = random_vec(rng, n);
    const Vec b = random_vec(rng, n);
    const double scale_ref = std::sqrt(ref.nrm2sq(a.data(), n) * ref.nrm2sq(b.data(), n)) + 1e-300;
    for (const KernelOps* impl : available_impls()) {
      CAPTURE(impl->name);
      CAPTURE(n);
      CHECK(std::abs(impl->dot(a.data(), b.data(), n) - ref.dot(a.data(), b.data(), n)) <=
            1e-13 * scale_ref);
      CHECK(std::abs(impl->nrm2sq(a.data(), n) - ref.nrm2sq(a.data(), n)) <=
            1e-13 * (ref.nrm2sq(a.data(), n) + 1e-300));
      CHECK(std::abs(impl->dist2sq(a.data(), b.data(), n) - ref.dist2sq(a.data(), b.data(), n)) <=
            1e-12 * (ref.dist2sq(a.data(), b.data(), n) + 1e-300));

      Vec y_ref = b, y_impl = b;
      ref.axpy(0.37, a.data(), y_ref.data(), n);
      impl->axpy(0.37, a.data(), y_impl.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(y_ref[i] - y_impl[i]) <= 1e-13 * (std::abs(y_ref[i]) + 1.0));

      Vec c_ref(n), c_impl(n);
      ref.combine(c_ref.data(), 0.25, a.data(), 0.75, b.data(), n);
      impl->combine(c_impl.data(), 0.25, a.data(), 0.75, b.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(c_ref[i] - c_impl[i]) <= 1e-13 * (std::abs(c_ref[i]) + 1.0));

      Vec s_ref = a, s_impl = a;
      ref.scal(-1.5, s_ref.data(), n);
      impl->scal(-1.5, s_impl.data(), n);
      CHECK(s_ref == s_impl);  // pure multiply, bit-identical
    }
  }
}

TEST_CASE("combine tolerates exact aliasing") {
  RngState rng(7);
  for (const KernelOps* impl : available_impls()) {
    const Vec a = random_vec(rng, 13);
    const Vec b = random_vec(rng, 13);
    Vec expect(13);
    impl->combine(expect.data(), 0.4, a.data(), 0.6, b.data(), 13);

    Vec inplace = a;
    impl->combine(inplace.data(), 0.4, inplace.data(), 0.6, b.data(), 13);
    CHECK(inplace == expect);

    inplace = b;
    impl->combine(inplace.data(), 0.4, a.data(), 0.6, inplace.data(), 13);
    CHECK(inplace == expect);
  }
}

TEST_CASE("runtime selection honors overrides") {
  const std::string active = kernels().name;
  REQUIRE(set_kernel_impl("scalar"));
  CHECK(std::string(kernels().name) == "scalar");
  CHECK_FALSE(set_kernel_impl("not-an-impl"));
  // restore whatever the platform picked
  set_kernel_impl(active);
  CHECK(std::string(kernels().name) == active);
}
