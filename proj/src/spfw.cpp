#include "sling/spfw.hpp"

namespace sling {

void spfw_step(const SaddleProblem& f, Vec& x, Vec& y, std::int64_t k,
               OracleCounters& counters) {
  Vec gx(x.size()), gy(y.size());
  f.grad_x(x, y, gx);
  f.grad_y(x, y, gy);
  counters.add_fo();

  const Vec u = f.set_x().lo_solve(gx, counters);
  scal(-1.0, gy);
  const Vec v = f.set_y().lo_solve(gy, counters);

  const double step = 2.0 / static_cast<double>(k + 2);
  combine(x, 1.0 - step, x, step, u);
  combine(y, 1.0 - step, y, step, v);
}

}  // namespace sling
