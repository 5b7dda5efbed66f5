#include "modescout/optimizer.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "modescout/rng.hpp"
#include "modescout/textio.hpp"

namespace modescout::optimizer {

namespace {

constexpr double kGlobalFraction = 0.25;
constexpr int kHalveAfter = 50;
constexpr double kInitialStepFraction = 0.1;

[[noreturn]] void throw_nonfinite(const Point& x, double v) {
  std::string msg = "objective returned non-finite value " + format_double(v) + " at (";
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (d > 0) msg += ", ";
    msg += format_double(x[d]);
  }
  msg += ")";
  throw std::runtime_error(msg);
}

}  // namespace

OptResult maximize(const std::function<double(const Point&)>& objective, const InputBox& box,
                   const OptBudget& budget) {
  if (budget.evaluations < 1) throw std::invalid_argument("optimization budget must be >= 1");
  const std::size_t n = box.dimension();
  Rng rng(budget.seed);

  std::vector<double> step(n);
  for (std::size_t d = 0; d < n; ++d) {
    step[d] = kInitialStepFraction * (box.upper[d] - box.lower[d]);
  }

  OptResult best;
  int since_improvement = 0;
  for (std::size_t eval = 0; eval < budget.evaluations; ++eval) {
    Point cand;
    if (eval == 0 || rng.uniform01() < kGlobalFraction) {
      cand = box.sample(rng);
    } else {
      cand = best.argmax;
      for (std::size_t d = 0; d < n; ++d) cand[d] += step[d] * rng.gaussian();
      cand = box.clip(std::move(cand));
    }
    const double v = objective(cand);
    if (!std::isfinite(v)) throw_nonfinite(cand, v);
    if (eval == 0 || v > best.value) {
      best.argmax = std::move(cand);
      best.value = v;
      since_improvement = 0;
    } else if (++since_improvement >= kHalveAfter) {
      for (double& s : step) s *= 0.5;
      since_improvement = 0;
    }
  }
  return best;
}

}  // namespace modescout::optimizer
