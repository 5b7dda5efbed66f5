#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "modescout/geometry.hpp"

namespace modescout::optimizer {

// Evaluation budget for one derivative-free maximization.
struct OptBudget {
  std::size_t evaluations = 1000;
  std::uint64_t seed = 0;
};

struct OptResult {
  Point argmax;
  double value = 0.0;
};

// Seedable derivative-free maximization over a box: population random search
// mixing 25% uniform global samples with 75% Gaussian perturbations of the
// incumbent. Per-dimension step starts at 0.1x the box edge and halves after
// every 50 non-improving evaluations. Evaluates the objective exactly
// budget.evaluations times; every candidate lies inside the box. Throws
// std::runtime_error if the objective returns a non-finite value.
OptResult maximize(const std::function<double(const Point&)>& objective, const InputBox& box,
                   const OptBudget& budget);

}  // namespace modescout::optimizer
