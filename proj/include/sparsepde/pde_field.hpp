#pragma once

#include <Eigen/Core>

namespace sparsepde {

// Discretized PDE state on a periodic 1-D grid plus the simulation clock.
struct PdeField {
  Eigen::VectorXd values;
  double time = 0.0;
};

}  // namespace sparsepde
