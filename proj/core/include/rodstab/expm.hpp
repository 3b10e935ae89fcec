#pragma once

#include <Eigen/Dense>

namespace rodstab {

/// Dense matrix exponential, Pade(13) with scaling and squaring.
Eigen::MatrixXd expm(const Eigen::MatrixXd& A);

}  // namespace rodstab
