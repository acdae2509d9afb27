#pragma once

#include <Eigen/Dense>

#include "spharray/direction.hpp"
#include "spharray/special.hpp"

namespace spharray {

/// Wigner small-d matrix element d^n_{m_row, m_col}(beta), evaluated from the
/// explicit factorial sum with factorials in log space. Requires
/// |m_row| <= n, |m_col| <= n, n <= max_order.
double wigner_d(int n, int m_row, int m_col, double beta);

/// Wigner-D matrix element
///   D^n_{m_row, m_col}(alpha, beta, gamma)
///     = exp(-i m_row alpha) d^n_{m_row, m_col}(beta) exp(-i m_col gamma).
/// Rows/columns of the per-order block are indexed by m in [-n, n]. Blocks are
/// unitary and satisfy D(R1) D(R2) = D(R1 R2) for composed z-y-z rotations.
cplx wigner_D(int n, int m_row, int m_col, const EulerAngles& ang);

/// Full (2n+1) x (2n+1) block, entry (m_row + n, m_col + n).
Eigen::MatrixXcd wigner_D_block(int n, const EulerAngles& ang);

}  // namespace spharray
