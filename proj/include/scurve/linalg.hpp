#pragma once

#include "scurve/rational.hpp"

#include <optional>
#include <vector>

namespace scurve {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row-major
using IMat = std::vector<IVec>;

QMat qmat_from_int(const IMat& rows);

/// In-place reduced row echelon form. Returns the rank; records pivot columns.
int rref(QMat& m, std::vector<int>* pivot_cols = nullptr);

int rank(QMat m);

/// Rows spanning the right kernel of `m`, in rref-canonical order.
QMat kernel_basis(const QMat& m, int ncols);

/// One solution of A x = b, or nothing when inconsistent.
std::optional<QVec> solve_linear(QMat a, QVec b);

Rational det(QMat a);

std::optional<QMat> inverse(QMat a);

/// Clears denominators and divides by content; the zero vector maps to itself.
IVec primitive_from_rational(const QVec& v);

/// Canonical primitive-integer basis of the row space (rref rows, rescaled).
IMat rowspace_canonical(const IMat& rows);

/// Canonical primitive-integer basis of {v : rows * v = 0}.
IMat kernel_primitive(const IMat& rows, int ncols);

IVec imat_vec(const IMat& m, const IVec& v);
IMat imat_mul(const IMat& a, const IMat& b);

/// Inverse of a matrix with determinant +-1; throws if the inverse is not integral.
IMat unimodular_inverse(const IMat& m);

Int det_int(const IMat& a);

/// Exact solve over the Gaussian rationals. Throws on a singular square system.
std::vector<QC> solve_qc(std::vector<std::vector<QC>> a, std::vector<QC> b);

}  // namespace scurve
