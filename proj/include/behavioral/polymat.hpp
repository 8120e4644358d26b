#pragma once

#include <optional>
#include <string>

#include "behavioral/poly.hpp"
#include "behavioral/rational.hpp"

namespace behavioral {

/// Dense polynomial matrix. Zero rows means "no equations", zero columns
/// "no variables"; both are legal everywhere.
using PolyMat = Eigen::Matrix<Poly, Eigen::Dynamic, Eigen::Dynamic>;

PolyMat poly_identity(Eigen::Index n);
PolyMat poly_zero(Eigen::Index rows, Eigen::Index cols);

bool equal(const PolyMat& a, const PolyMat& b);
bool is_zero(const PolyMat& a);

/// Entrywise evaluation A(at) over the rationals.
RationalMatrix eval_mat(const PolyMat& a, const Rational& at);

/// Sum of degrees of the nonzero entries; used to size oracle sample sets.
long total_degree(const PolyMat& a);

std::string to_string(const PolyMat& a);

/// Row echelon form over Q[xi] by unimodular row operations.
///
/// transform * input = form, where form has monic pivots in staircase
/// position, zero rows at the bottom, and every entry above a pivot reduced
/// modulo that pivot. Pivot selection: the nonzero candidate of minimal
/// degree, ties broken by lowest row index. transform_det is det(transform),
/// a nonzero rational, tracked during elimination.
struct HermiteForm {
  PolyMat form;
  PolyMat transform;
  Rational transform_det;
};

HermiteForm hermite_row(const PolyMat& a);

/// Rank over the rational-function field: nonzero rows of the echelon form.
Eigen::Index rank(const PolyMat& a);

/// Exact rank of a rational matrix (Gaussian elimination); oracle-side
/// counterpart of rank(PolyMat) at a sample point.
Eigen::Index rank(const RationalMatrix& a);

/// transform * input = [full_rows; 0] with full_rows of full row rank.
struct RowCompression {
  PolyMat full_rows;
  PolyMat transform;
};

RowCompression row_compress(const PolyMat& a);

/// Smith normal form: left * input * right = diagonal, with left and right
/// unimodular and the diagonal carrying monic invariant factors that form a
/// divisibility chain (zeros last).
struct SmithForm {
  PolyMat left;
  PolyMat diagonal;
  PolyMat right;
};

SmithForm smith(const PolyMat& a);

/// Least f with f*a = b, when the rows of b lie in the row module of a.
/// Decided through the Smith form of a. Throws on column-count mismatch.
std::optional<PolyMat> solve_left_factor(const PolyMat& a, const PolyMat& b);

/// Square with constant nonzero determinant, i.e. invertible over Q[xi].
bool is_unimodular(const PolyMat& a);

}  // namespace behavioral
