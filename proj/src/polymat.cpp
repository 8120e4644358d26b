#include "behavioral/polymat.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace behavioral {

namespace {

void swap_rows(PolyMat& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

void swap_cols(PolyMat& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

// row(target) -= q * row(source)
void add_row_multiple(PolyMat& m, Eigen::Index target, Eigen::Index source, const Poly& q) {
  if (q.is_zero()) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) m(target, c) -= q * m(source, c);
}

void add_col_multiple(PolyMat& m, Eigen::Index target, Eigen::Index source, const Poly& q) {
  if (q.is_zero()) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, target) -= q * m(r, source);
}

void scale_row(PolyMat& m, Eigen::Index r, const Rational& f) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = scale(m(r, c), f);
}

Eigen::Index nonzero_rows(const PolyMat& m) {
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        ++r;
        break;
      }
  return r;
}

}  // namespace

PolyMat poly_identity(Eigen::Index n) {
  PolyMat m = PolyMat::Constant(n, n, Poly());
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Poly(1);
  return m;
}

PolyMat poly_zero(Eigen::Index rows, Eigen::Index cols) {
  return PolyMat::Constant(rows, cols, Poly());
}

bool equal(const PolyMat& a, const PolyMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero(const PolyMat& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

RationalMatrix eval_mat(const PolyMat& a, const Rational& at) {
  RationalMatrix m(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).eval(at);
  return m;
}

long total_degree(const PolyMat& a) {
  long sum = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) sum += a(i, j).degree();
  return sum;
}

std::string to_string(const PolyMat& a) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << "[";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) os << ", ";
      os << a(i, j);
    }
    os << "]";
    if (i + 1 < a.rows()) os << "\n";
  }
  return os.str();
}

HermiteForm hermite_row(const PolyMat& a) {
  const Eigen::Index m = a.rows();
  HermiteForm out{a, poly_identity(m), Rational(1)};
  PolyMat& h = out.form;
  PolyMat& u = out.transform;

  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < a.cols() && pivot_row < m; ++col) {
    // Euclidean reduction within the column until one entry survives below
    // pivot_row. Degrees drop strictly, so this loop terminates.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index r = pivot_row; r < m; ++r) {
        if (h(r, col).is_zero()) continue;
        if (best < 0 || h(r, col).degree() < h(best, col).degree()) best = r;
      }
      if (best < 0) break;  // column clear below; no pivot here
      if (best != pivot_row) {
        swap_rows(h, pivot_row, best);
        swap_rows(u, pivot_row, best);
        out.transform_det = -out.transform_det;
      }
      bool residue = false;
      for (Eigen::Index r = pivot_row + 1; r < m; ++r) {
        if (h(r, col).is_zero()) continue;
        const Poly q = divrem(h(r, col), h(pivot_row, col)).first;
        add_row_multiple(h, r, pivot_row, q);
        add_row_multiple(u, r, pivot_row, q);
        if (!h(r, col).is_zero()) residue = true;
      }
      if (!residue) break;
    }
    if (h(pivot_row, col).is_zero()) continue;

    const Rational lc = h(pivot_row, col).leading();
    if (lc != Rational(1)) {
      const Rational inv = Rational(1) / lc;
      scale_row(h, pivot_row, inv);
      scale_row(u, pivot_row, inv);
      out.transform_det *= inv;
    }
    for (Eigen::Index r = 0; r < pivot_row; ++r) {
      if (h(r, col).is_zero()) continue;
      const Poly q = divrem(h(r, col), h(pivot_row, col)).first;
      add_row_multiple(h, r, pivot_row, q);
      add_row_multiple(u, r, pivot_row, q);
    }
    ++pivot_row;
  }
  return out;
}

Eigen::Index rank(const PolyMat& a) { return nonzero_rows(hermite_row(a).form); }

Eigen::Index rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i)
      if (!behavioral::is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (behavioral::is_zero(m(i, col))) continue;
      const Rational f = m(i, col) / m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RowCompression row_compress(const PolyMat& a) {
  HermiteForm h = hermite_row(a);
  const Eigen::Index r = nonzero_rows(h.form);
  return {h.form.topRows(r), std::move(h.transform)};
}

SmithForm smith(const PolyMat& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  SmithForm out{poly_identity(m), a, poly_identity(n)};
  PolyMat& s = out.diagonal;
  PolyMat& u = out.left;
  PolyMat& v = out.right;

  const Eigen::Index steps = std::min(m, n);
  for (Eigen::Index t = 0; t < steps; ++t) {
    // Bring the minimal-degree nonzero entry of the trailing block to (t,t).
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        if (s(i, j).is_zero()) continue;
        if (pi < 0 || s(i, j).degree() < s(pi, pj).degree()) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    swap_rows(s, t, pi);
    swap_rows(u, t, pi);
    swap_cols(s, t, pj);
    swap_cols(v, t, pj);

    // Alternate row and column elimination until both the column below and
    // the row right of the pivot vanish. Each retry strictly lowers the
    // pivot degree.
    while (true) {
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (s(i, t).is_zero()) continue;
        const Poly q = divrem(s(i, t), s(t, t)).first;
        add_row_multiple(s, i, t, q);
        add_row_multiple(u, i, t, q);
        if (!s(i, t).is_zero()) dirty = true;
      }
      if (dirty) {
        Eigen::Index best = t;
        for (Eigen::Index i = t + 1; i < m; ++i)
          if (!s(i, t).is_zero() && s(i, t).degree() < s(best, t).degree()) best = i;
        swap_rows(s, t, best);
        swap_rows(u, t, best);
        continue;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (s(t, j).is_zero()) continue;
        const Poly q = divrem(s(t, j), s(t, t)).first;
        add_col_multiple(s, j, t, q);
        add_col_multiple(v, j, t, q);
        if (!s(t, j).is_zero()) dirty = true;
      }
      if (!dirty) break;
      Eigen::Index best = t;
      for (Eigen::Index j = t + 1; j < n; ++j)
        if (!s(t, j).is_zero() && s(t, j).degree() < s(t, best).degree()) best = j;
      swap_cols(s, t, best);
      swap_cols(v, t, best);
    }
  }

  // Repair the divisibility chain on the diagonal with the Bezout 2x2
  // combination: (d_i, d_j) -> (gcd, lcm).
  const Eigen::Index diag = steps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i + 1 < diag; ++i) {
      const Poly& di = s(i, i);
      const Poly& dj = s(i + 1, i + 1);
      if (di.is_zero() && dj.is_zero()) continue;
      if (di.is_zero()) {  // zeros sink to the end of the chain
        swap_rows(s, i, i + 1);
        swap_rows(u, i, i + 1);
        swap_cols(s, i, i + 1);
        swap_cols(v, i, i + 1);
        changed = true;
        continue;
      }
      if (divides(di, dj)) continue;
      const Bezout bz = extended_gcd(di, dj);
      const Poly di_over_g = divrem(di, bz.g).first;
      const Poly dj_over_g = divrem(dj, bz.g).first;
      const Poly lcm = di_over_g * dj;
      // Off-diagonal entries of these rows and columns are zero, so the 2x2
      // transform only moves the two diagonal entries.
      s(i, i) = bz.g;
      s(i + 1, i + 1) = lcm;
      // left: rows i, i+1 combined by [[u, v], [-dj/g, di/g]], det 1
      for (Eigen::Index c = 0; c < u.cols(); ++c) {
        const Poly a0 = u(i, c), a1 = u(i + 1, c);
        u(i, c) = bz.u * a0 + bz.v * a1;
        u(i + 1, c) = scale(dj_over_g, Rational(-1)) * a0 + di_over_g * a1;
      }
      // right: columns i, i+1 combined by [[1, -v*dj/g], [1, u*di/g]], det 1
      for (Eigen::Index r = 0; r < v.rows(); ++r) {
        const Poly b0 = v(r, i), b1 = v(r, i + 1);
        v(r, i) = b0 + b1;
        v(r, i + 1) = scale(bz.v * dj_over_g, Rational(-1)) * b0 + bz.u * di_over_g * b1;
      }
      changed = true;
    }
  }

  // Monic normalization of the invariant factors.
  for (Eigen::Index i = 0; i < diag; ++i) {
    if (s(i, i).is_zero()) continue;
    const Rational lc = s(i, i).leading();
    if (lc != Rational(1)) {
      const Rational inv = Rational(1) / lc;
      scale_row(s, i, inv);
      scale_row(u, i, inv);
    }
  }
  return out;
}

std::optional<PolyMat> solve_left_factor(const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("solve_left_factor: column counts differ");
  const SmithForm sf = smith(a);
  const Eigen::Index m = a.rows();
  const Eigen::Index diag = std::min(m, a.cols());

  const PolyMat c = b * sf.right;
  PolyMat g = poly_zero(b.rows(), m);
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    const bool live = j < diag && !sf.diagonal(j, j).is_zero();
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      if (!live) {
        if (!c(i, j).is_zero()) return std::nullopt;
        continue;
      }
      auto [q, r] = divrem(c(i, j), sf.diagonal(j, j));
      if (!r.is_zero()) return std::nullopt;
      g(i, j) = std::move(q);
    }
  }
  PolyMat f = g * sf.left;
  return f;
}

bool is_unimodular(const PolyMat& a) {
  if (a.rows() != a.cols()) return false;
  // Unimodular iff the canonical echelon form is the identity.
  const PolyMat h = hermite_row(a).form;
  return equal(h, poly_identity(a.rows()));
}

}  // namespace behavioral
