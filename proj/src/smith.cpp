#include "tricover/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace tricover {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

namespace {

std::int64_t checked_axpy(std::int64_t y, std::int64_t q, std::int64_t x) {
  // y - q * x
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(q, x, &prod) || __builtin_sub_overflow(y, prod, &out))
    throw ArithmeticOverflow("smith_normal_form: int64 overflow");
  return out;
}

std::int64_t magnitude(std::int64_t v) { return v < 0 ? -v : v; }

class Reducer {
 public:
  Reducer(IntMatrix& m, IntMatrix* u, IntMatrix* v) : m_(m), u_(u), v_(v) {}

  // row_dst -= q * row_src
  void row_op(std::size_t dst, std::size_t src, std::int64_t q, std::size_t from_col) {
    for (std::size_t j = from_col; j < m_.cols(); ++j)
      if (m_(src, j) != 0) m_(dst, j) = checked_axpy(m_(dst, j), q, m_(src, j));
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j)
        if ((*u_)(src, j) != 0) (*u_)(dst, j) = checked_axpy((*u_)(dst, j), q, (*u_)(src, j));
  }

  void col_op(std::size_t dst, std::size_t src, std::int64_t q, std::size_t from_row) {
    for (std::size_t i = from_row; i < m_.rows(); ++i)
      if (m_(i, src) != 0) m_(i, dst) = checked_axpy(m_(i, dst), q, m_(i, src));
    if (v_)
      for (std::size_t i = 0; i < v_->rows(); ++i)
        if ((*v_)(i, src) != 0) (*v_)(i, dst) = checked_axpy((*v_)(i, dst), q, (*v_)(i, src));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m_.cols(); ++j) std::swap(m_(a, j), m_(b, j));
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j) std::swap((*u_)(a, j), (*u_)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m_.rows(); ++i) std::swap(m_(i, a), m_(i, b));
    if (v_)
      for (std::size_t i = 0; i < v_->rows(); ++i) std::swap((*v_)(i, a), (*v_)(i, b));
  }

  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(r, j) = -m_(r, j);
    if (u_)
      for (std::size_t j = 0; j < u_->cols(); ++j) (*u_)(r, j) = -(*u_)(r, j);
  }

  // Moves the smallest nonzero entry of the trailing block to (t, t). Returns false if the block is zero.
  bool bring_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    std::int64_t best = 0;
    for (std::size_t i = t; i < m_.rows(); ++i) {
      for (std::size_t j = t; j < m_.cols(); ++j) {
        const std::int64_t a = magnitude(m_(i, j));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          bi = i;
          bj = j;
          if (best == 1) goto found;
        }
      }
    }
    if (best == 0) return false;
  found:
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Smallest nonzero entry in row t / column t beyond the pivot, moved onto the pivot.
  void improve_pivot(std::size_t t) {
    std::int64_t best = magnitude(m_(t, t));
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < m_.rows(); ++i) {
      const std::int64_t a = magnitude(m_(i, t));
      if (a != 0 && (best == 0 || a < best)) best = a, bi = i, bj = t;
    }
    for (std::size_t j = t + 1; j < m_.cols(); ++j) {
      const std::int64_t a = magnitude(m_(t, j));
      if (a != 0 && (best == 0 || a < best)) best = a, bi = t, bj = j;
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      const std::int64_t p = m_(t, t);
      for (std::size_t i = t + 1; i < m_.rows(); ++i) {
        if (m_(i, t) == 0) continue;
        row_op(i, t, m_(i, t) / p, t);
        if (m_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m_.cols(); ++j) {
        if (m_(t, j) == 0) continue;
        col_op(j, t, m_(t, j) / p, t);
        if (m_(t, j) != 0) clean = false;
      }
      if (!clean) {
        improve_pivot(t);
        continue;
      }
      // every trailing entry must be a multiple of the pivot
      bool divisible = true;
      for (std::size_t i = t + 1; i < m_.rows() && divisible; ++i) {
        for (std::size_t j = t + 1; j < m_.cols(); ++j) {
          if (m_(i, j) % p != 0) {
            row_op(t, i, -1, t);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
    }
  }

 private:
  IntMatrix& m_;
  IntMatrix* u_;
  IntMatrix* v_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix m, bool want_row_transform, bool want_column_transform) {
  SmithForm out;
  if (want_row_transform) out.row_transform = IntMatrix::identity(m.rows());
  if (want_column_transform) out.column_transform = IntMatrix::identity(m.cols());
  Reducer r(m, out.row_transform ? &*out.row_transform : nullptr,
            out.column_transform ? &*out.column_transform : nullptr);
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    if (!r.bring_pivot(t)) break;
    r.reduce_at(t);
    if (m(t, t) < 0) r.negate_row(t);
    out.divisors.push_back(m(t, t));
  }
  return out;
}

}  // namespace tricover
