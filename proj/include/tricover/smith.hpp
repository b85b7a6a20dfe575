#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tricover {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static IntMatrix identity(std::size_t n);
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Result of diagonalising M as U * M * V = D with U, V unimodular.
struct SmithForm {
  std::vector<std::int64_t> divisors;  // positive, each dividing the next; length = rank
  std::optional<IntMatrix> row_transform;     // U, when requested
  std::optional<IntMatrix> column_transform;  // V, when requested

  std::size_t rank() const { return divisors.size(); }
};

/// Exact Smith normal form over the integers. Throws ArithmeticOverflow if an intermediate
/// entry would leave the int64 range.
SmithForm smith_normal_form(IntMatrix m, bool want_row_transform = false, bool want_column_transform = false);

}  // namespace tricover
