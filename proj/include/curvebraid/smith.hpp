#pragma once

#include <cstdint>
#include <vector>

namespace curvebraid {

class IntMatrix {
public:
  using Entry = std::int64_t;

  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
  IntMatrix(int rows, int cols, std::vector<Entry> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Entry &operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  Entry operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  static IntMatrix identity(int n);
  static IntMatrix diagonal(const std::vector<Entry> &d);

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> data_;
};

/// Invariant factors d_1 | d_2 | ... (length min(rows, cols), zeros last).
/// Throws std::overflow_error if an intermediate leaves the 64-bit range.
std::vector<IntMatrix::Entry> smith_normal_form(IntMatrix m);

} // namespace curvebraid
