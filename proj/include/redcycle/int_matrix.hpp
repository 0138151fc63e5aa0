#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "redcycle/error.hpp"

namespace redcycle {

using Entry = std::int64_t;

// Overflow-checked arithmetic. Arrow counts can grow exponentially along a
// mutation sequence, so silent wrap-around is never acceptable.
inline Entry checked_add(Entry a, Entry b) {
  Entry r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::overflow, "integer overflow in addition");
  }
  return r;
}

inline Entry checked_sub(Entry a, Entry b) {
  Entry r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorKind::overflow, "integer overflow in subtraction");
  }
  return r;
}

inline Entry checked_mul(Entry a, Entry b) {
  Entry r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::overflow, "integer overflow in multiplication");
  }
  return r;
}

inline Entry checked_neg(Entry a) { return checked_sub(0, a); }

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Entry fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  IntMatrix(std::initializer_list<std::initializer_list<Entry>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (auto const& row : init) {
      if (row.size() != cols_) {
        throw Error(ErrorKind::parse_error, "ragged matrix initializer");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::vector<std::vector<Entry>> const& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw Error(ErrorKind::parse_error, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Entry& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Entry operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  [[nodiscard]] std::vector<Entry> const& data() const noexcept { return data_; }

  [[nodiscard]] IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] IntMatrix negated() const {
    IntMatrix t(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = checked_neg(data_[k]);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    for (Entry e : data_)
      if (e != 0) return false;
    return true;
  }

  [[nodiscard]] bool all_nonnegative() const {
    for (Entry e : data_)
      if (e < 0) return false;
    return true;
  }

  /// Exact integer determinant via fraction-free (Bareiss) elimination.
  [[nodiscard]] Entry determinant() const {
    if (rows_ != cols_) {
      throw Error(ErrorKind::invalid_quiver, "determinant of non-square matrix");
    }
    std::size_t n = rows_;
    if (n == 0) return 1;
    std::vector<__int128> a(data_.begin(), data_.end());
    auto at = [&](std::size_t i, std::size_t j) -> __int128& { return a[i * n + j]; };
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (at(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        }
      }
      prev = at(k, k);
    }
    __int128 det = sign * at(n - 1, n - 1);
    if (det > INT64_MAX || det < INT64_MIN) {
      throw Error(ErrorKind::overflow, "determinant out of range");
    }
    return static_cast<Entry>(det);
  }

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

inline IntMatrix operator*(IntMatrix const& lhs, IntMatrix const& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorKind::invalid_quiver, "matrix dimension mismatch");
  }
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      Entry l = lhs(i, k);
      if (l == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(l, rhs(k, j)));
      }
    }
  }
  return out;
}

inline std::string to_string(IntMatrix const& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i != 0) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) s += ' ';
      s += std::to_string(m(i, j));
    }
  }
  return s + "]";
}

}  // namespace redcycle
