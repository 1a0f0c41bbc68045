#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace mcgspin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Bits = boost::dynamic_bitset<std::uint64_t>;

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
}  // namespace detail

/// Dense matrix over Z/2, stored row-wise.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  void set(std::size_t i, std::size_t j, bool value) { rows_[i][j] = value; }
  const Bits& row(std::size_t i) const { return rows_[i]; }
  Bits& row(std::size_t i) { return rows_[i]; }

  Bits apply(const Bits& v) const;
  BitMatrix transpose() const;
  bool is_identity() const;
  std::size_t rank() const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Bits> rows_;
};

/// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace mcgspin
