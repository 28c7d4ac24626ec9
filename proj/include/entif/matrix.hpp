#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "entif/errors.hpp"

namespace entif {

/// Dense row-major matrix. `dim()` is the row count and `count()` the column
/// count, matching the frame convention where columns are frame vectors.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;

  DenseMatrix(std::size_t dim, std::size_t count)
      : dim_(dim), count_(count), data_(dim * count) {}

  DenseMatrix(std::size_t dim, std::size_t count, std::vector<T> data)
      : dim_(dim), count_(count), data_(std::move(data)) {
    if (data_.size() != dim_ * count_) {
      throw DimensionError("matrix data does not match dim x count");
    }
  }

  DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    dim_ = rows.size();
    count_ = dim_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(dim_ * count_);
    for (const auto& row : rows) {
      if (row.size() != count_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t count() const noexcept { return count_; }
  bool is_square() const noexcept { return dim_ == count_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * count_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * count_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * count_, count_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * count_, count_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  std::span<const T> data() const noexcept { return data_; }

  DenseMatrix transpose() const {
    DenseMatrix out(count_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < count_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim_ != b.dim_ || a.count_ != b.count_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (a.data_[k] != b.data_[k]) return false;
    return true;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::vector<T> data_;
};

/// Integer synthesis matrix: columns are frame vectors.
using FrameMatrix = DenseMatrix<mpz_class>;

/// Exact rational matrix; gmpxx keeps arithmetic results canonical, and
/// `make_rational` canonicalizes literals.
using RationalMatrix = DenseMatrix<mpq_class>;

inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Integer frame together with the common denominator that was cleared to
/// produce it.
struct ScaledFrame {
  FrameMatrix matrix;
  mpz_class scale = 1;
};

inline RationalMatrix to_rational(const FrameMatrix& a) {
  RationalMatrix out(a.dim(), a.count());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.count(); ++j) out(i, j) = mpq_class(a(i, j));
  return out;
}

}  // namespace entif
