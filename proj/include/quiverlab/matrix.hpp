#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "quiverlab/rational.hpp"

namespace quiverlab {

inline std::complex<double> conj_value(const std::complex<double>& z) { return std::conj(z); }
inline RationalComplex conj_value(const RationalComplex& z) { return z.conj(); }

inline bool exactly_zero(const std::complex<double>& z) { return z.real() == 0.0 && z.imag() == 0.0; }
inline bool exactly_zero(const RationalComplex& z) { return z.is_zero(); }

inline double abs_value(const std::complex<double>& z) { return std::abs(z); }
inline double abs_value(const RationalComplex& z) { return std::sqrt(z.norm2().get_d()); }

// Dense row-major matrix over an exact or floating complex scalar.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, T{}) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }

  Mat operator+(const Mat& o) const {
    check_shape(o);
    Mat out = *this;
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
    return out;
  }
  Mat operator-(const Mat& o) const {
    check_shape(o);
    Mat out = *this;
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
    return out;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (exactly_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    return out;
  }
  Mat operator*(const T& s) const {
    Mat out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
  }
  Mat operator-() const {
    Mat out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  Mat adjoint() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = conj_value((*this)(i, j));
    return out;
  }

  T trace() const {
    T t{};
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!exactly_zero(x)) return false;
    return true;
  }

  double frobenius_norm_sq() const {
    double s = 0;
    for (const auto& x : data_) {
      double a = abs_value(x);
      s += a * a;
    }
    return s;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using MatC = Mat<std::complex<double>>;
using MatQ = Mat<RationalComplex>;

}  // namespace quiverlab
