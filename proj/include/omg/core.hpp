// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

// Numeric substrate: dense vectors and matrices, convex feasible regions with
// exact Euclidean projections, symmetric spectra and a counter-based PRNG.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace omg {

using Vec = std::vector<double>;

/// Raised when a map or loss evaluates to a non-finite value.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, Vec point)
      : std::runtime_error(what), point_(std::move(point)) {}
  const Vec& point() const noexcept { return point_; }

 private:
  Vec point_;
};

/// Dense row-major matrix. Small sizes only (n <= ~100).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n, double scale = 1.0);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;
  std::vector<Vec> to_rows() const;

  /// Principal submatrix on the given (sorted or unsorted) index set.
  Matrix principal(std::span<const std::size_t> idx) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, std::span<const double> x);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double distance(std::span<const double> a, std::span<const double> b);
Vec add(std::span<const double> a, std::span<const double> b);
Vec sub(std::span<const double> a, std::span<const double> b);
Vec scale(double s, std::span<const double> a);
/// a + s * b
Vec axpy(std::span<const double> a, double s, std::span<const double> b);
Vec lerp(std::span<const double> a, std::span<const double> b, double t);
bool all_finite(std::span<const double> a);

/// (M + M^T) / 2
Matrix symmetric_part(const Matrix& m);
/// Largest singular value.
double spectral_norm(const Matrix& m);

/// Throws std::invalid_argument when the lengths differ.
void require_same_size(std::size_t expected, std::size_t got, const char* what);

// ---------------------------------------------------------------------------
// Feasible regions

inline constexpr double kMembershipTol = 1e-12;

class FeasibleRegion {
 public:
  enum class Kind { kBox, kL2Ball, kNonnegOrthant };

  FeasibleRegion() = default;

  static FeasibleRegion box(Vec lower, Vec upper);
  static FeasibleRegion cube(std::size_t n, double lower, double upper);
  static FeasibleRegion l2_ball(std::size_t n, double radius);
  static FeasibleRegion nonneg_orthant(std::size_t n);

  Kind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return dim_; }
  const Vec& lower() const noexcept { return lower_; }
  const Vec& upper() const noexcept { return upper_; }
  double radius() const noexcept { return radius_; }
  bool bounded() const noexcept { return kind_ != Kind::kNonnegOrthant; }

  /// Euclidean-nearest point of the region. Idempotent.
  Vec project(std::span<const double> x) const;
  bool contains(std::span<const double> x, double tol = kMembershipTol) const;

  std::string describe() const;

  bool operator==(const FeasibleRegion&) const = default;

 private:
  Kind kind_ = Kind::kNonnegOrthant;
  std::size_t dim_ = 0;
  Vec lower_;
  Vec upper_;
  double radius_ = 0.0;
};

/// Box spanned by the given points, widened where it would be degenerate.
FeasibleRegion bounding_box(const std::vector<Vec>& points, double min_width = 1e-9);

// ---------------------------------------------------------------------------
// Symmetric spectra

struct SpectrumReport {
  double min_eig = 0.0;
  double max_eig = 0.0;
  std::size_t matrix_dim = 0;
};

/// Eigenvalues of a symmetric matrix in ascending order (cyclic Jacobi).
Vec symmetric_eigenvalues(const Matrix& sym);

/// Extreme eigenvalues of (M + M^T)/2.
SpectrumReport sym_spectrum(const Matrix& m);

// ---------------------------------------------------------------------------
// Deterministic sampling

/// SplitMix64 in counter mode: draw k of stream s under seed is
/// mix64(key(seed, s) + k * 0x9E3779B97F4A7C15). Every draw is a pure
/// function of (seed, stream, k), so results do not depend on the standard
/// library's distribution implementations.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  double normal();
  std::uint64_t counter() const noexcept { return counter_; }

  static std::uint64_t mix64(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform samples from the region. The orthant has no uniform law; it is
/// sampled over the unit cube [0, 1]^n.
std::vector<Vec> sample_region(const FeasibleRegion& region, std::size_t count,
                               std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace omg
