#ifndef CURV_TENSOR_HPP
#define CURV_TENSOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "curv/errors.hpp"

namespace curv {

/// Dense real tensor over an n-dimensional index space, row-major flat
/// storage, all indices covariant unless a routine says otherwise.
class DenseTensor {
 public:
  DenseTensor() = default;
  DenseTensor(int rank, int dim);

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  std::size_t size() const { return c_.size(); }

  double* data() { return c_.data(); }
  const double* data() const { return c_.data(); }

  double& operator[](std::size_t flat) { return c_[flat]; }
  double operator[](std::size_t flat) const { return c_[flat]; }

  template <class... I>
  double& operator()(I... idx) {
    return c_[offset(idx...)];
  }
  template <class... I>
  double operator()(I... idx) const {
    return c_[offset(idx...)];
  }

  void fill(double v) { for (double& x : c_) x = v; }
  bool all_finite() const;
  double max_abs() const;

  DenseTensor& operator+=(const DenseTensor& o);
  DenseTensor& operator-=(const DenseTensor& o);
  DenseTensor& operator*=(double s);

  friend DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
  friend DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
  friend DenseTensor operator*(double s, DenseTensor a) { return a *= s; }

  template <class... I>
  std::size_t offset(I... idx) const {
    std::size_t o = 0;
    ((o = o * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx)), ...);
    return o;
  }

 private:
  int rank_ = 0;
  int dim_ = 0;
  std::vector<double> c_;
};

/// Symmetric rank-2 tensor; doubles as a metric when positive definite.
class SymmetricBilinear {
 public:
  SymmetricBilinear() = default;
  explicit SymmetricBilinear(int dim) : t_(2, dim) {}
  explicit SymmetricBilinear(DenseTensor t);

  static SymmetricBilinear identity(int dim);

  int dim() const { return t_.dim(); }
  double& operator()(int i, int j) { return t_(i, j); }
  double operator()(int i, int j) const { return t_(i, j); }

  DenseTensor& tensor() { return t_; }
  const DenseTensor& tensor() const { return t_; }

  double max_asymmetry() const;
  void symmetrize();
  double trace_with(const SymmetricBilinear& inverse_metric) const;

  SymmetricBilinear& operator+=(const SymmetricBilinear& o) { t_ += o.t_; return *this; }
  SymmetricBilinear& operator-=(const SymmetricBilinear& o) { t_ -= o.t_; return *this; }
  SymmetricBilinear& operator*=(double s) { t_ *= s; return *this; }

 private:
  DenseTensor t_;
};

using IndexPairs = std::vector<std::pair<int, int>>;

/// Metric contraction of a and b along the given (slot-of-a, slot-of-b)
/// pairs; paired slots are joined through the inverse metric. Result rank is
/// rank(a)+rank(b)-2*pairs.
DenseTensor contract(const DenseTensor& a, const DenseTensor& b,
                     const IndexPairs& pairs, const SymmetricBilinear& metric);

/// Trace of two slots of a single tensor through the inverse metric.
DenseTensor trace(const DenseTensor& a, int slot1, int slot2,
                  const SymmetricBilinear& metric);

/// Kulkarni-Nomizu product:
/// (h ow k)_ijkl = h_ik k_jl - h_il k_jk + h_jl k_ik - h_jk k_il.
DenseTensor kulkarni_nomizu(const SymmetricBilinear& h, const SymmetricBilinear& k);

/// Frobenius norm with every slot raised by the inverse metric.
double frobenius_norm(const DenseTensor& a, const SymmetricBilinear& metric);
double frobenius_norm_sq(const DenseTensor& a, const SymmetricBilinear& metric);

SymmetricBilinear inverse(const SymmetricBilinear& g);
double determinant(const SymmetricBilinear& g);
bool is_positive_definite(const SymmetricBilinear& g);
void require_positive_definite(const SymmetricBilinear& g, const char* where);

/// Columns of E are an orthonormal frame for g: E^T g E = I. Cholesky-based,
/// deterministic.
DenseTensor orthonormal_frame(const SymmetricBilinear& g_point);

/// Components of a covariant tensor in the frame E: T'_{i...} = E^a_i ... T_{a...}.
DenseTensor frame_transform(const DenseTensor& a, const DenseTensor& frame);

/// Full inner product <a,b> with all slots raised (same-shape tensors).
double inner_product(const DenseTensor& a, const DenseTensor& b,
                     const SymmetricBilinear& metric);

/// Eigenvalues of a symmetric bilinear form relative to the metric
/// (ascending). Used for Ricci eigenvalues and definiteness diagnostics.
std::vector<double> eigenvalues(const SymmetricBilinear& a, const SymmetricBilinear& metric);

// Deterministic RNG used by every generator in the project.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double uniform();            // [0,1)
  double symmetric();          // [-1,1)
};

/// Random orthogonal matrix (Gram-Schmidt on uniform draws), deterministic per seed.
DenseTensor random_orthogonal(int dim, std::uint64_t seed);

}  // namespace curv

#endif
