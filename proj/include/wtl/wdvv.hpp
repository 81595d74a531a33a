#pragma once

// Associativity of the Hurwitz Frobenius structure.
//
// Structure constants come from differentiating Omega along the flat
// coordinates themselves: every v_{i,j} becomes a jet variable and the
// superpotential is rebuilt by data_from_flat, so c_{abc} = d_c Omega_{ab}.
// The residue formula c_H is kept as an independent check.

#include "wtl/hurwitz.hpp"
#include "wtl/jet.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wtl {

template <class T>
struct Tensor3 {
  std::size_t dim = 0;
  std::vector<T> data;
  T& operator()(std::size_t a, std::size_t b, std::size_t c) { return data[(a * dim + b) * dim + c]; }
  const T& operator()(std::size_t a, std::size_t b, std::size_t c) const { return data[(a * dim + b) * dim + c]; }
};

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Flat coordinates in the order of flat_indices.
template <class T>
std::vector<T> flatten(const HurwitzData<T>& d, const FlatCoordsH<T>& v) {
  std::vector<T> out;
  for (const auto& ix : flat_indices(d))
    out.push_back(ix.i == 0 ? v.u0[static_cast<std::size_t>(ix.j - 1)]
                            : v.uk[static_cast<std::size_t>(ix.i - 1)][static_cast<std::size_t>(ix.j)]);
  return out;
}

// The point with every flat coordinate a jet variable.
template <class T>
HurwitzData<Jet<T>> jet_data(const HurwitzData<T>& d) {
  const FlatCoordsH<T> v = flat_coords(d);
  const auto idx = flat_indices(d);
  const std::size_t N = idx.size();
  FlatCoordsH<Jet<T>> w;
  w.uk.resize(v.uk.size());
  for (std::size_t a = 0; a < N; ++a) {
    const auto& ix = idx[a];
    if (ix.i == 0) {
      w.u0.push_back(Jet<T>::variable(v.u0[static_cast<std::size_t>(ix.j - 1)], a, N));
    } else {
      w.uk[static_cast<std::size_t>(ix.i - 1)].push_back(
          Jet<T>::variable(v.uk[static_cast<std::size_t>(ix.i - 1)][static_cast<std::size_t>(ix.j)], a, N));
    }
  }
  return data_from_flat(d.n, w);
}

// c_{abc} = d_c Omega_{ab}
template <class T>
Tensor3<T> structure_constants(const HurwitzData<T>& d) {
  const auto idx = flat_indices(d);
  const std::size_t N = idx.size();
  const HurwitzData<Jet<T>> J = jet_data(d);
  Tensor3<T> c{N, std::vector<T>(N * N * N, FieldTraits<T>::from_int(0))};
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a; b < N; ++b) {
      const OmegaValue<Jet<T>> w = omega_H(J, idx[a], idx[b]);
      for (std::size_t g = 0; g < N; ++g) {
        const T x = jet_derivative(w, g);
        c(a, b, g) = x;
        c(b, a, g) = x;
      }
    }
  return c;
}

template <class T>
Tensor3<T> structure_constants_residue(const HurwitzData<T>& d) {
  const auto idx = flat_indices(d);
  const std::size_t N = idx.size();
  Tensor3<T> c{N, std::vector<T>(N * N * N, FieldTraits<T>::from_int(0))};
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t g = 0; g < N; ++g) c(a, b, g) = c_H(d, idx[a], idx[b], idx[g]);
  return c;
}

template <class T>
Matrix<T> metric_matrix(const HurwitzData<T>& d) {
  const auto idx = flat_indices(d);
  Matrix<T> eta(idx.size(), std::vector<T>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) eta[a][b] = metric_H(d, idx[a], idx[b]);
  return eta;
}

// Gauss-Jordan with largest-magnitude pivots.
template <class T>
Matrix<T> inverse(Matrix<T> A) {
  const std::size_t n = A.size();
  Matrix<T> B(n, std::vector<T>(n, FieldTraits<T>::from_int(0)));
  for (std::size_t i = 0; i < n; ++i) B[i][i] = FieldTraits<T>::from_int(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (FieldTraits<T>::magnitude(A[r][col]) > FieldTraits<T>::magnitude(A[piv][col])) piv = r;
    if (!FieldTraits<T>::invertible(A[piv][col])) throw std::domain_error("inverse: singular matrix");
    std::swap(A[piv], A[col]);
    std::swap(B[piv], B[col]);
    const T inv = FieldTraits<T>::from_int(1) / A[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      A[col][j] *= inv;
      B[col][j] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || FieldTraits<T>::is_zero(A[r][col])) continue;
      const T f = A[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        A[r][j] -= f * A[col][j];
        B[r][j] -= f * B[col][j];
      }
    }
  }
  return B;
}

// max over a,b,c,e of |c_{ab}^f c_{fce} - c_{cb}^f c_{fae}|, indices raised with eta^{-1}
template <class T>
Real wdvv_residual(const Tensor3<T>& c, const Matrix<T>& eta_inv) {
  const std::size_t N = c.dim;
  Tensor3<T> up{N, std::vector<T>(N * N * N, FieldTraits<T>::from_int(0))};  // c_{ab}^f
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t f = 0; f < N; ++f) {
        T s = FieldTraits<T>::from_int(0);
        for (std::size_t g = 0; g < N; ++g) s += c(a, b, g) * eta_inv[g][f];
        up(a, b, f) = s;
      }
  Real worst = 0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t cc = 0; cc < N; ++cc)
        for (std::size_t e = 0; e < N; ++e) {
          T s = FieldTraits<T>::from_int(0);
          for (std::size_t f = 0; f < N; ++f) s += up(a, b, f) * c(f, cc, e) - up(cc, b, f) * c(f, a, e);
          worst = std::max(worst, FieldTraits<T>::magnitude(s));
        }
  return worst;
}

// max |c_{abc} - c_{sigma(abc)}| over permutations
template <class T>
Real symmetry_defect(const Tensor3<T>& c) {
  Real worst = 0;
  const std::size_t N = c.dim;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t g = 0; g < N; ++g) {
        worst = std::max(worst, FieldTraits<T>::magnitude(c(a, b, g) - c(b, g, a)));
        worst = std::max(worst, FieldTraits<T>::magnitude(c(a, b, g) - c(a, g, b)));
      }
  return worst;
}

template <class T>
Real max_difference(const Tensor3<T>& x, const Tensor3<T>& y) {
  Real worst = 0;
  for (std::size_t i = 0; i < x.data.size(); ++i)
    worst = std::max(worst, FieldTraits<T>::magnitude(x.data[i] - y.data[i]));
  return worst;
}

}  // namespace wtl
