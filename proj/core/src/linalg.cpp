#include "linalg.hpp"

#include <utility>

namespace quanthelly::detail {

Scalar determinant(Matrix a) {
  const std::size_t n = a.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::optional<Matrix> inverse(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, Vector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Scalar piv = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Scalar f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

int rank(Matrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      Scalar f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Scalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

Vector row_times(const Vector& row, const Matrix& m) {
  Vector out(m.empty() ? 0 : m[0].size(), Scalar(0));
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += row[i] * m[i][j];
  }
  return out;
}

}  // namespace quanthelly::detail
