#include "modular.hpp"

#include "nilweight/primes.hpp"

namespace nilweight::modular
{

std::int64_t power(std::int64_t a, std::uint64_t e, std::int64_t q)
{
  std::int64_t result = 1;
  a = reduce(a, q);
  while (e) {
    if (e & 1)
      result = result * a % q;
    a = a * a % q;
    e >>= 1;
  }
  return result;
}

std::int64_t inverse(std::int64_t a, std::int64_t q) { return power(a, q - 2, q); }

std::int64_t primitive_root(std::int64_t q)
{
  auto factors = prime_factors(static_cast<std::uint64_t>(q - 1));
  for (std::int64_t g = 2;; ++g) {
    bool ok = true;
    for (auto p : factors)
      if (power(g, (q - 1) / p, q) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
}

Matrix nullspace(Matrix a, std::int64_t q)
{
  auto rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c) == 0)
      ++p;
    if (p == rows)
      continue;
    a.row(p).swap(a.row(r));
    std::int64_t inv = inverse(a(r, c), q);
    for (Eigen::Index j = 0; j < cols; ++j)
      a(r, j) = a(r, j) * inv % q;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0)
        continue;
      std::int64_t f = a(i, c);
      for (Eigen::Index j = 0; j < cols; ++j)
        a(i, j) = reduce(a(i, j) - f * a(r, j), q);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols)
    is_pivot[c] = true;
  Matrix basis(cols, cols - static_cast<Eigen::Index>(pivot_cols.size()));
  basis.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      basis(pivot_cols[i], k) = reduce(-a(static_cast<Eigen::Index>(i), free), q);
    ++k;
  }
  return basis;
}

Matrix multiply(Matrix const &a, Matrix const &b, std::int64_t q)
{
  Matrix c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      std::int64_t s = 0;
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        s = (s + a(i, k) * b(k, j)) % q;
      c(i, j) = s;
    }
  return c;
}

} // namespace nilweight::modular
