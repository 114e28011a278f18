#pragma once

// Dense linear algebra over the prime field F_q (q < 2^31).

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace nilweight::modular
{

using Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline std::int64_t reduce(std::int64_t a, std::int64_t q)
{
  a %= q;
  return a < 0 ? a + q : a;
}

std::int64_t power(std::int64_t a, std::uint64_t e, std::int64_t q);
std::int64_t inverse(std::int64_t a, std::int64_t q);
std::int64_t primitive_root(std::int64_t q);

/// Basis of the right null space of `a`, as the columns of the result.
Matrix nullspace(Matrix a, std::int64_t q);

Matrix multiply(Matrix const &a, Matrix const &b, std::int64_t q);

} // namespace nilweight::modular
