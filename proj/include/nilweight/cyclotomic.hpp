#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace nilweight
{

using Rational = boost::rational<std::int64_t>;

std::string to_string(Rational const &r);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> const &cyclotomic_polynomial(std::uint32_t n);
std::uint32_t euler_phi(std::uint32_t n);

/// An exact element of Q(zeta_n), stored in the power basis
/// 1, z, ..., z^(phi(n)-1) reduced modulo the n-th cyclotomic polynomial.
/// Values with different conductors are compared after embedding both
/// into the field of the lcm; rational values always carry conductor 1.
class Cyclotomic
{
public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(std::int64_t n) : Cyclotomic(Rational(n)) {}
  Cyclotomic(Rational r) : _conductor(1), _coeffs{r} {}

  /// zeta_n^k
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);
  /// sum over k of dense[k] * zeta_n^k, with dense.size() == n.
  static Cyclotomic from_exponents(std::uint32_t n, std::vector<Rational> dense);

  std::uint32_t conductor() const { return _conductor; }
  std::vector<Rational> const &coefficients() const { return _coeffs; }

  /// The same value written in Q(zeta_m); m must be a multiple of conductor().
  Cyclotomic embedded(std::uint32_t m) const;

  bool is_zero() const;
  bool is_rational() const { return _conductor == 1; }
  /// Throws PreconditionError unless rational.
  Rational rational() const;
  /// Throws PreconditionError unless a rational integer.
  std::int64_t integer() const;

  /// Complex conjugate.
  Cyclotomic conj() const;
  std::complex<double> to_complex() const;

  Cyclotomic operator-() const;
  Cyclotomic &operator+=(Cyclotomic const &rhs);
  Cyclotomic &operator-=(Cyclotomic const &rhs);
  Cyclotomic &operator*=(Cyclotomic const &rhs);
  friend Cyclotomic operator+(Cyclotomic a, Cyclotomic const &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, Cyclotomic const &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, Cyclotomic const &b) { return a *= b; }

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);
  /// A fixed total order (lexicographic on embedded coefficients).
  friend bool operator<(Cyclotomic const &a, Cyclotomic const &b);

  /// GAP-style text, e.g. "-1-2*E(3)".
  std::string to_string() const;
  /// Lossless text form "n:c0;c1;..." and its inverse.
  std::string serialize() const;
  static Cyclotomic deserialize(std::string_view text);

private:
  Cyclotomic(std::uint32_t conductor, std::vector<Rational> coeffs);
  void normalize();

  std::uint32_t _conductor;
  std::vector<Rational> _coeffs;
};

} // namespace nilweight
