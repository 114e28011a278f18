#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace nilweight
{

/// Prime factors of n in increasing order (n >= 1).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// A finite set of primes. The complement of a set is only ever taken
/// relative to the prime divisors of a given group order.
class PrimeSet
{
public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<std::uint64_t> primes);
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  /// Parses "2,3,5" (whitespace allowed); "" and "-" give the empty set.
  static PrimeSet parse(std::string_view text);
  /// Every prime dividing n.
  static PrimeSet of(std::uint64_t n);

  std::vector<std::uint64_t> const &primes() const { return _primes; }
  bool empty() const { return _primes.empty(); }
  bool contains(std::uint64_t p) const;

  /// Primes dividing n that are not in this set.
  PrimeSet complement_in(std::uint64_t n) const;

  bool is_sigma_number(std::uint64_t n) const;
  /// Product of the primes, used as a compact cache key.
  std::uint64_t key() const;

  /// "{2,3}"
  std::string to_string() const;
  /// "2,3" ("-" for the empty set)
  std::string to_list() const;

  friend bool operator==(PrimeSet const &, PrimeSet const &) = default;

private:
  std::vector<std::uint64_t> _primes;
};

/// n_sigma: the largest divisor of n all of whose prime factors lie in sigma.
std::uint64_t sigma_part(std::uint64_t n, PrimeSet const &sigma);

/// All subsets of the prime divisors of n, smallest first.
std::vector<PrimeSet> prime_subsets(std::uint64_t n);

} // namespace nilweight
