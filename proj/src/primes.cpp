#include "nilweight/primes.hpp"

#include <algorithm>
#include <charconv>

#include "nilweight/errors.hpp"

namespace nilweight
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
  std::vector<std::uint64_t> res;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      res.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    res.push_back(n);
  return res;
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
  : PrimeSet(std::vector<std::uint64_t>(primes))
{}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : _primes(std::move(primes))
{
  for (auto p : _primes)
    if (!is_prime(p))
      throw MalformedInput("not a prime: " + std::to_string(p));
  std::sort(_primes.begin(), _primes.end());
  _primes.erase(std::unique(_primes.begin(), _primes.end()), _primes.end());
}

PrimeSet PrimeSet::parse(std::string_view text)
{
  std::vector<std::uint64_t> primes;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
      ++i;
  };
  skip_ws();
  if (i == text.size() || text.substr(i) == "-")
    return {};
  while (true) {
    skip_ws();
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), p);
    if (ec != std::errc())
      throw MalformedInput("malformed prime list '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    primes.push_back(p);
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != ',')
      throw MalformedInput("malformed prime list '" + std::string(text) + "'");
    ++i;
  }
  return PrimeSet(std::move(primes));
}

PrimeSet PrimeSet::of(std::uint64_t n) { return PrimeSet(prime_factors(n)); }

bool PrimeSet::contains(std::uint64_t p) const
{
  return std::binary_search(_primes.begin(), _primes.end(), p);
}

PrimeSet PrimeSet::complement_in(std::uint64_t n) const
{
  std::vector<std::uint64_t> res;
  for (auto p : prime_factors(n))
    if (!contains(p))
      res.push_back(p);
  return PrimeSet(std::move(res));
}

bool PrimeSet::is_sigma_number(std::uint64_t n) const { return sigma_part(n, *this) == n; }

std::uint64_t PrimeSet::key() const
{
  std::uint64_t k = 1;
  for (auto p : _primes)
    k *= p;
  return k;
}

std::string PrimeSet::to_string() const { return "{" + (empty() ? std::string() : to_list()) + "}"; }

std::string PrimeSet::to_list() const
{
  if (_primes.empty())
    return "-";
  std::string s;
  for (std::size_t i = 0; i < _primes.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(_primes[i]);
  }
  return s;
}

std::uint64_t sigma_part(std::uint64_t n, PrimeSet const &sigma)
{
  if (n == 0)
    throw PreconditionError("sigma_part of 0");
  std::uint64_t part = 1;
  for (auto p : sigma.primes())
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

std::vector<PrimeSet> prime_subsets(std::uint64_t n)
{
  auto primes = prime_factors(n);
  std::vector<PrimeSet> res;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::vector<std::uint64_t> sub;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (std::uint64_t{1} << i))
        sub.push_back(primes[i]);
    res.emplace_back(std::move(sub));
  }
  std::stable_sort(res.begin(), res.end(), [](PrimeSet const &a, PrimeSet const &b) {
    if (a.primes().size() != b.primes().size())
      return a.primes().size() < b.primes().size();
    return a.primes() < b.primes();
  });
  return res;
}

} // namespace nilweight
