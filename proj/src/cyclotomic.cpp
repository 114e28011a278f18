#include "nilweight/cyclotomic.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "nilweight/errors.hpp"

namespace nilweight
{

namespace
{

std::vector<Rational> reduce_dense(std::uint32_t n, std::vector<Rational> dense)
{
  auto const &phi_poly = cyclotomic_polynomial(n);
  std::size_t phi = phi_poly.size() - 1;
  for (std::size_t deg = n; deg-- > phi;) {
    Rational c = dense[deg];
    if (c == Rational(0))
      continue;
    for (std::size_t j = 0; j <= phi; ++j)
      dense[deg - phi + j] -= c * phi_poly[j];
  }
  dense.resize(phi);
  return dense;
}

std::vector<Rational> to_dense(std::uint32_t n, std::vector<Rational> const &coeffs,
                               std::uint32_t from)
{
  std::vector<Rational> dense(n);
  std::uint32_t step = n / from;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    dense[(k * step) % n] += coeffs[k];
  return dense;
}

Rational parse_rational(std::string_view s)
{
  auto slash = s.find('/');
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw MalformedInput("malformed rational '" + std::string(s) + "'");
    return v;
  };
  if (slash == std::string_view::npos)
    return Rational(parse_int(s));
  return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

} // anonymous namespace

std::string to_string(Rational const &r)
{
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::uint32_t euler_phi(std::uint32_t n)
{
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  if (n > 1)
    result -= result / n;
  return result;
}

std::vector<std::int64_t> const &cyclotomic_polynomial(std::uint32_t n)
{
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
      return it->second;
  }
  if (n == 0)
    throw PreconditionError("cyclotomic polynomial of order 0");

  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d)
      continue;
    auto const &div = cyclotomic_polynomial(d);
    std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quotient(poly.size() - dd, 0);
    for (std::size_t k = poly.size(); k-- > dd;) {
      std::int64_t c = poly[k]; // div is monic
      quotient[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j)
        poly[k - dd + j] -= c * div[j];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(std::uint32_t conductor, std::vector<Rational> coeffs)
  : _conductor(conductor), _coeffs(std::move(coeffs))
{
  normalize();
}

void Cyclotomic::normalize()
{
  for (std::size_t k = 1; k < _coeffs.size(); ++k)
    if (_coeffs[k] != Rational(0))
      return;
  _coeffs.resize(1);
  _conductor = 1;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k)
{
  std::vector<Rational> dense(n);
  auto e = static_cast<std::size_t>(((k % n) + n) % n);
  dense[e] = 1;
  return from_exponents(n, std::move(dense));
}

Cyclotomic Cyclotomic::from_exponents(std::uint32_t n, std::vector<Rational> dense)
{
  if (dense.size() != n)
    throw PreconditionError("from_exponents: expected " + std::to_string(n) + " coefficients");
  return Cyclotomic(n, reduce_dense(n, std::move(dense)));
}

Cyclotomic Cyclotomic::embedded(std::uint32_t m) const
{
  if (m % _conductor)
    throw PreconditionError("cannot embed Q(E(" + std::to_string(_conductor) + ")) into Q(E(" +
                            std::to_string(m) + "))");
  if (m == _conductor)
    return *this;
  Cyclotomic res;
  res._conductor = m;
  res._coeffs = reduce_dense(m, to_dense(m, _coeffs, _conductor));
  return res;
}

bool Cyclotomic::is_zero() const { return _conductor == 1 && _coeffs[0] == Rational(0); }

Rational Cyclotomic::rational() const
{
  if (!is_rational())
    throw PreconditionError("value " + to_string() + " is not rational");
  return _coeffs[0];
}

std::int64_t Cyclotomic::integer() const
{
  Rational r = rational();
  if (r.denominator() != 1)
    throw PreconditionError("value " + to_string() + " is not an integer");
  return r.numerator();
}

Cyclotomic Cyclotomic::conj() const
{
  if (is_rational())
    return *this;
  auto dense = to_dense(_conductor, _coeffs, _conductor);
  std::vector<Rational> flipped(_conductor);
  for (std::uint32_t k = 0; k < _conductor; ++k)
    flipped[(_conductor - k) % _conductor] = dense[k];
  return from_exponents(_conductor, std::move(flipped));
}

std::complex<double> Cyclotomic::to_complex() const
{
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < _coeffs.size(); ++k) {
    double angle = 2 * std::numbers::pi * static_cast<double>(k) / _conductor;
    z += boost::rational_cast<double>(_coeffs[k]) * std::polar(1.0, angle);
  }
  return z;
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic res = *this;
  for (auto &c : res._coeffs)
    c = -c;
  return res;
}

Cyclotomic &Cyclotomic::operator+=(Cyclotomic const &rhs)
{
  std::uint32_t m = std::lcm(_conductor, rhs._conductor);
  Cyclotomic a = embedded(m);
  Cyclotomic b = rhs.embedded(m);
  for (std::size_t k = 0; k < a._coeffs.size(); ++k)
    a._coeffs[k] += b._coeffs[k];
  a.normalize();
  return *this = std::move(a);
}

Cyclotomic &Cyclotomic::operator-=(Cyclotomic const &rhs) { return *this += -rhs; }

Cyclotomic &Cyclotomic::operator*=(Cyclotomic const &rhs)
{
  if (rhs.is_rational()) {
    for (auto &c : _coeffs)
      c *= rhs._coeffs[0];
    normalize();
    return *this;
  }
  if (is_rational()) {
    Rational r = _coeffs[0];
    *this = rhs;
    for (auto &c : _coeffs)
      c *= r;
    normalize();
    return *this;
  }
  std::uint32_t m = std::lcm(_conductor, rhs._conductor);
  Cyclotomic a = embedded(m);
  Cyclotomic b = rhs.embedded(m);
  std::vector<Rational> dense(m);
  for (std::size_t i = 0; i < a._coeffs.size(); ++i) {
    if (a._coeffs[i] == Rational(0))
      continue;
    for (std::size_t j = 0; j < b._coeffs.size(); ++j)
      dense[(i + j) % m] += a._coeffs[i] * b._coeffs[j];
  }
  return *this = Cyclotomic(m, reduce_dense(m, std::move(dense)));
}

bool operator==(Cyclotomic const &a, Cyclotomic const &b)
{
  if (a._conductor == b._conductor)
    return a._coeffs == b._coeffs;
  if (a.is_rational() || b.is_rational())
    return false;
  std::uint32_t m = std::lcm(a._conductor, b._conductor);
  return a.embedded(m)._coeffs == b.embedded(m)._coeffs;
}

bool operator<(Cyclotomic const &a, Cyclotomic const &b)
{
  std::uint32_t m = std::lcm(a._conductor, b._conductor);
  auto const &ca = a.embedded(m)._coeffs;
  auto const &cb = b.embedded(m)._coeffs;
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::string Cyclotomic::to_string() const
{
  std::string s;
  for (std::size_t k = 0; k < _coeffs.size(); ++k) {
    Rational c = _coeffs[k];
    if (c == Rational(0))
      continue;
    std::string term;
    if (k == 0) {
      term = nilweight::to_string(c);
    } else {
      std::string root = "E(" + std::to_string(_conductor) + ")";
      if (k > 1)
        root += "^" + std::to_string(k);
      if (c == Rational(1))
        term = root;
      else if (c == Rational(-1))
        term = "-" + root;
      else
        term = nilweight::to_string(c) + "*" + root;
    }
    if (!s.empty() && term.front() != '-')
      s += '+';
    s += term;
  }
  return s.empty() ? "0" : s;
}

std::string Cyclotomic::serialize() const
{
  std::string s = std::to_string(_conductor) + ":";
  for (std::size_t k = 0; k < _coeffs.size(); ++k) {
    if (k)
      s += ';';
    s += nilweight::to_string(_coeffs[k]);
  }
  return s;
}

Cyclotomic Cyclotomic::deserialize(std::string_view text)
{
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw MalformedInput("malformed cyclotomic '" + std::string(text) + "'");
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + colon, n);
  if (ec != std::errc() || n == 0)
    throw MalformedInput("malformed conductor in '" + std::string(text) + "'");
  std::vector<Rational> coeffs;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    auto semi = rest.find(';');
    coeffs.push_back(parse_rational(rest.substr(0, semi)));
    if (semi == std::string_view::npos)
      break;
    rest = rest.substr(semi + 1);
  }
  if (coeffs.size() != euler_phi(n))
    throw MalformedInput("wrong coefficient count in '" + std::string(text) + "'");
  return Cyclotomic(n, std::move(coeffs));
}

} // namespace nilweight
