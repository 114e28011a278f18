#include "nilweight/perm.hpp"

#include <numeric>

#include "nilweight/errors.hpp"

namespace nilweight
{

namespace
{

[[noreturn]] void cycle_error(std::size_t column, std::string const &msg)
{
  throw PermSyntaxError(column, msg);
}

} // anonymous namespace

Perm::Perm(std::size_t degree) : _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (auto x : _images) {
    if (x >= _images.size() || seen[x])
      throw MalformedInput("image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::vector<std::vector<unsigned>> const &cycles)
{
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (auto x : cycle) {
      if (x < 1 || x > degree)
        throw MalformedInput("point " + std::to_string(x) + " out of range 1.." +
                             std::to_string(degree));
      if (used[x - 1])
        throw MalformedInput("repeated point in cycle");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p._images[cycle[i] - 1] = static_cast<Point>(cycle[(i + 1) % cycle.size()] - 1);
  }
  return p;
}

Perm Perm::parse(std::size_t degree, std::string_view text)
{
  std::vector<std::vector<unsigned>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
      ++i;
  };

  skip_ws();
  if (i == text.size())
    cycle_error(i + 1, "empty permutation");

  while (true) {
    skip_ws();
    if (i == text.size())
      break;
    if (text[i] != '(')
      cycle_error(i + 1, "expected '('");
    ++i;
    std::vector<unsigned> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      unsigned long value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<unsigned long>(text[i] - '0');
        if (value > 1u << 20)
          cycle_error(start + 1, "point too large");
        ++i;
      }
      if (start == i)
        cycle_error(i + 1, "expected a point");
      if (value < 1 || value > degree)
        cycle_error(start + 1, "point " + std::to_string(value) + " out of range 1.." +
                                   std::to_string(degree));
      if (used[value - 1])
        cycle_error(start + 1, "repeated point in cycle");
      used[value - 1] = true;
      cycle.push_back(static_cast<unsigned>(value));
      skip_ws();
      if (i == text.size())
        cycle_error(i + 1, "unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      cycle_error(i + 1, "expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const
{
  Perm res;
  res._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    res._images[_images[i]] = static_cast<Point>(i);
  return res;
}

std::uint64_t Perm::order() const
{
  std::uint64_t ord = 1;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t Perm::support_size() const
{
  std::size_t n = 0;
  for (std::size_t i = 0; i < _images.size(); ++i)
    n += _images[i] != i;
  return n;
}

Perm Perm::operator*(Perm const &rhs) const
{
  Perm res(*this);
  res *= rhs;
  return res;
}

Perm &Perm::operator*=(Perm const &rhs)
{
  if (rhs.degree() != degree())
    throw MalformedInput("degree mismatch in permutation product");
  for (auto &x : _images)
    x = rhs._images[x];
  return *this;
}

std::string Perm::to_string() const
{
  std::string s;
  std::vector<bool> seen(_images.size(), false);
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      if (j != i)
        s += ',';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Perm conjugate(Perm const &x, Perm const &g) { return g.inverse() * x * g; }

Perm commutator(Perm const &x, Perm const &y) { return x.inverse() * y.inverse() * x * y; }

} // namespace nilweight
