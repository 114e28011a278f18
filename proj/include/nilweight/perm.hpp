#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nilweight/errors.hpp"

namespace nilweight
{

using Point = std::uint16_t;

/// Syntax error in cycle notation; column is 1-based within the parsed text.
class PermSyntaxError : public MalformedInput
{
public:
  PermSyntaxError(std::size_t column, std::string detail)
    : MalformedInput("column " + std::to_string(column) + ": " + detail), _column(column),
      _detail(std::move(detail))
  {
  }
  std::size_t column() const { return _column; }
  std::string const &detail() const { return _detail; }

private:
  std::size_t _column;
  std::string _detail;
};

/// A permutation of {0, ..., degree-1}. Products act from the right:
/// (a * b)(x) = b(a(x)), so `a * b` means "first a, then b".
class Perm
{
public:
  Perm() = default;
  /// Identity of the given degree.
  explicit Perm(std::size_t degree);
  /// Throws MalformedInput unless `images` is a bijection.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from 1-based cycles, e.g. {{1,2,3},{4,5}}.
  static Perm from_cycles(std::size_t degree, std::vector<std::vector<unsigned>> const &cycles);
  /// Parses "(1,2,3)(4,5)" (1-based, whitespace-insensitive, "()" is the
  /// identity). Throws MalformedInput carrying the offending column.
  static Perm parse(std::size_t degree, std::string_view text);

  std::size_t degree() const { return _images.size(); }
  Point operator[](std::size_t x) const { return _images[x]; }
  std::vector<Point> const &images() const { return _images; }

  bool is_identity() const;
  Perm inverse() const;
  std::uint64_t order() const;
  /// Number of points moved.
  std::size_t support_size() const;

  Perm operator*(Perm const &rhs) const;
  Perm &operator*=(Perm const &rhs);

  /// "(1,2,3)(4,5)", "()" for the identity.
  std::string to_string() const;

  friend bool operator==(Perm const &, Perm const &) = default;
  friend auto operator<=>(Perm const &a, Perm const &b) { return a._images <=> b._images; }

private:
  std::vector<Point> _images;
};

/// g^-1 x g
Perm conjugate(Perm const &x, Perm const &g);
/// x^-1 y^-1 x y
Perm commutator(Perm const &x, Perm const &y);

} // namespace nilweight

template <>
struct std::hash<nilweight::Perm>
{
  std::size_t operator()(nilweight::Perm const &p) const noexcept
  {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : p.images()) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};
