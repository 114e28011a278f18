#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <typeindex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilweight/perm.hpp"

namespace nilweight
{

using BigInt = boost::multiprecision::cpp_int;

/// A permutation group carried by a deterministic stabilizer chain.
///
/// PermGroup is a cheap handle onto immutable shared state. Derived data
/// (element lists, classes, lattices, character tables) is memoized on the
/// shared state, so copies of a handle share every cache while distinct
/// constructions of the same group do not.
class PermGroup
{
public:
  /// Trivial group of degree 0.
  PermGroup();
  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree);
  /// Runs Schreier-Sims; throws MalformedInput on inconsistent degrees.
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const;
  std::vector<Perm> const &generators() const;
  std::vector<Point> const &base() const;
  std::vector<Perm> const &strong_generators() const;
  /// Lengths of the basic orbits; their product is the order.
  std::vector<std::size_t> const &basic_orbit_lengths() const;

  BigInt const &order() const;
  /// The order as a machine integer; ResourceError when it does not fit.
  std::uint64_t size() const;

  bool is_trivial() const { return size() == 1; }

  /// True iff g sifts to the identity. Throws on degree mismatch.
  bool contains(Perm const &g) const;
  /// Residue of g after sifting through the chain (identity iff member).
  Perm sift(Perm const &g) const;

  /// Every element, sorted lexicographically by images (identity first).
  /// Bounded by limits().class_bound.
  std::vector<Perm> const &elements() const;
  /// Position of g in elements(), if g is a member.
  std::optional<std::uint32_t> index_of(Perm const &g) const;

  Perm identity() const { return Perm(degree()); }

  /// Subgroup test by generators.
  bool is_subgroup_of(PermGroup const &other) const;
  /// Equality as sets of permutations.
  bool same_group(PermGroup const &other) const;
  /// True iff both handles share state.
  bool same_object(PermGroup const &other) const { return _impl == other._impl; }

  /// Lcm of the element orders.
  std::uint64_t exponent() const;

  /// Memoized derived data, keyed by type and a caller-chosen tag. The
  /// first writer wins; `make` runs outside the lock.
  template <typename T, typename F>
  std::shared_ptr<T const> memo(std::uint64_t tag, F &&make) const
  {
    if (auto hit = memo_find(typeid(T), tag))
      return std::static_pointer_cast<T const>(hit);
    std::shared_ptr<T const> fresh = make();
    return std::static_pointer_cast<T const>(memo_insert(typeid(T), tag, fresh));
  }

  template <typename T>
  std::shared_ptr<T const> memo_lookup(std::uint64_t tag) const
  {
    return std::static_pointer_cast<T const>(memo_find(typeid(T), tag));
  }

  template <typename T>
  void memo_store(std::uint64_t tag, std::shared_ptr<T const> value) const
  {
    memo_insert(typeid(T), tag, std::move(value));
  }

private:
  std::shared_ptr<void const> memo_find(std::type_index type, std::uint64_t tag) const;
  std::shared_ptr<void const> memo_insert(std::type_index type, std::uint64_t tag,
                                          std::shared_ptr<void const> value) const;

  struct Impl;
  std::shared_ptr<Impl> _impl;
};

/// The group generated by `generators` (all of degree `degree`).
PermGroup bsgs_construct(std::size_t degree, std::span<Perm const> generators);

/// Membership test; throws MalformedInput on degree mismatch.
bool membership_test(PermGroup const &group, Perm const &g);

/// Smallest-first greedy generating set for the subgroup consisting of
/// exactly `elements` (which must be closed under multiplication).
PermGroup subgroup_from_elements(std::size_t degree, std::span<Perm const> elements);

/// <H, extra>
PermGroup join(PermGroup const &h, std::span<Perm const> extra);

} // namespace nilweight
