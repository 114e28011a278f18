#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "nilweight/perm_group.hpp"
#include "nilweight/primes.hpp"

namespace nilweight
{

/// A subset of a group's elements, indexed by position in elements().
class ElementSet
{
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : _universe(universe), _words((universe + 63) / 64) {}

  void insert(std::uint32_t i) { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(std::uint32_t i) const { return (_words[i >> 6] >> (i & 63)) & 1u; }
  std::size_t count() const;
  std::size_t universe() const { return _universe; }
  bool subset_of(ElementSet const &other) const;
  std::vector<std::uint32_t> indices() const;

  /// Lexicographic order of the sorted index sequences.
  bool lex_less(ElementSet const &other) const;

  friend bool operator==(ElementSet const &, ElementSet const &) = default;
  std::size_t hash() const;

private:
  std::size_t _universe = 0;
  std::vector<std::uint64_t> _words;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const { return s.hash(); }
};

/// One conjugacy class of subgroups.
struct SubgroupClass
{
  std::size_t index = 0;
  PermGroup representative;
  ElementSet elements; // of the representative
  std::uint64_t order = 0;
  std::uint64_t class_size = 0; // |G : N_G(rep)|
  bool nilpotent = false;
  bool solvable = false;

  bool is_sigma_group(PrimeSet const &sigma) const { return sigma.is_sigma_number(order); }
};

/// All subgroups of a group up to conjugacy, built by adjoining cyclic
/// subgroups of prime-power order to class representatives and
/// deduplicating whole conjugacy orbits. Bounded by limits().lattice_bound.
class SubgroupLattice
{
public:
  explicit SubgroupLattice(PermGroup const &group);

  PermGroup const &group() const { return _group; }
  std::vector<SubgroupClass> const &classes() const { return _classes; }
  SubgroupClass const &operator[](std::size_t i) const { return _classes[i]; }
  std::size_t size() const { return _classes.size(); }
  std::size_t total_subgroups() const { return _class_of.size(); }

  /// All members of one conjugacy class.
  std::vector<ElementSet> const &conjugates(std::size_t cls) const { return _orbits[cls]; }

  ElementSet element_set(PermGroup const &h) const;
  std::size_t class_of(ElementSet const &h) const;
  std::size_t class_of(PermGroup const &h) const;

  /// Memoized PermGroup for a subgroup given by its elements, so derived
  /// data computed on it is shared between callers.
  PermGroup subgroup(ElementSet const &h) const;

  /// Normalizer of a subgroup, as an element set.
  ElementSet normalizer(ElementSet const &h) const;
  /// Normalizer of a class representative (memoized).
  PermGroup normalizer(std::size_t cls) const;

  // Element-level arithmetic on positions in group().elements().
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return _table[a * _n + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return _inverse[a]; }
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t g) const
  {
    return multiply(multiply(_inverse[g], x), g);
  }
  ElementSet conjugate(ElementSet const &h, std::uint32_t g) const;
  std::uint64_t element_order(std::uint32_t a) const { return _orders[a]; }
  ElementSet generate(std::span<std::uint32_t const> generators) const;
  std::uint32_t position(Perm const &g) const;

private:
  std::vector<std::uint32_t> generator_positions(ElementSet const &h) const;
  bool nilpotent_by_sylow_count(ElementSet const &h, std::uint64_t order) const;

  PermGroup _group;
  std::size_t _n = 0;
  std::vector<std::uint32_t> _table;
  std::vector<std::uint32_t> _inverse;
  std::vector<std::uint64_t> _orders;

  std::vector<SubgroupClass> _classes;
  std::vector<std::vector<ElementSet>> _orbits;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> _class_of;

  mutable std::mutex _mutex;
  mutable std::unordered_map<ElementSet, PermGroup, ElementSetHash> _objects;
  mutable std::unordered_map<std::size_t, PermGroup> _normalizers;
};

/// Memoized lattice of a group.
SubgroupLattice const &subgroup_lattice(PermGroup const &group);

/// Complete list of subgroup classes (sorted by order, class size, then
/// the lexicographically least member of the class).
std::vector<SubgroupClass> const &subgroup_classes(PermGroup const &group);

/// Classes of nilpotent sigma-subgroups (always including the trivial one).
std::vector<SubgroupClass> nilpotent_sigma_subgroup_classes(PermGroup const &group,
                                                            PrimeSet const &sigma);

/// The conjugacy class of Carter subgroups of a solvable group.
SubgroupClass carter_subgroups(PermGroup const &group);

/// R is nilpotent and self-normalizing in Q. Throws unless R <= Q.
bool is_carter_in(PermGroup const &r, PermGroup const &q);

/// Classes of sigma'-subgroups Q having a member that contains R as a
/// Carter subgroup; each representative is such a member.
std::vector<SubgroupClass> carter_fiber(PermGroup const &group, PrimeSet const &sigma,
                                        PermGroup const &r);

} // namespace nilweight
