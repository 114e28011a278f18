#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nilweight/perm.hpp"
#include "nilweight/perm_group.hpp"
#include "nilweight/primes.hpp"

namespace nilweight
{

/// One conjugacy class; `members` are positions in group.elements().
struct ConjClass
{
  Perm representative; // lexicographically smallest member
  std::uint64_t size = 0;
  std::uint64_t element_order = 0;
  std::vector<std::uint32_t> members;
};

struct ClassData
{
  std::vector<ConjClass> classes;
  std::vector<std::uint32_t> class_of; // element position -> class
  std::vector<std::uint32_t> inverse_class;
  /// power_class[c][j] = class of rep(c)^j, j < element_order(c)
  std::vector<std::vector<std::uint32_t>> power_class;

  std::size_t size() const { return classes.size(); }
};

/// Classes sorted by (element order, size, representative). Memoized.
/// Bounded by limits().class_bound.
ClassData const &class_data(PermGroup const &group);
std::vector<ConjClass> const &conjugacy_classes(PermGroup const &group);
/// Class index of a member of the group; throws if g is not a member.
std::uint32_t class_index(PermGroup const &group, Perm const &g);

/// Indices of the classes whose element order is a sigma-number.
std::vector<std::size_t> sigma_class_indices(PermGroup const &group, PrimeSet const &sigma);
std::vector<ConjClass> sigma_element_classes(PermGroup const &group, PrimeSet const &sigma);

PermGroup centralizer(PermGroup const &group, Perm const &g);
/// C_G(H): elements of G commuting with every element of H.
PermGroup centralizer(PermGroup const &group, PermGroup const &h);
PermGroup normalizer(PermGroup const &group, PermGroup const &h);
bool is_normal(PermGroup const &group, PermGroup const &h);
PermGroup conjugate(PermGroup const &h, Perm const &g);

/// Smallest normal subgroup of `group` containing `elements`.
PermGroup normal_closure(PermGroup const &group, std::vector<Perm> const &elements);
PermGroup derived_subgroup(PermGroup const &group);
/// [A, B] for subgroups normalised by `group`.
PermGroup commutator_subgroup(PermGroup const &group, PermGroup const &a, PermGroup const &b);

/// Right-coset action of `group` on the cosets of `h`.
class CosetAction
{
public:
  CosetAction(PermGroup const &group, PermGroup const &h);

  /// The permutation image (isomorphic to group/h when h is normal).
  PermGroup const &image() const { return _image; }
  /// The image of one element of `group`.
  Perm image_of(Perm const &g) const;
  std::size_t coset_count() const { return _reps.size(); }
  std::size_t coset_of(Perm const &g) const;

private:
  Perm canonical(Perm const &g) const;

  PermGroup _group;
  PermGroup _h;
  std::vector<Perm> _h_elements;
  std::vector<Perm> _reps;
  std::unordered_map<Perm, std::size_t> _index;
  PermGroup _image;
};

/// With `require_normal`, throws PreconditionError unless h is normal.
CosetAction coset_action_quotient(PermGroup const &group, PermGroup const &h,
                                  bool require_normal = true);

struct StructureFlags
{
  bool is_solvable = false;
  bool is_nilpotent = false;
  /// Length of the derived series; nullopt for non-solvable groups.
  std::optional<std::size_t> derived_length;
};

StructureFlags structure_flags(PermGroup const &group);
bool is_solvable(PermGroup const &group);
bool is_nilpotent(PermGroup const &group);

/// All normal subgroups, sorted by order. Memoized.
std::vector<PermGroup> const &normal_subgroups(PermGroup const &group);

/// Largest normal sigma-subgroup.
PermGroup o_sigma(PermGroup const &group, PrimeSet const &sigma);

/// Orders of the factors of a chief series (top to bottom).
std::vector<std::uint64_t> chief_factor_orders(PermGroup const &group);
bool is_sigma_separable(PermGroup const &group, PrimeSet const &sigma);

/// A subgroup of order |G|_sigma, if one exists (lattice search).
std::optional<PermGroup> find_hall_subgroup(PermGroup const &group, PrimeSet const &sigma);
/// Same, but a missing Hall subgroup is an InternalConsistencyError.
PermGroup hall_sigma_subgroup(PermGroup const &group, PrimeSet const &sigma);

bool is_sigma_group(PermGroup const &group, PrimeSet const &sigma);

/// All elements of `group` (bounded by limits().enumeration_bound).
std::vector<Perm> const &enumerated_elements(PermGroup const &group);

} // namespace nilweight
