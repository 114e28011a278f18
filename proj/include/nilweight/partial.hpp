#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nilweight/characters.hpp"
#include "nilweight/cyclotomic.hpp"
#include "nilweight/perm_group.hpp"
#include "nilweight/primes.hpp"
#include "nilweight/subgroup_lattice.hpp"

namespace nilweight
{

/// Values on the sigma-element classes of a group, in the order of
/// sigma_class_indices(group, sigma).
using PartialValues = std::vector<Cyclotomic>;

/// An irreducible sigma-partial character: the restriction of an ordinary
/// character to the elements of sigma-order that is not a sum of two such.
struct PartialCharacter
{
  PermGroup group;
  PrimeSet sigma;
  std::size_t index = 0; // position in sigma_partial_characters(group, sigma)
  PartialValues values;
  std::vector<std::size_t> lifts;    // rows of character_table(group) restricting to this
  std::optional<std::size_t> vertex; // class in subgroup_lattice(group)

  std::int64_t degree() const { return values.front().integer(); }
};

/// I_sigma(G), sorted by degree and then by the first lift in the
/// character table. Memoized per (G, sigma).
/// Throws PreconditionError unless G is sigma-separable.
std::vector<PartialCharacter> const &sigma_partial_characters(PermGroup const &group,
                                                              PrimeSet const &sigma);

/// I_sigma(G) with every vertex filled in. Memoized per (G, sigma).
std::vector<PartialCharacter> const &partial_characters_with_vertices(PermGroup const &group,
                                                                      PrimeSet const &sigma);

PartialValues sigma_restriction(ClassFunction const &chi, PrimeSet const &sigma);

/// Multiplicities of I_sigma(G) in a partial character given by values;
/// InternalConsistencyError if they are not nonnegative integers.
std::vector<std::int64_t> decompose_partial(PermGroup const &group, PrimeSet const &sigma,
                                            PartialValues const &values);

/// Position of the member of I_sigma(G) with these values, if any.
std::optional<std::size_t> find_partial(PermGroup const &group, PrimeSet const &sigma,
                                        PartialValues const &values);

/// Values of phi on the sigma-classes of a subgroup h.
PartialValues restrict_partial(PartialCharacter const &phi, PermGroup const &h);
/// phi_H as (index in I_sigma(H), multiplicity) pairs with positive multiplicity.
std::vector<std::pair<std::size_t, std::int64_t>> decompose_on_subgroup(PartialCharacter const &phi,
                                                                        PermGroup const &h);

/// Induction of a partial class function of u (u <= group).
PartialValues induce_partial(PermGroup const &u, PrimeSet const &sigma, PartialValues const &values,
                             PermGroup const &group);

/// True iff theta (a member of I_sigma(N)) is a constituent of phi_N.
bool lies_over(PartialCharacter const &phi, PartialCharacter const &theta);

/// Position in I_sigma(N) of theta^g, where g normalizes N: theta^g(x) = theta(g x g^-1).
std::size_t conjugate_partial(PartialCharacter const &theta, Perm const &g);

/// Stabilizer in `group` of theta in I_sigma(N), N normal in group.
PermGroup partial_stabilizer(PermGroup const &group, PartialCharacter const &theta);

/// The unique mu in I_sigma(G_theta | theta) with mu^G = phi.
/// Throws PreconditionError if theta does not lie under phi.
PartialCharacter clifford_correspondent(PartialCharacter const &phi, PartialCharacter const &theta);

/// The vertex class of a member of I_sigma(G).
SubgroupClass const &vertex(PartialCharacter const &phi);

/// Members of I_sigma(G) with q in their vertex class, optionally only
/// those lying over theta in I_sigma(N) for some N normal in G.
std::vector<PartialCharacter> ipi_with_vertex(PermGroup const &group, PrimeSet const &sigma,
                                              PermGroup const &q,
                                              PartialCharacter const *over = nullptr);

} // namespace nilweight
