#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nilweight/group_ops.hpp"
#include "nilweight/perm_group.hpp"
#include "nilweight/primes.hpp"

namespace nilweight
{

/// N_G(Q) together with its action on the cosets of Q.
struct NormalizerQuotient
{
  PermGroup normalizer;
  CosetAction action; // action.image() is N_G(Q)/Q
};

/// The quotient for a class representative of subgroup_lattice(group).
/// Memoized.
NormalizerQuotient const &normalizer_quotient(PermGroup const &group, std::size_t q_class);

/// A weight (Q, gamma): Q a sigma-subgroup, gamma an irreducible character
/// of N_G(Q)/Q of p-defect zero for every p in sigma.
struct Weight
{
  std::size_t q_class = 0; // in subgroup_lattice(group)
  PermGroup q;
  std::shared_ptr<NormalizerQuotient const> quotient;
  std::size_t gamma = 0; // row of character_table(quotient->action.image())
  std::int64_t gamma_degree = 0;
};

/// One weight per G-class of pairs, ordered by the class of Q and then by
/// gamma. Memoized per (G, sigma, nilpotent_only).
std::vector<Weight> const &enumerate_weights(PermGroup const &group, PrimeSet const &sigma,
                                             bool nilpotent_only);

/// Number of sigma-weights with first component in the class of q.
std::size_t weights_with_first_component(PermGroup const &group, PrimeSet const &sigma,
                                         PermGroup const &q);

} // namespace nilweight
