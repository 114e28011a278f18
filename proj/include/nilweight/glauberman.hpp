#pragma once

#include <cstddef>
#include <vector>

#include "nilweight/perm_group.hpp"

namespace nilweight
{

/// A coprime action of a solvable group S on a group G, both realized
/// inside a common permutation group with S normalizing G.
struct GlaubermanAction
{
  PermGroup overgroup; // <G, S>
  PermGroup acted;     // G
  PermGroup acting;    // S
  PermGroup fixed;     // C_G(S)
};

/// Validates the action: S normalizes G, gcd(|S|, |G|) = 1, S solvable.
/// Throws PreconditionError otherwise.
GlaubermanAction make_glauberman_action(PermGroup const &acted, PermGroup const &acting);

/// Row of character_table(g) holding chi^s, where chi^s(x) = chi(s x s^-1)
/// and s normalizes g.
std::size_t conjugate_character(PermGroup const &g, std::size_t chi, Perm const &s);

/// Rows of character_table(acted) fixed by the acting group.
std::vector<std::size_t> invariant_characters(GlaubermanAction const &action);

/// Composition series S = S_0 > S_1 > ... > S_r = 1 of a solvable group,
/// each step normal of prime index. At most `limit` series, in a fixed order.
std::vector<std::vector<PermGroup>> composition_series(PermGroup const &s, std::size_t limit = 8);

/// Row of character_table(action.fixed) corresponding to an invariant chi,
/// computed by descending the given series from its bottom: at each prime
/// step the unique constituent whose multiplicity is prime to p.
std::size_t glauberman_correspondent(GlaubermanAction const &action, std::size_t chi,
                                     std::vector<PermGroup> const &series);
std::size_t glauberman_correspondent(GlaubermanAction const &action, std::size_t chi);

/// The whole correspondence, indexed like invariant_characters(action).
/// Throws InternalConsistencyError if it is not a bijection onto Irr(C).
std::vector<std::size_t> glauberman_map(GlaubermanAction const &action);

} // namespace nilweight
