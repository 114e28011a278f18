#include "nilweight/glauberman.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "nilweight/characters.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/subgroup_lattice.hpp"

namespace nilweight
{

namespace
{

/// C_G(S) as the lattice's shared object, so tables are computed once.
PermGroup fixed_subgroup(PermGroup const &g, PermGroup const &s)
{
  auto const &lat = subgroup_lattice(g);
  return lat.subgroup(lat.element_set(centralizer(g, s)));
}

} // anonymous namespace

GlaubermanAction make_glauberman_action(PermGroup const &acted, PermGroup const &acting)
{
  if (acted.degree() != acting.degree())
    throw PreconditionError("Glauberman action: groups of different degrees");
  if (std::gcd(acted.size(), acting.size()) != 1)
    throw PreconditionError("Glauberman action: non-coprime action (orders " +
                            std::to_string(acted.size()) + " and " +
                            std::to_string(acting.size()) + ")");
  for (auto const &s : acting.generators())
    for (auto const &x : acted.generators())
      if (!acted.contains(conjugate(x, s)))
        throw PreconditionError("Glauberman action: acting group does not normalize");
  if (!is_solvable(acting))
    throw PreconditionError("Glauberman action: acting group is not solvable");
  PermGroup over = join(acted, acting.generators());
  return {over, acted, acting, fixed_subgroup(acted, acting)};
}

std::size_t conjugate_character(PermGroup const &g, std::size_t chi, Perm const &s)
{
  auto const &table = character_table(g);
  auto const &cd = class_data(g);
  Perm s_inv = s.inverse();
  std::vector<Cyclotomic> values;
  for (auto const &cls : cd.classes) {
    Perm y = conjugate(cls.representative, s_inv);
    if (!g.contains(y))
      throw PreconditionError("conjugate_character: element does not normalize the group");
    values.push_back(table[chi].values[class_index(g, y)]);
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i].values == values)
      return i;
  throw InternalConsistencyError("conjugate of an irreducible character is not irreducible");
}

std::vector<std::size_t> invariant_characters(GlaubermanAction const &action)
{
  std::vector<std::size_t> inv;
  auto n = character_table(action.acted).size();
  for (std::size_t chi = 0; chi < n; ++chi) {
    bool fixed = true;
    for (auto const &s : action.acting.generators())
      fixed = fixed && conjugate_character(action.acted, chi, s) == chi;
    if (fixed)
      inv.push_back(chi);
  }
  return inv;
}

std::vector<std::vector<PermGroup>> composition_series(PermGroup const &s, std::size_t limit)
{
  if (!is_solvable(s))
    throw PreconditionError("composition_series: group is not solvable");
  auto const &lat = subgroup_lattice(s);
  std::vector<std::vector<PermGroup>> out;
  std::vector<ElementSet> chain;
  ElementSet top(s.size());
  for (std::uint32_t i = 0; i < s.size(); ++i)
    top.insert(i);

  std::function<void(ElementSet const &)> descend = [&](ElementSet const &cur) {
    if (out.size() >= limit)
      return;
    chain.push_back(cur);
    std::size_t order = cur.count();
    if (order == 1) {
      std::vector<PermGroup> series;
      for (auto const &e : chain)
        series.push_back(lat.subgroup(e));
      out.push_back(std::move(series));
    } else {
      auto cur_group = lat.subgroup(cur);
      std::vector<std::uint32_t> gens;
      for (auto const &g : cur_group.generators())
        gens.push_back(lat.position(g));
      for (auto const &cls : lat.classes()) {
        if (order % cls.order || !is_prime(order / cls.order))
          continue;
        for (auto const &t : lat.conjugates(cls.index)) {
          if (!t.subset_of(cur))
            continue;
          bool normal = std::all_of(gens.begin(), gens.end(),
                                    [&](std::uint32_t g) { return lat.conjugate(t, g) == t; });
          if (normal)
            descend(t);
        }
      }
    }
    chain.pop_back();
  };
  descend(top);
  return out;
}

std::size_t glauberman_correspondent(GlaubermanAction const &action, std::size_t chi,
                                     std::vector<PermGroup> const &series)
{
  if (series.empty() || !series.front().same_group(action.acting) || !series.back().is_trivial())
    throw PreconditionError("glauberman_correspondent: not a series of the acting group");
  PermGroup h = action.acted;
  std::size_t current = chi;
  for (std::size_t i = series.size() - 1; i-- > 0;) {
    std::uint64_t p = series[i].size() / series[i + 1].size();
    PermGroup f = fixed_subgroup(action.acted, series[i]);
    auto const &th = character_table(h);
    auto mult = decompose(restrict_character(th[current], f), character_table(f));
    std::vector<std::size_t> prime_to_p;
    for (std::size_t k = 0; k < mult.size(); ++k)
      if (mult[k] % static_cast<std::int64_t>(p))
        prime_to_p.push_back(k);
    if (prime_to_p.size() != 1)
      throw InternalConsistencyError("Glauberman step of order " + std::to_string(p) + ": " +
                                     std::to_string(prime_to_p.size()) +
                                     " constituents with multiplicity prime to p");
    current = prime_to_p.front();
    h = f;
  }
  return current;
}

std::size_t glauberman_correspondent(GlaubermanAction const &action, std::size_t chi)
{
  return glauberman_correspondent(action, chi, composition_series(action.acting, 1).front());
}

std::vector<std::size_t> glauberman_map(GlaubermanAction const &action)
{
  auto series = composition_series(action.acting, 1).front();
  std::vector<std::size_t> map;
  for (auto chi : invariant_characters(action))
    map.push_back(glauberman_correspondent(action, chi, series));
  std::set<std::size_t> image(map.begin(), map.end());
  if (image.size() != map.size() || image.size() != character_table(action.fixed).size())
    throw InternalConsistencyError("Glauberman correspondence is not a bijection");
  return map;
}

} // namespace nilweight
