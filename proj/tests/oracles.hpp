#pragma once

// Brute-force reference implementations used only by the tests. They work
// on plain element lists and never touch the stabilizer chain, the cached
// class data or the subgroup lattice.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "nilweight/perm.hpp"

namespace oracle
{

using nilweight::Perm;
using ElementList = std::vector<Perm>;
using Subset = std::set<Perm>;

inline ElementList closure(std::size_t degree, std::vector<Perm> const &gens)
{
  std::set<Perm> seen{Perm(degree)};
  std::deque<Perm> queue{Perm(degree)};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (auto const &g : gens) {
      Perm y = x * g;
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

inline Perm conj(Perm const &x, Perm const &g) { return g.inverse() * x * g; }

/// Conjugacy classes as sorted member sets.
inline std::vector<Subset> classes(ElementList const &group)
{
  std::vector<Subset> out;
  Subset done;
  for (auto const &x : group) {
    if (done.count(x))
      continue;
    Subset cls;
    for (auto const &g : group)
      cls.insert(conj(x, g));
    done.insert(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

inline Subset conj(Subset const &h, Perm const &g)
{
  Subset res;
  for (auto const &x : h)
    res.insert(conj(x, g));
  return res;
}

inline Subset normalizer(ElementList const &group, Subset const &h)
{
  Subset res;
  for (auto const &g : group)
    if (conj(h, g) == h)
      res.insert(g);
  return res;
}

inline Subset centralizer(ElementList const &group, Perm const &x)
{
  Subset res;
  for (auto const &g : group)
    if (x * g == g * x)
      res.insert(g);
  return res;
}

inline Subset generated(std::size_t degree, Subset const &gens)
{
  auto c = closure(degree, {gens.begin(), gens.end()});
  return {c.begin(), c.end()};
}

/// Every subgroup: close the set of cyclic subgroups under pairwise joins.
inline std::set<Subset> all_subgroups(std::size_t degree, ElementList const &group)
{
  std::set<Subset> subs;
  for (auto const &x : group)
    subs.insert(generated(degree, {x}));
  std::vector<Subset> frontier(subs.begin(), subs.end());
  std::vector<Subset> cyclic = frontier;
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (auto const &h : frontier)
      for (auto const &c : cyclic) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end()))
          continue;
        Subset gens = h;
        gens.insert(c.begin(), c.end());
        Subset j = generated(degree, gens);
        if (subs.insert(j).second)
          next.push_back(j);
      }
    frontier = std::move(next);
  }
  return subs;
}

/// Conjugacy classes of subgroups as (order, class size) pairs, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>>
subgroup_class_shape(ElementList const &group, std::set<Subset> const &subs)
{
  std::vector<std::pair<std::size_t, std::size_t>> shape;
  std::set<Subset> done;
  for (auto const &h : subs) {
    if (done.count(h))
      continue;
    std::set<Subset> orbit;
    for (auto const &g : group)
      orbit.insert(conj(h, g));
    done.insert(orbit.begin(), orbit.end());
    shape.emplace_back(h.size(), orbit.size());
  }
  std::sort(shape.begin(), shape.end());
  return shape;
}

inline bool is_subgroup(Subset const &h)
{
  for (auto const &a : h)
    for (auto const &b : h)
      if (!h.count(a * b.inverse()))
        return false;
  return !h.empty();
}

} // namespace oracle
