#include "nilweight/subgroup_lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>
#include <unordered_set>

#include <boost/functional/hash.hpp>

#include "nilweight/errors.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/limits.hpp"

namespace nilweight
{

std::size_t ElementSet::count() const
{
  std::size_t c = 0;
  for (auto w : _words)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::subset_of(ElementSet const &other) const
{
  for (std::size_t i = 0; i < _words.size(); ++i)
    if (_words[i] & ~other._words[i])
      return false;
  return true;
}

std::vector<std::uint32_t> ElementSet::indices() const
{
  std::vector<std::uint32_t> res;
  for (std::size_t w = 0; w < _words.size(); ++w) {
    auto bits = _words[w];
    while (bits) {
      auto b = static_cast<std::uint32_t>(std::countr_zero(bits));
      res.push_back(static_cast<std::uint32_t>(w * 64) + b);
      bits &= bits - 1;
    }
  }
  return res;
}

bool ElementSet::lex_less(ElementSet const &other) const
{
  for (std::size_t w = 0; w < _words.size(); ++w) {
    auto diff = _words[w] ^ other._words[w];
    if (diff) {
      auto bit = std::countr_zero(diff);
      return (_words[w] >> bit) & 1u;
    }
  }
  return false;
}

std::size_t ElementSet::hash() const { return boost::hash_range(_words.begin(), _words.end()); }

SubgroupLattice::SubgroupLattice(PermGroup const &group) : _group(group)
{
  check_bound(group.size(), limits().lattice_bound, "subgroup lattice");
  auto const &elements = group.elements();
  _n = elements.size();

  _table.resize(_n * _n);
  for (std::size_t a = 0; a < _n; ++a)
    for (std::size_t b = 0; b < _n; ++b)
      _table[a * _n + b] = *group.index_of(elements[a] * elements[b]);
  _inverse.resize(_n);
  _orders.resize(_n);
  for (std::size_t a = 0; a < _n; ++a) {
    _inverse[a] = *group.index_of(elements[a].inverse());
    _orders[a] = elements[a].order();
  }

  // Cyclic subgroups of prime-power order; every subgroup is generated by them.
  std::vector<std::pair<ElementSet, std::uint32_t>> cyclics;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (std::uint32_t x = 1; x < _n; ++x) {
      if (prime_factors(_orders[x]).size() != 1)
        continue;
      std::uint32_t gen[] = {x};
      auto c = generate(gen);
      if (seen.insert(c).second)
        cyclics.emplace_back(std::move(c), x);
    }
  }

  struct Raw
  {
    ElementSet canonical;
    std::vector<std::uint32_t> generators; // of the canonical member
    std::vector<ElementSet> orbit;
  };
  std::vector<Raw> raw;

  auto add_class = [&](ElementSet const &k, std::vector<std::uint32_t> const &gens) {
    Raw r;
    std::unordered_set<ElementSet, ElementSetHash> orbit;
    ElementSet best = k;
    std::uint32_t best_g = 0;
    for (std::uint32_t g = 0; g < _n; ++g) {
      auto c = conjugate(k, g);
      if (c.lex_less(best)) {
        best = c;
        best_g = g;
      }
      orbit.insert(std::move(c));
    }
    r.canonical = best;
    for (auto s : gens)
      r.generators.push_back(conjugate(s, best_g));
    auto id = raw.size();
    for (auto const &m : orbit)
      _class_of.emplace(m, id);
    r.orbit.assign(orbit.begin(), orbit.end());
    std::sort(r.orbit.begin(), r.orbit.end(),
              [](ElementSet const &a, ElementSet const &b) { return a.lex_less(b); });
    raw.push_back(std::move(r));
  };

  std::uint32_t identity_pos = 0;
  add_class(generate(std::span<std::uint32_t const>(&identity_pos, 1)), {});
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (auto const &[cyc, z] : cyclics) {
      if (cyc.subset_of(raw[i].canonical))
        continue;
      auto gens = raw[i].generators;
      gens.push_back(z);
      auto k = generate(gens);
      if (_class_of.count(k))
        continue;
      add_class(k, gens);
    }
  }

  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    auto oa = raw[a].canonical.count(), ob = raw[b].canonical.count();
    auto sa = raw[a].orbit.size(), sb = raw[b].orbit.size();
    if (std::tie(oa, sa) != std::tie(ob, sb))
      return std::tie(oa, sa) < std::tie(ob, sb);
    return raw[a].canonical.lex_less(raw[b].canonical);
  });

  std::vector<std::size_t> new_id(raw.size());
  for (std::size_t k = 0; k < perm.size(); ++k)
    new_id[perm[k]] = k;
  for (auto &[set, id] : _class_of)
    id = new_id[id];

  for (std::size_t k = 0; k < perm.size(); ++k) {
    Raw &r = raw[perm[k]];
    SubgroupClass cls;
    cls.index = k;
    cls.order = r.canonical.count();
    cls.class_size = r.orbit.size();
    cls.elements = r.canonical;
    if (cls.order == _n) {
      cls.representative = group;
    } else {
      std::vector<Perm> gens;
      for (auto s : r.generators)
        gens.push_back(elements[s]);
      cls.representative = PermGroup(group.degree(), std::move(gens));
    }
    if (cls.representative.size() != cls.order)
      throw InternalConsistencyError("subgroup lattice: generator order mismatch");
    cls.nilpotent = nilpotent_by_sylow_count(cls.elements, cls.order);
    cls.solvable = is_solvable(cls.representative);
    _objects.emplace(cls.elements, cls.representative);
    _classes.push_back(std::move(cls));
    _orbits.push_back(std::move(r.orbit));
  }
}

bool SubgroupLattice::nilpotent_by_sylow_count(ElementSet const &h, std::uint64_t order) const
{
  // Nilpotent iff, for every prime p, the p-elements number exactly |H|_p.
  for (auto p : prime_factors(order)) {
    std::uint64_t count = 0;
    for (auto x : h.indices())
      if (PrimeSet{p}.is_sigma_number(_orders[x]))
        ++count;
    if (count != sigma_part(order, PrimeSet{p}))
      return false;
  }
  return true;
}

ElementSet SubgroupLattice::generate(std::span<std::uint32_t const> generators) const
{
  ElementSet set(_n);
  std::vector<std::uint32_t> members{0};
  set.insert(0);
  for (std::size_t k = 0; k < members.size(); ++k)
    for (auto s : generators) {
      auto y = multiply(members[k], s);
      if (!set.contains(y)) {
        set.insert(y);
        members.push_back(y);
      }
    }
  return set;
}

ElementSet SubgroupLattice::conjugate(ElementSet const &h, std::uint32_t g) const
{
  ElementSet res(_n);
  for (auto x : h.indices())
    res.insert(conjugate(x, g));
  return res;
}

std::uint32_t SubgroupLattice::position(Perm const &g) const
{
  auto pos = _group.index_of(g);
  if (!pos)
    throw PreconditionError("element " + g.to_string() + " is not in the group");
  return *pos;
}

ElementSet SubgroupLattice::element_set(PermGroup const &h) const
{
  std::vector<std::uint32_t> gens;
  for (auto const &s : h.generators())
    gens.push_back(position(s));
  return generate(gens);
}

std::size_t SubgroupLattice::class_of(ElementSet const &h) const
{
  auto it = _class_of.find(h);
  if (it == _class_of.end())
    throw InternalConsistencyError("subgroup missing from the lattice");
  return it->second;
}

std::size_t SubgroupLattice::class_of(PermGroup const &h) const { return class_of(element_set(h)); }

std::vector<std::uint32_t> SubgroupLattice::generator_positions(ElementSet const &h) const
{
  // Greedy generating set in increasing position order.
  std::vector<std::uint32_t> gens;
  ElementSet span(_n);
  span.insert(0);
  for (auto x : h.indices()) {
    if (span.contains(x))
      continue;
    gens.push_back(x);
    span = generate(gens);
  }
  return gens;
}

PermGroup SubgroupLattice::subgroup(ElementSet const &h) const
{
  {
    std::lock_guard lock(_mutex);
    auto it = _objects.find(h);
    if (it != _objects.end())
      return it->second;
  }
  std::vector<Perm> gens;
  for (auto x : generator_positions(h))
    gens.push_back(_group.elements()[x]);
  PermGroup object(_group.degree(), std::move(gens));
  std::lock_guard lock(_mutex);
  return _objects.emplace(h, object).first->second;
}

ElementSet SubgroupLattice::normalizer(ElementSet const &h) const
{
  auto gens = generator_positions(h);
  ElementSet res(_n);
  for (std::uint32_t g = 0; g < _n; ++g) {
    bool normalizes = true;
    for (auto s : gens)
      if (!h.contains(conjugate(s, g))) {
        normalizes = false;
        break;
      }
    if (normalizes)
      res.insert(g);
  }
  return res;
}

PermGroup SubgroupLattice::normalizer(std::size_t cls) const
{
  {
    std::lock_guard lock(_mutex);
    auto it = _normalizers.find(cls);
    if (it != _normalizers.end())
      return it->second;
  }
  auto n = subgroup(normalizer(_classes[cls].elements));
  std::lock_guard lock(_mutex);
  return _normalizers.emplace(cls, n).first->second;
}

SubgroupLattice const &subgroup_lattice(PermGroup const &group)
{
  return *group.memo<SubgroupLattice>(
      0, [&] { return std::make_shared<SubgroupLattice const>(group); });
}

std::vector<SubgroupClass> const &subgroup_classes(PermGroup const &group)
{
  return subgroup_lattice(group).classes();
}

std::vector<SubgroupClass> nilpotent_sigma_subgroup_classes(PermGroup const &group,
                                                            PrimeSet const &sigma)
{
  std::vector<SubgroupClass> res;
  for (auto const &cls : subgroup_classes(group))
    if (cls.nilpotent && cls.is_sigma_group(sigma))
      res.push_back(cls);
  return res;
}

SubgroupClass carter_subgroups(PermGroup const &group)
{
  if (!is_solvable(group))
    throw PreconditionError("Carter subgroups requested for a non-solvable group");
  std::vector<SubgroupClass> found;
  for (auto const &cls : subgroup_classes(group))
    if (cls.nilpotent && cls.class_size * cls.order == group.size())
      found.push_back(cls);
  if (found.size() != 1)
    throw InternalConsistencyError("found " + std::to_string(found.size()) +
                                   " classes of Carter subgroups");
  return found.front();
}

bool is_carter_in(PermGroup const &r, PermGroup const &q)
{
  if (!r.is_subgroup_of(q))
    throw PreconditionError("is_carter_in: R is not contained in Q");
  return is_nilpotent(r) && normalizer(q, r).size() == r.size();
}

std::vector<SubgroupClass> carter_fiber(PermGroup const &group, PrimeSet const &sigma,
                                        PermGroup const &r)
{
  if (!is_nilpotent(r))
    throw PreconditionError("carter_fiber: R is not nilpotent");
  if (sigma_part(r.size(), sigma) != 1)
    throw PreconditionError("carter_fiber: R is not a " + sigma.to_string() + "'-group");
  auto const &lattice = subgroup_lattice(group);
  auto r_set = lattice.element_set(r);
  auto r_gens = r_set.indices();

  std::vector<SubgroupClass> res;
  for (auto const &cls : lattice.classes()) {
    if (sigma_part(cls.order, sigma) != 1 || cls.order % r.size() != 0)
      continue;
    for (auto const &member : lattice.conjugates(cls.index)) {
      if (!r_set.subset_of(member))
        continue;
      std::size_t normalizing = 0;
      for (auto x : member.indices()) {
        bool ok = true;
        for (auto s : r_gens)
          if (!r_set.contains(lattice.conjugate(s, x))) {
            ok = false;
            break;
          }
        normalizing += ok;
      }
      if (normalizing == r.size()) {
        SubgroupClass hit = cls;
        hit.elements = member;
        hit.representative = lattice.subgroup(member);
        res.push_back(std::move(hit));
        break;
      }
    }
  }
  return res;
}

} // namespace nilweight
