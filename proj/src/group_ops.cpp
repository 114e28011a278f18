#include "nilweight/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <tuple>

#include "nilweight/errors.hpp"
#include "nilweight/limits.hpp"
#include "nilweight/subgroup_lattice.hpp"

namespace nilweight
{

namespace
{

constexpr std::uint32_t unassigned = std::numeric_limits<std::uint32_t>::max();

struct NormalLattice
{
  std::vector<PermGroup> groups;
  std::vector<std::vector<bool>> class_sets;
};

std::vector<bool> class_set(PermGroup const &group, PermGroup const &n)
{
  auto const &cd = class_data(group);
  std::vector<bool> key(cd.size());
  for (std::size_t c = 0; c < cd.size(); ++c)
    key[c] = n.contains(cd.classes[c].representative);
  return key;
}

bool subset(std::vector<bool> const &a, std::vector<bool> const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i])
      return false;
  return true;
}

NormalLattice const &normal_lattice(PermGroup const &group)
{
  return *group.memo<NormalLattice>(0, [&] {
    auto const &cd = class_data(group);
    auto lattice = std::make_shared<NormalLattice>();
    PermGroup trivial(group.degree());
    lattice->groups.push_back(trivial);
    lattice->class_sets.push_back(class_set(group, trivial));
    for (std::size_t i = 0; i < lattice->groups.size(); ++i) {
      for (std::size_t c = 0; c < cd.size(); ++c) {
        if (lattice->class_sets[i][c])
          continue;
        auto gens = lattice->groups[i].generators();
        gens.push_back(cd.classes[c].representative);
        PermGroup m = normal_closure(group, gens);
        auto key = class_set(group, m);
        if (std::find(lattice->class_sets.begin(), lattice->class_sets.end(), key) ==
            lattice->class_sets.end()) {
          lattice->groups.push_back(m);
          lattice->class_sets.push_back(std::move(key));
        }
      }
    }
    std::vector<std::size_t> order(lattice->groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      auto sa = lattice->groups[a].size();
      auto sb = lattice->groups[b].size();
      return std::tie(sa, lattice->class_sets[a]) < std::tie(sb, lattice->class_sets[b]);
    });
    auto sorted = std::make_shared<NormalLattice>();
    for (auto i : order) {
      sorted->groups.push_back(lattice->groups[i]);
      sorted->class_sets.push_back(lattice->class_sets[i]);
    }
    return std::shared_ptr<NormalLattice const>(sorted);
  });
}

} // anonymous namespace

ClassData const &class_data(PermGroup const &group)
{
  return *group.memo<ClassData>(0, [&] {
    auto const &elements = group.elements();
    std::size_t n = elements.size();
    std::vector<Perm> gens;
    for (auto const &g : group.generators())
      if (!g.is_identity())
        gens.push_back(g);

    std::vector<std::uint32_t> raw_class(n, unassigned);
    std::vector<ConjClass> raw;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (raw_class[i] != unassigned)
        continue;
      auto id = static_cast<std::uint32_t>(raw.size());
      ConjClass cls;
      cls.representative = elements[i];
      cls.element_order = elements[i].order();
      raw_class[i] = id;
      cls.members.push_back(i);
      for (std::size_t k = 0; k < cls.members.size(); ++k) {
        Perm const &x = elements[cls.members[k]];
        for (auto const &s : gens) {
          auto j = *group.index_of(conjugate(x, s));
          if (raw_class[j] == unassigned) {
            raw_class[j] = id;
            cls.members.push_back(j);
          }
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      cls.size = cls.members.size();
      raw.push_back(std::move(cls));
    }

    std::vector<std::size_t> perm(raw.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(raw[a].element_order, raw[a].size, raw[a].representative) <
             std::tie(raw[b].element_order, raw[b].size, raw[b].representative);
    });

    auto data = std::make_shared<ClassData>();
    std::vector<std::uint32_t> new_id(raw.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
      new_id[perm[k]] = static_cast<std::uint32_t>(k);
      data->classes.push_back(std::move(raw[perm[k]]));
    }
    data->class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      data->class_of[i] = new_id[raw_class[i]];

    for (auto const &cls : data->classes) {
      Perm const &rep = cls.representative;
      data->inverse_class.push_back(data->class_of[*group.index_of(rep.inverse())]);
      std::vector<std::uint32_t> powers;
      Perm power = group.identity();
      for (std::uint64_t j = 0; j < cls.element_order; ++j) {
        powers.push_back(data->class_of[*group.index_of(power)]);
        power *= rep;
      }
      data->power_class.push_back(std::move(powers));
    }
    return std::shared_ptr<ClassData const>(data);
  });
}

std::vector<ConjClass> const &conjugacy_classes(PermGroup const &group)
{
  return class_data(group).classes;
}

std::uint32_t class_index(PermGroup const &group, Perm const &g)
{
  auto pos = group.index_of(g);
  if (!pos)
    throw PreconditionError("element " + g.to_string() + " is not in the group");
  return class_data(group).class_of[*pos];
}

std::vector<std::size_t> sigma_class_indices(PermGroup const &group, PrimeSet const &sigma)
{
  std::vector<std::size_t> res;
  auto const &classes = conjugacy_classes(group);
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (sigma.is_sigma_number(classes[c].element_order))
      res.push_back(c);
  return res;
}

std::vector<ConjClass> sigma_element_classes(PermGroup const &group, PrimeSet const &sigma)
{
  std::vector<ConjClass> res;
  auto const &classes = conjugacy_classes(group);
  for (auto c : sigma_class_indices(group, sigma))
    res.push_back(classes[c]);
  return res;
}

std::vector<Perm> const &enumerated_elements(PermGroup const &group)
{
  check_bound(group.size(), limits().enumeration_bound, "element enumeration");
  return group.elements();
}

PermGroup centralizer(PermGroup const &group, Perm const &g)
{
  if (!group.contains(g))
    throw PreconditionError("centralizer: element " + g.to_string() + " is not in the group");
  std::vector<Perm> members;
  for (auto const &x : enumerated_elements(group))
    if (x * g == g * x)
      members.push_back(x);
  return subgroup_from_elements(group.degree(), members);
}

PermGroup centralizer(PermGroup const &group, PermGroup const &h)
{
  std::vector<Perm> members;
  for (auto const &x : enumerated_elements(group)) {
    bool commutes = true;
    for (auto const &s : h.generators())
      if (x * s != s * x) {
        commutes = false;
        break;
      }
    if (commutes)
      members.push_back(x);
  }
  return subgroup_from_elements(group.degree(), members);
}

PermGroup normalizer(PermGroup const &group, PermGroup const &h)
{
  if (!h.is_subgroup_of(group))
    throw PreconditionError("normalizer: not a subgroup");
  std::vector<Perm> members;
  for (auto const &x : enumerated_elements(group)) {
    bool normalizes = true;
    for (auto const &s : h.generators())
      if (!h.contains(conjugate(s, x))) {
        normalizes = false;
        break;
      }
    if (normalizes)
      members.push_back(x);
  }
  return subgroup_from_elements(group.degree(), members);
}

bool is_normal(PermGroup const &group, PermGroup const &h)
{
  if (!h.is_subgroup_of(group))
    return false;
  for (auto const &g : group.generators())
    for (auto const &s : h.generators())
      if (!h.contains(conjugate(s, g)))
        return false;
  return true;
}

PermGroup conjugate(PermGroup const &h, Perm const &g)
{
  std::vector<Perm> gens;
  for (auto const &s : h.generators())
    gens.push_back(conjugate(s, g));
  return PermGroup(h.degree(), std::move(gens));
}

PermGroup normal_closure(PermGroup const &group, std::vector<Perm> const &elements)
{
  PermGroup k(group.degree(), elements);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto const &s : k.generators()) {
      for (auto const &g : group.generators()) {
        Perm c = conjugate(s, g);
        if (!k.contains(c)) {
          auto gens = k.generators();
          gens.push_back(c);
          k = PermGroup(group.degree(), std::move(gens));
          grew = true;
          break;
        }
      }
      if (grew)
        break;
    }
  }
  return k;
}

PermGroup commutator_subgroup(PermGroup const &group, PermGroup const &a, PermGroup const &b)
{
  std::vector<Perm> comms;
  for (auto const &x : a.generators())
    for (auto const &y : b.generators()) {
      Perm c = commutator(x, y);
      if (!c.is_identity())
        comms.push_back(c);
    }
  return normal_closure(group, comms);
}

PermGroup derived_subgroup(PermGroup const &group)
{
  return commutator_subgroup(group, group, group);
}

StructureFlags structure_flags(PermGroup const &group)
{
  return *group.memo<StructureFlags>(0, [&] {
    auto flags = std::make_shared<StructureFlags>();
    PermGroup current = group;
    std::size_t length = 0;
    while (!current.is_trivial()) {
      PermGroup next = derived_subgroup(current);
      if (next.order() == current.order())
        break;
      current = next;
      ++length;
    }
    flags->is_solvable = current.is_trivial();
    if (flags->is_solvable)
      flags->derived_length = length;

    current = group;
    while (!current.is_trivial()) {
      PermGroup next = commutator_subgroup(group, current, group);
      if (next.order() == current.order())
        break;
      current = next;
    }
    flags->is_nilpotent = current.is_trivial();
    return std::shared_ptr<StructureFlags const>(flags);
  });
}

bool is_solvable(PermGroup const &group) { return structure_flags(group).is_solvable; }
bool is_nilpotent(PermGroup const &group) { return structure_flags(group).is_nilpotent; }

CosetAction::CosetAction(PermGroup const &group, PermGroup const &h) : _group(group), _h(h)
{
  if (!h.is_subgroup_of(group))
    throw PreconditionError("coset action: not a subgroup");
  _h_elements = h.elements();
  Perm id = group.identity();
  _reps.push_back(id);
  _index.emplace(canonical(id), 0);
  for (std::size_t k = 0; k < _reps.size(); ++k) {
    for (auto const &s : group.generators()) {
      Perm next = _reps[k] * s;
      auto key = canonical(next);
      if (_index.emplace(key, _reps.size()).second)
        _reps.push_back(next);
    }
  }
  std::vector<Perm> image_gens;
  for (auto const &s : group.generators())
    image_gens.push_back(image_of(s));
  _image = PermGroup(_reps.size(), std::move(image_gens));
}

Perm CosetAction::canonical(Perm const &g) const
{
  Perm best = _h_elements.front() * g;
  for (std::size_t i = 1; i < _h_elements.size(); ++i) {
    Perm c = _h_elements[i] * g;
    if (c < best)
      best = std::move(c);
  }
  return best;
}

std::size_t CosetAction::coset_of(Perm const &g) const
{
  auto it = _index.find(canonical(g));
  if (it == _index.end())
    throw PreconditionError("coset action: element outside the group");
  return it->second;
}

Perm CosetAction::image_of(Perm const &g) const
{
  std::vector<Point> images(_reps.size());
  for (std::size_t k = 0; k < _reps.size(); ++k)
    images[k] = static_cast<Point>(coset_of(_reps[k] * g));
  return Perm(std::move(images));
}

CosetAction coset_action_quotient(PermGroup const &group, PermGroup const &h, bool require_normal)
{
  if (require_normal && !is_normal(group, h))
    throw PreconditionError("quotient: subgroup is not normal");
  return CosetAction(group, h);
}

std::vector<PermGroup> const &normal_subgroups(PermGroup const &group)
{
  return normal_lattice(group).groups;
}

PermGroup o_sigma(PermGroup const &group, PrimeSet const &sigma)
{
  PermGroup current(group.degree());
  auto const &classes = conjugacy_classes(group);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto const &cls : classes) {
      if (!sigma.is_sigma_number(cls.element_order) || current.contains(cls.representative))
        continue;
      auto gens = current.generators();
      gens.push_back(cls.representative);
      PermGroup candidate = normal_closure(group, gens);
      if (sigma.is_sigma_number(candidate.size())) {
        current = candidate;
        grew = true;
      }
    }
  }
  return current;
}

std::vector<std::uint64_t> chief_factor_orders(PermGroup const &group)
{
  auto const &lattice = normal_lattice(group);
  std::vector<std::uint64_t> factors;
  std::size_t current = lattice.groups.size() - 1; // the whole group sorts last
  while (lattice.groups[current].size() > 1) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < lattice.groups.size(); ++i) {
      if (i == current || lattice.groups[i].size() >= lattice.groups[current].size())
        continue;
      if (!subset(lattice.class_sets[i], lattice.class_sets[current]))
        continue;
      if (!best || lattice.groups[i].size() > lattice.groups[*best].size())
        best = i;
    }
    factors.push_back(lattice.groups[current].size() / lattice.groups[*best].size());
    current = *best;
  }
  return factors;
}

bool is_sigma_separable(PermGroup const &group, PrimeSet const &sigma)
{
  for (auto f : chief_factor_orders(group))
    if (!sigma.is_sigma_number(f) && sigma_part(f, sigma) != 1)
      return false;
  return true;
}

bool is_sigma_group(PermGroup const &group, PrimeSet const &sigma)
{
  return sigma.is_sigma_number(group.size());
}

std::optional<PermGroup> find_hall_subgroup(PermGroup const &group, PrimeSet const &sigma)
{
  std::uint64_t target = sigma_part(group.size(), sigma);
  if (target == group.size())
    return group;
  if (target == 1)
    return PermGroup(group.degree());
  auto const &lattice = subgroup_lattice(group);
  for (auto const &cls : lattice.classes())
    if (cls.order == target)
      return cls.representative;
  return std::nullopt;
}

PermGroup hall_sigma_subgroup(PermGroup const &group, PrimeSet const &sigma)
{
  auto h = find_hall_subgroup(group, sigma);
  if (!h)
    throw InternalConsistencyError("no Hall " + sigma.to_string() + "-subgroup found");
  return *h;
}

} // namespace nilweight
