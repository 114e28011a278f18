#include "nilweight/perm_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "nilweight/errors.hpp"
#include "nilweight/limits.hpp"

namespace nilweight
{

namespace
{

struct Level
{
  Point base_point = 0;
  std::vector<Perm> generators;
  std::vector<int> orbit_position; // point -> index into orbit, or -1
  std::vector<Point> orbit;
  std::vector<Perm> transversal; // transversal[k] maps base_point to orbit[k]
};

/// Deterministic incremental Schreier-Sims.
class ChainBuilder
{
public:
  ChainBuilder(std::size_t degree, std::vector<Perm> const &generators) : _degree(degree)
  {
    choose_point_preference(generators);
    for (auto const &g : generators)
      if (!strip(g, 0).first.is_identity())
        extend(0, g);
  }

  std::vector<Level> take() { return std::move(_levels); }

private:
  // Points in larger generator orbits come first; ties by point.
  void choose_point_preference(std::vector<Perm> const &generators)
  {
    std::vector<std::size_t> component(_degree);
    std::iota(component.begin(), component.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (component[x] != x)
        x = component[x] = component[component[x]];
      return x;
    };
    for (auto const &g : generators)
      for (std::size_t x = 0; x < _degree; ++x)
        component[find(x)] = find(g[x]);
    std::vector<std::size_t> orbit_size(_degree, 0);
    for (std::size_t x = 0; x < _degree; ++x)
      ++orbit_size[find(x)];
    _preference.resize(_degree);
    std::iota(_preference.begin(), _preference.end(), Point{0});
    std::stable_sort(_preference.begin(), _preference.end(), [&](Point a, Point b) {
      return orbit_size[find(a)] > orbit_size[find(b)];
    });
  }

  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const
  {
    for (std::size_t i = from; i < _levels.size(); ++i) {
      auto const &level = _levels[i];
      int pos = level.orbit_position[g[level.base_point]];
      if (pos < 0)
        return {std::move(g), i};
      g *= level.transversal[static_cast<std::size_t>(pos)].inverse();
    }
    return {std::move(g), _levels.size()};
  }

  void add_level(Perm const &g)
  {
    Level level;
    for (auto p : _preference)
      if (g[p] != p) {
        level.base_point = p;
        break;
      }
    level.orbit_position.assign(_degree, -1);
    level.orbit_position[level.base_point] = 0;
    level.orbit.push_back(level.base_point);
    level.transversal.emplace_back(_degree);
    _levels.push_back(std::move(level));
  }

  // Precondition: g fixes the first i base points and does not sift to the
  // identity from level i.
  void extend(std::size_t i, Perm const &g)
  {
    if (i == _levels.size())
      add_level(g);

    _levels[i].generators.push_back(g);
    std::size_t old_size = _levels[i].orbit.size();

    for (std::size_t k = 0; k < _levels[i].orbit.size(); ++k) {
      for (auto const &s : _levels[i].generators) {
        Point img = s[_levels[i].orbit[k]];
        if (_levels[i].orbit_position[img] < 0) {
          _levels[i].orbit_position[img] = static_cast<int>(_levels[i].orbit.size());
          _levels[i].orbit.push_back(img);
          _levels[i].transversal.push_back(_levels[i].transversal[k] * s);
        }
      }
    }

    for (std::size_t k = 0; k < _levels[i].orbit.size(); ++k) {
      // Generators are copied: the recursion may reallocate _levels.
      std::vector<Perm> gens;
      if (k < old_size)
        gens.push_back(g);
      else
        gens = _levels[i].generators;
      for (auto const &s : gens) {
        Point img = s[_levels[i].orbit[k]];
        auto pos = static_cast<std::size_t>(_levels[i].orbit_position[img]);
        Perm schreier = _levels[i].transversal[k] * s * _levels[i].transversal[pos].inverse();
        auto [residue, depth] = strip(schreier, i + 1);
        if (!residue.is_identity())
          extend(i + 1, residue);
      }
    }
  }

  std::size_t _degree;
  std::vector<Point> _preference;
  std::vector<Level> _levels;
};

struct ElementIndex
{
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::uint32_t> position;
};

} // anonymous namespace

struct PermGroup::Impl
{
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Level> levels;
  std::vector<Point> base;
  std::vector<Perm> strong_generators;
  std::vector<std::size_t> orbit_lengths;
  BigInt order = 1;

  mutable std::once_flag elements_once;
  mutable std::unique_ptr<ElementIndex> element_index;

  mutable std::mutex memo_mutex;
  mutable std::map<std::pair<std::type_index, std::uint64_t>, std::shared_ptr<void const>> memos;
};

PermGroup::PermGroup() : PermGroup(0) {}

PermGroup::PermGroup(std::size_t degree) : PermGroup(degree, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
  : _impl(std::make_shared<Impl>())
{
  if (degree > std::numeric_limits<Point>::max())
    throw MalformedInput("degree too large");
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw MalformedInput("generator " + g.to_string() + " has degree " +
                           std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  _impl->degree = degree;
  std::vector<Perm> nontrivial;
  for (auto &g : generators)
    if (!g.is_identity())
      nontrivial.push_back(g);
  _impl->generators = std::move(generators);

  ChainBuilder builder(degree, nontrivial);
  _impl->levels = builder.take();
  for (auto const &level : _impl->levels) {
    _impl->base.push_back(level.base_point);
    _impl->orbit_lengths.push_back(level.orbit.size());
    _impl->order *= level.orbit.size();
    for (auto const &s : level.generators)
      if (std::find(_impl->strong_generators.begin(), _impl->strong_generators.end(), s) ==
          _impl->strong_generators.end())
        _impl->strong_generators.push_back(s);
  }
}

std::size_t PermGroup::degree() const { return _impl->degree; }
std::vector<Perm> const &PermGroup::generators() const { return _impl->generators; }
std::vector<Point> const &PermGroup::base() const { return _impl->base; }
std::vector<Perm> const &PermGroup::strong_generators() const { return _impl->strong_generators; }
std::vector<std::size_t> const &PermGroup::basic_orbit_lengths() const
{
  return _impl->orbit_lengths;
}
BigInt const &PermGroup::order() const { return _impl->order; }

std::uint64_t PermGroup::size() const
{
  if (_impl->order > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw ResourceError("group order " + _impl->order.str() + " does not fit a machine integer");
  return static_cast<std::uint64_t>(_impl->order);
}

Perm PermGroup::sift(Perm const &g) const
{
  if (g.degree() != degree())
    throw MalformedInput("degree mismatch: permutation of degree " + std::to_string(g.degree()) +
                         " tested against group of degree " + std::to_string(degree()));
  Perm h = g;
  for (auto const &level : _impl->levels) {
    int pos = level.orbit_position[h[level.base_point]];
    if (pos < 0)
      return h;
    h *= level.transversal[static_cast<std::size_t>(pos)].inverse();
  }
  return h;
}

bool PermGroup::contains(Perm const &g) const { return sift(g).is_identity(); }

std::vector<Perm> const &PermGroup::elements() const
{
  std::call_once(_impl->elements_once, [this] {
    check_bound(size(), limits().class_bound, "element enumeration");
    auto index = std::make_unique<ElementIndex>();
    std::vector<Perm> current{identity()};
    // g = u_{k-1} * ... * u_0 with u_i from the transversal of level i.
    for (auto it = _impl->levels.rbegin(); it != _impl->levels.rend(); ++it) {
      std::vector<Perm> next;
      next.reserve(current.size() * it->transversal.size());
      for (auto const &h : current)
        for (auto const &u : it->transversal)
          next.push_back(h * u);
      current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    index->position.reserve(current.size());
    for (std::uint32_t i = 0; i < current.size(); ++i)
      index->position.emplace(current[i], i);
    index->elements = std::move(current);
    _impl->element_index = std::move(index);
  });
  return _impl->element_index->elements;
}

std::optional<std::uint32_t> PermGroup::index_of(Perm const &g) const
{
  elements();
  auto it = _impl->element_index->position.find(g);
  if (it == _impl->element_index->position.end())
    return std::nullopt;
  return it->second;
}

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  if (other.degree() != degree())
    return false;
  for (auto const &g : generators())
    if (!other.contains(g))
      return false;
  return true;
}

bool PermGroup::same_group(PermGroup const &other) const
{
  return order() == other.order() && is_subgroup_of(other);
}

std::uint64_t PermGroup::exponent() const
{
  std::uint64_t e = 1;
  for (auto const &g : elements())
    e = std::lcm(e, g.order());
  return e;
}

std::shared_ptr<void const> PermGroup::memo_find(std::type_index type, std::uint64_t tag) const
{
  std::lock_guard lock(_impl->memo_mutex);
  auto it = _impl->memos.find({type, tag});
  return it == _impl->memos.end() ? nullptr : it->second;
}

std::shared_ptr<void const> PermGroup::memo_insert(std::type_index type, std::uint64_t tag,
                                                   std::shared_ptr<void const> value) const
{
  std::lock_guard lock(_impl->memo_mutex);
  auto [it, inserted] = _impl->memos.emplace(std::make_pair(type, tag), std::move(value));
  return it->second;
}

PermGroup bsgs_construct(std::size_t degree, std::span<Perm const> generators)
{
  return PermGroup(degree, std::vector<Perm>(generators.begin(), generators.end()));
}

bool membership_test(PermGroup const &group, Perm const &g) { return group.contains(g); }

PermGroup subgroup_from_elements(std::size_t degree, std::span<Perm const> elements)
{
  PermGroup h(degree);
  std::vector<Perm> gens;
  for (auto const &x : elements) {
    if (!h.contains(x)) {
      gens.push_back(x);
      h = PermGroup(degree, gens);
    }
  }
  if (h.size() != elements.size())
    throw PreconditionError("element list is not a subgroup");
  return h;
}

PermGroup join(PermGroup const &h, std::span<Perm const> extra)
{
  std::vector<Perm> gens = h.generators();
  for (auto const &x : extra)
    if (!h.contains(x))
      gens.push_back(x);
  if (gens.size() == h.generators().size())
    return h;
  return PermGroup(h.degree(), std::move(gens));
}

} // namespace nilweight
