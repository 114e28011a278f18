#include "nilweight/partial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <Eigen/Dense>

#include "nilweight/errors.hpp"
#include "nilweight/group_ops.hpp"

namespace nilweight
{

namespace
{

struct PartialSet
{
  std::vector<PartialCharacter> members;
};

struct VertexSet
{
  std::vector<PartialCharacter> members;
};

/// position[c] = index of class c among the sigma-classes, or -1.
std::vector<std::ptrdiff_t> sigma_positions(PermGroup const &group, PrimeSet const &sigma)
{
  std::vector<std::ptrdiff_t> pos(class_data(group).size(), -1);
  auto idx = sigma_class_indices(group, sigma);
  for (std::size_t i = 0; i < idx.size(); ++i)
    pos[idx[i]] = static_cast<std::ptrdiff_t>(i);
  return pos;
}

bool combination_matches(std::vector<PartialValues const *> const &basis,
                         std::vector<std::int64_t> const &coeffs, PartialValues const &target)
{
  for (std::size_t i = 0; i < target.size(); ++i) {
    Cyclotomic s;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (coeffs[j])
        s += Cyclotomic(coeffs[j]) * (*basis[j])[i];
    if (!(s == target[i]))
      return false;
  }
  return true;
}

/// Bounded search over nonnegative integer combinations, used only when the
/// basis is numerically rank deficient.
std::optional<std::vector<std::int64_t>>
search_combination(std::vector<PartialValues const *> const &basis, PartialValues const &target)
{
  std::int64_t degree = target.front().integer();
  std::vector<std::int64_t> coeffs(basis.size(), 0);
  std::function<bool(std::size_t, std::int64_t)> dfs = [&](std::size_t j, std::int64_t left) {
    if (j == basis.size())
      return left == 0 && combination_matches(basis, coeffs, target);
    std::int64_t d = basis[j]->front().integer();
    for (std::int64_t a = left / d; a >= 0; --a) {
      coeffs[j] = a;
      if (dfs(j + 1, left - a * d))
        return true;
    }
    coeffs[j] = 0;
    return false;
  };
  if (dfs(0, degree))
    return coeffs;
  return std::nullopt;
}

/// Nonnegative integer coefficients expressing target in the (linearly
/// independent) basis, certified by exact arithmetic.
std::optional<std::vector<std::int64_t>>
solve_combination(std::vector<PartialValues const *> const &basis, PartialValues const &target)
{
  auto rows = static_cast<Eigen::Index>(target.size());
  auto cols = static_cast<Eigen::Index>(basis.size());
  if (cols == 0) {
    bool zero = std::all_of(target.begin(), target.end(), [](auto const &v) { return v.is_zero(); });
    return zero ? std::optional(std::vector<std::int64_t>{}) : std::nullopt;
  }
  Eigen::MatrixXcd a(rows, cols);
  Eigen::VectorXcd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    b(i) = target[i].to_complex();
    for (Eigen::Index j = 0; j < cols; ++j)
      a(i, j) = (*basis[j])[i].to_complex();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  if (qr.rank() < cols)
    return search_combination(basis, target);
  Eigen::VectorXcd x = qr.solve(b);
  std::vector<std::int64_t> coeffs(basis.size());
  for (Eigen::Index j = 0; j < cols; ++j) {
    double re = x(j).real();
    double rounded = std::round(re);
    if (std::abs(re - rounded) > 1e-6 || std::abs(x(j).imag()) > 1e-6 || rounded < 0)
      return std::nullopt;
    coeffs[j] = static_cast<std::int64_t>(rounded);
  }
  if (!combination_matches(basis, coeffs, target))
    return std::nullopt;
  return coeffs;
}

std::vector<PartialCharacter> compute_partials(PermGroup const &group, PrimeSet const &sigma)
{
  if (!is_sigma_separable(group, sigma))
    throw PreconditionError("group of order " + group.order().str() + " is not " +
                            sigma.to_string() + "-separable");
  auto const &table = character_table(group);
  std::map<PartialValues, std::vector<std::size_t>> distinct;
  for (std::size_t i = 0; i < table.size(); ++i)
    distinct[sigma_restriction(table[i], sigma)].push_back(i);

  std::vector<std::pair<PartialValues, std::vector<std::size_t>>> candidates(distinct.begin(),
                                                                              distinct.end());
  std::stable_sort(candidates.begin(), candidates.end(), [](auto const &a, auto const &b) {
    auto da = a.first.front().integer(), db = b.first.front().integer();
    return da != db ? da < db : a.second.front() < b.second.front();
  });

  std::vector<PartialCharacter> irr;
  std::vector<PartialValues const *> basis;
  for (auto &[values, lifts] : candidates) {
    if (solve_combination(basis, values))
      continue;
    PartialCharacter phi{group, sigma, irr.size(), std::move(values), std::move(lifts), {}};
    irr.push_back(std::move(phi));
    basis.clear();
    for (auto const &p : irr)
      basis.push_back(&p.values);
  }

  auto expected = sigma_class_indices(group, sigma).size();
  if (irr.size() != expected)
    throw InternalConsistencyError("found " + std::to_string(irr.size()) +
                                   " irreducible partial characters but " +
                                   std::to_string(expected) + " " + sigma.to_string() +
                                   "-classes");
  return irr;
}

/// G-class of a Hall sigma'-subgroup of the representative of class `cls`.
std::size_t hall_complement_class(SubgroupLattice const &lat, std::size_t cls, PrimeSet const &sigma)
{
  auto const &u = lat[cls];
  std::uint64_t target = u.order / sigma_part(u.order, sigma);
  for (auto const &c : lat.classes()) {
    if (c.order != target)
      continue;
    for (auto const &member : lat.conjugates(c.index))
      if (member.subset_of(u.elements))
        return c.index;
  }
  throw InternalConsistencyError("no Hall complement in a subgroup of order " +
                                 std::to_string(u.order));
}

std::vector<PartialCharacter> compute_vertices(PermGroup const &group, PrimeSet const &sigma)
{
  auto members = sigma_partial_characters(group, sigma);
  auto const &lat = subgroup_lattice(group);
  std::uint64_t order = group.size();

  std::vector<std::size_t> order_u(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i)
    order_u[i] = i;
  auto cpart = [&](std::size_t i) { return lat[i].order / sigma_part(lat[i].order, sigma); };
  std::stable_sort(order_u.begin(), order_u.end(),
                   [&](std::size_t a, std::size_t b) { return cpart(a) > cpart(b); });

  for (auto cls : order_u) {
    PermGroup const &u = lat[cls].representative;
    std::optional<std::size_t> q;
    for (auto const &alpha : sigma_partial_characters(u, sigma)) {
      if (!sigma.is_sigma_number(static_cast<std::uint64_t>(alpha.degree())))
        continue;
      auto pos = find_partial(group, sigma, induce_partial(u, sigma, alpha.values, group));
      if (!pos)
        continue;
      if (!q)
        q = hall_complement_class(lat, cls, sigma);
      auto &phi = members[*pos];
      if (phi.vertex && *phi.vertex != *q)
        throw InternalConsistencyError("non-conjugate vertices for a partial character of degree " +
                                       std::to_string(phi.degree()));
      phi.vertex = q;
    }
  }

  for (auto const &phi : members) {
    if (!phi.vertex)
      throw InternalConsistencyError("no vertex found for a partial character of degree " +
                                     std::to_string(phi.degree()));
    std::uint64_t qo = lat[*phi.vertex].order;
    auto d = static_cast<std::uint64_t>(phi.degree());
    if (d / sigma_part(d, sigma) != (order / qo) / sigma_part(order / qo, sigma))
      throw InternalConsistencyError("vertex degree law fails");
  }
  return members;
}

} // anonymous namespace

PartialValues sigma_restriction(ClassFunction const &chi, PrimeSet const &sigma)
{
  PartialValues v;
  for (auto c : sigma_class_indices(chi.group, sigma))
    v.push_back(chi.values[c]);
  return v;
}

std::vector<PartialCharacter> const &sigma_partial_characters(PermGroup const &group,
                                                              PrimeSet const &sigma)
{
  auto set = group.memo<PartialSet>(sigma.key(), [&] {
    return std::make_shared<PartialSet const>(PartialSet{compute_partials(group, sigma)});
  });
  return set->members;
}

std::vector<PartialCharacter> const &partial_characters_with_vertices(PermGroup const &group,
                                                                      PrimeSet const &sigma)
{
  auto set = group.memo<VertexSet>(sigma.key(), [&] {
    return std::make_shared<VertexSet const>(VertexSet{compute_vertices(group, sigma)});
  });
  return set->members;
}

std::vector<std::int64_t> decompose_partial(PermGroup const &group, PrimeSet const &sigma,
                                            PartialValues const &values)
{
  auto const &irr = sigma_partial_characters(group, sigma);
  std::vector<PartialValues const *> basis;
  for (auto const &p : irr)
    basis.push_back(&p.values);
  auto sol = solve_combination(basis, values);
  if (!sol)
    throw InternalConsistencyError("partial class function is not a nonnegative integer "
                                   "combination of irreducible partial characters");
  return *sol;
}

std::optional<std::size_t> find_partial(PermGroup const &group, PrimeSet const &sigma,
                                        PartialValues const &values)
{
  auto const &irr = sigma_partial_characters(group, sigma);
  for (auto const &p : irr)
    if (p.values == values)
      return p.index;
  return std::nullopt;
}

PartialValues restrict_partial(PartialCharacter const &phi, PermGroup const &h)
{
  auto fusion = class_fusion(h, phi.group);
  auto pos = sigma_positions(phi.group, phi.sigma);
  PartialValues v;
  for (auto c : sigma_class_indices(h, phi.sigma))
    v.push_back(phi.values[static_cast<std::size_t>(pos[fusion[c]])]);
  return v;
}

std::vector<std::pair<std::size_t, std::int64_t>> decompose_on_subgroup(PartialCharacter const &phi,
                                                                        PermGroup const &h)
{
  auto mult = decompose_partial(h, phi.sigma, restrict_partial(phi, h));
  std::vector<std::pair<std::size_t, std::int64_t>> res;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i])
      res.emplace_back(i, mult[i]);
  return res;
}

PartialValues induce_partial(PermGroup const &u, PrimeSet const &sigma, PartialValues const &values,
                             PermGroup const &group)
{
  auto fusion = class_fusion(u, group);
  auto const &ud = class_data(u);
  auto const &gd = class_data(group);
  auto gpos = sigma_positions(group, sigma);
  auto uidx = sigma_class_indices(u, sigma);
  auto gidx = sigma_class_indices(group, sigma);
  PartialValues sums(gidx.size());
  for (std::size_t i = 0; i < uidx.size(); ++i) {
    auto target = gpos[fusion[uidx[i]]];
    sums[static_cast<std::size_t>(target)] +=
      Cyclotomic(static_cast<std::int64_t>(ud.classes[uidx[i]].size)) * values[i];
  }
  std::uint64_t order = group.size(), sub = u.size();
  for (std::size_t l = 0; l < gidx.size(); ++l) {
    Rational factor(static_cast<std::int64_t>(order / gd.classes[gidx[l]].size),
                    static_cast<std::int64_t>(sub));
    sums[l] *= Cyclotomic(factor);
  }
  return sums;
}

bool lies_over(PartialCharacter const &phi, PartialCharacter const &theta)
{
  for (auto [i, m] : decompose_on_subgroup(phi, theta.group))
    if (i == theta.index)
      return true;
  return false;
}

std::size_t conjugate_partial(PartialCharacter const &theta, Perm const &g)
{
  PermGroup const &n = theta.group;
  auto const &cd = class_data(n);
  auto pos = sigma_positions(n, theta.sigma);
  Perm g_inv = g.inverse();
  PartialValues v;
  for (auto c : sigma_class_indices(n, theta.sigma)) {
    Perm y = conjugate(cd.classes[c].representative, g_inv); // g x g^-1
    if (!n.contains(y))
      throw PreconditionError("conjugating element does not normalize the subgroup");
    v.push_back(theta.values[static_cast<std::size_t>(pos[class_index(n, y)])]);
  }
  auto found = find_partial(n, theta.sigma, v);
  if (!found)
    throw InternalConsistencyError("conjugate of an irreducible partial character is reducible");
  return *found;
}

PermGroup partial_stabilizer(PermGroup const &group, PartialCharacter const &theta)
{
  auto const &lat = subgroup_lattice(group);
  auto const &elems = group.elements();
  ElementSet stab(elems.size());
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    if (conjugate_partial(theta, elems[i]) == theta.index)
      stab.insert(i);
  return lat.subgroup(stab);
}

PartialCharacter clifford_correspondent(PartialCharacter const &phi, PartialCharacter const &theta)
{
  if (!is_normal(phi.group, theta.group))
    throw PreconditionError("clifford_correspondent: subgroup is not normal");
  if (!lies_over(phi, theta))
    throw PreconditionError("clifford_correspondent: theta does not lie under phi");
  PermGroup t = partial_stabilizer(phi.group, theta);
  std::optional<PartialCharacter> found;
  for (auto const &mu : sigma_partial_characters(t, phi.sigma)) {
    if (!lies_over(mu, theta))
      continue;
    if (induce_partial(t, phi.sigma, mu.values, phi.group) != phi.values)
      continue;
    if (found)
      throw InternalConsistencyError("two Clifford correspondents");
    found = mu;
  }
  if (!found)
    throw InternalConsistencyError("no Clifford correspondent");
  return *found;
}

SubgroupClass const &vertex(PartialCharacter const &phi)
{
  auto const &with = partial_characters_with_vertices(phi.group, phi.sigma);
  auto pos = find_partial(phi.group, phi.sigma, phi.values);
  if (!pos)
    throw PreconditionError("vertex: not an irreducible partial character");
  return subgroup_lattice(phi.group)[*with[*pos].vertex];
}

std::vector<PartialCharacter> ipi_with_vertex(PermGroup const &group, PrimeSet const &sigma,
                                              PermGroup const &q, PartialCharacter const *over)
{
  for (auto p : prime_factors(q.size()))
    if (sigma.contains(p))
      throw PreconditionError("ipi_with_vertex: Q is not a " + sigma.to_string() + "'-group");
  auto const &lat = subgroup_lattice(group);
  std::size_t qc = lat.class_of(q);
  std::vector<PartialCharacter> res;
  for (auto const &phi : partial_characters_with_vertices(group, sigma))
    if (*phi.vertex == qc && (!over || lies_over(phi, *over)))
      res.push_back(phi);
  return res;
}

} // namespace nilweight
