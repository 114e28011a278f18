#include "nilweight/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nilweight/characters.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/glauberman.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/partial.hpp"
#include "nilweight/subgroup_lattice.hpp"
#include "nilweight/weights.hpp"

namespace nilweight
{

namespace
{

std::string generators_string(PermGroup const &g)
{
  if (g.generators().empty())
    return "()";
  std::string s;
  for (auto const &x : g.generators()) {
    if (!s.empty())
      s += ' ';
    s += x.to_string();
  }
  return s;
}

bool has_solvable_hall(PermGroup const &group, PrimeSet const &sigma)
{
  auto hall = find_hall_subgroup(group, sigma);
  return hall && is_solvable(*hall);
}

void add_hypothesis(VerificationReport &rep, std::string name, bool met)
{
  rep.hypotheses.push_back({std::move(name), met});
}

bool contains_all(PermGroup const &group, PermGroup const &h)
{
  return h.degree() == group.degree() && h.is_subgroup_of(group);
}

/// Elements of a lattice subset commuting with every element of q.
std::size_t centralizing_count(SubgroupLattice const &lat, ElementSet const &within,
                               ElementSet const &q)
{
  auto q_elems = q.indices();
  std::size_t n = 0;
  for (auto x : within.indices()) {
    bool ok = true;
    for (auto y : q_elems)
      if (lat.multiply(x, y) != lat.multiply(y, x)) {
        ok = false;
        break;
      }
    n += ok;
  }
  return n;
}

std::size_t intersection_count(ElementSet const &a, ElementSet const &b)
{
  std::size_t n = 0;
  for (auto x : a.indices())
    n += b.contains(x);
  return n;
}

} // anonymous namespace

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::holds:
    return "holds";
  case Verdict::fails:
    return "fails";
  case Verdict::hypotheses_unmet:
    return "hypotheses-unmet";
  }
  return "?";
}

bool VerificationReport::hypotheses_met() const
{
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](auto const &h) { return h.met; });
}

void VerificationReport::decide()
{
  if (lhs && rhs && *lhs != *rhs)
    verdict = Verdict::fails;
  else if (lhs && rhs && hypotheses_met())
    verdict = Verdict::holds;
  else
    verdict = Verdict::hypotheses_unmet;
}

VerificationReport check_class_weight_count(PermGroup const &group, PrimeSet const &omega,
                                   std::string const &name)
{
  VerificationReport rep;
  rep.check = "class-weight-count";
  rep.group_name = name;
  rep.sigma = omega;
  add_hypothesis(rep, "pi-separable", is_sigma_separable(group, omega));
  add_hypothesis(rep, "solvable Hall subgroup", has_solvable_hall(group, omega));

  PrimeSet complement = omega.complement_in(group.size());
  auto const &cd = class_data(group);
  auto idx = sigma_class_indices(group, complement);
  for (auto c : idx) {
    auto const &cls = cd.classes[c];
    rep.rows.push_back({"lhs",
                        1,
                        {{"class", std::to_string(c)},
                         {"order", std::to_string(cls.element_order)},
                         {"size", std::to_string(cls.size)},
                         {"rep", cls.representative.to_string()}}});
  }
  rep.lhs = idx.size();

  auto const &weights = enumerate_weights(group, omega, true);
  for (auto const &w : weights)
    rep.rows.push_back({"rhs",
                        1,
                        {{"q_order", std::to_string(w.q.size())},
                         {"q", generators_string(w.q)},
                         {"normalizer_order", std::to_string(w.quotient->normalizer.size())},
                         {"quotient_order", std::to_string(w.quotient->action.image().size())},
                         {"gamma", std::to_string(w.gamma)},
                         {"gamma_degree", std::to_string(w.gamma_degree)}}});
  rep.rhs = weights.size();
  rep.decide();
  return rep;
}

std::vector<PermGroup> nilpotent_complement_subgroups(PermGroup const &group, PrimeSet const &sigma)
{
  std::vector<PermGroup> res;
  for (auto const &cls : nilpotent_sigma_subgroup_classes(group, sigma.complement_in(group.size())))
    res.push_back(cls.representative);
  return res;
}

VerificationReport check_carter_fiber_count(PermGroup const &group, PrimeSet const &sigma,
                                   PermGroup const &r, std::string const &name)
{
  VerificationReport rep;
  rep.check = "carter-fiber-count";
  rep.group_name = name;
  rep.sigma = sigma;
  PrimeSet complement = sigma.complement_in(group.size());
  bool separable = is_sigma_separable(group, sigma);
  bool r_ok = contains_all(group, r) && is_nilpotent(r) && sigma_part(r.size(), sigma) == 1;
  add_hypothesis(rep, "pi-separable", separable);
  add_hypothesis(rep, "solvable Hall complement", has_solvable_hall(group, complement));
  add_hypothesis(rep, "R nilpotent pi'-subgroup", r_ok);
  rep.subject = "R = " + generators_string(r) + " (order " + std::to_string(r.size()) + ")";
  if (!separable || !r_ok) {
    rep.decide();
    return rep;
  }

  auto const &lat = subgroup_lattice(group);
  PermGroup rc = lat.subgroup(lat.element_set(r));

  // Set semantics over the partial characters themselves: a member counts
  // once even if its vertex class met the fiber through several Q.
  std::set<std::size_t> union_members;
  for (auto const &q : carter_fiber(group, sigma, rc)) {
    auto members = ipi_with_vertex(group, sigma, q.representative);
    for (auto const &phi : members)
      union_members.insert(phi.index);
    rep.rows.push_back({"lhs",
                        members.size(),
                        {{"q_class", std::to_string(q.index)},
                         {"q_order", std::to_string(q.order)},
                         {"q", generators_string(q.representative)}}});
  }
  rep.lhs = union_members.size();
  std::uint64_t row_sum = 0;
  for (auto const &row : rep.rows)
    row_sum += row.count;
  if (row_sum != *rep.lhs)
    rep.notes.push_back("vertex classes of the fiber overlap");

  PermGroup ngr = lat.subgroup(lat.normalizer(lat.element_set(rc)));
  auto targets = ipi_with_vertex(ngr, sigma, rc);
  for (auto const &phi : targets)
    rep.rows.push_back({"rhs",
                        1,
                        {{"normalizer_order", std::to_string(ngr.size())},
                         {"index", std::to_string(phi.index)},
                         {"degree", std::to_string(phi.degree())}}});
  rep.rhs = targets.size();
  rep.decide();

  auto weights = weights_with_first_component(group, complement, rc);
  rep.rows.push_back({"info", weights, {{"weights_with_first_component_R", std::to_string(weights)}}});
  if (weights != targets.size()) {
    rep.notes.push_back("weight count " + std::to_string(weights) + " differs from rhs");
    rep.verdict = Verdict::fails;
  }
  return rep;
}

VerificationReport check_normalizer_counting(PermGroup const &group, PrimeSet const &sigma,
                                             PermGroup const &q, PermGroup const &l,
                                             PermGroup const &m, std::size_t phi,
                                             std::string const &name)
{
  VerificationReport rep;
  rep.check = "normalizer-counting";
  rep.group_name = name;
  rep.sigma = sigma;
  bool subgroups = contains_all(group, q) && contains_all(group, l) && contains_all(l, m);
  bool separable = is_sigma_separable(group, sigma);
  bool l_ok = subgroups && is_normal(group, l) && is_sigma_group(l, sigma);
  bool q_ok = subgroups && is_solvable(q) && sigma_part(q.size(), sigma) == 1;
  bool lq_ok = subgroups && is_normal(group, join(l, q.generators()));
  bool m_ok = subgroups && centralizer(group, m).size() == group.size();
  bool phi_ok = subgroups && phi < character_table(m).size();
  add_hypothesis(rep, "pi-separable", separable);
  add_hypothesis(rep, "L normal pi-subgroup", l_ok);
  add_hypothesis(rep, "Q solvable pi'-subgroup", q_ok);
  add_hypothesis(rep, "LQ normal", lq_ok);
  add_hypothesis(rep, "M central in L", m_ok);
  add_hypothesis(rep, "phi in Irr(M)", phi_ok);
  if (!rep.hypotheses_met()) {
    rep.decide();
    return rep;
  }

  auto const &lat = subgroup_lattice(group);
  PermGroup qc = lat.subgroup(lat.element_set(q));
  PermGroup mc = lat.subgroup(lat.element_set(m));
  auto theta_idx = find_partial(mc, sigma, sigma_restriction(character_table(mc)[phi], sigma));
  if (!theta_idx)
    throw InternalConsistencyError("character of a pi-group is not an irreducible partial character");
  PartialCharacter const &theta = sigma_partial_characters(mc, sigma)[*theta_idx];

  auto lhs = ipi_with_vertex(group, sigma, qc, &theta);
  PermGroup ngq = lat.subgroup(lat.normalizer(lat.element_set(qc)));
  auto rhs = ipi_with_vertex(ngq, sigma, qc, &theta);
  for (auto const &p : lhs)
    rep.rows.push_back({"lhs", 1, {{"index", std::to_string(p.index)}, {"degree", std::to_string(p.degree())}}});
  for (auto const &p : rhs)
    rep.rows.push_back({"rhs",
                        1,
                        {{"normalizer_order", std::to_string(ngq.size())},
                         {"index", std::to_string(p.index)},
                         {"degree", std::to_string(p.degree())}}});
  rep.lhs = lhs.size();
  rep.rhs = rhs.size();
  rep.decide();
  return rep;
}

VerificationReport check_canonical_bijection(PermGroup const &group, PermGroup const &n,
                                             PermGroup const &h, PrimeSet const &sigma,
                                             PermGroup const &r, std::string const &name)
{
  VerificationReport rep;
  rep.check = "canonical-bijection";
  rep.group_name = name;
  rep.sigma = sigma;
  bool subgroups = contains_all(group, n) && contains_all(group, h) && contains_all(h, r);
  bool n_ok = subgroups && is_normal(group, n) && is_sigma_group(n, sigma);
  bool h_ok = subgroups && sigma_part(h.size(), sigma) == 1 && is_solvable(h);
  bool product = subgroups && n.size() * h.size() == group.size();
  bool r_ok = subgroups && is_nilpotent(r);
  add_hypothesis(rep, "N normal pi-subgroup", n_ok);
  add_hypothesis(rep, "H solvable pi'-subgroup", h_ok);
  add_hypothesis(rep, "G = NH", product);
  add_hypothesis(rep, "R nilpotent subgroup of H", r_ok);
  rep.subject = "R = " + generators_string(r) + " (order " + std::to_string(r.size()) + ")";
  if (!rep.hypotheses_met()) {
    rep.decide();
    return rep;
  }

  auto const &lat = subgroup_lattice(group);
  ElementSet n_set = lat.element_set(n), h_set = lat.element_set(h), r_set = lat.element_set(r);
  PermGroup nc = lat.subgroup(n_set);
  PermGroup rc = lat.subgroup(r_set);
  PermGroup ngr = lat.subgroup(lat.normalizer(r_set));
  auto action = make_glauberman_action(nc, rc);
  PermGroup const &cnr = action.fixed;
  auto const &cnr_table = character_table(cnr);

  std::vector<std::uint32_t> k_gens;
  for (auto const &x : cnr.generators())
    k_gens.push_back(lat.position(x));
  for (auto x : r_set.indices())
    k_gens.push_back(x);
  PermGroup k = lat.subgroup(lat.generate(k_gens));
  if (k.size() != cnr.size() * rc.size())
    throw InternalConsistencyError("C_N(R)R is not a direct product");

  // (theta* x 1_R) induced to N_G(R), as a member of I_sigma(N_G(R)).
  std::map<std::size_t, std::size_t> image_of_star;
  auto image = [&](std::size_t star) -> std::size_t {
    if (auto it = image_of_star.find(star); it != image_of_star.end())
      return it->second;
    ClassFunction f{k, {}};
    for (auto const &cls : class_data(k).classes) {
      std::optional<Perm> c_part;
      for (auto const &c : cnr.elements())
        if (rc.contains(c.inverse() * cls.representative)) {
          c_part = c;
          break;
        }
      if (!c_part)
        throw InternalConsistencyError("element of C_N(R)R does not factor");
      f.values.push_back(cnr_table[star].values[class_index(cnr, *c_part)]);
    }
    auto induced = induce_character(f, ngr);
    auto found = find_partial(ngr, sigma, sigma_restriction(induced, sigma));
    std::size_t res = found ? *found : SIZE_MAX;
    image_of_star.emplace(star, res);
    return res;
  };

  auto const &n_partials = sigma_partial_characters(nc, sigma);
  bool well_defined = true, admissible_ok = true;
  std::set<std::size_t> images;
  std::uint64_t domain = 0;
  for (auto const &phi : partial_characters_with_vertices(group, sigma)) {
    std::optional<std::size_t> phi_image;
    std::string q_used;
    bool in_domain = false;
    for (auto const &q_set : lat.conjugates(*phi.vertex)) {
      if (!q_set.subset_of(h_set) || !r_set.subset_of(q_set))
        continue;
      PermGroup q = lat.subgroup(q_set);
      if (!is_carter_in(rc, q))
        continue;
      in_domain = true;
      std::size_t stab_order = nc.size() * q.size();
      for (auto const &theta : n_partials) {
        if (!lies_over(phi, theta))
          continue;
        bool invariant = std::all_of(q.generators().begin(), q.generators().end(), [&](Perm const &g) {
          return conjugate_partial(theta, g) == theta.index;
        });
        if (!invariant)
          continue;
        if (partial_stabilizer(group, theta).size() != stab_order) {
          admissible_ok = false;
          rep.notes.push_back("stabilizer of theta " + std::to_string(theta.index) +
                              " is not QN for Q = " + generators_string(q));
        }
        std::size_t img = image(glauberman_correspondent(action, theta.lifts.front()));
        if (!phi_image) {
          phi_image = img;
          q_used = generators_string(q);
        } else if (*phi_image != img) {
          well_defined = false;
          rep.notes.push_back("partial character " + std::to_string(phi.index) +
                              " has choices with different images");
        }
      }
    }
    if (in_domain) {
      if (!phi_image) {
        admissible_ok = false;
        rep.notes.push_back("no invariant theta under partial character " + std::to_string(phi.index));
      }
      ++domain;
      std::size_t img = phi_image.value_or(SIZE_MAX);
      images.insert(img);
      rep.rows.push_back({"lhs",
                          1,
                          {{"index", std::to_string(phi.index)},
                           {"degree", std::to_string(phi.degree())},
                           {"q", q_used},
                           {"image", img == SIZE_MAX ? "none" : std::to_string(img)}}});
    }
  }

  auto targets = ipi_with_vertex(ngr, sigma, rc);
  std::set<std::size_t> target_set;
  for (auto const &t : targets) {
    target_set.insert(t.index);
    rep.rows.push_back({"rhs",
                        1,
                        {{"normalizer_order", std::to_string(ngr.size())},
                         {"index", std::to_string(t.index)},
                         {"degree", std::to_string(t.degree())}}});
  }
  rep.lhs = domain;
  rep.rhs = targets.size();

  bool injective = images.size() == domain;
  bool into = std::includes(target_set.begin(), target_set.end(), images.begin(), images.end());
  bool onto = images == target_set;
  rep.rows.push_back({"info", injective, {{"injective", injective ? "yes" : "no"}}});
  rep.rows.push_back({"info", onto, {{"surjective", onto ? "yes" : "no"}}});
  if (!into)
    rep.notes.push_back("an image lies outside I(N_G(R)|R)");

  // N_G(Q) = C_N(Q) N_H(Q) for every Q <= H.
  bool normalizers_ok = true;
  std::size_t q_checked = 0;
  for (auto const &cls : lat.classes()) {
    if (h.size() % cls.order)
      continue;
    for (auto const &q_set : lat.conjugates(cls.index)) {
      if (!q_set.subset_of(h_set))
        continue;
      ++q_checked;
      auto ng = lat.normalizer(q_set);
      std::size_t cn = centralizing_count(lat, n_set, q_set);
      std::size_t nh = intersection_count(ng, h_set);
      if (ng.count() != cn * nh) {
        normalizers_ok = false;
        rep.notes.push_back("N_G(Q) != C_N(Q)N_H(Q) for Q = " + generators_string(lat.subgroup(q_set)));
      }
    }
  }
  rep.rows.push_back({"info", q_checked, {{"normalizer_factorizations_checked", std::to_string(q_checked)}}});

  // For tau in Irr(C_N(R)) with stabilizer C_N(R) x R in N_G(R), the
  // Glauberman preimage gamma has N_{H_gamma}(R) = R.
  auto inv = invariant_characters(action);
  auto gmap = glauberman_map(action);
  bool carter_ok = true;
  std::size_t tau_checked = 0;
  for (std::size_t tau = 0; tau < cnr_table.size(); ++tau) {
    std::size_t stab = 0;
    for (auto const &g : ngr.elements())
      stab += conjugate_character(cnr, tau, g) == tau;
    if (stab != cnr.size() * rc.size())
      continue;
    ++tau_checked;
    auto pos = std::find(gmap.begin(), gmap.end(), tau) - gmap.begin();
    std::size_t gamma = inv[static_cast<std::size_t>(pos)];
    std::size_t count = 0;
    for (auto x : h_set.indices()) {
      Perm const &g = group.elements()[x];
      if (conjugate_character(nc, gamma, g) != gamma)
        continue;
      bool normalizes = true;
      for (auto y : r_set.indices())
        if (!r_set.contains(lat.conjugate(y, x))) {
          normalizes = false;
          break;
        }
      count += normalizes;
    }
    if (count != rc.size()) {
      carter_ok = false;
      rep.notes.push_back("N_{H_gamma}(R) != R for tau " + std::to_string(tau));
    }
  }
  rep.rows.push_back({"info", tau_checked, {{"stabilizer_preimages_checked", std::to_string(tau_checked)}}});

  rep.decide();
  if (!(well_defined && admissible_ok && injective && into && onto && normalizers_ok && carter_ok))
    rep.verdict = Verdict::fails;
  return rep;
}

} // namespace nilweight
