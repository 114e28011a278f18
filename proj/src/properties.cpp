#include "nilweight/properties.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "nilweight/characters.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/glauberman.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/limits.hpp"
#include "nilweight/partial.hpp"
#include "nilweight/subgroup_lattice.hpp"
#include "nilweight/weights.hpp"

namespace nilweight
{

namespace
{

enum Property : std::size_t
{
  table_orthogonality,
  degrees_divide,
  frobenius,
  partial_count,
  vertex_degree,
  clifford_round_trip,
  defect_zero_radical,
  invariant_orbit,
  stabilizer_vertex_count,
  glauberman_bijective,
  glauberman_series,
  glauberman_equivariant,
  class_weight,
  carter_fiber,
  carter_fiber_sums,
  bijection,
  bijection_matches_b,
  property_count,
};

char const *const property_names[property_count] = {
  "character table orthogonality and degree equation",
  "character degrees divide the group order",
  "Frobenius reciprocity",
  "|I(G)| equals the number of pi-classes",
  "vertex degree law",
  "Clifford correspondent induces back",
  "pi-defect zero forces O_pi(G) = 1",
  "vertex-preserving constituents form one N_G(Q)-orbit",
  "I(G|Q,tau) counted over the stabilizer of tau",
  "Glauberman correspondence is a bijection",
  "Glauberman correspondence is independent of the series",
  "Glauberman correspondence is equivariant",
  "pi'-classes equal nilpotent pi-weights",
  "Carter fiber count equals normalizer count",
  "per-R counts sum to |I(G)| and the weight count",
  "canonical bijection",
  "canonical bijection agrees with the fiber count",
};

struct Tally
{
  std::vector<PropertyResult> results;

  Tally() : results(property_count)
  {
    for (std::size_t i = 0; i < property_count; ++i)
      results[i].name = property_names[i];
  }

  void record(Property p, bool ok, std::function<std::string()> const &witness)
  {
    auto &r = results[p];
    ++r.checked;
    if (!ok && r.passed) {
      r.passed = false;
      r.witness = witness();
    }
  }

  void merge(Tally const &other)
  {
    for (std::size_t i = 0; i < property_count; ++i) {
      auto &r = results[i];
      auto const &o = other.results[i];
      r.checked += o.checked;
      if (!o.passed && r.passed) {
        r.passed = false;
        r.witness = o.witness;
      }
    }
  }
};

std::vector<PrimeSet> sigma_range(PermGroup const &g, std::optional<PrimeSet> const &sigma)
{
  if (sigma)
    return {*sigma};
  return prime_subsets(g.size());
}

std::string at(std::string const &name, PrimeSet const &sigma)
{
  return name + " pi=" + sigma.to_string();
}

/// A normal Hall sigma-subgroup N with a solvable complement H, both nontrivial.
struct SplitInstance
{
  PermGroup n;
  PermGroup h;
};

std::optional<SplitInstance> split_instance(PermGroup const &group, PrimeSet const &sigma)
{
  auto const &lat = subgroup_lattice(group);
  PermGroup n = o_sigma(group, sigma);
  if (n.size() != sigma_part(group.size(), sigma) || n.size() == 1 || n.size() == group.size())
    return std::nullopt;
  auto h = find_hall_subgroup(group, sigma.complement_in(group.size()));
  if (!h || !is_solvable(*h))
    return std::nullopt;
  return SplitInstance{lat.subgroup(lat.element_set(n)), lat.subgroup(lat.element_set(*h))};
}

void check_tables(Tally &t, std::string const &name, PermGroup const &g, std::uint64_t seed,
                  std::size_t samples)
{
  auto const &table = character_table(g);
  try {
    validate_table(table);
    t.record(table_orthogonality, true, {});
  } catch (Error const &e) {
    t.record(table_orthogonality, false, [&] { return name + ": " + e.what(); });
  }
  for (auto const &chi : table.irreducibles) {
    auto d = chi.degree().integer();
    t.record(degrees_divide, d > 0 && g.size() % static_cast<std::uint64_t>(d) == 0,
             [&] { return name + ": degree " + std::to_string(d); });
  }

  auto const &classes = subgroup_classes(g);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto const &h = classes[rng() % classes.size()].representative;
    auto const &th = character_table(h);
    std::size_t theta = rng() % th.size(), chi = rng() % table.size();
    auto lhs = inner_product(induce_character(th[theta], g), table[chi]);
    auto rhs = inner_product(th[theta], restrict_character(table[chi], h));
    t.record(frobenius, lhs == rhs, [&] {
      return name + ": subgroup of order " + std::to_string(h.size()) + ", theta " +
             std::to_string(theta) + ", chi " + std::to_string(chi);
    });
  }
}

void check_defect_zero(Tally &t, std::string const &name, PermGroup const &g, PrimeSet const &sigma)
{
  bool radical_trivial = o_sigma(g, sigma).size() == 1;
  std::size_t defect_zero = 0;
  for (auto const &chi : character_table(g).irreducibles)
    if (has_sigma_defect_zero(chi, sigma)) {
      ++defect_zero;
      t.record(defect_zero_radical, radical_trivial, [&] { return at(name, sigma); });
    }
  if (!radical_trivial)
    t.record(defect_zero_radical, defect_zero == 0, [&] { return at(name, sigma); });
}

void check_partials(Tally &t, std::string const &name, PermGroup const &g, PrimeSet const &sigma,
                    bool clifford)
{
  auto const &partials = partial_characters_with_vertices(g, sigma);
  t.record(partial_count, partials.size() == sigma_class_indices(g, sigma).size(),
           [&] { return at(name, sigma); });
  PrimeSet complement = sigma.complement_in(g.size());
  auto const &lat = subgroup_lattice(g);
  for (auto const &phi : partials) {
    auto q = lat[*phi.vertex].order;
    t.record(vertex_degree,
             sigma_part(static_cast<std::uint64_t>(phi.degree()), complement) ==
               sigma_part(g.size() / q, complement),
             [&] { return at(name, sigma) + " phi " + std::to_string(phi.index); });
  }
  if (!clifford)
    return;

  for (auto const &normal : normal_subgroups(g)) {
    PermGroup n = lat.subgroup(lat.element_set(normal));
    auto const &taus = sigma_partial_characters(n, sigma);
    auto where = [&](std::string const &what) {
      return at(name, sigma) + " N of order " + std::to_string(n.size()) + ": " + what;
    };

    for (auto const &mu : partials) {
      auto const &vclass = lat[*mu.vertex];
      ElementSet q_set = vclass.elements;
      PermGroup q = lat.subgroup(q_set);
      std::vector<std::size_t> preserving;
      for (auto const &tau : taus) {
        if (!lies_over(mu, tau))
          continue;
        auto corr = clifford_correspondent(mu, tau);
        auto back = induce_partial(corr.group, sigma, corr.values, g);
        t.record(clifford_round_trip, back == mu.values, [&] {
          return where("phi " + std::to_string(mu.index) + ", tau " + std::to_string(tau.index));
        });
        if (!q_set.subset_of(lat.element_set(corr.group)))
          continue;
        auto const &sub = subgroup_lattice(corr.group);
        if (vertex(corr).index == sub.class_of(q))
          preserving.push_back(tau.index);
      }
      bool ok = !preserving.empty();
      if (ok) {
        std::set<std::size_t> orbit;
        for (auto x : lat.normalizer(q_set).indices())
          orbit.insert(conjugate_partial(taus[preserving.front()], g.elements()[x]));
        ok = orbit == std::set<std::size_t>(preserving.begin(), preserving.end());
        for (auto tau : preserving)
          for (auto const &s : q.generators())
            ok = ok && conjugate_partial(taus[tau], s) == tau;
      }
      t.record(invariant_orbit, ok, [&] { return where("phi " + std::to_string(mu.index)); });
    }

    for (auto const &qc : lat.classes()) {
      if (sigma_part(qc.order, sigma) != 1)
        continue;
      PermGroup q = lat.subgroup(qc.elements);
      ElementSet nq = lat.normalizer(qc.elements);
      for (auto const &tau : taus) {
        bool invariant = std::all_of(q.generators().begin(), q.generators().end(),
                                     [&](Perm const &s) { return conjugate_partial(tau, s) == tau.index; });
        if (!invariant)
          continue;
        PermGroup stab = partial_stabilizer(g, tau);
        ElementSet stab_set = lat.element_set(stab);
        auto const &sub = subgroup_lattice(stab);
        std::set<std::size_t> seen;
        std::size_t sum = 0;
        for (auto const &member : lat.conjugates(qc.index)) {
          if (!member.subset_of(stab_set))
            continue;
          PermGroup u = lat.subgroup(member);
          if (seen.insert(sub.class_of(u)).second)
            sum += ipi_with_vertex(stab, sigma, u, &tau).size();
        }
        std::size_t total = ipi_with_vertex(g, sigma, q, &tau).size();
        t.record(stabilizer_vertex_count, total == sum, [&] {
          return where("Q of order " + std::to_string(q.size()) + ", tau " + std::to_string(tau.index));
        });
        std::size_t meet = 0;
        for (auto x : nq.indices())
          meet += stab_set.contains(x);
        if (stab.size() * nq.count() / meet == g.size())
          t.record(stabilizer_vertex_count, total == ipi_with_vertex(stab, sigma, q, &tau).size(), [&] {
            return where("G_tau N_G(Q) = G, Q of order " + std::to_string(q.size()));
          });
      }
    }
  }
}

void check_glauberman(Tally &t, std::string const &name, SplitInstance const &inst)
{
  auto where = [&](std::string const &what) {
    return name + " acting group of order " + std::to_string(inst.h.size()) + ": " + what;
  };
  auto action = make_glauberman_action(inst.n, inst.h);
  std::vector<std::size_t> map;
  try {
    map = glauberman_map(action);
    t.record(glauberman_bijective, true, {});
  } catch (Error const &e) {
    t.record(glauberman_bijective, false, [&] { return where(e.what()); });
    return;
  }
  auto inv = invariant_characters(action);
  for (auto const &series : composition_series(inst.h)) {
    bool same = true;
    for (std::size_t i = 0; i < inv.size(); ++i)
      same = same && glauberman_correspondent(action, inv[i], series) == map[i];
    t.record(glauberman_series, same, [&] { return where("series dependence"); });
  }
  for (auto const &tn : normal_subgroups(inst.h)) {
    auto sub = make_glauberman_action(inst.n, tn);
    auto sub_inv = invariant_characters(sub);
    auto sub_map = glauberman_map(sub);
    for (auto const &s : inst.h.generators()) {
      bool ok = true;
      for (std::size_t i = 0; i < sub_inv.size(); ++i) {
        auto chi_s = conjugate_character(inst.n, sub_inv[i], s);
        auto j = static_cast<std::size_t>(std::find(sub_inv.begin(), sub_inv.end(), chi_s) - sub_inv.begin());
        ok = ok && j < sub_inv.size() && conjugate_character(sub.fixed, sub_map[i], s) == sub_map[j];
      }
      t.record(glauberman_equivariant, ok,
               [&] { return where("normal subgroup of order " + std::to_string(tn.size())); });
    }
  }
}

void check_counts(Tally &t, std::string const &name, PermGroup const &g, PrimeSet const &sigma)
{
  auto a = check_class_weight_count(g, sigma, name);
  if (a.hypotheses_met())
    t.record(class_weight, a.verdict == Verdict::holds, [&] {
      return at(name, sigma) + ": " + std::to_string(*a.lhs) + " vs " + std::to_string(*a.rhs);
    });

  // roles swapped: sigma is the partial-character side, R runs over sigma'
  PrimeSet complement = sigma.complement_in(g.size());
  if (!is_sigma_separable(g, sigma))
    return;
  auto hall = find_hall_subgroup(g, complement);
  if (!hall || !is_solvable(*hall))
    return;
  std::uint64_t lhs = 0, rhs = 0;
  for (auto const &r : nilpotent_complement_subgroups(g, sigma)) {
    auto b = check_carter_fiber_count(g, sigma, r, name);
    t.record(carter_fiber, b.verdict == Verdict::holds,
             [&] { return at(name, sigma) + " R of order " + std::to_string(r.size()); });
    lhs += b.lhs.value_or(0);
    rhs += b.rhs.value_or(0);
  }
  t.record(carter_fiber_sums,
           lhs == sigma_partial_characters(g, sigma).size() &&
             rhs == enumerate_weights(g, complement, true).size(),
           [&] { return at(name, sigma); });
}

void check_bijections(Tally &t, std::string const &name, PermGroup const &g, PrimeSet const &sigma,
                      SplitInstance const &inst)
{
  for (auto const &cls : subgroup_lattice(inst.h).classes()) {
    if (!cls.nilpotent)
      continue;
    auto where = [&] { return at(name, sigma) + " R of order " + std::to_string(cls.order); };
    auto rep = check_canonical_bijection(g, inst.n, inst.h, sigma, cls.representative, name);
    t.record(bijection, rep.verdict == Verdict::holds, where);
    auto b = check_carter_fiber_count(g, sigma, cls.representative, name);
    t.record(bijection_matches_b, b.lhs == rep.lhs, where);
  }
}

Tally run_group(GroupDefinition const &def, std::size_t position, SuiteOptions const &options)
{
  Tally t;
  PermGroup g = def.build();
  check_tables(t, def.name, g, limits().seed + position, options.frobenius_samples);
  for (auto const &sigma : sigma_range(g, options.sigma)) {
    check_defect_zero(t, def.name, g, sigma);
    if (is_sigma_separable(g, sigma))
      check_partials(t, def.name, g, sigma, g.size() <= options.clifford_order_bound);
    check_counts(t, def.name, g, sigma);
    if (auto inst = split_instance(g, sigma)) {
      check_glauberman(t, def.name, *inst);
      check_bijections(t, def.name, g, sigma, *inst);
    }
  }
  return t;
}

/// Runs task(i) for every i < count on up to `jobs` threads.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, std::size_t jobs, F task)
{
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = task(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < std::max<std::size_t>(jobs, 1); ++j)
    threads.emplace_back(worker);
  worker();
  for (auto &th : threads)
    th.join();
  for (auto const &e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

} // anonymous namespace

std::vector<PropertyResult> run_property_suite(std::vector<GroupDefinition> const &corpus,
                                               SuiteOptions const &options)
{
  if (corpus.empty())
    return {};
  auto parts = parallel_map<Tally>(corpus.size(), options.jobs, [&](std::size_t i) {
    try {
      return run_group(corpus[i], i, options);
    } catch (InternalConsistencyError const &e) {
      Tally t;
      t.results[table_orthogonality].passed = false;
      t.results[table_orthogonality].witness = corpus[i].name + ": " + e.what();
      return t;
    }
  });
  Tally total;
  for (auto const &p : parts)
    total.merge(p);
  return total.results;
}

ScanResult scan_corpus(std::vector<GroupDefinition> const &corpus, ScanMode mode,
                       std::optional<PrimeSet> const &sigma, std::size_t jobs)
{
  auto parts = parallel_map<std::vector<VerificationReport>>(corpus.size(), jobs, [&](std::size_t i) {
    std::vector<VerificationReport> reps;
    PermGroup g = corpus[i].build();
    for (auto const &s : sigma_range(g, sigma)) {
      if (mode == ScanMode::class_weight_count) {
        reps.push_back(check_class_weight_count(g, s, corpus[i].name));
        continue;
      }
      for (auto const &r : nilpotent_complement_subgroups(g, s))
        reps.push_back(check_carter_fiber_count(g, s, r, corpus[i].name));
    }
    return reps;
  });
  ScanResult res;
  for (auto &part : parts)
    for (auto &rep : part) {
      res.holds += rep.verdict == Verdict::holds;
      res.fails += rep.verdict == Verdict::fails;
      res.unmet += rep.verdict == Verdict::hypotheses_unmet;
      res.reports.push_back(std::move(rep));
    }
  return res;
}

VerificationReport clifford_vertex_example()
{
  VerificationReport rep;
  rep.check = "clifford-vertex-example";
  rep.group_name = "C3x(C3xC3):D8";
  rep.sigma = PrimeSet{3};
  auto gen = [](char const *s) { return Perm::parse(9, s); };
  PermGroup g(9, {gen("(1,2,3)"), gen("(1,2)"), gen("(1,4)(2,5)(3,6)(8,9)"), gen("(7,8,9)")});
  auto const &lat = subgroup_lattice(g);

  std::size_t normal_c3 = 0;
  for (auto const &n : normal_subgroups(g))
    normal_c3 += n.size() == 3;
  PermGroup o3 = o_sigma(g, PrimeSet{3});
  PermGroup m(9, {gen("(1,2,3)"), gen("(4,5,6)")});
  PermGroup n = lat.subgroup(lat.element_set(PermGroup(9, {gen("(7,8,9)")})));
  auto quotient = coset_action_quotient(g, o3).image();
  std::size_t involutions = 0;
  for (auto const &x : quotient.elements())
    involutions += x.order() == 2;
  rep.hypotheses.push_back({"order 216", g.size() == 216});
  rep.hypotheses.push_back({"unique normal subgroup of order 3", normal_c3 == 1});
  rep.hypotheses.push_back({"Fitting subgroup C3 x (C3 x C3)",
                            o_sigma(g, PrimeSet{2}).size() == 1 && o3.size() == 27 && is_normal(g, m) &&
                              is_nilpotent(o3) && centralizer(o3, o3).size() == 27});
  rep.hypotheses.push_back({"G/F dihedral of order 8", quotient.size() == 8 && involutions == 5});

  auto const &taus = sigma_partial_characters(n, rep.sigma);
  PartialCharacter const &tau = taus.at(1);
  PermGroup stab = partial_stabilizer(g, tau);
  PermGroup q1 = lat.subgroup(lat.element_set(PermGroup(9, {gen("(1,2)")})));
  rep.hypotheses.push_back({"stabilizer of tau has index 2", stab.size() * 2 == g.size()});
  rep.lhs = ipi_with_vertex(stab, rep.sigma, q1, &tau).size();
  rep.rhs = ipi_with_vertex(g, rep.sigma, q1, &tau).size();
  rep.rows.push_back({"lhs", *rep.lhs, {{"group", "G_tau"}, {"q", "(1,2)"}}});
  rep.rows.push_back({"rhs", *rep.rhs, {{"group", "G"}, {"q", "(1,2)"}}});
  rep.notes.push_back("expected lhs 1 and rhs 2: induction from G_tau does not preserve vertices");
  bool expected = *rep.lhs == 1 && *rep.rhs == 2;
  rep.verdict = !rep.hypotheses_met() ? Verdict::hypotheses_unmet
                                      : (expected ? Verdict::holds : Verdict::fails);
  return rep;
}

} // namespace nilweight
