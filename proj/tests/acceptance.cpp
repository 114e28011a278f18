// End-to-end acceptance run: one PASS/FAIL line per criterion, exit code 1
// if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "nilweight/group_file.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/partial.hpp"
#include "nilweight/properties.hpp"
#include "nilweight/subgroup_lattice.hpp"
#include "nilweight/verify.hpp"
#include "oracles.hpp"

using namespace nilweight;

namespace
{

using Clock = std::chrono::steady_clock;

struct Outcome
{
  bool passed = true;
  std::string detail;

  void require(bool ok, std::string const &what)
  {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(std::string const &name, std::function<Outcome()> const &body)
{
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (std::exception const &e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.passed)
    ++failures;
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << (o.passed ? "PASS" : "FAIL") << "  " << name << " (" << secs << " s)";
  if (!o.detail.empty())
    line << ": " << o.detail;
  std::cout << line.str() << std::endl;
}

/// Machine-format output split into per-report field maps.
std::vector<std::multimap<std::string, std::string>> machine_reports(std::string const &text)
{
  std::vector<std::multimap<std::string, std::string>> reports;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      continue;
    auto key = line.substr(0, tab), value = line.substr(tab + 1);
    if (key == "report")
      reports.emplace_back();
    else if (!reports.empty())
      reports.back().emplace(key, value);
  }
  return reports;
}

std::string field(ReportRow const &row, std::string const &key)
{
  for (auto const &[k, v] : row.fields)
    if (k == key)
      return v;
  return {};
}

std::vector<GroupDefinition> corpus_up_to(std::uint64_t order)
{
  std::vector<GroupDefinition> out;
  for (auto const &def : builtin_corpus())
    if (*def.expected_order <= order)
      out.push_back(def);
  return out;
}

Outcome a5_counterexample()
{
  Outcome o;
  auto start = Clock::now();
  std::ostringstream out, err;
  int code = cli::run_command({"verify-a", "--group", "A5", "--pi", "2,3,5", "--format", "machine"}, out, err);
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  auto reports = machine_reports(out.str());
  o.require(code == 1, "exit code " + std::to_string(code));
  o.require(reports.size() == 1, "expected one report");
  if (!o.passed)
    return o;
  auto const &r = reports[0];
  auto value = [&](std::string const &k) {
    auto it = r.find(k);
    return it == r.end() ? std::string() : it->second;
  };
  o.require(value("lhs") == "1", "lhs " + value("lhs"));
  o.require(value("rhs") == "0", "rhs " + value("rhs"));
  o.require(value("verdict") == "fails", "verdict " + value("verdict"));
  bool flagged = false;
  for (auto [it, end] = r.equal_range("hypothesis"); it != end; ++it)
    flagged |= it->second == "solvable Hall subgroup=unmet";
  o.require(flagged, "solvable Hall subgroup not flagged unmet");
  o.require(secs < 10.0, "took " + std::to_string(secs) + " s");
  if (o.passed)
    o.detail = "lhs 1 rhs 0 fails, solvable Hall subgroup unmet";
  return o;
}

Outcome solvable_sweep()
{
  Outcome o;
  std::vector<GroupDefinition> solvable;
  for (auto const &def : builtin_corpus())
    if (is_solvable(def.build()))
      solvable.push_back(def);
  auto scan = scan_corpus(solvable, ScanMode::class_weight_count);
  for (auto const &rep : scan.reports)
    o.require(rep.verdict == Verdict::holds && rep.lhs == rep.rhs,
              rep.group_name + " " + rep.sigma.to_string() + ": " + to_string(rep.verdict));
  o.require(scan.fails == 0 && scan.unmet == 0, "fails or unmet rows in the solvable sweep");

  // A5 is the only non-solvable member; sigma = {2} has a solvable Hall
  // subgroup but A5 is not 2-separable, so it is excluded as unmet
  auto a5 = check_class_weight_count(find_builtin("A5")->build(), PrimeSet{2}, "A5");
  o.require(a5.verdict == Verdict::hypotheses_unmet, "A5 {2}: " + to_string(a5.verdict));
  bool hall_solvable = false, separable = true;
  for (auto const &h : a5.hypotheses) {
    if (h.name == "solvable Hall subgroup")
      hall_solvable = h.met;
    if (h.name == "pi-separable")
      separable = h.met;
  }
  o.require(hall_solvable && !separable, "A5 {2} hypothesis flags");
  if (o.passed)
    o.detail = std::to_string(solvable.size()) + " groups, " + std::to_string(scan.reports.size()) +
               " (G, pi) pairs hold; A5 {2} excluded as unmet";
  return o;
}

Outcome classical_instance()
{
  Outcome o;
  auto rep = check_class_weight_count(find_builtin("S4")->build(), PrimeSet{2}, "S4");
  o.require(rep.lhs == 2u && rep.rhs == 2u && rep.verdict == Verdict::holds, "counts or verdict");
  std::set<std::pair<std::string, std::string>> weights;
  for (auto const &row : rep.rows)
    if (row.side == "rhs")
      weights.emplace(field(row, "q_order"), field(row, "gamma_degree"));
  // (V4, degree-2 character of S4/V4 = S3) and (D8, trivial)
  o.require(weights == std::set<std::pair<std::string, std::string>>{{"4", "2"}, {"8", "1"}},
            "weights listed differ");
  if (o.passed)
    o.detail = "2 = 2 with weights (V4, degree 2) and (D8, degree 1)";
  return o;
}

Outcome carter_fiber_refinement()
{
  Outcome o;
  auto g = find_builtin("S4")->build();
  PrimeSet sigma{3};
  std::uint64_t lhs = 0, rhs = 0;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> by_shape;
  for (auto const &r : nilpotent_complement_subgroups(g, sigma)) {
    auto rep = check_carter_fiber_count(g, sigma, r, "S4");
    o.require(rep.verdict == Verdict::holds, rep.subject + ": " + to_string(rep.verdict));
    lhs += rep.lhs.value_or(0);
    rhs += rep.rhs.value_or(0);
    std::string shape = std::to_string(r.size());
    if (r.size() == 4)
      shape += r.exponent() == 4 ? "c" : (is_normal(g, r) ? "n" : "v");
    auto &slot = by_shape[shape];
    slot.first += *rep.lhs;
    slot.second += *rep.rhs;
  }
  // D8: 1 = 1, normal V4: 1 = 1, the other V4, C2 classes and C4: 0 = 0
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> expected = {
    {"1", {0, 0}}, {"2", {0, 0}}, {"4c", {0, 0}}, {"4n", {1, 1}}, {"4v", {0, 0}}, {"8", {1, 1}}};
  o.require(by_shape == expected, "per-R counts differ");
  o.require(lhs == 2 && rhs == 2, "sums " + std::to_string(lhs) + ", " + std::to_string(rhs));
  o.require(sigma_partial_characters(g, sigma).size() == 2, "|I(S4)| != 2");
  if (o.passed)
    o.detail = "D8 1=1, V4 1=1, C2 and C4 0=0, sums 2 = 2 = |I(S4)|";
  return o;
}

Outcome canonical_bijection()
{
  Outcome o;
  std::size_t instances = 0, checks = 0;
  std::set<std::string> seen;
  for (auto const &def : builtin_corpus()) {
    auto g = def.build();
    for (auto const &sigma : prime_subsets(g.size())) {
      PermGroup n = o_sigma(g, sigma);
      if (n.size() != sigma_part(g.size(), sigma) || n.size() == 1 || n.size() == g.size())
        continue;
      auto h = find_hall_subgroup(g, sigma.complement_in(g.size()));
      if (!h || !is_solvable(*h))
        continue;
      ++instances;
      seen.insert(def.name + " " + sigma.to_string());
      for (auto const &cls : subgroup_lattice(*h).classes()) {
        if (!cls.nilpotent)
          continue;
        auto rep = check_canonical_bijection(g, n, *h, sigma, cls.representative, def.name);
        ++checks;
        o.require(rep.verdict == Verdict::holds,
                  def.name + " " + sigma.to_string() + " " + rep.subject + ": " + to_string(rep.verdict));
      }
    }
  }
  o.require(seen.count("A4 {2}") && seen.count("C3xC3:C2 {3}"), "required instances missing");
  if (o.passed)
    o.detail = std::to_string(instances) + " split instances, " + std::to_string(checks) + " nilpotent R checked";
  return o;
}

std::vector<PropertyResult> const &full_suite()
{
  static auto const results = run_property_suite(builtin_corpus());
  return results;
}

std::set<std::string> const table_properties = {"character table orthogonality and degree equation",
                                                "character degrees divide the group order",
                                                "Frobenius reciprocity"};

/// The named properties, or with `rest` every property outside table_properties.
Outcome properties(std::set<std::string> const &names, bool rest = false)
{
  Outcome o;
  std::size_t found = 0;
  std::uint64_t checked = 0;
  for (auto const &r : full_suite()) {
    if (rest ? table_properties.count(r.name) > 0 : names.count(r.name) == 0)
      continue;
    ++found;
    checked += r.checked;
    o.require(r.passed, r.name + ": " + r.witness);
    o.require(r.checked > 0, r.name + ": nothing checked");
  }
  o.require(rest ? found + table_properties.size() == full_suite().size() && names.size() <= found
                 : found == names.size(),
            "missing properties");
  if (o.passed)
    o.detail = std::to_string(found) + " properties, " + std::to_string(checked) + " instances";
  return o;
}

Outcome oracle_equivalence()
{
  Outcome o;
  auto corpus = corpus_up_to(200);
  for (auto const &def : corpus) {
    PermGroup g = def.build();
    auto const &name = def.name;
    auto brute = oracle::closure(g.degree(), def.permutations());
    o.require(brute.size() == g.size() && brute == g.elements(), name + ": order");

    auto bclasses = oracle::classes(brute);
    auto const &cd = class_data(g);
    o.require(bclasses.size() == cd.size(), name + ": class count");
    for (auto const &cls : cd.classes) {
      oracle::Subset members;
      for (auto m : cls.members)
        members.insert(g.elements()[m]);
      o.require(std::find(bclasses.begin(), bclasses.end(), members) != bclasses.end(), name + ": class");
    }

    auto subs = oracle::all_subgroups(g.degree(), brute);
    auto const &lat = subgroup_lattice(g);
    o.require(lat.total_subgroups() == subs.size(), name + ": subgroup count");
    std::vector<std::pair<std::size_t, std::size_t>> shape;
    for (auto const &cls : lat.classes())
      shape.emplace_back(cls.order, cls.class_size);
    std::sort(shape.begin(), shape.end());
    o.require(shape == oracle::subgroup_class_shape(brute, subs), name + ": subgroup classes");

    for (auto const &cls : lat.classes()) {
      auto const &elems = cls.representative.elements();
      auto bn = oracle::normalizer(brute, oracle::Subset(elems.begin(), elems.end()));
      PermGroup nn = normalizer(g, cls.representative);
      bool same = nn.size() == bn.size();
      for (auto const &x : nn.elements())
        same = same && bn.count(x);
      o.require(same, name + ": normalizer");
    }
  }
  if (o.passed)
    o.detail = std::to_string(corpus.size()) + " groups of order <= 200";
  return o;
}

Outcome clifford_vertices()
{
  Outcome o;
  auto rep = clifford_vertex_example();
  for (auto const &h : rep.hypotheses)
    o.require(h.met, "structure check " + h.name);
  o.require(rep.lhs == 1u && rep.rhs == 2u, "counts differ");
  o.require(rep.verdict == Verdict::holds, to_string(rep.verdict));
  if (o.passed)
    o.detail = "order 216 reconstruction: |I(G_tau|Q1,tau)| = 1, |I(G|Q1,tau)| = 2";
  return o;
}

} // namespace

int main()
{
  criterion("A5 counterexample", a5_counterexample);
  criterion("pi-solvable corpus sweep", solvable_sweep);
  criterion("classical weight instance S4", classical_instance);
  criterion("per-R refinement on S4", carter_fiber_refinement);
  criterion("canonical bijection on split instances", canonical_bijection);
  criterion("character table properties", [] { return properties(table_properties); });
  criterion("pi-theory properties", [] {
    return properties({"|I(G)| equals the number of pi-classes", "vertex degree law",
                       "Glauberman correspondence is a bijection",
                       "Glauberman correspondence is independent of the series",
                       "Glauberman correspondence is equivariant",
                       "vertex-preserving constituents form one N_G(Q)-orbit",
                       "I(G|Q,tau) counted over the stabilizer of tau"},
                      true);
  });
  criterion("oracle equivalence", oracle_equivalence);
  criterion("Clifford correspondence and vertices (order 216)", clifford_vertices);
  std::cout << "SKIP  J4 weight count: needs the modular tables of J4, out of reach of this library" << std::endl;
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
