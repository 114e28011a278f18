#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/partial.hpp"
#include "nilweight/verify.hpp"
#include "nilweight/weights.hpp"

using namespace nilweight;

namespace
{

std::string field(ReportRow const &row, std::string const &key)
{
  for (auto const &[k, v] : row.fields)
    if (k == key)
      return v;
  return "";
}

std::uint64_t side_sum(VerificationReport const &rep, std::string const &side)
{
  std::uint64_t n = 0;
  for (auto const &row : rep.rows)
    if (row.side == side)
      n += row.count;
  return n;
}

bool flag(VerificationReport const &rep, std::string const &name)
{
  for (auto const &h : rep.hypotheses)
    if (h.name == name)
      return h.met;
  throw std::runtime_error("no hypothesis " + name);
}

} // namespace

TEST_CASE("weights")
{
  auto s4 = builtin("S4");
  auto const &w = enumerate_weights(s4, PrimeSet{2}, true);
  REQUIRE(w.size() == 2);
  CHECK(w[0].q.size() == 4);
  CHECK(w[0].quotient->action.image().size() == 6);
  CHECK(w[0].gamma_degree == 2);
  CHECK(w[1].q.size() == 8);
  CHECK(w[1].gamma_degree == 1);

  CHECK(enumerate_weights(builtin("A5"), PrimeSet{2, 3, 5}, true).empty());

  // a solvable sigma-group has the single weight (Carter subgroup, 1)
  for (auto name : {"S4", "D8", "A4", "S3xS3", "C3:C4"}) {
    auto g = builtin(name);
    auto sigma = PrimeSet::of(g.size());
    auto const &ws = enumerate_weights(g, sigma, true);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].q.size() == carter_subgroups(g).order);
    CHECK(ws[0].gamma_degree == 1);
  }

  // V4 in S4 is normal; as a 2-group it contributes to both counts
  CHECK(weights_with_first_component(s4, PrimeSet{2}, group_of(4, {"(1,2)(3,4)", "(1,3)(2,4)"})) == 1);
  CHECK(weights_with_first_component(s4, PrimeSet{2}, group_of(4, {"(1,2)"})) == 0);
}

TEST_CASE("class and weight count reports")
{
  auto rep = check_class_weight_count(builtin("S4"), PrimeSet{2}, "S4");
  CHECK(rep.lhs == 2u);
  CHECK(rep.rhs == 2u);
  CHECK(rep.verdict == Verdict::holds);
  CHECK(side_sum(rep, "lhs") == 2);
  CHECK(side_sum(rep, "rhs") == 2);
  std::vector<std::pair<std::string, std::string>> listed;
  for (auto const &row : rep.rows)
    if (row.side == "rhs")
      listed.emplace_back(field(row, "q_order"), field(row, "gamma_degree"));
  CHECK(listed == std::vector<std::pair<std::string, std::string>>{{"4", "2"}, {"8", "1"}});

  auto a5 = check_class_weight_count(builtin("A5"), PrimeSet{2, 3, 5}, "A5");
  CHECK(a5.lhs == 1u);
  CHECK(a5.rhs == 0u);
  CHECK(a5.verdict == Verdict::fails);
  CHECK(flag(a5, "pi-separable"));
  CHECK_FALSE(flag(a5, "solvable Hall subgroup"));

  auto a5_2 = check_class_weight_count(builtin("A5"), PrimeSet{2});
  CHECK_FALSE(flag(a5_2, "pi-separable"));
  CHECK(flag(a5_2, "solvable Hall subgroup"));
  CHECK(a5_2.verdict != Verdict::holds);

  for (auto sigma : {PrimeSet{}, PrimeSet{2}, PrimeSet{2, 3}}) {
    auto t = check_class_weight_count(builtin("trivial"), sigma);
    CHECK(t.lhs == 1u);
    CHECK(t.rhs == 1u);
    CHECK(t.verdict == Verdict::holds);
  }
}

TEST_CASE("Carter fiber counts on S4")
{
  auto s4 = builtin("S4");
  PrimeSet sigma{3};
  auto b = [&](std::vector<std::string> const &gens) {
    return check_carter_fiber_count(s4, sigma, group_of(4, gens), "S4");
  };
  auto d8 = b({"(1,2,3,4)", "(1,3)"});
  CHECK(d8.lhs == 1u);
  CHECK(d8.rhs == 1u);
  CHECK(d8.verdict == Verdict::holds);
  auto v4 = b({"(1,2)(3,4)", "(1,3)(2,4)"});
  CHECK(v4.lhs == 1u);
  CHECK(v4.rhs == 1u);
  CHECK(v4.verdict == Verdict::holds);
  for (auto const &gens : std::vector<std::vector<std::string>>{
         {"(1,2)"}, {"(1,2)(3,4)"}, {"(1,2,3,4)"}, {"(1,2)", "(3,4)"}, {"()"}}) {
    auto rep = b(gens);
    CHECK(rep.lhs == 0u);
    CHECK(rep.rhs == 0u);
    CHECK(rep.verdict == Verdict::holds);
  }

  // summing over all R-classes recovers |I(G)| and the sigma'-weight count
  std::uint64_t lhs = 0, rhs = 0;
  for (auto const &r : nilpotent_complement_subgroups(s4, sigma)) {
    auto rep = check_carter_fiber_count(s4, sigma, r);
    CHECK(rep.verdict == Verdict::holds);
    CHECK(side_sum(rep, "lhs") == *rep.lhs);
    lhs += *rep.lhs;
    rhs += *rep.rhs;
  }
  CHECK(lhs == 2);
  CHECK(rhs == enumerate_weights(s4, PrimeSet{2}, true).size());

  // R must be a sigma'-group
  auto bad = b({"(1,2,3)"});
  CHECK(bad.verdict == Verdict::hypotheses_unmet);
  CHECK_FALSE(bad.lhs);
}

TEST_CASE("normalizer counting")
{
  auto a4 = builtin("A4");
  auto v4 = group_of(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto c3 = group_of(4, {"(1,2,3)"});
  auto one = PermGroup(4);
  auto rep = check_normalizer_counting(a4, PrimeSet{2}, c3, v4, one, 0);
  CHECK(rep.lhs == 1u);
  CHECK(rep.rhs == 1u);
  CHECK(rep.verdict == Verdict::holds);

  // Q = 1: both sides count the members with trivial vertex
  auto trivial_q = check_normalizer_counting(a4, PrimeSet{2}, one, v4, one, 0);
  CHECK(trivial_q.verdict == Verdict::holds);
  CHECK(trivial_q.lhs == ipi_with_vertex(a4, PrimeSet{2}, one).size());

  auto s4c3 = builtin("S4xC3");
  auto l = group_of(7, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto q = group_of(7, {"(5,6,7)"});
  auto m = PermGroup(7);
  auto r2 = check_normalizer_counting(s4c3, PrimeSet{2}, q, l, m, 0);
  CHECK(r2.verdict == Verdict::holds);
  CHECK(r2.lhs == r2.rhs);

  // L = 1 makes LQ = Q, which is not normal
  auto s4 = builtin("S4");
  auto bad = check_normalizer_counting(s4, PrimeSet{3}, group_of(4, {"(1,2)"}), PermGroup(4), PermGroup(4), 0);
  CHECK(bad.verdict == Verdict::hypotheses_unmet);
}

TEST_CASE("canonical bijection")
{
  auto a4 = builtin("A4");
  auto v4 = group_of(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  auto c3 = group_of(4, {"(1,2,3)"});
  auto rep = check_canonical_bijection(a4, v4, c3, PrimeSet{2}, c3, "A4");
  CHECK(rep.verdict == Verdict::holds);
  CHECK(rep.lhs == 1u);
  CHECK(rep.rhs == 1u);

  // R = 1 gives the identity on I(G|1)
  auto id = check_canonical_bijection(a4, v4, c3, PrimeSet{2}, PermGroup(4));
  CHECK(id.verdict == Verdict::holds);
  for (auto const &row : id.rows)
    if (row.side == "lhs")
      CHECK(field(row, "index") == field(row, "image"));

  auto g = builtin("C3xC3:C2");
  auto n = group_of(6, {"(1,2,3)", "(4,5,6)"});
  auto h = group_of(6, {"(1,4)(2,5)(3,6)"});
  for (auto const &r : {PermGroup(6), h}) {
    auto b = check_canonical_bijection(g, n, h, PrimeSet{3}, r);
    CHECK(b.verdict == Verdict::holds);
    auto t = check_carter_fiber_count(g, PrimeSet{3}, r);
    CHECK(t.verdict == Verdict::holds);
    CHECK(b.lhs == t.lhs);
  }

  auto s4 = builtin("S4");
  auto none = check_canonical_bijection(s4, v4, group_of(4, {"(1,2)", "(1,2,3)"}), PrimeSet{2},
                                        PermGroup(4));
  CHECK(none.verdict == Verdict::hypotheses_unmet);
}
