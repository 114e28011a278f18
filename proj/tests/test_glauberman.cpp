#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "nilweight/characters.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/glauberman.hpp"
#include "nilweight/group_ops.hpp"

using namespace nilweight;

namespace
{

struct ActionCase
{
  std::string name;
  std::size_t degree;
  std::vector<std::string> acted;
  std::vector<std::string> acting;
};

std::vector<ActionCase> corpus_actions()
{
  return {
    {"C3xC3 by swap", 6, {"(1,2,3)", "(4,5,6)"}, {"(1,4)(2,5)(3,6)"}},
    {"V4 by C3", 4, {"(1,2)(3,4)", "(1,3)(2,4)"}, {"(1,2,3)"}},
    {"C3xC3 by C2xC2", 6, {"(1,2,3)", "(4,5,6)"}, {"(1,2)", "(4,5)"}},
    {"C3xC3 by diagonal C2", 6, {"(1,2,3)", "(4,5,6)"}, {"(1,2)(4,5)"}},
    {"V4 by C3xC3", 7, {"(1,2)(3,4)", "(1,3)(2,4)"}, {"(1,2,3)", "(5,6,7)"}},
    {"V4 by trivial C3", 7, {"(1,2)(3,4)", "(1,3)(2,4)"}, {"(5,6,7)"}},
    {"C7 by C3", 7, {"(1,2,3,4,5,6,7)"}, {"(1,2,4)(3,6,5)"}},
    {"C5 by C2", 5, {"(1,2,3,4,5)"}, {"(2,5)(3,4)"}},
    {"C3 by C4", 7, {"(1,2,3)"}, {"(1,2)(4,5,6,7)"}},
    {"C5 by S4", 9, {"(5,6,7,8,9)"}, {"(1,2)", "(1,2,3,4)"}},
  };
}

} // namespace

TEST_CASE("Glauberman correspondence examples")
{
  // trivial acting group: identity map
  auto s3 = builtin("S3");
  auto id = make_glauberman_action(s3, PermGroup(3));
  auto m = glauberman_map(id);
  for (std::size_t i = 0; i < m.size(); ++i)
    CHECK(m[i] == i);

  // swap on C3 x C3: alpha x alpha goes to alpha^2 on the diagonal
  auto g = group_of(6, {"(1,2,3)", "(4,5,6)"});
  auto s = group_of(6, {"(1,4)(2,5)(3,6)"});
  auto action = make_glauberman_action(g, s);
  CHECK(action.fixed.size() == 3);
  auto inv = invariant_characters(action);
  CHECK(inv.size() == 3);
  auto const &tg = character_table(g);
  auto const &tc = character_table(action.fixed);
  for (auto chi : inv) {
    auto star = glauberman_correspondent(action, chi);
    auto restricted = restrict_character(tg[chi], action.fixed);
    // (alpha x alpha) on the diagonal is the linear character alpha^2
    CHECK(restricted == tc[star]);
  }

  CHECK_THROWS_AS(make_glauberman_action(builtin("S3"), group_of(3, {"(1,2)"})),
                  PreconditionError);
  CHECK_THROWS_AS(make_glauberman_action(group_of(4, {"(1,2)(3,4)"}), group_of(4, {"(1,2,3)"})),
                  PreconditionError);
}

TEST_CASE("Glauberman bijectivity, series independence and equivariance")
{
  for (auto const &c : corpus_actions()) {
    CAPTURE(c.name);
    auto g = group_of(c.degree, c.acted);
    auto s = group_of(c.degree, c.acting);
    auto action = make_glauberman_action(g, s);
    auto inv = invariant_characters(action);
    auto map = glauberman_map(action);
    CHECK(map.size() == character_table(action.fixed).size());
    CHECK(std::set<std::size_t>(map.begin(), map.end()).size() == map.size());

    auto all = composition_series(s, 16);
    REQUIRE(!all.empty());
    for (auto const &series : all)
      for (std::size_t i = 0; i < inv.size(); ++i)
        CHECK(glauberman_correspondent(action, inv[i], series) == map[i]);

    // for every T normal in S, the T-correspondence commutes with S
    for (auto const &t : normal_subgroups(s)) {
      auto sub = make_glauberman_action(g, t);
      auto inv_t = invariant_characters(sub);
      for (auto const &x : s.elements())
        for (auto chi : inv_t) {
          auto moved = conjugate_character(g, chi, x);
          CHECK(glauberman_correspondent(sub, moved) ==
                conjugate_character(sub.fixed, glauberman_correspondent(sub, chi), x));
        }
    }
  }
}

TEST_CASE("composition series")
{
  CHECK(composition_series(builtin("C12"), 100).size() == 3);
  CHECK(composition_series(builtin("V4"), 100).size() == 3);
  CHECK(composition_series(builtin("S4"), 100).size() == 3);
  CHECK(composition_series(PermGroup(2), 100).size() == 1);
  CHECK_THROWS_AS(composition_series(builtin("A5")), PreconditionError);
}
