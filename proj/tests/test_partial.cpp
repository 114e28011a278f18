#include <doctest.h>

#include "helpers.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/partial.hpp"

using namespace nilweight;

namespace
{

PartialValues ints(std::vector<std::int64_t> const &v)
{
  return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("partial characters of small groups")
{
  auto s3 = builtin("S3");
  auto const &irr = sigma_partial_characters(s3, PrimeSet{3});
  REQUIRE(irr.size() == 2);
  CHECK(irr[0].values == ints({1, 1}));
  CHECK(irr[1].values == ints({2, -1}));
  CHECK(irr[0].lifts == std::vector<std::size_t>{0, 1});

  auto s4 = builtin("S4");
  CHECK(sigma_partial_characters(s4, PrimeSet{3}).size() == 2);
  CHECK(sigma_partial_characters(s4, PrimeSet{2}).size() == 4);

  // a sigma-group: I_sigma(G) = Irr(G)
  auto d8 = builtin("D8");
  auto const &t = character_table(d8);
  auto const &p = sigma_partial_characters(d8, PrimeSet{2});
  REQUIRE(p.size() == t.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(p[i].values == t[i].values);

  CHECK_THROWS_AS(sigma_partial_characters(builtin("A5"), PrimeSet{2}), PreconditionError);
  CHECK(sigma_partial_characters(builtin("A5"), PrimeSet{2, 3, 5}).size() == 5);
  CHECK(sigma_partial_characters(builtin("A5"), PrimeSet{}).size() == 1);
}

TEST_CASE("decomposition on subgroups")
{
  auto s3 = builtin("S3");
  auto c3 = group_of(3, {"(1,2,3)"});
  auto const &irr = sigma_partial_characters(s3, PrimeSet{3});
  auto const &t3 = sigma_partial_characters(c3, PrimeSet{3});
  auto dec = decompose_on_subgroup(irr[1], c3);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].second == 1);
  CHECK(t3[dec[0].first].degree() == 1);
  CHECK(dec[0].first != 0);
  CHECK(dec[1].first != 0);
  CHECK(decompose_on_subgroup(irr[0], c3) == std::vector<std::pair<std::size_t, std::int64_t>>{{0, 1}});
  CHECK(decompose_on_subgroup(irr[1], s3) == std::vector<std::pair<std::size_t, std::int64_t>>{{1, 1}});
}

TEST_CASE("Clifford correspondents")
{
  auto s3 = builtin("S3");
  auto c3 = group_of(3, {"(1,2,3)"});
  auto const &irr = sigma_partial_characters(s3, PrimeSet{3});
  auto const &t3 = sigma_partial_characters(c3, PrimeSet{3});
  auto mu = clifford_correspondent(irr[1], t3[1]);
  CHECK(mu.group.size() == 3);
  CHECK(mu.values == t3[1].values);
  CHECK(induce_partial(mu.group, PrimeSet{3}, mu.values, s3) == irr[1].values);
  CHECK_THROWS_AS(clifford_correspondent(irr[0], t3[1]), PreconditionError);
  // G_theta = G gives phi back
  auto back = clifford_correspondent(irr[0], t3[0]);
  CHECK(back.group.size() == 6);
  CHECK(back.values == irr[0].values);

  auto a4 = builtin("A4");
  auto v4 = group_of(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  PrimeSet two{2};
  auto const &ia4 = sigma_partial_characters(a4, two);
  auto const &iv4 = sigma_partial_characters(v4, two);
  REQUIRE(ia4.size() == 2);
  CHECK(ia4[1].degree() == 3);
  for (std::size_t k = 1; k < iv4.size(); ++k) {
    auto m = clifford_correspondent(ia4[1], iv4[k]);
    CHECK(m.group.size() == 4);
    CHECK(m.values == iv4[k].values);
  }
}

TEST_CASE("vertices")
{
  auto s4 = builtin("S4");
  PrimeSet three{3};
  auto const &irr = partial_characters_with_vertices(s4, three);
  REQUIRE(irr.size() == 2);
  CHECK(vertex(irr[0]).order == 8);
  auto const &v = vertex(irr[1]);
  CHECK(v.order == 4);
  CHECK(v.class_size == 1); // the normal Klein four-group

  auto ipi = [&](std::string const &gen_text) {
    std::vector<std::string> gens;
    std::size_t start = 0;
    while (true) {
      auto bar = gen_text.find('|', start);
      gens.push_back(gen_text.substr(start, bar - start));
      if (bar == std::string::npos)
        break;
      start = bar + 1;
    }
    return ipi_with_vertex(s4, three, group_of(4, gens));
  };
  CHECK(ipi("(1,2)").empty());
  auto d8 = ipi("(1,2,3,4)|(1,3)");
  REQUIRE(d8.size() == 1);
  CHECK(d8[0].degree() == 1);
  CHECK_THROWS_AS(ipi("(1,2,3)"), PreconditionError);

  // Q trivial contains the restrictions of characters of full sigma'-defect
  auto s3 = builtin("S3");
  auto triv = ipi_with_vertex(s3, three, PermGroup(3));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].degree() == 2);

  // U = G: a partial character of sigma-degree is induced from itself
  auto c7c3 = builtin("C7:C3");
  for (auto const &phi : partial_characters_with_vertices(c7c3, PrimeSet{7}))
    if (phi.degree() == 1)
      CHECK(vertex(phi).order == 3);
}

TEST_CASE("partial-character invariants on the corpus")
{
  for (auto const &def : builtin_corpus()) {
    PermGroup g = def.build();
    if (g.size() > 72)
      continue;
    auto const &table = character_table(g);
    for (auto const &sigma : prime_subsets(g.size())) {
      if (!is_sigma_separable(g, sigma))
        continue;
      CAPTURE(def.name);
      CAPTURE(sigma.to_string());
      auto const &irr = partial_characters_with_vertices(g, sigma);
      CHECK(irr.size() == sigma_class_indices(g, sigma).size());
      // every restriction decomposes with nonnegative integer multiplicities
      for (auto const &chi : table.irreducibles)
        CHECK_NOTHROW(decompose_partial(g, sigma, sigma_restriction(chi, sigma)));
      // vertex degree law
      auto sc = sigma.complement_in(g.size());
      for (auto const &phi : irr) {
        auto const &q = vertex(phi);
        CHECK(sigma_part(static_cast<std::uint64_t>(phi.degree()), sc) ==
              sigma_part(g.size() / q.order, sc));
      }
      // Clifford round trip over every normal subgroup
      for (auto const &n : normal_subgroups(g)) {
        for (auto const &theta : sigma_partial_characters(n, sigma))
          for (auto const &phi : irr) {
            if (!lies_over(phi, theta))
              continue;
            auto mu = clifford_correspondent(phi, theta);
            CHECK(induce_partial(mu.group, sigma, mu.values, g) == phi.values);
          }
      }
    }
  }
}
