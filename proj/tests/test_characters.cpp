#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nilweight/characters.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/subgroup_lattice.hpp"

using namespace nilweight;

TEST_CASE("cyclotomic arithmetic")
{
  auto w = Cyclotomic::root_of_unity(3, 1);
  CHECK(w * w * w == Cyclotomic(1));
  CHECK(w + w * w == Cyclotomic(-1));
  CHECK(w.conj() == w * w);
  CHECK(w.to_string() == "E(3)");
  CHECK((w * w).to_string() == "-1-E(3)");
  auto i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  // embedding: E(3) = E(12)^4, E(4) = E(12)^3
  CHECK(Cyclotomic::root_of_unity(12, 4) == w);
  CHECK(Cyclotomic::root_of_unity(12, 3) == i);
  CHECK((w * i).conductor() == 12);
  CHECK((w * i) * (w * i).conj() == Cyclotomic(1));
  // sqrt(-3) = E(3) - E(3)^2
  auto s = w - w * w;
  CHECK(s * s == Cyclotomic(-3));
  CHECK(std::abs(s.to_complex() - std::complex<double>(0, std::sqrt(3.0))) < 1e-12);
  // sum of all primitive 5th roots is -1
  Cyclotomic sum;
  for (int k = 1; k < 5; ++k)
    sum += Cyclotomic::root_of_unity(5, k);
  CHECK(sum == Cyclotomic(-1));
  CHECK(sum.is_rational());
  CHECK(Cyclotomic(Rational(1, 2)).to_string() == "1/2");
  for (auto const &x : {w, s, i * w + Cyclotomic(Rational(3, 7)), Cyclotomic(5)})
    CHECK(Cyclotomic::deserialize(x.serialize()) == x);
  CHECK_THROWS_AS(Cyclotomic::deserialize("3:1"), MalformedInput);
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
}

TEST_CASE("small tables")
{
  auto s3 = character_table(builtin("S3"));
  REQUIRE(s3.size() == 3);
  CHECK(s3[0] == trivial_character(s3.group));
  CHECK(s3[0].degree() == Cyclotomic(1));
  CHECK(s3[1].degree() == Cyclotomic(1));
  CHECK(s3[2].degree() == Cyclotomic(2));

  auto c3g = builtin("C3");
  auto const &c3 = character_table(c3g);
  REQUIRE(c3.size() == 3);
  // cyclic oracle: every row is k -> zeta^(jk) on the class of g^k
  auto gen = c3g.generators()[0];
  std::set<std::vector<Cyclotomic>> expected, got;
  for (int j = 0; j < 3; ++j) {
    std::vector<Cyclotomic> row(3);
    Perm x = c3g.identity();
    for (int k = 0; k < 3; ++k, x = x * gen)
      row[class_index(c3g, x)] = Cyclotomic::root_of_unity(3, j * k);
    expected.insert(row);
  }
  for (auto const &chi : c3.irreducibles)
    got.insert(chi.values);
  // std::set needs operator<, provided by Cyclotomic
  CHECK(got == expected);

  auto triv = character_table(PermGroup(1));
  CHECK(triv.size() == 1);
  CHECK(triv[0].degree() == Cyclotomic(1));

  auto const &a5 = character_table(builtin("A5"));
  std::vector<std::int64_t> degrees;
  for (auto const &chi : a5.irreducibles)
    degrees.push_back(chi.degree().integer());
  CHECK(degrees == std::vector<std::int64_t>{1, 3, 3, 4, 5});
}

TEST_CASE("restriction, induction, inner products")
{
  auto s3 = builtin("S3");
  auto const &t = character_table(s3);
  auto c3 = group_of(3, {"(1,2,3)"});
  auto c2 = group_of(3, {"(1,2)"});
  auto const &t3 = character_table(c3);

  CHECK(restrict_character(t[0], c3) == trivial_character(c3));
  CHECK(restrict_character(t[2], s3) == t[2]);
  CHECK(restrict_character(t[2], c3) == t3[1] + t3[2]);
  CHECK(induce_character(t3[1], s3) == t[2]);
  CHECK(induce_character(trivial_character(c2), s3) == t[0] + t[2]);
  CHECK(induce_character(trivial_character(s3), s3) == t[0]);
  CHECK(inner_product(t[2], t[0] + t[2]) == Rational(1));
  CHECK(inner_product(trivial_character(s3), regular_character(s3)) == Rational(1));
  CHECK(decompose(permutation_character(s3), t) == std::vector<std::int64_t>{1, 0, 1});
  CHECK_THROWS_AS(restrict_character(t[0], group_of(4, {"(1,4)"})), PreconditionError);
  CHECK_THROWS_AS(inner_product(t[0], t3[0]), PreconditionError);

  CHECK(has_sigma_defect_zero(t[2], PrimeSet{2}));
  CHECK(!has_sigma_defect_zero(t[0], PrimeSet{2}));
  CHECK(has_sigma_defect_zero(t[0], PrimeSet{7}));
  CHECK(!has_sigma_defect_zero(t3[0], PrimeSet{3}));

  CHECK(irr_over(t, c3, t3[1]) == std::vector<std::size_t>{2});
  CHECK(irr_over(t, c3, t3[0]) == std::vector<std::size_t>{0, 1});
  CHECK(irr_over(t, s3, t[1]) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(irr_over(t, c2, trivial_character(c2)), PreconditionError);
}

TEST_CASE("table properties on the corpus")
{
  std::mt19937_64 rng(42);
  for (auto const &def : builtin_corpus()) {
    CAPTURE(def.name);
    PermGroup g = def.build();
    auto const &t = character_table(g);
    auto const &cd = class_data(g);
    CHECK(t.size() == cd.size());
    CHECK_NOTHROW(validate_table(t));

    // real characters and real classes agree in number
    std::size_t real_chars = 0, real_classes = 0;
    for (auto const &chi : t.irreducibles) {
      bool real = true;
      for (auto const &v : chi.values)
        real = real && v == v.conj();
      real_chars += real;
    }
    for (std::size_t c = 0; c < cd.size(); ++c)
      real_classes += cd.inverse_class[c] == c;
    CHECK(real_chars == real_classes);

    // regular character decomposes with multiplicity chi(1)
    auto reg = decompose(regular_character(g), t);
    for (std::size_t i = 0; i < t.size(); ++i)
      CHECK(reg[i] == t[i].degree().integer());

    // Frobenius reciprocity on random (H, theta, chi)
    auto const &lat = subgroup_lattice(g);
    for (int sample = 0; sample < 100; ++sample) {
      auto const &cls = lat[rng() % lat.size()];
      auto const &th = character_table(cls.representative);
      auto const &theta = th[rng() % th.size()];
      auto const &chi = t[rng() % t.size()];
      CHECK(inner_product(induce_character(theta, g), chi) ==
            inner_product(theta, restrict_character(chi, cls.representative)));
    }
  }
}
