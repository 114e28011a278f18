#include "nilweight/characters.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>

#include "modular.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/limits.hpp"

namespace nilweight
{

namespace
{

using modular::Matrix;

std::mutex store_mutex;
std::shared_ptr<TableStore> installed_store;

std::shared_ptr<TableStore> current_store()
{
  std::lock_guard lock(store_mutex);
  return installed_store;
}

std::int64_t choose_prime(std::uint64_t order, std::uint64_t exponent)
{
  constexpr std::uint64_t cap = std::uint64_t{1} << 31;
  for (std::uint64_t q = exponent + 1; q < cap; q += exponent)
    if (q * q > 4 * order && is_prime(q))
      return static_cast<std::int64_t>(q);
  throw ConfigurationError("no prime q = 1 mod " + std::to_string(exponent) +
                           " below 2^31 for Dixon-Schneider");
}

/// Decomposes the subspace spanned by the columns of `basis` into the
/// eigenspaces of x. Returns an empty list if x is not diagonalizable there.
std::vector<Matrix> eigenspaces(Matrix const &x, Matrix const &basis, std::int64_t q)
{
  Matrix xb = modular::multiply(x, basis, q);
  std::vector<Matrix> pieces;
  Eigen::Index found = 0;
  for (std::int64_t lambda = 0; lambda < q && found < basis.cols(); ++lambda) {
    Matrix shifted = xb;
    for (Eigen::Index i = 0; i < shifted.rows(); ++i)
      for (Eigen::Index j = 0; j < shifted.cols(); ++j)
        shifted(i, j) = modular::reduce(shifted(i, j) - lambda * basis(i, j), q);
    Matrix kernel = modular::nullspace(shifted, q);
    if (kernel.cols() == 0)
      continue;
    pieces.push_back(modular::multiply(basis, kernel, q));
    found += kernel.cols();
  }
  if (found != basis.cols())
    return {};
  return pieces;
}

CharacterTable dixon_schneider(PermGroup const &group)
{
  auto const &cd = class_data(group);
  auto const &elems = group.elements();
  std::size_t r = cd.size();
  std::uint64_t order = group.size();
  CharacterTable table{group, {}};
  if (r == 1) {
    table.irreducibles.push_back(trivial_character(group));
    return table;
  }

  std::uint64_t exponent = group.exponent();
  std::int64_t q = choose_prime(order, exponent);

  // M_j(k, l) = #{x in K_j : x^-1 g_l in K_k}; the central characters
  // are the common right eigenvectors of the M_j.
  std::vector<Matrix> m(r, Matrix::Zero(r, r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < r; ++l) {
      Perm const &g = cd.classes[l].representative;
      for (auto x : cd.classes[j].members) {
        auto y = group.index_of(elems[x].inverse() * g);
        m[j](cd.class_of[*y], l) += 1;
      }
    }
  for (auto &mat : m)
    for (Eigen::Index i = 0; i < mat.size(); ++i)
      mat.data()[i] %= q;

  std::mt19937_64 rng(limits().seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, q - 1);
  std::vector<Matrix> pending{Matrix::Identity(static_cast<Eigen::Index>(r),
                                               static_cast<Eigen::Index>(r))};
  std::vector<Matrix> lines;
  while (!pending.empty()) {
    Matrix space = std::move(pending.back());
    pending.pop_back();
    if (space.cols() == 1) {
      lines.push_back(std::move(space));
      continue;
    }
    bool split = false;
    constexpr std::size_t random_tries = 4;
    for (std::size_t attempt = 0; attempt < random_tries + r && !split; ++attempt) {
      Matrix x;
      if (attempt < random_tries) {
        x = Matrix::Zero(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
        for (std::size_t j = 1; j < r; ++j)
          x = (x + coeff(rng) * m[j]).unaryExpr([q](std::int64_t v) { return v % q; });
      } else if (attempt - random_tries == 0) {
        continue; // M_0 is the identity
      } else {
        x = m[attempt - random_tries];
      }
      auto pieces = eigenspaces(x, space, q);
      if (pieces.empty())
        throw InternalConsistencyError("class matrix not diagonalizable mod " +
                                       std::to_string(q));
      if (pieces.size() > 1) {
        for (auto &p : pieces)
          pending.push_back(std::move(p));
        split = true;
      }
    }
    if (!split)
      throw InternalConsistencyError("common eigenspace of dimension " +
                                     std::to_string(space.cols()) + " does not split");
  }
  if (lines.size() != r)
    throw InternalConsistencyError("found " + std::to_string(lines.size()) +
                                   " central characters for " + std::to_string(r) + " classes");

  std::int64_t z = modular::primitive_root(q);
  std::int64_t epsilon = modular::power(z, (q - 1) / static_cast<std::int64_t>(exponent), q);
  auto max_degree = static_cast<std::int64_t>(std::sqrt(static_cast<double>(order))) + 1;

  for (auto const &line : lines) {
    std::vector<std::int64_t> w(r);
    if (line(0, 0) == 0)
      throw InternalConsistencyError("central character vanishes at the identity");
    std::int64_t norm = modular::inverse(line(0, 0), q);
    for (std::size_t l = 0; l < r; ++l)
      w[l] = line(static_cast<Eigen::Index>(l), 0) * norm % q;

    std::int64_t s = 0;
    for (std::size_t l = 0; l < r; ++l) {
      std::int64_t h = static_cast<std::int64_t>(cd.classes[l].size % q);
      s = (s + w[l] * w[cd.inverse_class[l]] % q * modular::inverse(h, q)) % q;
    }
    std::int64_t target =
      static_cast<std::int64_t>(order % q) * modular::inverse(s, q) % q;
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d <= max_degree; ++d)
      if (order % d == 0 && d * d % q == target) {
        degree = d;
        break;
      }
    if (degree == 0)
      throw InternalConsistencyError("no character degree fits mod " + std::to_string(q));

    std::vector<std::int64_t> chi_mod(r);
    for (std::size_t l = 0; l < r; ++l) {
      std::int64_t h = static_cast<std::int64_t>(cd.classes[l].size % q);
      chi_mod[l] = w[l] * degree % q * modular::inverse(h, q) % q;
    }

    Character chi{group, {}};
    for (std::size_t l = 0; l < r; ++l) {
      auto o = static_cast<std::uint32_t>(cd.classes[l].element_order);
      std::int64_t root = modular::power(epsilon, exponent / o, q);
      std::int64_t root_inv = modular::inverse(root, q);
      std::int64_t o_inv = modular::inverse(o, q);
      std::vector<Rational> dense(o);
      std::int64_t total = 0;
      for (std::uint32_t k = 0; k < o; ++k) {
        // multiplicity of the eigenvalue zeta_o^k of rep(g_l)
        std::int64_t acc = 0;
        std::int64_t step = modular::power(root_inv, k, q);
        std::int64_t twist = 1;
        for (std::uint32_t j = 0; j < o; ++j) {
          acc = (acc + chi_mod[cd.power_class[l][j]] * twist) % q;
          twist = twist * step % q;
        }
        std::int64_t mult = acc * o_inv % q;
        if (mult > degree)
          throw InternalConsistencyError("eigenvalue multiplicity out of range");
        dense[k] = mult;
        total += mult;
      }
      if (total != degree)
        throw InternalConsistencyError("eigenvalue multiplicities do not sum to the degree");
      chi.values.push_back(Cyclotomic::from_exponents(o, std::move(dense)));
    }
    table.irreducibles.push_back(std::move(chi));
  }

  auto is_trivial = [](Character const &c) {
    return std::all_of(c.values.begin(), c.values.end(),
                       [](Cyclotomic const &v) { return v == Cyclotomic(1); });
  };
  std::sort(table.irreducibles.begin(), table.irreducibles.end(),
            [&](Character const &a, Character const &b) {
              auto da = a.degree().integer(), db = b.degree().integer();
              if (da != db)
                return da < db;
              bool ta = is_trivial(a), tb = is_trivial(b);
              if (ta != tb)
                return ta;
              return a.values < b.values;
            });
  return table;
}

} // anonymous namespace

ClassFunction &ClassFunction::operator+=(ClassFunction const &rhs)
{
  if (values.size() != rhs.values.size())
    throw PreconditionError("adding class functions of different groups");
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] += rhs.values[i];
  return *this;
}

ClassFunction operator*(Rational c, ClassFunction f)
{
  for (auto &v : f.values)
    v *= Cyclotomic(c);
  return f;
}

ClassFunction trivial_character(PermGroup const &group)
{
  return {group, std::vector<Cyclotomic>(class_data(group).size(), Cyclotomic(1))};
}

ClassFunction permutation_character(PermGroup const &group)
{
  ClassFunction f{group, {}};
  for (auto const &cls : class_data(group).classes) {
    std::int64_t fixed = 0;
    for (std::size_t x = 0; x < group.degree(); ++x)
      fixed += cls.representative[static_cast<Point>(x)] == x;
    f.values.emplace_back(fixed);
  }
  return f;
}

ClassFunction regular_character(PermGroup const &group)
{
  ClassFunction f{group, std::vector<Cyclotomic>(class_data(group).size(), Cyclotomic(0))};
  f.values[0] = Cyclotomic(static_cast<std::int64_t>(group.size()));
  return f;
}

CharacterTable const &character_table(PermGroup const &group)
{
  auto table = group.memo<CharacterTable>(0, [&]() -> std::shared_ptr<CharacterTable const> {
    auto store = current_store();
    if (store) {
      if (auto loaded = store->load(group)) {
        try {
          validate_table(*loaded);
          return loaded;
        } catch (InternalConsistencyError const &) {
          // fall through and recompute
        }
      }
    }
    auto fresh = std::make_shared<CharacterTable const>(dixon_schneider(group));
    validate_table(*fresh);
    if (store)
      store->save(*fresh);
    return fresh;
  });
  return *table; // owned by the group's memo
}

void validate_table(CharacterTable const &table)
{
  auto const &cd = class_data(table.group);
  std::size_t r = cd.size();
  auto fail = [](std::string const &what) { throw InternalConsistencyError("table: " + what); };
  if (table.size() != r)
    fail(std::to_string(table.size()) + " irreducibles for " + std::to_string(r) + " classes");
  std::uint64_t order = table.group.size();
  std::uint64_t sum = 0;
  for (auto const &chi : table.irreducibles) {
    if (chi.size() != r)
      fail("row of wrong length");
    if (!chi.degree().is_rational())
      fail("irrational degree");
    auto d = chi.degree().integer();
    if (d <= 0 || order % static_cast<std::uint64_t>(d))
      fail("degree " + std::to_string(d) + " does not divide the order");
    sum += static_cast<std::uint64_t>(d * d);
  }
  if (sum != order)
    fail("sum of squared degrees is " + std::to_string(sum));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j)
      if (inner_product(table[i], table[j]) != Rational(i == j ? 1 : 0))
        fail("rows " + std::to_string(i) + "," + std::to_string(j) + " not orthonormal");
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t l = k; l < r; ++l) {
      Cyclotomic s;
      for (auto const &chi : table.irreducibles)
        s += chi[k] * chi[l].conj();
      Cyclotomic expect(k == l ? static_cast<std::int64_t>(order / cd.classes[k].size) : 0);
      if (!(s == expect))
        fail("columns " + std::to_string(k) + "," + std::to_string(l) + " not orthogonal");
    }
}

void set_table_store(std::shared_ptr<TableStore> store)
{
  std::lock_guard lock(store_mutex);
  installed_store = std::move(store);
}

std::vector<std::uint32_t> class_fusion(PermGroup const &h, PermGroup const &group)
{
  if (!h.is_subgroup_of(group))
    throw PreconditionError("class fusion: not a subgroup");
  std::vector<std::uint32_t> fusion;
  for (auto const &cls : class_data(h).classes)
    fusion.push_back(class_index(group, cls.representative));
  return fusion;
}

ClassFunction restrict_character(ClassFunction const &chi, PermGroup const &h)
{
  auto fusion = class_fusion(h, chi.group);
  ClassFunction res{h, {}};
  for (auto c : fusion)
    res.values.push_back(chi.values[c]);
  return res;
}

ClassFunction induce_character(ClassFunction const &theta, PermGroup const &group)
{
  auto fusion = class_fusion(theta.group, group);
  auto const &hd = class_data(theta.group);
  auto const &gd = class_data(group);
  std::vector<Cyclotomic> sums(gd.size());
  for (std::size_t c = 0; c < fusion.size(); ++c)
    sums[fusion[c]] += Cyclotomic(static_cast<std::int64_t>(hd.classes[c].size)) * theta[c];
  ClassFunction res{group, {}};
  std::uint64_t order = group.size(), sub = theta.group.size();
  for (std::size_t l = 0; l < gd.size(); ++l) {
    Rational factor(static_cast<std::int64_t>(order / gd.classes[l].size),
                    static_cast<std::int64_t>(sub));
    res.values.push_back(Cyclotomic(factor) * sums[l]);
  }
  return res;
}

Rational inner_product(ClassFunction const &a, ClassFunction const &b)
{
  if (!a.group.same_object(b.group) && !a.group.same_group(b.group))
    throw PreconditionError("inner product of class functions on different groups");
  auto const &cd = class_data(a.group);
  Cyclotomic s;
  for (std::size_t l = 0; l < cd.size(); ++l)
    s += Cyclotomic(static_cast<std::int64_t>(cd.classes[l].size)) * a[l] * b[l].conj();
  if (!s.is_rational())
    throw PreconditionError("inner product " + s.to_string() + " is not rational");
  return s.rational() / static_cast<std::int64_t>(a.group.size());
}

std::vector<std::int64_t> decompose(ClassFunction const &chi, CharacterTable const &table)
{
  std::vector<std::int64_t> mult;
  for (auto const &irr : table.irreducibles) {
    Rational m = inner_product(chi, irr);
    if (m.denominator() != 1)
      throw InternalConsistencyError("non-integral multiplicity " + to_string(m));
    mult.push_back(m.numerator());
  }
  return mult;
}

bool has_sigma_defect_zero(Character const &chi, PrimeSet const &sigma)
{
  auto d = static_cast<std::uint64_t>(chi.degree().integer());
  return sigma_part(d, sigma) == sigma_part(chi.group.size(), sigma);
}

std::vector<std::size_t> irr_over(CharacterTable const &table, PermGroup const &n,
                                  ClassFunction const &theta)
{
  if (!is_normal(table.group, n))
    throw PreconditionError("irr_over: subgroup is not normal");
  std::vector<std::size_t> over;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (inner_product(restrict_character(table[i], n), theta) != Rational(0))
      over.push_back(i);
  return over;
}

} // namespace nilweight
