#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nilweight/cyclotomic.hpp"
#include "nilweight/perm_group.hpp"
#include "nilweight/primes.hpp"

namespace nilweight
{

/// A class function of `group`, indexed by class_data(group).classes.
struct ClassFunction
{
  PermGroup group;
  std::vector<Cyclotomic> values;

  Cyclotomic const &degree() const { return values.front(); }
  std::size_t size() const { return values.size(); }
  Cyclotomic const &operator[](std::size_t i) const { return values[i]; }

  ClassFunction &operator+=(ClassFunction const &rhs);
  friend ClassFunction operator+(ClassFunction a, ClassFunction const &b) { return a += b; }
  friend ClassFunction operator*(Rational c, ClassFunction f);
  friend bool operator==(ClassFunction const &a, ClassFunction const &b)
  {
    return a.values == b.values;
  }
};

using Character = ClassFunction;

ClassFunction trivial_character(PermGroup const &group);
/// The character of the permutation action of `group` on its support points.
ClassFunction permutation_character(PermGroup const &group);
ClassFunction regular_character(PermGroup const &group);

struct CharacterTable
{
  PermGroup group;
  /// Rows sorted by degree, trivial character first, then by values.
  std::vector<Character> irreducibles;

  std::size_t size() const { return irreducibles.size(); }
  Character const &operator[](std::size_t i) const { return irreducibles[i]; }
};

/// Exact table by Dixon-Schneider over a prime field. Memoized on the
/// group, and read from / written to the installed TableStore if any.
CharacterTable const &character_table(PermGroup const &group);

/// Checks orthogonality and the degree equation exactly; throws
/// InternalConsistencyError on failure.
void validate_table(CharacterTable const &table);

/// Bumped whenever the table computation or row order changes, so that
/// persisted tables from older versions are ignored.
inline constexpr int character_table_version = 1;

/// Persistent backing for character tables (installed by the CLI).
class TableStore
{
public:
  virtual ~TableStore() = default;
  virtual std::shared_ptr<CharacterTable const> load(PermGroup const &group) = 0;
  virtual void save(CharacterTable const &table) = 0;
};

void set_table_store(std::shared_ptr<TableStore> store);

/// fusion[c] = class of G containing the c-th class of H (H <= G).
std::vector<std::uint32_t> class_fusion(PermGroup const &h, PermGroup const &group);

ClassFunction restrict_character(ClassFunction const &chi, PermGroup const &h);
ClassFunction induce_character(ClassFunction const &theta, PermGroup const &group);

/// (1/|G|) sum |K| a(K) conj(b(K)); throws PreconditionError on group
/// mismatch or an irrational result.
Rational inner_product(ClassFunction const &a, ClassFunction const &b);

/// Multiplicities of the irreducibles of the table in a character.
std::vector<std::int64_t> decompose(ClassFunction const &chi, CharacterTable const &table);

bool has_sigma_defect_zero(Character const &chi, PrimeSet const &sigma);

/// Indices of the irreducibles of G lying over theta in Irr(N), N normal.
std::vector<std::size_t> irr_over(CharacterTable const &table, PermGroup const &n,
                                  ClassFunction const &theta);

} // namespace nilweight
