#include "nilweight/weights.hpp"

#include "nilweight/characters.hpp"
#include "nilweight/subgroup_lattice.hpp"

namespace nilweight
{

namespace
{

struct QuotientHolder
{
  std::shared_ptr<NormalizerQuotient const> value;
};

struct WeightSet
{
  std::vector<Weight> weights;
};

std::shared_ptr<NormalizerQuotient const> quotient_ptr(PermGroup const &group, std::size_t q_class)
{
  auto const &lat = subgroup_lattice(group);
  PermGroup const &q = lat[q_class].representative;
  // The representative belongs to this lattice only, but the same object may
  // head another lattice (Q = G), so the tag records which one.
  auto tag = reinterpret_cast<std::uintptr_t>(&lat);
  auto holder = q.memo<QuotientHolder>(tag, [&] {
    PermGroup n = lat.normalizer(q_class);
    auto nq = std::make_shared<NormalizerQuotient const>(
      NormalizerQuotient{n, coset_action_quotient(n, q)});
    return std::make_shared<QuotientHolder const>(QuotientHolder{nq});
  });
  return holder->value;
}

std::vector<Weight> compute_weights(PermGroup const &group, PrimeSet const &sigma,
                                    bool nilpotent_only)
{
  auto const &lat = subgroup_lattice(group);
  std::vector<Weight> out;
  for (auto const &cls : lat.classes()) {
    if (!cls.is_sigma_group(sigma) || (nilpotent_only && !cls.nilpotent))
      continue;
    auto quotient = quotient_ptr(group, cls.index);
    auto const &image = quotient->action.image();
    auto const &table = character_table(image);
    for (std::size_t i = 0; i < table.size(); ++i)
      if (has_sigma_defect_zero(table[i], sigma))
        out.push_back({cls.index, cls.representative, quotient, i, table[i].degree().integer()});
  }
  return out;
}

} // anonymous namespace

NormalizerQuotient const &normalizer_quotient(PermGroup const &group, std::size_t q_class)
{
  return *quotient_ptr(group, q_class);
}

std::vector<Weight> const &enumerate_weights(PermGroup const &group, PrimeSet const &sigma,
                                             bool nilpotent_only)
{
  auto set = group.memo<WeightSet>(sigma.key() * 2 + (nilpotent_only ? 1 : 0), [&] {
    return std::make_shared<WeightSet const>(WeightSet{compute_weights(group, sigma, nilpotent_only)});
  });
  return set->weights;
}

std::size_t weights_with_first_component(PermGroup const &group, PrimeSet const &sigma,
                                         PermGroup const &q)
{
  auto cls = subgroup_lattice(group).class_of(q);
  std::size_t count = 0;
  for (auto const &w : enumerate_weights(group, sigma, false))
    count += w.q_class == cls;
  return count;
}

} // namespace nilweight
