#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilweight/perm_group.hpp"
#include "nilweight/primes.hpp"

namespace nilweight
{

enum class Verdict
{
  holds,
  fails,
  hypotheses_unmet,
};

std::string to_string(Verdict v);

struct Hypothesis
{
  std::string name;
  bool met = false;
};

/// One line of a report's breakdown: which side it counts towards, how
/// much, and free-form key/value details.
struct ReportRow
{
  std::string side; // "lhs", "rhs" or "info"
  std::uint64_t count = 0;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct VerificationReport
{
  std::string check; // which count or construction is checked
  std::string group_name;
  PrimeSet sigma;
  std::string subject; // e.g. "R = (1,2)(3,4) (order 2)"; may be empty
  std::vector<Hypothesis> hypotheses;
  std::optional<std::uint64_t> lhs;
  std::optional<std::uint64_t> rhs;
  Verdict verdict = Verdict::hypotheses_unmet;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;

  bool hypotheses_met() const;
  /// Sets the verdict from the counts and hypotheses.
  void decide();
};

/// Counts omega'-classes against classes of nilpotent omega-weights.
VerificationReport check_class_weight_count(PermGroup const &group, PrimeSet const &omega,
                                   std::string const &name = "");

/// sigma is the partial-character side; r is a nilpotent sigma'-subgroup.
/// lhs = |union over Q of I_sigma(G|Q)| for the sigma'-subgroups Q having r
/// as a Carter subgroup; rhs = |I_sigma(N_G(r)|r)|, cross-checked against
/// the number of sigma'-weights with first component r.
VerificationReport check_carter_fiber_count(PermGroup const &group, PrimeSet const &sigma,
                                   PermGroup const &r, std::string const &name = "");

/// |I_sigma(G|Q, phi)| against |I_sigma(N_G(Q)|Q, phi)| for L a normal
/// sigma-subgroup with LQ normal, M <= L central and phi = row of
/// character_table(m).
VerificationReport check_normalizer_counting(PermGroup const &group, PrimeSet const &sigma,
                                             PermGroup const &q, PermGroup const &l,
                                             PermGroup const &m, std::size_t phi,
                                             std::string const &name = "");

/// G = NH with N a normal sigma-subgroup and H a solvable complement;
/// builds phi -> (theta* x 1_R)^{N_G(R)} and checks it is a well-defined
/// bijection onto I_sigma(N_G(R)|R), together with the order identity
/// |C_N(Q)||N_H(Q)| = |N_G(Q)| for all Q <= H and N_{H_gamma}(R) = R for
/// the Glauberman preimages gamma arising from R.
VerificationReport check_canonical_bijection(PermGroup const &group, PermGroup const &n,
                                             PermGroup const &h, PrimeSet const &sigma,
                                             PermGroup const &r, std::string const &name = "");

/// Nilpotent sigma'-subgroup classes of G, the R ranged over by the Carter fiber count.
std::vector<PermGroup> nilpotent_complement_subgroups(PermGroup const &group, PrimeSet const &sigma);

} // namespace nilweight
