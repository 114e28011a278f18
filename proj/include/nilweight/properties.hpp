#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilweight/group_file.hpp"
#include "nilweight/primes.hpp"
#include "nilweight/verify.hpp"

namespace nilweight
{

struct PropertyResult
{
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0; // instances examined
  std::string witness;       // first failing instance
};

struct SuiteOptions
{
  /// Only this prime set; every subset of the prime divisors of |G| if unset.
  std::optional<PrimeSet> sigma;
  /// Groups above this order skip the per-normal-subgroup Clifford and
  /// vertex-orbit checks.
  std::uint64_t clifford_order_bound = 256;
  std::size_t frobenius_samples = 20;
  std::size_t jobs = 1;
};

/// Every property over every (G, sigma) pair; an empty corpus gives an
/// empty list. Deterministic for a fixed seed in limits().
std::vector<PropertyResult> run_property_suite(std::vector<GroupDefinition> const &corpus,
                                               SuiteOptions const &options = {});

enum class ScanMode
{
  class_weight_count,
  carter_fiber_count,
};

struct ScanResult
{
  std::vector<VerificationReport> reports;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t unmet = 0;
};

/// One report per (G, sigma), or per (G, sigma, R-class) in carter_fiber_count
/// mode, in corpus order.
ScanResult scan_corpus(std::vector<GroupDefinition> const &corpus, ScanMode mode,
                       std::optional<PrimeSet> const &sigma = std::nullopt, std::size_t jobs = 1);

/// The order-216 group with a unique normal C3 in which Clifford
/// correspondence over a Q-invariant tau does not preserve vertices:
/// reports |I(G_tau|Q1,tau)| as lhs and |I(G|Q1,tau)| as rhs, expecting 1
/// and 2 for sigma = {3}. Structure checks are listed as hypotheses.
VerificationReport clifford_vertex_example();

} // namespace nilweight
