#pragma once

#include <cstdint>
#include <string_view>

namespace nilweight
{

/// Desk-scale bounds on the brute-force parts of the library.
struct Limits
{
  std::uint64_t class_bound = 100000;      // conjugacy classes, element lists
  std::uint64_t enumeration_bound = 20000; // centralizers, normalizers, stabilizers
  std::uint64_t lattice_bound = 2000;      // subgroup lattices
  std::uint64_t seed = 0x5eed;             // Dixon-Schneider splitting sequence
};

/// Process-wide limits. Set them before any computation starts.
Limits const &limits();
void set_limits(Limits const &l);

/// Throws ResourceError naming `what` when `value` exceeds `bound`.
void check_bound(std::uint64_t value, std::uint64_t bound, std::string_view what);

} // namespace nilweight
