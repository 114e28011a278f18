#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilweight/perm_group.hpp"

namespace nilweight
{

/// A named permutation group as written in a group file:
///
///     # comment
///     name: S3
///     degree: 3
///     gen: (1,2)
///     gen: (1,2,3)
///     order: 6
///
/// Generators are kept in normalized cycle notation.
struct GroupDefinition
{
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::optional<std::uint64_t> expected_order;

  std::vector<Perm> permutations() const;
  /// Throws MalformedInput if the expected order does not match.
  PermGroup build() const;

  friend bool operator==(GroupDefinition const &, GroupDefinition const &) = default;
};

/// Strict parser; errors carry "line L, column C". Verifies the order
/// when one is given.
GroupDefinition parse_group_file(std::string_view text);
GroupDefinition load_group_file(std::filesystem::path const &path);
std::string serialize_group_definition(GroupDefinition const &def);

/// The built-in test corpus, in a fixed order.
std::vector<GroupDefinition> const &builtin_corpus();
std::optional<GroupDefinition> find_builtin(std::string_view name);

/// A built-in name, or else a path to a group file.
GroupDefinition resolve_group(std::string const &name_or_path);

} // namespace nilweight
