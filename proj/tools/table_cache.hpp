#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <string>

#include "nilweight/characters.hpp"

namespace nilweight::cli
{

/// FNV-1a over the generators, the class representatives in table order
/// and the algorithm version.
std::uint64_t table_key(PermGroup const &group);

std::string serialize_table(CharacterTable const &table);
/// nullptr if the text does not describe a table of this group.
std::shared_ptr<CharacterTable const> deserialize_table(PermGroup const &group, std::string const &text);

/// One file per table under a directory, written by atomic rename.
class FileTableStore : public TableStore
{
public:
  explicit FileTableStore(std::filesystem::path dir);

  std::shared_ptr<CharacterTable const> load(PermGroup const &group) override;
  void save(CharacterTable const &table) override;

  std::filesystem::path path_for(PermGroup const &group) const;
  std::size_t hits() const { return _hits; }
  std::size_t misses() const { return _misses; }

private:
  std::filesystem::path _dir;
  std::mutex _mutex;
  std::size_t _hits = 0;
  std::size_t _misses = 0;
  std::uint64_t _counter = 0;
};

} // namespace nilweight::cli
