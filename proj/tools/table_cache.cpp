#include "table_cache.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

#include "nilweight/errors.hpp"
#include "nilweight/group_ops.hpp"

namespace nilweight::cli
{

namespace
{

constexpr char const *header = "nilweight-table 1";

void fnv(std::uint64_t &h, std::string_view s)
{
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= 0xff; // field separator
  h *= 0x100000001b3ULL;
}

std::string hex(std::uint64_t v)
{
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

} // anonymous namespace

std::uint64_t table_key(PermGroup const &group)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv(h, "version " + std::to_string(character_table_version));
  fnv(h, "degree " + std::to_string(group.degree()));
  for (auto const &g : group.generators())
    fnv(h, g.to_string());
  fnv(h, "classes");
  for (auto const &c : class_data(group).classes)
    fnv(h, c.representative.to_string());
  return h;
}

std::string serialize_table(CharacterTable const &table)
{
  std::ostringstream out;
  out << header << '\n';
  out << "version\t" << character_table_version << '\n';
  out << "key\t" << hex(table_key(table.group)) << '\n';
  for (auto const &c : class_data(table.group).classes)
    out << "class\t" << c.representative.to_string() << '\n';
  for (auto const &chi : table.irreducibles) {
    out << "row";
    for (auto const &v : chi.values)
      out << '\t' << v.serialize();
    out << '\n';
  }
  return out.str();
}

std::shared_ptr<CharacterTable const> deserialize_table(PermGroup const &group, std::string const &text)
{
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header)
    return nullptr;
  if (!std::getline(in, line) || line != "version\t" + std::to_string(character_table_version))
    return nullptr;
  if (!std::getline(in, line) || line != "key\t" + hex(table_key(group)))
    return nullptr;
  auto const &classes = class_data(group).classes;
  for (auto const &c : classes)
    if (!std::getline(in, line) || line != "class\t" + c.representative.to_string())
      return nullptr;

  auto table = std::make_shared<CharacterTable>();
  table->group = group;
  try {
    while (std::getline(in, line)) {
      std::istringstream fields(line);
      std::string tag, value;
      if (!std::getline(fields, tag, '\t') || tag != "row")
        return nullptr;
      ClassFunction chi{group, {}};
      while (std::getline(fields, value, '\t'))
        chi.values.push_back(Cyclotomic::deserialize(value));
      if (chi.values.size() != classes.size())
        return nullptr;
      table->irreducibles.push_back(std::move(chi));
    }
  } catch (MalformedInput const &) {
    return nullptr;
  }
  if (table->irreducibles.size() != classes.size())
    return nullptr;
  return table;
}

FileTableStore::FileTableStore(std::filesystem::path dir) : _dir(std::move(dir))
{
  std::error_code ec;
  std::filesystem::create_directories(_dir, ec);
  if (ec || !std::filesystem::is_directory(_dir))
    throw ConfigurationError("cannot create cache directory " + _dir.string());
}

std::filesystem::path FileTableStore::path_for(PermGroup const &group) const
{
  return _dir / (hex(table_key(group)) + ".tbl");
}

std::shared_ptr<CharacterTable const> FileTableStore::load(PermGroup const &group)
{
  auto path = path_for(group);
  std::ifstream in(path, std::ios::binary);
  std::shared_ptr<CharacterTable const> table;
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    table = deserialize_table(group, buf.str());
  }
  std::lock_guard lock(_mutex);
  ++(table ? _hits : _misses);
  return table;
}

void FileTableStore::save(CharacterTable const &table)
{
  auto path = path_for(table.group);
  std::string text = serialize_table(table);
  std::filesystem::path tmp;
  {
    std::lock_guard lock(_mutex);
    tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(_counter++);
  }
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out.flush()) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return; // a cache that cannot be written is just a cold cache
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec)
    std::filesystem::remove(tmp, ec);
}

} // namespace nilweight::cli
