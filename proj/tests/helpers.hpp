#pragma once

#include <string>

#include "nilweight/group_file.hpp"
#include "nilweight/perm_group.hpp"

inline nilweight::PermGroup builtin(std::string const &name)
{
  auto def = nilweight::find_builtin(name);
  if (!def)
    throw std::runtime_error("no builtin " + name);
  return def->build();
}

inline nilweight::PermGroup group_of(std::size_t degree, std::vector<std::string> const &gens)
{
  std::vector<nilweight::Perm> perms;
  for (auto const &g : gens)
    perms.push_back(nilweight::Perm::parse(degree, g));
  return nilweight::PermGroup(degree, perms);
}
