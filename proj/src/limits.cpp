#include "nilweight/limits.hpp"

#include <string>

#include "nilweight/errors.hpp"

namespace nilweight
{

namespace
{
Limits g_limits;
}

Limits const &limits() { return g_limits; }

void set_limits(Limits const &l) { g_limits = l; }

void check_bound(std::uint64_t value, std::uint64_t bound, std::string_view what)
{
  if (value > bound)
    throw ResourceError(std::string(what) + ": size " + std::to_string(value) +
                        " exceeds bound " + std::to_string(bound));
}

} // namespace nilweight
