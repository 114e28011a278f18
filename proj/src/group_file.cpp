#include "nilweight/group_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "nilweight/errors.hpp"

namespace nilweight
{

namespace
{

[[noreturn]] void syntax_error(std::size_t line, std::size_t column, std::string const &msg)
{
  throw MalformedInput("line " + std::to_string(line) + ", column " + std::to_string(column) +
                       ": " + msg);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::uint64_t parse_number(std::string_view text, std::size_t line, std::size_t column)
{
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    syntax_error(line, column, "expected a positive integer");
  if (v == 0)
    syntax_error(line, column, "expected a positive integer");
  return v;
}

struct PendingGenerator
{
  std::string text;
  std::size_t line;
  std::size_t column;
};

} // anonymous namespace

std::vector<Perm> GroupDefinition::permutations() const
{
  std::vector<Perm> perms;
  for (auto const &g : generators)
    perms.push_back(Perm::parse(degree, g));
  return perms;
}

PermGroup GroupDefinition::build() const
{
  PermGroup group(degree, permutations());
  if (expected_order && group.order() != *expected_order)
    throw MalformedInput("group " + name + ": expected order " + std::to_string(*expected_order) +
                         ", computed " + group.order().str());
  return group;
}

GroupDefinition parse_group_file(std::string_view text)
{
  GroupDefinition def;
  bool have_name = false, have_degree = false;
  std::vector<PendingGenerator> pending;
  std::size_t order_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first]))
      ++first;
    while (!line.empty() && is_space(line.back()))
      line.remove_suffix(1);
    if (first >= line.size())
      continue;

    auto colon = line.find(':', first);
    if (colon == std::string_view::npos)
      syntax_error(line_no, first + 1, "expected 'key: value'");
    std::string_view key = line.substr(first, colon - first);
    while (!key.empty() && is_space(key.back()))
      key.remove_suffix(1);
    std::size_t vstart = colon + 1;
    while (vstart < line.size() && is_space(line[vstart]))
      ++vstart;
    std::string_view value = line.substr(vstart);
    std::size_t vcol = vstart + 1;

    if (key == "name") {
      if (have_name)
        syntax_error(line_no, first + 1, "duplicate 'name'");
      if (value.empty())
        syntax_error(line_no, vcol, "empty name");
      for (std::size_t i = 0; i < value.size(); ++i)
        if (is_space(value[i]))
          syntax_error(line_no, vcol + i, "whitespace in name");
      def.name = std::string(value);
      have_name = true;
    } else if (key == "degree") {
      if (have_degree)
        syntax_error(line_no, first + 1, "duplicate 'degree'");
      auto d = parse_number(value, line_no, vcol);
      if (d > 65535)
        syntax_error(line_no, vcol, "degree too large");
      def.degree = static_cast<std::size_t>(d);
      have_degree = true;
    } else if (key == "order") {
      if (def.expected_order)
        syntax_error(line_no, first + 1, "duplicate 'order'");
      def.expected_order = parse_number(value, line_no, vcol);
      order_line = line_no;
    } else if (key == "gen") {
      pending.push_back({std::string(value), line_no, vcol});
    } else {
      syntax_error(line_no, first + 1, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!have_name)
    syntax_error(line_no, 1, "missing 'name'");
  if (!have_degree)
    syntax_error(line_no, 1, "missing 'degree'");
  for (auto const &g : pending) {
    try {
      def.generators.push_back(Perm::parse(def.degree, g.text).to_string());
    } catch (PermSyntaxError const &e) {
      syntax_error(g.line, g.column + e.column() - 1, e.detail());
    }
  }
  if (def.expected_order) {
    PermGroup group(def.degree, def.permutations());
    if (group.order() != *def.expected_order)
      syntax_error(order_line, 1, "expected order " + std::to_string(*def.expected_order) +
                                    " but the generators give " + group.order().str());
  }
  return def;
}

GroupDefinition load_group_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MalformedInput("cannot read group file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_group_file(buf.str());
  } catch (MalformedInput const &e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

std::string serialize_group_definition(GroupDefinition const &def)
{
  std::string out = "name: " + def.name + "\ndegree: " + std::to_string(def.degree) + "\n";
  for (auto const &g : def.generators)
    out += "gen: " + g + "\n";
  if (def.expected_order)
    out += "order: " + std::to_string(*def.expected_order) + "\n";
  return out;
}

std::vector<GroupDefinition> const &builtin_corpus()
{
  static std::vector<GroupDefinition> const corpus = [] {
    std::vector<GroupDefinition> c;
    auto add = [&](std::string name, std::size_t degree, std::vector<std::string> gens,
                   std::uint64_t order) {
      GroupDefinition def{std::move(name), degree, {}, order};
      for (auto const &g : gens)
        def.generators.push_back(Perm::parse(degree, g).to_string());
      c.push_back(std::move(def));
    };
    add("trivial", 1, {}, 1);
    for (std::size_t n = 2; n <= 12; ++n) {
      std::string cycle = "(";
      for (std::size_t i = 1; i <= n; ++i)
        cycle += std::to_string(i) + (i < n ? "," : ")");
      add("C" + std::to_string(n), n, {cycle}, n);
    }
    add("V4", 4, {"(1,2)(3,4)", "(1,3)(2,4)"}, 4);
    add("S3", 3, {"(1,2)", "(1,2,3)"}, 6);
    add("D8", 4, {"(1,2,3,4)", "(1,3)"}, 8);
    add("Q8", 8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}, 8);
    add("D10", 5, {"(1,2,3,4,5)", "(2,5)(3,4)"}, 10);
    add("A4", 4, {"(1,2,3)", "(2,3,4)"}, 12);
    add("D12", 6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}, 12);
    add("C3:C4", 7, {"(1,2,3)", "(1,2)(4,5,6,7)"}, 12);
    add("C3xC3:C2", 6, {"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"}, 18);
    add("C7:C3", 7, {"(1,2,3,4,5,6,7)", "(1,2,4)(3,6,5)"}, 21);
    add("S4", 4, {"(1,2)", "(1,2,3,4)"}, 24);
    add("S3xS3", 6, {"(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"}, 36);
    add("A4xC3", 7, {"(1,2,3)", "(2,3,4)", "(5,6,7)"}, 36);
    add("A5", 5, {"(1,2,3,4,5)", "(1,2,3)"}, 60);
    add("S4xC3", 7, {"(1,2)", "(1,2,3,4)", "(5,6,7)"}, 72);
    add("S4xC5", 9, {"(1,2)", "(1,2,3,4)", "(5,6,7,8,9)"}, 120);
    add("C3x(C3xC3):D8", 9, {"(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)(8,9)", "(7,8,9)"}, 216);
    return c;
  }();
  return corpus;
}

std::optional<GroupDefinition> find_builtin(std::string_view name)
{
  for (auto const &def : builtin_corpus())
    if (def.name == name)
      return def;
  return std::nullopt;
}

GroupDefinition resolve_group(std::string const &name_or_path)
{
  if (auto def = find_builtin(name_or_path))
    return *def;
  if (std::filesystem::exists(name_or_path))
    return load_group_file(name_or_path);
  throw MalformedInput("unknown group '" + name_or_path +
                       "' (neither a built-in name nor a readable file)");
}

} // namespace nilweight
