#include "cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "nilweight/characters.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/group_file.hpp"
#include "nilweight/group_ops.hpp"
#include "nilweight/limits.hpp"
#include "nilweight/partial.hpp"
#include "nilweight/properties.hpp"
#include "nilweight/subgroup_lattice.hpp"
#include "nilweight/verify.hpp"
#include "nilweight/weights.hpp"
#include "table_cache.hpp"

namespace nilweight::cli
{

namespace
{

using Fields = std::vector<std::pair<std::string, std::string>>;

struct Block
{
  std::string title;
  Fields fields;
  std::vector<Fields> rows;
  std::string headline; // human output only
};

struct Document
{
  std::string command;
  std::vector<Block> blocks;
  Fields summary;
  int exit_code = 0;
};

std::string clean(std::string s)
{
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

void render_machine(Document const &doc, std::ostream &out)
{
  out << "nilweight-report 1\n";
  out << "command\t" << doc.command << '\n';
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    auto const &b = doc.blocks[i];
    out << "report\t" << i << '\n';
    for (auto const &[k, v] : b.fields)
      out << k << '\t' << clean(v) << '\n';
    for (auto const &row : b.rows) {
      out << "row";
      for (auto const &[k, v] : row)
        out << '\t' << k << '=' << clean(v);
      out << '\n';
    }
  }
  for (auto const &[k, v] : doc.summary)
    out << k << '\t' << clean(v) << '\n';
}

void render_human(Document const &doc, std::ostream &out)
{
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    auto const &b = doc.blocks[i];
    if (i)
      out << '\n';
    out << b.title << '\n';
    for (auto const &[k, v] : b.fields)
      out << "  " << k << ": " << v << '\n';
    for (auto const &row : b.rows) {
      out << "   ";
      for (auto const &[k, v] : row)
        out << ' ' << k << '=' << v;
      out << '\n';
    }
    if (!b.headline.empty())
      out << b.headline << '\n';
  }
  if (!doc.summary.empty()) {
    if (!doc.blocks.empty())
      out << '\n';
    for (auto const &[k, v] : doc.summary)
      out << k << ": " << v << '\n';
  }
}

std::string generators_of(PermGroup const &g)
{
  if (g.generators().empty())
    return "()";
  std::string s;
  for (auto const &x : g.generators())
    s += (s.empty() ? "" : " ") + x.to_string();
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string optional_count(std::optional<std::uint64_t> const &v)
{
  return v ? std::to_string(*v) : "-";
}

Block report_block(VerificationReport const &rep, std::string const &command)
{
  Block b;
  b.title = command + ": " + rep.group_name + ", pi = " + rep.sigma.to_string();
  if (!rep.subject.empty())
    b.title += ", " + rep.subject;
  b.fields.emplace_back("check", rep.check);
  b.fields.emplace_back("group", rep.group_name);
  b.fields.emplace_back("pi", rep.sigma.to_list());
  if (!rep.subject.empty())
    b.fields.emplace_back("subject", rep.subject);
  for (auto const &h : rep.hypotheses)
    b.fields.emplace_back("hypothesis", h.name + "=" + (h.met ? "met" : "unmet"));
  b.fields.emplace_back("lhs", optional_count(rep.lhs));
  b.fields.emplace_back("rhs", optional_count(rep.rhs));
  b.fields.emplace_back("verdict", to_string(rep.verdict));
  for (auto const &n : rep.notes)
    b.fields.emplace_back("note", n);
  for (auto const &row : rep.rows) {
    Fields f{{"side", row.side}, {"count", std::to_string(row.count)}};
    f.insert(f.end(), row.fields.begin(), row.fields.end());
    b.rows.push_back(std::move(f));
  }
  std::string unmet;
  for (auto const &h : rep.hypotheses)
    if (!h.met)
      unmet += (unmet.empty() ? "" : ", ") + h.name;
  b.headline = "lhs " + optional_count(rep.lhs) + " rhs " + optional_count(rep.rhs) + " " +
               to_string(rep.verdict);
  if (!unmet.empty())
    b.headline += " (hypothesis: " + unmet + " unmet)";
  return b;
}

void add_report(Document &doc, VerificationReport const &rep)
{
  doc.blocks.push_back(report_block(rep, doc.command));
  if (rep.verdict == Verdict::fails)
    doc.exit_code = 1;
}

struct Options
{
  std::string group;
  std::string pi;
  bool pi_given = false;
  std::vector<std::string> r, n, h;
  std::string format = "human";
  std::string cache_dir;
  std::uint64_t bound = 0;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string mode;
};

struct Loaded
{
  std::string name;
  PermGroup group;
};

Loaded load(Options const &o)
{
  if (o.group.empty())
    throw CLI::ValidationError("--group", "is required for this command");
  auto def = resolve_group(o.group);
  auto g = def.build();
  if (o.bound && g.size() > o.bound)
    throw ResourceError("group order " + g.order().str() + " exceeds --bound " + std::to_string(o.bound));
  return {def.name, g};
}

PrimeSet pi_of(Options const &o)
{
  if (!o.pi_given)
    throw CLI::ValidationError("--pi", "is required for this command");
  return PrimeSet::parse(o.pi);
}

PermGroup subgroup_arg(PermGroup const &g, std::vector<std::string> const &specs, std::string const &flag)
{
  std::vector<Perm> gens;
  for (auto const &spec : specs) {
    std::size_t start = 0;
    while (start <= spec.size()) {
      auto end = spec.find(';', start);
      if (end == std::string::npos)
        end = spec.size();
      auto piece = spec.substr(start, end - start);
      if (piece.find_first_not_of(" \t") != std::string::npos)
        gens.push_back(Perm::parse(g.degree(), piece));
      start = end + 1;
    }
  }
  PermGroup h(g.degree(), gens);
  if (!h.is_subgroup_of(g))
    throw MalformedInput(flag + " does not generate a subgroup of the group");
  return h;
}

std::vector<GroupDefinition> corpus_of(Options const &o)
{
  if (o.group.empty())
    return builtin_corpus();
  return {resolve_group(o.group)};
}

Document cmd_classes(Options const &o)
{
  auto [name, g] = load(o);
  Document doc{"classes", {}, {}, 0};
  Block b{"conjugacy classes of " + name, {}, {}, {}};
  b.fields = {{"group", name}, {"order", g.order().str()}, {"classes", std::to_string(class_data(g).size())}};
  auto const &cd = class_data(g);
  for (std::size_t i = 0; i < cd.size(); ++i)
    b.rows.push_back({{"class", std::to_string(i)},
                      {"order", std::to_string(cd.classes[i].element_order)},
                      {"size", std::to_string(cd.classes[i].size)},
                      {"rep", cd.classes[i].representative.to_string()}});
  doc.blocks.push_back(std::move(b));
  return doc;
}

Document cmd_chartab(Options const &o)
{
  auto [name, g] = load(o);
  Document doc{"chartab", {}, {}, 0};
  auto const &table = character_table(g);
  auto const &cd = class_data(g);
  Block b{"character table of " + name, {}, {}, {}};
  b.fields = {{"group", name}, {"order", g.order().str()}, {"classes", std::to_string(cd.size())}};
  for (std::size_t i = 0; i < cd.size(); ++i)
    b.rows.push_back({{"class", std::to_string(i)},
                      {"order", std::to_string(cd.classes[i].element_order)},
                      {"size", std::to_string(cd.classes[i].size)},
                      {"rep", cd.classes[i].representative.to_string()}});
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::string values;
    for (auto const &v : table[i].values)
      values += (values.empty() ? "" : " ") + v.to_string();
    b.rows.push_back({{"chi", std::to_string(i)}, {"degree", table[i].degree().to_string()}, {"values", values}});
  }
  doc.blocks.push_back(std::move(b));
  return doc;
}

Document cmd_subgroups(Options const &o)
{
  auto [name, g] = load(o);
  Document doc{"subgroups", {}, {}, 0};
  auto const &lat = subgroup_lattice(g);
  Block b{"subgroup classes of " + name, {}, {}, {}};
  b.fields = {{"group", name},
              {"order", g.order().str()},
              {"classes", std::to_string(lat.size())},
              {"subgroups", std::to_string(lat.total_subgroups())}};
  for (auto const &c : lat.classes())
    b.rows.push_back({{"class", std::to_string(c.index)},
                      {"order", std::to_string(c.order)},
                      {"class_size", std::to_string(c.class_size)},
                      {"nilpotent", yes_no(c.nilpotent)},
                      {"solvable", yes_no(c.solvable)},
                      {"generators", generators_of(c.representative)}});
  doc.blocks.push_back(std::move(b));
  return doc;
}

Document cmd_carter(Options const &o)
{
  auto [name, g] = load(o);
  if (!is_solvable(g))
    throw PreconditionError(name + " is not solvable, so it has no Carter subgroups");
  Document doc{"carter", {}, {}, 0};
  auto c = carter_subgroups(g);
  Block b{"Carter subgroups of " + name, {}, {}, {}};
  b.fields = {{"group", name},
              {"carter_order", std::to_string(c.order)},
              {"class_size", std::to_string(c.class_size)},
              {"representative", generators_of(c.representative)}};
  b.headline = "Carter class: order " + std::to_string(c.order) + ", representative generators " +
               generators_of(c.representative);
  doc.blocks.push_back(std::move(b));
  return doc;
}

Document cmd_ipi(Options const &o, bool with_vertices)
{
  auto [name, g] = load(o);
  auto sigma = pi_of(o);
  Document doc{with_vertices ? "vertices" : "ipi", {}, {}, 0};
  auto const &partials = with_vertices ? partial_characters_with_vertices(g, sigma)
                                       : sigma_partial_characters(g, sigma);
  Block b{(with_vertices ? "vertices of I(" : "I(") + name + "), pi = " + sigma.to_string(), {}, {}, {}};
  b.fields = {{"group", name}, {"pi", sigma.to_list()}, {"count", std::to_string(partials.size())}};
  auto const &lat = subgroup_lattice(g);
  for (auto const &phi : partials) {
    Fields row{{"index", std::to_string(phi.index)}, {"degree", std::to_string(phi.degree())}};
    if (with_vertices) {
      auto const &v = lat[*phi.vertex];
      row.emplace_back("vertex_class", std::to_string(v.index));
      row.emplace_back("vertex_order", std::to_string(v.order));
      row.emplace_back("vertex", generators_of(v.representative));
    } else {
      std::string lifts, values;
      for (auto l : phi.lifts)
        lifts += (lifts.empty() ? "" : ",") + std::to_string(l);
      for (auto const &v : phi.values)
        values += (values.empty() ? "" : " ") + v.to_string();
      row.emplace_back("lifts", lifts);
      row.emplace_back("values", values);
    }
    b.rows.push_back(std::move(row));
  }
  doc.blocks.push_back(std::move(b));
  return doc;
}

Document cmd_weights(Options const &o)
{
  auto [name, g] = load(o);
  auto sigma = pi_of(o);
  if (!o.mode.empty() && o.mode != "nilpotent" && o.mode != "all")
    throw CLI::ValidationError("--mode", "weights takes nilpotent or all");
  bool nilpotent = o.mode != "all";
  Document doc{"weights", {}, {}, 0};
  auto const &ws = enumerate_weights(g, sigma, nilpotent);
  Block b{(nilpotent ? "nilpotent weights of " : "weights of ") + name + ", pi = " + sigma.to_string(), {}, {}, {}};
  b.fields = {{"group", name},
              {"pi", sigma.to_list()},
              {"mode", nilpotent ? "nilpotent" : "all"},
              {"count", std::to_string(ws.size())}};
  for (auto const &w : ws)
    b.rows.push_back({{"q_class", std::to_string(w.q_class)},
                      {"q_order", std::to_string(w.q.size())},
                      {"q", generators_of(w.q)},
                      {"normalizer_order", std::to_string(w.quotient->normalizer.size())},
                      {"gamma", std::to_string(w.gamma)},
                      {"gamma_degree", std::to_string(w.gamma_degree)}});
  doc.blocks.push_back(std::move(b));
  return doc;
}

Document cmd_verify_a(Options const &o)
{
  auto [name, g] = load(o);
  Document doc{"verify-a", {}, {}, 0};
  add_report(doc, check_class_weight_count(g, pi_of(o), name));
  return doc;
}

Document cmd_verify_b(Options const &o)
{
  auto [name, g] = load(o);
  auto sigma = pi_of(o);
  Document doc{"verify-b", {}, {}, 0};
  std::vector<PermGroup> rs;
  if (!o.r.empty())
    rs.push_back(subgroup_arg(g, o.r, "--r"));
  else
    rs = nilpotent_complement_subgroups(g, sigma);
  std::uint64_t lhs = 0, rhs = 0;
  for (auto const &r : rs) {
    auto rep = check_carter_fiber_count(g, sigma, r, name);
    lhs += rep.lhs.value_or(0);
    rhs += rep.rhs.value_or(0);
    add_report(doc, rep);
  }
  if (o.r.empty())
    doc.summary = {{"r_classes", std::to_string(rs.size())},
                   {"lhs_total", std::to_string(lhs)},
                   {"rhs_total", std::to_string(rhs)}};
  return doc;
}

Document cmd_bijection(Options const &o)
{
  auto [name, g] = load(o);
  auto sigma = pi_of(o);
  Document doc{"bijection", {}, {}, 0};
  PermGroup n = o.n.empty() ? o_sigma(g, sigma) : subgroup_arg(g, o.n, "--normal");
  PermGroup h(g.degree());
  if (!o.h.empty())
    h = subgroup_arg(g, o.h, "--complement");
  else if (auto hall = find_hall_subgroup(g, sigma.complement_in(g.size())))
    h = *hall;
  std::vector<PermGroup> rs;
  if (!o.r.empty())
    rs.push_back(subgroup_arg(g, o.r, "--r"));
  else
    for (auto const &c : subgroup_lattice(h).classes())
      if (c.nilpotent)
        rs.push_back(c.representative);
  for (auto const &r : rs)
    add_report(doc, check_canonical_bijection(g, n, h, sigma, r, name));
  return doc;
}

Document cmd_properties(Options const &o)
{
  SuiteOptions options;
  if (o.pi_given)
    options.sigma = PrimeSet::parse(o.pi);
  options.jobs = o.jobs;
  auto corpus = corpus_of(o);
  Document doc{"properties", {}, {}, 0};
  Block b{"property suite over " + std::to_string(corpus.size()) + " groups", {}, {}, {}};
  b.fields = {{"groups", std::to_string(corpus.size())}};
  std::size_t failed = 0;
  for (auto const &r : run_property_suite(corpus, options)) {
    Fields row{{"property", r.name}, {"passed", yes_no(r.passed)}, {"checked", std::to_string(r.checked)}};
    if (!r.passed) {
      row.emplace_back("witness", r.witness);
      ++failed;
    }
    b.rows.push_back(std::move(row));
  }
  doc.blocks.push_back(std::move(b));
  if (o.group.empty()) {
    auto example = clifford_vertex_example();
    failed += example.verdict != Verdict::holds;
    doc.blocks.push_back(report_block(example, doc.command));
  }
  doc.summary = {{"failed", std::to_string(failed)}};
  doc.exit_code = failed ? 1 : 0;
  return doc;
}

Document cmd_scan(Options const &o)
{
  ScanMode mode = ScanMode::class_weight_count;
  if (o.mode == "b")
    mode = ScanMode::carter_fiber_count;
  else if (!o.mode.empty() && o.mode != "a")
    throw CLI::ValidationError("--mode", "scan takes a or b");
  std::optional<PrimeSet> sigma;
  if (o.pi_given)
    sigma = PrimeSet::parse(o.pi);
  auto corpus = corpus_of(o);
  for (auto const &def : corpus)
    if (o.bound && def.expected_order && *def.expected_order > o.bound)
      throw ResourceError("group " + def.name + " exceeds --bound " + std::to_string(o.bound));
  auto res = scan_corpus(corpus, mode, sigma, o.jobs);
  Document doc{"scan", {}, {}, 0};
  for (auto const &rep : res.reports)
    add_report(doc, rep);
  doc.summary = {{"reports", std::to_string(res.reports.size())},
                 {"holds", std::to_string(res.holds)},
                 {"fails", std::to_string(res.fails)},
                 {"unmet", std::to_string(res.unmet)}};
  return doc;
}

} // anonymous namespace

int run_command(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Character counts, weights and partial characters of finite permutation groups",
               "nilweight"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--group", o.group, "built-in group name or group file");
  app.add_option("--pi", o.pi, "comma-separated primes")->each([&](std::string const &) { o.pi_given = true; });
  app.add_option("--r", o.r, "generators of R, separated by ';'");
  app.add_option("--normal", o.n, "generators of the normal subgroup N (bijection)");
  app.add_option("--complement", o.h, "generators of the complement H (bijection)");
  app.add_option("--format", o.format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--cache-dir", o.cache_dir, "directory for cached character tables");
  app.add_option("--bound", o.bound, "largest group order to process");
  app.add_option("--jobs", o.jobs, "parallel tasks across corpus entries")->check(CLI::Range(1, 256));
  app.add_option("--seed", o.seed, "seed for randomized steps");
  app.add_option("--mode", o.mode, "scan: a|b; weights: nilpotent|all");

  std::vector<std::pair<std::string, std::string>> const commands = {
    {"classes", "conjugacy classes"},
    {"chartab", "ordinary character table"},
    {"subgroups", "subgroup classes"},
    {"carter", "Carter subgroups of a solvable group"},
    {"ipi", "irreducible pi-partial characters"},
    {"vertices", "vertices of the irreducible pi-partial characters"},
    {"weights", "pi-weights"},
    {"verify-a", "pi'-classes against nilpotent pi-weights"},
    {"verify-b", "per-R refinement over Carter fibers"},
    {"bijection", "canonical bijection for a normal Hall subgroup"},
    {"properties", "property suite over the corpus"},
    {"scan", "verification sweep over the corpus"},
  };
  for (auto const &[name, help] : commands)
    app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  Limits const saved = limits();
  struct Restore
  {
    Limits saved;
    ~Restore()
    {
      set_table_store(nullptr);
      set_limits(saved);
    }
  } restore{saved};
  try {
    Limits lim = saved;
    if (o.bound) {
      lim.class_bound = std::max<std::uint64_t>(o.bound, 1);
      lim.enumeration_bound = std::min(lim.enumeration_bound, lim.class_bound);
    }
    if (o.seed)
      lim.seed = *o.seed;
    set_limits(lim);
    std::shared_ptr<FileTableStore> store;
    if (!o.cache_dir.empty())
      store = std::make_shared<FileTableStore>(o.cache_dir);
    set_table_store(store);

    Document doc;
    if (command == "classes")
      doc = cmd_classes(o);
    else if (command == "chartab")
      doc = cmd_chartab(o);
    else if (command == "subgroups")
      doc = cmd_subgroups(o);
    else if (command == "carter")
      doc = cmd_carter(o);
    else if (command == "ipi" || command == "vertices")
      doc = cmd_ipi(o, command == "vertices");
    else if (command == "weights")
      doc = cmd_weights(o);
    else if (command == "verify-a")
      doc = cmd_verify_a(o);
    else if (command == "verify-b")
      doc = cmd_verify_b(o);
    else if (command == "bijection")
      doc = cmd_bijection(o);
    else if (command == "properties")
      doc = cmd_properties(o);
    else
      doc = cmd_scan(o);

    if (o.format == "machine")
      render_machine(doc, out);
    else
      render_human(doc, out);
    return doc.exit_code;
  } catch (CLI::ValidationError const &e) {
    err << "error: " << e.what() << '\n';
  } catch (InternalConsistencyError const &e) {
    err << "internal error: " << e.what() << '\n';
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

} // namespace nilweight::cli
