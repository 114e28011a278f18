#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "nilweight/errors.hpp"
#include "nilweight/group_file.hpp"
#include "table_cache.hpp"

using namespace nilweight;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> const &args)
{
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(std::filesystem::path const &p)
{
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch_dir(std::string const &name)
{
  auto dir = std::filesystem::temp_directory_path() / ("nilweight-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("group file grammar")
{
  auto def = parse_group_file("name: S3\ndegree: 3\ngen: (1,2)\ngen: (1,2,3)\norder: 6");
  CHECK(def.name == "S3");
  CHECK(def.degree == 3);
  CHECK(def.generators == std::vector<std::string>{"(1,2)", "(1,2,3)"});
  CHECK(def.expected_order == 6u);
  CHECK(def.build().size() == 6);

  // comments, blank lines and spacing inside cycles
  auto spaced = parse_group_file("# a comment\n\nname: V\ndegree: 4\ngen: ( 1 , 2 ) (3,4) # trailing\n");
  CHECK(spaced.generators == std::vector<std::string>{"(1,2)(3,4)"});

  auto a5 = parse_group_file("name: A5\ndegree: 5\ngen: (1,2,3,4,5)\ngen: (1,2,3)\norder: 60\n");
  CHECK(a5.build().size() == 60);

  auto error_of = [](std::string const &text) {
    try {
      parse_group_file(text);
    } catch (MalformedInput const &e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_of("name: X\ndegree: 3\ngen: (1,2,2)") == "line 3, column 11: repeated point in cycle");
  CHECK(error_of("name: X\ndegree: 3\ngen: (1,4)") == "line 3, column 9: point 4 out of range 1..3");
  CHECK(error_of("name: X\ndegree: 3\ngen: (1,2)\norder: 3") ==
        "line 4, column 1: expected order 3 but the generators give 2");
  CHECK(error_of("name: X\ndegree: 3\nfoo: 1") == "line 3, column 1: unknown key 'foo'");
  CHECK(error_of("degree: 3") == "line 1, column 1: missing 'name'");
  CHECK(error_of("name: X\ndegree 3") == "line 2, column 1: expected 'key: value'");
  CHECK(error_of("name: X\ndegree: 0") == "line 2, column 9: expected a positive integer");
}

TEST_CASE("builtin corpus")
{
  auto const &corpus = builtin_corpus();
  REQUIRE_FALSE(corpus.empty());
  CHECK(find_builtin("A5")->build().size() == 60);
  CHECK(find_builtin("C3xC3:C2")->build().size() == 18);
  for (auto const &def : corpus) {
    INFO(def.name);
    CHECK(parse_group_file(serialize_group_definition(def)) == def);
    CHECK(def.build().order() == *def.expected_order);
  }
}

TEST_CASE("command line examples")
{
  auto a = run({"verify-a", "--group", "S4", "--pi", "2"});
  CHECK(a.code == 0);
  CHECK(a.out.find("lhs 2 rhs 2 holds") != std::string::npos);

  auto a5 = run({"verify-a", "--group", "A5", "--pi", "2,3,5"});
  CHECK(a5.code == 1);
  CHECK(a5.out.find("lhs 1 rhs 0 fails (hypothesis: solvable Hall subgroup unmet)") != std::string::npos);

  auto carter = run({"carter", "--group", "S4"});
  CHECK(carter.code == 0);
  CHECK(carter.out.find("Carter class: order 8, representative generators ") != std::string::npos);

  auto b = run({"verify-b", "--group", "S4", "--pi", "3", "--format", "machine"});
  CHECK(b.code == 0);
  CHECK(b.out.find("lhs_total\t2\n") != std::string::npos);
}

TEST_CASE("command line errors")
{
  CHECK(run({"verify-a", "--group", "S4", "--pi", "2", "--bogus"}).code == 2);
  CHECK(run({"verify-a", "--group", "nosuchgroup", "--pi", "2"}).code == 2);
  CHECK(run({"verify-a", "--group", "S4"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  auto bound = run({"classes", "--group", "A5", "--bound", "59"});
  CHECK(bound.code == 2);
  CHECK(bound.err.find("exceeds --bound") != std::string::npos);
  CHECK(run({"carter", "--group", "A5"}).code == 2);
  CHECK(run({"verify-b", "--group", "S4", "--pi", "3", "--r", "(1,5)"}).code == 2);
  CHECK(run({"verify-a", "--group", "S4", "--pi", "4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("group files on the command line")
{
  auto dir = scratch_dir("groupfile");
  auto path = dir / "s3.grp";
  std::ofstream(path) << "name: mygroup\ndegree: 3\ngen: (1,2)\ngen: (1,2,3)\norder: 6\n";
  auto r = run({"classes", "--group", path.string(), "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("group\tmygroup\n") != std::string::npos);
  CHECK(r.out.find("classes\t3\n") != std::string::npos);

  std::ofstream(dir / "bad.grp") << "name: bad\ndegree: 3\ngen: (1,2,2)\n";
  auto bad = run({"classes", "--group", (dir / "bad.grp").string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("repeated point in cycle") != std::string::npos);
}

TEST_CASE("machine output matches the golden files")
{
  std::filesystem::path golden = NILWEIGHT_GOLDEN_DIR;
  std::vector<std::pair<std::string, std::vector<std::string>>> const cases = {
    {"verify_a_S4_2.txt", {"verify-a", "--group", "S4", "--pi", "2"}},
    {"verify_a_A5_235.txt", {"verify-a", "--group", "A5", "--pi", "2,3,5"}},
    {"carter_S4.txt", {"carter", "--group", "S4"}},
    {"chartab_S3.txt", {"chartab", "--group", "S3"}},
    {"verify_b_S4_3.txt", {"verify-b", "--group", "S4", "--pi", "3"}},
    {"weights_S4_2.txt", {"weights", "--group", "S4", "--pi", "2"}},
    {"bijection_A4_2.txt", {"bijection", "--group", "A4", "--pi", "2"}},
  };
  for (auto const &[file, args] : cases) {
    INFO(file);
    auto full = args;
    full.push_back("--format");
    full.push_back("machine");
    CHECK(run(full).out == slurp(golden / file));
  }
}

TEST_CASE("table cache")
{
  auto dir = scratch_dir("cache");
  std::vector<std::string> args = {"chartab", "--group", "S4xC3", "--format", "machine", "--cache-dir", dir.string()};
  auto cold = run(args);
  REQUIRE(cold.code == 0);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  auto warm = run(args);
  CHECK(warm.out == cold.out);

  auto verify = std::vector<std::string>{"verify-a", "--group", "S4xC3", "--pi", "2", "--format", "machine",
                                         "--cache-dir", dir.string()};
  auto v1 = run(verify);
  auto v2 = run(verify);
  CHECK(v1.out == v2.out);
  CHECK(v1.out == run({"verify-a", "--group", "S4xC3", "--pi", "2", "--format", "machine"}).out);

  // a loaded table is served from the store
  auto g = builtin("S4xC3");
  auto store = std::make_shared<cli::FileTableStore>(dir);
  auto table = store->load(g);
  REQUIRE(table);
  CHECK(table->size() == 15);
  CHECK(store->hits() == 1);

  // corrupt and stale files are ignored, and recomputed tables are rewritten
  auto path = store->path_for(g);
  std::ofstream(path, std::ios::trunc) << "nilweight-table 1\nversion\t0\n";
  CHECK_FALSE(store->load(g));
  std::ofstream(path, std::ios::trunc) << "garbage";
  CHECK_FALSE(store->load(g));
  auto again = run(args);
  CHECK(again.out == cold.out);
  CHECK(store->load(g));
}

TEST_CASE("table serialization round trip")
{
  for (auto name : {"S3", "Q8", "C7:C3", "A5"}) {
    auto g = builtin(name);
    auto const &t = character_table(g);
    auto back = cli::deserialize_table(g, cli::serialize_table(t));
    REQUIRE(back);
    CHECK(back->size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      CHECK(back->irreducibles[i] == t[i]);
    // another group's table is rejected
    CHECK_FALSE(cli::deserialize_table(builtin("C5"), cli::serialize_table(t)));
  }
}
