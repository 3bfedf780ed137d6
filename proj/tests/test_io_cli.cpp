#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "posetdim/cli.hpp"
#include "posetdim/crown.hpp"
#include "posetdim/io.hpp"
#include "posetdim/oracle.hpp"

using namespace posetdim;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args,
                  const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kCrown1 = "elements x a b z\nrel x a\nrel x b\nrel a z\nrel b z\n";

}  // namespace

TEST_CASE("poset text round trip") {
  Poset c3 = crown_poset(3);
  Poset back = parse_poset_text(format_poset_text(c3));
  CHECK(back == c3);
  CHECK(format_poset_text(back) == format_poset_text(c3));
  CHECK(format_poset_text(Poset{}).empty());
  CHECK(parse_poset_text("").size() == 0);
}

TEST_CASE("poset text accepts comments, repeats and non-covers") {
  Poset p = parse_poset_text(
      "# a comment\n"
      "elements a b\n"
      "elements c\n"
      "\n"
      "rel a b\nrel b c\nrel a c\n");
  CHECK(p.size() == 3);
  CHECK(p.covers().size() == 2);  // a < c is implied, not a cover
}

TEST_CASE("poset text errors carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_poset_text(text);
      FAIL("expected ParseError for: ", text);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
      CHECK(e.line() == line);
    }
  };
  expect_line("elements a\nrel a q\n", 2);
  expect_line("elements a a\n", 1);
  expect_line("elements a b\nrel a\n", 2);
  expect_line("elements a b\nbogus a b\n", 2);
  expect_line("elements a b\nrel a b\nrel b a\n", 3);
  expect_line("elements a b c\nrel a b\nrel b c\nrel c a\n", 4);
}

TEST_CASE("realizer text and machine formats") {
  Poset c1 = crown_poset(1);
  Realizer r = crown_realizer(1);
  std::string text = format_realizer_text(c1, r);
  CHECK(text == "x a b z\nx b a z\nx a b z\n");
  auto words = parse_realizer_tokens(text);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == std::vector<std::string>{"x", "a", "b", "z"});

  std::string machine = format_realizer_machine(c1, r, true);
  CHECK(machine.front() == '{');
  CHECK(machine.find("\"elements\"") != std::string::npos);
  CHECK(machine.find("\"verified\":true") != std::string::npos);
  auto via_machine = parse_realizer_tokens(machine);
  CHECK(via_machine == words);

  // Empty words survive the text round trip.
  CHECK(parse_realizer_tokens("\n\n\n").size() == 3);
  CHECK(parse_realizer_tokens("\n\n\n")[1].empty());
}

TEST_CASE("dot output") {
  std::string dot = to_dot(crown_poset(1));
  CHECK(dot.find("digraph poset {") == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"x\" -> \"a\";") != std::string::npos);
  size_t edges = 0;
  for (size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 1))
    ++edges;
  CHECK(edges == 4);

  // A chain keeps only its two cover edges.
  std::string chain_dot =
      to_dot(build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
  size_t chain_edges = 0;
  for (size_t at = chain_dot.find("->"); at != std::string::npos;
       at = chain_dot.find("->", at + 1))
    ++chain_edges;
  CHECK(chain_edges == 2);

  // The 3-crown draws its single six-edge cycle.
  std::string crown_dot = to_dot(crown_poset(3));
  size_t crown_edges = 0;
  for (size_t at = crown_dot.find("->"); at != std::string::npos;
       at = crown_dot.find("->", at + 1))
    ++crown_edges;
  CHECK(crown_edges == 6);
}

TEST_CASE("cli classify") {
  CliResult r = run_cli({"classify", "-"}, kCrown1);
  CHECK(r.code == 0);
  CHECK(r.out == "connected unicycle\n");

  CliResult tree = run_cli({"classify", "-"}, "elements a b\nrel a b\n");
  CHECK(tree.out == "connected tree\n");

  CliResult two = run_cli({"classify", "-"}, "elements a b\n");
  CHECK(two.code == 0);
  CHECK(two.out.find("disconnected") == 0);
  CHECK(two.out.find("component 1: tree") != std::string::npos);

  CliResult bad = run_cli({"classify", "-"}, "elements a\nwat\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);

  CHECK(run_cli({"classify", "-"}, "").out == "connected empty\n");
}

TEST_CASE("cli realize and verify") {
  CliResult r = run_cli({"realize", "-"}, kCrown1);
  CHECK(r.code == 0);
  CHECK(r.out == "x a b z\nx b a z\nx a b z\n");

  CliResult machine = run_cli({"realize", "-", "--format", "machine"}, kCrown1);
  CHECK(machine.code == 0);
  CHECK(machine.out.find("\"verified\":true") != std::string::npos);

  // verify needs two files; feed the realizer through a temp file.
  std::string dir = "cli_io_test.tmp";
  std::string poset_path = dir + ".poset", realizer_path = dir + ".words";
  {
    std::ofstream p(poset_path), w(realizer_path);
    p << kCrown1;
    w << r.out;
  }
  CHECK(run_cli({"verify", poset_path, realizer_path}).code == 0);
  {
    std::ofstream w(realizer_path);
    w << "x a b z\nx a b z\n";  // never reverses a and b
  }
  CliResult fail = run_cli({"verify", poset_path, realizer_path});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("never reverses") != std::string::npos);
  {
    std::ofstream w(realizer_path);
    w << "x a b q\n";
  }
  CHECK(run_cli({"verify", poset_path, realizer_path}).code == 2);
  {
    std::ofstream w(realizer_path);
    w << "z a b x\nx b a z\n";  // breaks x < z
  }
  CliResult broken = run_cli({"verify", poset_path, realizer_path});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("violates") != std::string::npos);
  std::remove(poset_path.c_str());
  std::remove(realizer_path.c_str());

  // Components with two cycles are refused with exit 3.
  CliResult dense = run_cli({"realize", "-"},
                            "elements a b c d e\n"
                            "rel a c\nrel a d\nrel a e\nrel b c\nrel b d\nrel b e\n");
  CHECK(dense.code == 3);

  // The empty poset realizes as three empty words.
  CliResult nothing = run_cli({"realize", "-"}, "");
  CHECK(nothing.code == 0);
  CHECK(nothing.out == "\n\n\n");

  // Dropping the third crown word leaves an unreversed pair.
  std::string crown3 = format_poset_text(crown_poset(3));
  std::string pp = "cli_crown3.poset", ww = "cli_crown3.words";
  {
    std::ofstream p(pp), w(ww);
    p << crown3;
    w << "x1 x2 z1 x3 z2 z3\nx2 x3 z2 x1 z3 z1\n";
  }
  CliResult two_words = run_cli({"verify", pp, ww});
  CHECK(two_words.code == 1);
  CHECK(two_words.out.find("never reverses") != std::string::npos);
  std::remove(pp.c_str());
  std::remove(ww.c_str());
  CHECK(run_cli({"classify", "-"}, crown3).out == "connected unicycle\n");
}

TEST_CASE("cli dim") {
  CliResult two = run_cli({"dim", "-"}, "elements x1 x2 z1 z2\n"
                                        "rel x1 z1\nrel x2 z1\nrel x2 z2\nrel x1 z2\n");
  CHECK(two.code == 0);
  CHECK(two.out.substr(0, 2) == "2\n");

  CliResult chain = run_cli({"dim", "-"}, "elements a b c\nrel a b\nrel b c\n");
  CHECK(chain.out.substr(0, 2) == "1\n");

  CliResult capped = run_cli({"dim", "-", "--cap", "3"}, "elements a b c\n");
  CHECK(capped.code == 5);
  CHECK(capped.out == "cap exceeded\n");

  CliResult exceeds = run_cli({"dim", "-", "--max-k", "1"}, "elements a b\n");
  CHECK(exceeds.code == 0);
  CHECK(exceeds.out == "exceeds 1\n");
}

TEST_CASE("cli gen is deterministic and pipes into the other commands") {
  CliResult a = run_cli({"gen", "--kind", "gnp", "--n", "10", "--c", "0", "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == "elements 1 2 3 4 5 6 7 8 9 10\n");
  CliResult b = run_cli({"gen", "--kind", "gnp", "--n", "10", "--c", "0", "--seed", "1"});
  CHECK(a.out == b.out);

  CliResult uni = run_cli({"gen", "--kind", "unicycle", "--n", "20", "--seed", "7"});
  CHECK(uni.code == 0);
  CliResult cls = run_cli({"classify", "-"}, uni.out);
  CHECK(cls.out == "connected unicycle\n");

  CliResult tree = run_cli({"gen", "--kind", "tree", "--n", "14", "--seed", "3"});
  CHECK(run_cli({"classify", "-"}, tree.out).out == "connected tree\n");

  CHECK(run_cli({"gen", "--kind", "what"}).code == 2);
  CHECK(run_cli({"gen", "--kind", "unicycle", "--n", "3"}).code == 2);
  CHECK(run_cli({"gen", "--kind", "gnp", "--n", "5", "--c", "-1"}).code == 2);
}

TEST_CASE("parsing is total on arbitrary bytes") {
  SplitMix64 rng(99);
  const std::string alphabet = "abelmnrst 0123\n#\t<>{}";
  for (int round = 0; round < 300; ++round) {
    std::string text;
    int len = int(rng.uniform(60));
    for (int i = 0; i < len; ++i)
      text += alphabet[size_t(rng.uniform(alphabet.size()))];
    try {
      parse_poset_text(text);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
      CHECK(e.line() >= 1);
    }
  }
}

TEST_CASE("cli realize emits the fixed crown words") {
  std::string crown3 = format_poset_text(crown_poset(3));
  CliResult r = run_cli({"realize", "-"}, crown3);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "x1 x2 z1 x3 z2 z3\n"
        "x2 x3 z2 x1 z3 z1\n"
        "x1 x3 z3 x2 z2 z1\n");
  CliResult d = run_cli({"dim", "-"}, crown3);
  CHECK(d.out.substr(0, 2) == "3\n");
}

TEST_CASE("cli dot") {
  CliResult r = run_cli({"dot", "-"}, kCrown1);
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph poset") == 0);
}

TEST_CASE("cli usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"verify", "only-one-file"}).code == 2);
  CHECK(run_cli({"classify", "no_such_file.poset"}).code == 2);
}
