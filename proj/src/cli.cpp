#include "posetdim/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "posetdim/classify.hpp"
#include "posetdim/graft_realizer.hpp"
#include "posetdim/io.hpp"
#include "posetdim/oracle.hpp"
#include "posetdim/poset.hpp"

namespace posetdim::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) raise(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

int exit_code(const error& e) {
  switch (e.code()) {
    case errc::unsupported_class: return 3;
    case errc::cap_exceeded: return 5;
    default: return 2;
  }
}

int run_classify(const Poset& p, std::ostream& out) {
  PosetClass cls = classify(p);
  if (p.size() == 0) {
    out << "connected empty\n";
  } else if (cls.connected) {
    out << "connected " << component_class_name(cls.components[0]) << "\n";
  } else {
    out << "disconnected\n";
    for (size_t k = 0; k < cls.components.size(); ++k)
      out << "component " << k + 1 << ": "
          << component_class_name(cls.components[k]) << "\n";
  }
  return 0;
}

int run_realize(const Poset& p, const std::string& format, std::ostream& out,
                std::ostream& err) {
  Realizer r = realize_any(p);
  if (r.size() != 3 || !realizes(p, r)) {
    err << "internal error: emitted words do not realize the input\n";
    return 4;
  }
  out << (format == "machine" ? format_realizer_machine(p, r, true)
                              : format_realizer_text(p, r));
  return 0;
}

int run_verify(const Poset& p, const std::vector<std::vector<std::string>>& tokens,
               std::ostream& out) {
  Realizer r;
  for (const auto& word : tokens) {
    if (int(word.size()) != p.size())
      raise(errc::parse_error, "word is not a permutation of the element set");
    r.push_back(word_ids(p, word));  // UnknownElement on stray tokens
  }
  if (r.empty() && p.size() > 0) {
    out << "no words\n";
    return 1;
  }
  for (const Word& w : r) {
    std::vector<bool> seen(size_t(p.size()), false);
    for (ElementId e : w) {
      if (seen[size_t(e)])
        raise(errc::parse_error, "word repeats element '" + p.label(e) + "'");
      seen[size_t(e)] = true;
    }
  }
  if (auto bad = first_violation(p, r)) {
    auto [a, b] = *bad;
    if (p.less(a, b))
      out << "violates " << p.label(a) << " < " << p.label(b) << "\n";
    else
      out << "never reverses " << p.label(a) << " " << p.label(b) << "\n";
    return 1;
  }
  out << "ok\n";
  return 0;
}

int run_dim(const Poset& p, int max_k, long long cap, std::ostream& out) {
  DimensionResult res;
  try {
    res = brute_dimension(p, max_k, cap);
  } catch (const error& e) {
    if (e.code() != errc::cap_exceeded) throw;
    out << "cap exceeded\n";
    return 5;
  }
  if (res.exceeded) {
    out << "exceeds " << max_k << "\n";
    return 0;
  }
  out << res.value << "\n";
  out << format_realizer_text(p, res.witness);
  return 0;
}

int run_gen(const std::string& kind, int n, double c, uint64_t seed,
            std::ostream& out) {
  RandomModel model;
  model.n = n;
  model.c = c;
  model.seed = seed;
  if (kind == "gnp")
    model.kind = ModelKind::gnp;
  else if (kind == "tree")
    model.kind = ModelKind::tree;
  else if (kind == "unicycle")
    model.kind = ModelKind::unicycle;
  else
    raise(errc::invalid_model, "kind must be gnp, tree or unicycle");
  out << format_poset_text(sample(model));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"realizers and exact dimension for tree and unicycle posets"};
  app.require_subcommand(1);

  std::string file = "-", realizer_file, format = "text", kind;
  int max_k = 4, n = 0;
  long long cap = 200000;
  double c = 0.0;
  uint64_t seed = 1;

  auto* cmd_classify = app.add_subcommand("classify", "report the cover-graph class");
  cmd_classify->add_option("file", file, "poset file ('-' for stdin)");

  auto* cmd_realize = app.add_subcommand("realize", "emit a 3-word realizer");
  cmd_realize->add_option("file", file);
  cmd_realize->add_option("--format", format, "text|machine")
      ->check(CLI::IsMember({"text", "machine"}));

  auto* cmd_verify = app.add_subcommand("verify", "check a realizer against a poset");
  cmd_verify->add_option("poset", file)->required();
  cmd_verify->add_option("realizer", realizer_file)->required();

  auto* cmd_dim = app.add_subcommand("dim", "exact dimension by exhaustive search");
  cmd_dim->add_option("file", file);
  cmd_dim->add_option("--max-k", max_k, "largest realizer size to try");
  cmd_dim->add_option("--cap", cap, "linear extension cap");

  auto* cmd_gen = app.add_subcommand("gen", "sample a random poset");
  cmd_gen->add_option("--kind", kind, "gnp|tree|unicycle")->required();
  cmd_gen->add_option("--n", n, "element count (element budget for unicycle)");
  cmd_gen->add_option("--c", c, "gnp edge rate, edge probability c/n");
  cmd_gen->add_option("--seed", seed, "generator seed")->envname("POSETDIM_SEED");

  auto* cmd_dot = app.add_subcommand("dot", "emit the Hasse diagram as DOT");
  cmd_dot->add_option("file", file);

  std::vector<const char*> argv{"posetdim"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(kind, n, c, seed, out);
    if (cmd_verify->parsed()) {
      Poset p = parse_poset_text(slurp(file, in));
      auto tokens = parse_realizer_tokens(slurp(realizer_file, in));
      return run_verify(p, tokens, out);
    }
    Poset p = parse_poset_text(slurp(file, in));
    if (cmd_classify->parsed()) return run_classify(p, out);
    if (cmd_realize->parsed()) return run_realize(p, format, out, err);
    if (cmd_dim->parsed()) return run_dim(p, max_k, cap, out);
    if (cmd_dot->parsed()) {
      out << to_dot(p);
      return 0;
    }
  } catch (const error& e) {
    if (e.line() > 0)
      err << "line " << e.line() << ": " << e.what() << "\n";
    else
      err << e.what() << "\n";
    return exit_code(e);
  }
  return 2;
}

}  // namespace posetdim::cli
