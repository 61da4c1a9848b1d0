#include "scotree/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "scotree/examples.hpp"
#include "scotree/io.hpp"
#include "scotree/lattice.hpp"
#include "scotree/pm.hpp"
#include "scotree/scot.hpp"

namespace scotree::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

std::string quoted_word(const Alphabet& alphabet, const Word& w) {
  return "'" + (w.empty() ? std::string("<empty>") : alphabet.render(w)) + "'";
}

std::string describe_witness(const Alphabet& alphabet, const PmWitness& w) {
  switch (w.kind) {
    case PmViolation::missing_next_context:
      return "no context is a postfix of " +
             quoted_word(alphabet, w.word.appended(*w.symbol)) + " (context " +
             quoted_word(alphabet, w.word) + " followed by '" + alphabet.token(*w.symbol) + "')";
    case PmViolation::uncontained_subtree:
      return "subtree at root child '" + alphabet.token(*w.symbol) + "' has context " +
             quoted_word(alphabet, w.word) + " that is a postfix of no context";
    case PmViolation::prefix_not_node:
      return quoted_word(alphabet, w.word) + " (leading segment of context " +
             quoted_word(alphabet, *w.source) + ") is a postfix of no context";
    case PmViolation::incomplete_node:
      return "internal node " + quoted_word(alphabet, w.word) + " is missing the child '" +
             alphabet.token(*w.symbol) + "'";
  }
  return "unknown";
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

struct ChainOptions {
  std::string file_a;
  std::string file_b;
  std::string out_dir = ".";
};

int do_check(const std::string& path, const std::string& criterion, std::ostream& out) {
  ContextTree t = io::parse_tree(read_file(path));
  struct Check {
    const char* id;
    PmResult (*fn)(const ContextTree&);
  };
  static const Check kChecks[] = {
      {"def4", is_pm_next_context},
      {"thm2", is_pm_subtrees},
      {"cor1", is_pm_shifted_contexts},
      {"cor2", is_pm_prefixes},
  };
  bool all_pm = true;
  for (const Check& c : kChecks) {
    if (criterion != "all" && criterion != c.id) continue;
    PmResult r = c.fn(t);
    out << c.id << ": " << (r.pm ? "perfect-memory" : "not perfect-memory") << "\n";
    if (!r.pm) {
      all_pm = false;
      out << c.id << " witness: " << describe_witness(t.alphabet(), *r.witness) << "\n";
    }
  }
  return all_pm ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Context trees: perfect-memory checks, closure, lattice, metrics, SCOT tools"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, criterion = "all", method = "trim", kind, init_tokens;
  std::string out_dir = ".";
  bool json_output = false;
  std::size_t opt_n = 2, opt_depth = 4, steps = 0;
  std::uint64_t seed = 0;

  CLI::App* validate = app.add_subcommand("validate", "Parse a ctree/scot file and report on it");
  validate->add_option("file", file)->required();

  CLI::App* check = app.add_subcommand("check", "Run perfect-memory checks on a tree");
  check->add_option("file", file)->required();
  check->add_option("--criterion", criterion)
      ->check(CLI::IsMember({"def4", "thm2", "cor1", "cor2", "all"}));

  CLI::App* close = app.add_subcommand("close", "Perfect-memory closure of a tree");
  close->add_option("file", file)->required();
  close->add_option("--method", method)->check(CLI::IsMember({"trim", "oracle"}));
  close->add_option("-o,--output", out_path);

  CLI::App* complete = app.add_subcommand("complete", "Minimal complete tree containing the input");
  complete->add_option("file", file)->required();
  complete->add_option("-o,--output", out_path);

  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Depth, leaf/node counts, r1 and r2");
  metrics_cmd->add_option("file", file)->required();
  metrics_cmd->add_flag("--json", json_output);

  CLI::App* chain = app.add_subcommand("chain", "Leaf-set chain between nested perfect-memory trees");
  chain->add_option("file_a", file)->required();
  chain->add_option("file_b", file_b)->required();
  chain->add_option("-o,--output-dir", out_dir);

  CLI::App* lattice_cmd = app.add_subcommand("lattice", "Union or intersection at the root");
  lattice_cmd->add_option("operation", kind)->required()->check(CLI::IsMember({"union", "intersect"}));
  lattice_cmd->add_option("file_a", file)->required();
  lattice_cmd->add_option("file_b", file_b)->required();
  lattice_cmd->add_option("-o,--output", out_path);

  CLI::App* example = app.add_subcommand("example", "Generate a named example family");
  example->add_option("family", kind)->required()
      ->check(CLI::IsMember({"comb", "sparse", "minfull", "wide"}));
  example->add_option("--n", opt_n);
  example->add_option("--depth", opt_depth);
  example->add_option("-o,--output", out_path);

  CLI::App* count = app.add_subcommand("count", "Count complete trees of bounded depth");
  count->add_option("--n", opt_n)->required();
  count->add_option("--depth", opt_depth)->required();

  CLI::App* markov = app.add_subcommand("markov", "First-order chain of a SCOT, as CSV");
  markov->add_option("file", file)->required();
  markov->add_option("-o,--output", out_path);

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Generate a symbol sequence from a SCOT");
  simulate_cmd->add_option("file", file)->required();
  simulate_cmd->add_option("--steps", steps)->required();
  simulate_cmd->add_option("--seed", seed)->required();
  simulate_cmd->add_option("--init", init_tokens);

  std::vector<std::string> argv_storage(args);
  std::vector<const char*> argv;
  argv.push_back("scotree");
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) {
      auto value = io::parse_any(read_file(file));
      if (std::holds_alternative<ContextTree>(value)) {
        const ContextTree& t = std::get<ContextTree>(value);
        out << "ctree: " << t.leaf_count() << " contexts, alphabet size "
            << t.alphabet().size() << ", depth " << t.depth() << ", complete "
            << (is_complete(t) ? "yes" : "no") << "\n";
      } else {
        const Scot& s = std::get<Scot>(value);
        out << "scot: " << s.tree().leaf_count() << " contexts, alphabet size "
            << s.tree().alphabet().size() << ", depth " << s.tree().depth()
            << ", probabilities " << (s.exact() ? "exact" : "decimal") << "\n";
      }
      return 0;
    }

    if (check->parsed()) return do_check(file, criterion, out);

    if (close->parsed()) {
      ContextTree t = io::parse_tree(read_file(file));
      ContextTree hull = complete_hull(t);
      ContextTree closure = method == "trim" ? closure_trim(hull) : closure_oracle(hull);
      write_output(out_path, io::render_tree(closure), out);
      return 0;
    }

    if (complete->parsed()) {
      ContextTree t = io::parse_tree(read_file(file));
      write_output(out_path, io::render_tree(complete_hull(t)), out);
      return 0;
    }

    if (metrics_cmd->parsed()) {
      ContextTree t = io::parse_tree(read_file(file));
      TreeMetrics m = metrics(t);
      if (json_output) {
        nlohmann::json j{
            {"depth", m.depth},
            {"leaves", m.leaf_count},
            {"nodes", m.node_count},
            {"r1", rational_string(m.r1)},
            {"r1_decimal", static_cast<double>(m.r1)},
            {"r2", rational_string(m.r2)},
            {"r2_decimal", static_cast<double>(m.r2)},
            {"completed", m.completed},
        };
        out << j.dump(2) << "\n";
      } else {
        out << "depth " << m.depth << "\n"
            << "leaves " << m.leaf_count << "\n"
            << "nodes " << m.node_count << "\n"
            << "r1 " << rational_string(m.r1) << "\n"
            << "r2 " << rational_string(m.r2) << "\n"
            << "completed " << (m.completed ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (chain->parsed()) {
      ContextTree a = io::parse_tree(read_file(file));
      ContextTree b = io::parse_tree(read_file(file_b));
      std::vector<ContextTree> seq = pm_chain(a, b);
      std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "chain-%03zu.ctree", i);
        std::filesystem::path p = std::filesystem::path(out_dir) / name;
        write_output(p.string(), io::render_tree(seq[i]), out);
        out << p.string() << " (" << seq[i].leaf_count() << " leaves)\n";
      }
      return 0;
    }

    if (lattice_cmd->parsed()) {
      ContextTree a = io::parse_tree(read_file(file));
      ContextTree b = io::parse_tree(read_file(file_b));
      ContextTree r = kind == "union" ? union_at_root(a, b) : intersection_at_root(a, b);
      write_output(out_path, io::render_tree(r), out);
      return 0;
    }

    if (example->parsed()) {
      ContextTree t = [&] {
        if (kind == "comb") return examples::comb(opt_n, opt_depth);
        if (kind == "sparse") return examples::sparse_example();
        if (kind == "minfull") return examples::minimal_full_mc(opt_depth);
        return examples::wide_r2(opt_n, opt_depth);
      }();
      write_output(out_path, io::render_tree(t), out);
      return 0;
    }

    if (count->parsed()) {
      out << count_complete_trees(opt_n, opt_depth).str() << "\n";
      return 0;
    }

    if (markov->parsed()) {
      Scot s = io::parse_scot(read_file(file));
      write_output(out_path, io::render_markov_csv(build_markov(s)), out);
      return 0;
    }

    if (simulate_cmd->parsed()) {
      Scot s = io::parse_scot(read_file(file));
      std::optional<Word> init;
      if (!simulate_cmd->get_option("--init")->empty()) {
        std::istringstream ss(init_tokens);
        std::vector<Symbol> syms;
        std::string tok;
        while (ss >> tok) {
          auto idx = s.tree().alphabet().index_of(tok);
          if (!idx) throw Error("unknown symbol '" + tok + "' in --init");
          syms.push_back(*idx);
        }
        init = Word(std::move(syms));
      }
      std::vector<Symbol> seq = simulate(s, steps, seed, init);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out << ' ';
        out << s.tree().alphabet().token(seq[i]);
      }
      out << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace scotree::cli
