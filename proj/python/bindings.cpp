#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "scotree/examples.hpp"
#include "scotree/io.hpp"
#include "scotree/lattice.hpp"
#include "scotree/pm.hpp"
#include "scotree/random_trees.hpp"
#include "scotree/scot.hpp"

namespace py = pybind11;
using namespace scotree;

namespace {

Word to_word(const std::vector<Symbol>& syms) { return Word(syms); }

py::object to_fraction(const Rational& r) {
  std::ostringstream os;
  os << r;
  return py::module_::import("fractions").attr("Fraction")(os.str());
}

py::object to_pyint(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::dict witness_dict(const Alphabet& alphabet, const PmWitness& w) {
  py::dict d;
  switch (w.kind) {
    case PmViolation::missing_next_context: d["kind"] = "missing_next_context"; break;
    case PmViolation::uncontained_subtree: d["kind"] = "uncontained_subtree"; break;
    case PmViolation::prefix_not_node: d["kind"] = "prefix_not_node"; break;
    case PmViolation::incomplete_node: d["kind"] = "incomplete_node"; break;
  }
  d["word"] = w.word.symbols();
  if (w.symbol) d["symbol"] = *w.symbol;
  if (w.source) d["source"] = w.source->symbols();
  d["text"] = alphabet.render(w.word);
  return d;
}

py::object pm_result(const ContextTree& t, const PmResult& r) {
  if (r.pm) return py::make_tuple(true, py::none());
  return py::make_tuple(false, witness_dict(t.alphabet(), *r.witness));
}

std::vector<std::vector<Symbol>> context_lists(const ContextTree& t) {
  std::vector<std::vector<Symbol>> out;
  out.reserve(t.leaf_count());
  for (const Word& c : t.contexts()) out.push_back(c.symbols());
  return out;
}

}  // namespace

PYBIND11_MODULE(scotree, m) {
  m.doc() = "Context trees over finite alphabets: perfect-memory checks, closure, "
            "the containment lattice, sparsity metrics and stochastic context trees";

  py::register_exception<Error>(m, "ScotreeError");

  py::class_<Alphabet>(m, "Alphabet")
      .def(py::init<std::vector<std::string>>())
      .def_static("decimal", &Alphabet::decimal)
      .def("__len__", &Alphabet::size)
      .def("tokens", &Alphabet::tokens)
      .def("render", [](const Alphabet& a, const std::vector<Symbol>& w) {
        return a.render(to_word(w));
      });

  py::class_<ContextTree>(m, "ContextTree")
      .def("alphabet", &ContextTree::alphabet)
      .def("contexts", &context_lists)
      .def("context_strings",
           [](const ContextTree& t) {
             std::vector<std::string> out;
             for (const Word& c : t.contexts()) out.push_back(t.alphabet().render(c));
             return out;
           })
      .def("leaf_count", &ContextTree::leaf_count)
      .def("node_count", &ContextTree::node_count)
      .def("depth", &ContextTree::depth)
      .def("is_empty", &ContextTree::empty)
      .def("__eq__", [](const ContextTree& a, const ContextTree& b) { return a == b; })
      .def("__repr__", [](const ContextTree& t) {
        return "<ContextTree with " + std::to_string(t.leaf_count()) + " contexts>";
      });

  m.def("from_contexts", [](const Alphabet& a, const std::vector<std::vector<Symbol>>& words) {
    std::vector<Word> ws;
    ws.reserve(words.size());
    for (const auto& w : words) ws.push_back(to_word(w));
    return from_contexts(a, std::move(ws));
  });
  m.def("is_complete", &is_complete);
  m.def("complete_hull", &complete_hull);
  m.def("parent_tree", &parent_tree);
  m.def("saturate", &saturate);
  m.def("subtree", &subtree);
  m.def("all_subtrees", &all_subtrees);
  m.def("count_complete_trees", [](std::size_t n, std::size_t depth) {
    return to_pyint(count_complete_trees(n, depth));
  });

  m.def("contained_at_root", [](const ContextTree& a, const ContextTree& b) {
    return contained_at_root(a, b);
  });
  m.def("covers_at_root", [](const ContextTree& a, const ContextTree& b) {
    return covers_at_root(a, b);
  });
  m.def("union_at_root", &union_at_root);
  m.def("intersection_at_root", &intersection_at_root);

  m.def("is_pm_next_context", [](const ContextTree& t) { return pm_result(t, is_pm_next_context(t)); });
  m.def("is_pm_subtrees", [](const ContextTree& t) { return pm_result(t, is_pm_subtrees(t)); });
  m.def("is_pm_shifted_contexts",
        [](const ContextTree& t) { return pm_result(t, is_pm_shifted_contexts(t)); });
  m.def("is_pm_prefixes", [](const ContextTree& t) { return pm_result(t, is_pm_prefixes(t)); });

  m.def("closure_oracle", &closure_oracle);
  m.def("closure_trim", [](const ContextTree& t) { return closure_trim(t); });
  m.def("pm_chain", &pm_chain);
  m.def("metrics", [](const ContextTree& t) {
    TreeMetrics x = metrics(t);
    py::dict d;
    d["depth"] = x.depth;
    d["leaves"] = x.leaf_count;
    d["nodes"] = x.node_count;
    d["r1"] = to_fraction(x.r1);
    d["r2"] = to_fraction(x.r2);
    d["completed"] = x.completed;
    return d;
  });

  m.def("comb", &examples::comb);
  m.def("sparse_example", &examples::sparse_example);
  m.def("minimal_full_mc", &examples::minimal_full_mc);
  m.def("wide_r2", &examples::wide_r2);

  py::class_<Scot>(m, "Scot")
      .def("tree", &Scot::tree)
      .def("exact", &Scot::exact)
      .def("dists", [](const Scot& s) {
        std::vector<std::vector<py::object>> out;
        for (const auto& row : s.dists()) {
          std::vector<py::object> r;
          for (const Rational& p : row) r.push_back(to_fraction(p));
          out.push_back(std::move(r));
        }
        return out;
      });

  m.def("make_scot",
        [](ContextTree tree, const std::vector<std::vector<std::string>>& rows, bool exact) {
          std::vector<std::vector<Rational>> dists;
          for (const auto& row : rows) {
            std::vector<Rational> r;
            for (const std::string& p : row) r.emplace_back(p);
            dists.push_back(std::move(r));
          }
          return Scot(std::move(tree), std::move(dists), exact);
        },
        py::arg("tree"), py::arg("rows"), py::arg("exact") = true,
        "rows: one list of 'num/den' strings per context, in canonical context order");

  py::class_<MarkovChain>(m, "MarkovChain")
      .def_readonly("exact", &MarkovChain::exact)
      .def("states", [](const MarkovChain& mc) {
        std::vector<std::string> out;
        for (const Word& s : mc.states) out.push_back(mc.alphabet.render(s, "."));
        return out;
      })
      .def("matrix", [](const MarkovChain& mc) {
        std::vector<std::vector<py::object>> out;
        for (const auto& row : mc.matrix) {
          std::vector<py::object> r;
          for (const Rational& p : row) r.push_back(to_fraction(p));
          out.push_back(std::move(r));
        }
        return out;
      });

  m.def("build_markov", &build_markov);
  m.def("stationary",
        [](const MarkovChain& mc, double tol, std::size_t max_iters) {
          StationaryResult r = stationary(mc, tol, max_iters);
          py::dict d;
          d["pi"] = r.pi;
          d["iterations"] = r.iterations;
          d["unique"] = r.unique;
          return d;
        },
        py::arg("mc"), py::arg("tol") = 1e-12, py::arg("max_iters") = 1000000);
  m.def("simulate",
        [](const Scot& s, std::size_t steps, std::uint64_t seed,
           const std::optional<std::vector<Symbol>>& init) {
          std::optional<Word> w;
          if (init) w = to_word(*init);
          return simulate(s, steps, seed, w);
        },
        py::arg("scot"), py::arg("steps"), py::arg("seed"), py::arg("init") = py::none());
  m.def("next_context", [](const ContextTree& t, const std::vector<Symbol>& c, Symbol a) {
    return next_context(t, to_word(c), a).symbols();
  });

  m.def("parse_tree", [](const std::string& text) { return io::parse_tree(text); });
  m.def("parse_scot", [](const std::string& text) { return io::parse_scot(text); });
  m.def("render_tree", &io::render_tree);
  m.def("render_scot", &io::render_scot);
  m.def("render_markov_csv", &io::render_markov_csv);
}
