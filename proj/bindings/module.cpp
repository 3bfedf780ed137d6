#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posetdim/classify.hpp"
#include "posetdim/crown.hpp"
#include "posetdim/graft_realizer.hpp"
#include "posetdim/io.hpp"
#include "posetdim/oracle.hpp"
#include "posetdim/poset.hpp"

namespace py = pybind11;
using namespace posetdim;

namespace {

// The Python surface works in label words.
std::vector<std::vector<std::string>> label_realizer(const Poset& p,
                                                     const Realizer& r) {
  std::vector<std::vector<std::string>> out;
  for (const Word& w : r) out.push_back(word_labels(p, w));
  return out;
}

Realizer id_realizer(const Poset& p,
                     const std::vector<std::vector<std::string>>& words) {
  Realizer out;
  for (const auto& w : words) out.push_back(word_ids(p, w));
  return out;
}

ModelKind kind_of(const std::string& kind) {
  if (kind == "gnp") return ModelKind::gnp;
  if (kind == "tree") return ModelKind::tree;
  if (kind == "unicycle") return ModelKind::unicycle;
  raise(errc::invalid_model, "kind must be gnp, tree or unicycle");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Realizers of at most three linear extensions for tree and "
            "unicycle posets, with an exact brute-force dimension oracle.";

  py::register_exception<error>(m, "PosetError");

  py::class_<Poset>(m, "Poset")
      .def(py::init<>())
      .def("__len__", &Poset::size)
      .def_property_readonly("labels", &Poset::labels)
      .def("less",
           [](const Poset& p, const std::string& a, const std::string& b) {
             return p.less(p.id_of(a), p.id_of(b));
           })
      .def("covers",
           [](const Poset& p) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [a, b] : p.covers())
               out.emplace_back(p.label(a), p.label(b));
             return out;
           })
      .def("dual", [](const Poset& p) { return dual(p); })
      .def("restrict",
           [](const Poset& p, const std::vector<std::string>& keep) {
             return restrict_poset(p, word_ids(p, keep));
           })
      .def("__eq__", [](const Poset& p, const Poset& q) { return p == q; })
      .def("__repr__", [](const Poset& p) {
        return "<Poset with " + std::to_string(p.size()) + " elements>";
      });

  m.def("build_poset", &build_poset, py::arg("elements"), py::arg("relations"));
  m.def("parse_poset", &parse_poset_text, py::arg("text"));
  m.def("format_poset", &format_poset_text, py::arg("poset"));
  m.def("to_dot", &to_dot, py::arg("poset"));

  m.def(
      "is_linear_extension",
      [](const Poset& p, const std::vector<std::string>& word) {
        for (const std::string& t : word)
          if (!p.find(t)) return false;
        return is_linear_extension(p, word_ids(p, word));
      },
      py::arg("poset"), py::arg("word"));
  m.def(
      "realizes",
      [](const Poset& p, const std::vector<std::vector<std::string>>& words) {
        for (const auto& w : words)
          for (const std::string& t : w)
            if (!p.find(t)) return false;
        return realizes(p, id_realizer(p, words));
      },
      py::arg("poset"), py::arg("words"));
  m.def(
      "realize",
      [](const Poset& p) { return label_realizer(p, realize_any(p)); },
      py::arg("poset"), "Three linear extensions realizing the poset.");

  m.def(
      "classify",
      [](const Poset& p) {
        PosetClass cls = classify(p);
        std::vector<std::string> names;
        for (ComponentClass c : cls.components)
          names.emplace_back(component_class_name(c));
        return py::make_tuple(cls.connected, names);
      },
      py::arg("poset"), "(connected, per-component class names)");

  m.def(
      "brute_dimension",
      [](const Poset& p, int k_max, long long cap) -> py::object {
        DimensionResult res = brute_dimension(p, k_max, cap);
        if (res.exceeded) return py::none();
        return py::make_tuple(res.value, label_realizer(p, res.witness));
      },
      py::arg("poset"), py::arg("k_max") = 4, py::arg("cap") = 200000,
      "Exact dimension with a witness, or None when it exceeds k_max.");

  m.def("crown_poset", &crown_poset, py::arg("n"));
  m.def(
      "crown_realizer",
      [](int n) { return label_realizer(crown_poset(n), crown_realizer(n)); },
      py::arg("n"));

  m.def(
      "sample",
      [](const std::string& kind, int n, double c, uint64_t seed) {
        return sample({kind_of(kind), n, c, seed});
      },
      py::arg("kind"), py::arg("n") = 0, py::arg("c") = 0.0, py::arg("seed") = 1);
}
