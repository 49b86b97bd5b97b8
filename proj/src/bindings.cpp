#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfext/cocommutative.hpp"
#include "hopfext/commutative.hpp"
#include "hopfext/hopf_algebra.hpp"
#include "hopfext/orbit_engine.hpp"

namespace py = pybind11;
using namespace hopfext;

namespace {

CpModule make_module(std::uint32_t p, const std::vector<std::uint32_t>& blocks) {
  BlockProfile prof{p, blocks};
  prof.m.resize(p, 0);
  return CpModule::from_blocks(prof);
}

CpModule make_module_from_matrix(std::uint32_t p, const std::vector<std::vector<Fp>>& rows) {
  return CpModule(p, FpMatrix::from_rows(p, rows));
}

py::dict counts_dict(const IsoclassCount& c) {
  py::dict d;
  d["cocommutative"] = c.cocommutative;
  d["noncocommutative"] = c.noncocommutative;
  d["total"] = c.total;
  return d;
}

py::dict classify_dict(const CpModule& m) {
  ClassifyResult r = classify_module(m);
  ClassSpace space(m);
  py::dict d = counts_dict(r.counts);
  d["p"] = m.p();
  d["blocks"] = r.profile.to_string();
  d["chi_dim"] = r.chi_dim;
  d["alt_dim"] = r.alt_dim;
  d["aut_order"] = r.aut_order;
  d["twist_group"] = r.twist_group;
  py::list orbits;
  for (std::size_t i = 0; i < r.full_gamma.representatives.size(); ++i) {
    ClassPoint pt = decode_point(space, r.full_gamma.representatives[i]);
    orbits.append(py::make_tuple(pt.chi, pt.beta, r.full_gamma.orbit_sizes[i]));
  }
  d["orbits"] = orbits;
  return d;
}

py::dict axiom_dict(const AxiomReport& rep) {
  py::dict d;
  d["pass"] = rep.pass;
  d["checks"] = rep.checks_run;
  d["failed"] = rep.failed_check;
  d["witness"] = rep.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact classification of Hopf algebra extensions of kC_p by k^G";

  py::register_exception<CapExceededError>(m, "CapExceeded");

  py::class_<CpModule>(m, "CpModule")
      .def_property_readonly("p", &CpModule::p)
      .def_property_readonly("n", &CpModule::n)
      .def("blocks", [](const CpModule& s) { return s.block_profile().m; })
      .def("matrix",
           [](const CpModule& s) {
             std::vector<std::vector<Fp>> rows;
             for (std::size_t i = 0; i < s.n(); ++i) rows.push_back(s.T().row(i));
             return rows;
           })
      .def("twist", &CpModule::twist, py::arg("k"))
      .def("__repr__", [](const CpModule& s) {
        return "CpModule(p=" + std::to_string(s.p()) + ", blocks=" +
               s.block_profile().to_string() + ")";
      });

  m.def("module", &make_module, py::arg("p"), py::arg("blocks"),
        "module from Jordan block multiplicities [m1, m2, ...]");
  m.def("module_from_matrix", &make_module_from_matrix, py::arg("p"), py::arg("rows"),
        "module from an explicit generator action matrix");
  m.def("trivial_module", &CpModule::trivial, py::arg("p"), py::arg("n"));
  m.def(
      "block_profile", [](const CpModule& s) { return s.block_profile().m; }, py::arg("module"));
  m.def(
      "find_intertwiner",
      [](const CpModule& a, const CpModule& b) -> py::object {
        auto L = find_invertible_intertwiner(a, b);
        if (!L) return py::none();
        std::vector<std::vector<Fp>> rows;
        for (std::size_t i = 0; i < L->rows(); ++i) rows.push_back(L->row(i));
        return py::cast(rows);
      },
      py::arg("a"), py::arg("b"),
      "invertible intertwiner between two modules, or None when the profiles differ");

  m.def(
      "space_dims",
      [](const CpModule& s) {
        ClassSpace space(s);
        return py::make_tuple(space.chi_dim(), space.alt_dim());
      },
      py::arg("module"), "(chi_dim, alt_dim) of the classifying space");

  m.def(
      "isoclass_count", [](const CpModule& s) { return counts_dict(classify_module(s).counts); },
      py::arg("module"), "cocommutative / noncocommutative / total isoclass counts");
  m.def("classify", &classify_dict, py::arg("module"),
        "full classification report with orbit representatives");

  m.def("commutative_isoclass_count", &commutative_isoclass_count, py::arg("n"));
  m.def("count_labels_exhaustive", &count_labels_exhaustive, py::arg("p"), py::arg("n"),
        "distinct symplectic labels over all pairs, by exhaustive enumeration");

  py::class_<HopfStructure>(m, "HopfStructure")
      .def_property_readonly("dim", &HopfStructure::dim)
      .def_property_readonly("p", &HopfStructure::p)
      .def_property_readonly("n", &HopfStructure::n)
      .def("is_cocommutative", &HopfStructure::is_cocommutative)
      .def("check_axioms", [](const HopfStructure& h) { return axiom_dict(check_axioms(h)); })
      .def("to_json", [](const HopfStructure& h) { return hopf_to_json(h, check_axioms(h)); })
      .def("__repr__", [](const HopfStructure& h) {
        return "HopfStructure(dim=" + std::to_string(h.dim()) + ")";
      });

  m.def(
      "build_hopf",
      [](const CpModule& s, const FpVec& chi, const FpVec& beta) {
        ClassSpace space(s);
        return build_hopf(space, ClassPoint{chi, beta});
      },
      py::arg("module"), py::arg("chi"), py::arg("beta"),
      "structure constants for a point of the classifying space");
  m.def(
      "recover_point",
      [](const CpModule& s, const HopfStructure& h) {
        ClassSpace space(s);
        ClassPoint pt = point_of_hopf(space, h);
        return py::make_tuple(pt.chi, pt.beta);
      },
      py::arg("module"), py::arg("hopf"));
  m.def("validate_hopf_json", &validate_hopf_json, py::arg("text"));

  m.def(
      "ext_group_table",
      [](const CpModule& s, const FpVec& a) {
        ExtGroup e(s, a);
        return e.table().mul;
      },
      py::arg("module"), py::arg("a"), "flat multiplication table of the extension group");
  m.def(
      "ext_groups_isomorphic",
      [](const CpModule& ma, const FpVec& a, const CpModule& mb, const FpVec& b) {
        IsoCertificate c = ext_groups_isomorphic(ExtGroup(ma, a), ExtGroup(mb, b));
        return py::make_tuple(c.verdict, c.reason);
      },
      py::arg("module_a"), py::arg("a"), py::arg("module_b"), py::arg("b"));
}
