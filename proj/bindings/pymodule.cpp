#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weakhopf/json_io.hpp"
#include "weakhopf/modules.hpp"
#include "weakhopf/monoid.hpp"
#include "weakhopf/qdouble.hpp"

namespace py = pybind11;
using namespace wha;

namespace {

FieldSpec parse_field(const std::string& f) { return FieldSpec::parse(f); }

py::list witnesses_list(const CheckReport& rep) {
    py::list out;
    for (const auto& w : rep.witnesses) {
        out.append(py::make_tuple(w.index, w.expected.str(), w.actual.str()));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_weakhopf, m) {
    m.doc() = "Exact workbench for weak Hopf algebras, quantum doubles, and "
              "Yang-Baxter checks on finite instances";

    py::register_exception<Error>(m, "WorkbenchError", PyExc_RuntimeError);

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("name", &CheckReport::name)
        .def_readonly("informational", &CheckReport::informational)
        .def_readonly("failure_count", &CheckReport::failure_count)
        .def_readonly("notes", &CheckReport::notes)
        .def_readonly("subs", &CheckReport::subs)
        .def_property_readonly("passed", &CheckReport::passed)
        .def_property_readonly("witnesses", &witnesses_list)
        .def("summary", &CheckReport::summary)
        .def("__bool__", &CheckReport::passed)
        .def("__repr__",
             [](const CheckReport& r) { return "<CheckReport " + r.summary() + ">"; });

    py::class_<FiniteMonoid>(m, "FiniteMonoid")
        .def_readonly("elements", &FiniteMonoid::elements)
        .def_readonly("identity", &FiniteMonoid::identity)
        .def("size", &FiniteMonoid::size)
        .def("product", &FiniteMonoid::product, py::arg("i"), py::arg("j"))
        .def("__len__", &FiniteMonoid::size)
        .def("__repr__", [](const FiniteMonoid& s) {
            return "<FiniteMonoid order " + std::to_string(s.size()) + ">";
        });

    py::class_<WeakHopfAlgebra>(m, "WeakHopfAlgebra")
        .def_property_readonly("dim", [](const WeakHopfAlgebra& h) { return h.base.dim; })
        .def_property_readonly("basis", [](const WeakHopfAlgebra& h) { return h.base.basis; })
        .def_property_readonly("field",
                               [](const WeakHopfAlgebra& h) { return h.base.field.str(); })
        .def("__repr__", [](const WeakHopfAlgebra& h) {
            return "<WeakHopfAlgebra dim " + std::to_string(h.base.dim) + " over " +
                   h.base.field.str() + ">";
        });

    py::class_<BilinearForm>(m, "BilinearForm")
        .def_readonly("rows", &BilinearForm::left_dim)
        .def_readonly("cols", &BilinearForm::right_dim);

    py::class_<PairCertificate>(m, "PairCertificate")
        .def_property_readonly("certified", &PairCertificate::certified)
        .def_property_readonly(
            "kind",
            [](const PairCertificate& c) {
                return c.kind == PairKind::SkewPair ? "skew-pair" : "pair";
            })
        .def_readonly("reports", &PairCertificate::reports)
        .def("__bool__", &PairCertificate::certified);

    py::class_<QuasiMatchedPair>(m, "QuasiMatchedPair")
        .def_property_readonly("dim_x",
                               [](const QuasiMatchedPair& p) { return p.x.base.dim; })
        .def_property_readonly("dim_a",
                               [](const QuasiMatchedPair& p) { return p.a.base.dim; });

    py::class_<QuasiBicrossedProduct>(m, "QuasiBicrossedProduct")
        .def_property_readonly("dim", [](const QuasiBicrossedProduct& d) { return d.alg.dim; })
        .def_readonly("dim_x", &QuasiBicrossedProduct::dim_x)
        .def_readonly("dim_a", &QuasiBicrossedProduct::dim_a)
        .def_property_readonly("basis",
                               [](const QuasiBicrossedProduct& d) { return d.alg.basis; })
        .def("__repr__", [](const QuasiBicrossedProduct& d) {
            return "<QuasiBicrossedProduct dim " + std::to_string(d.alg.dim) + ">";
        });

    py::class_<QuasiRMatrix>(m, "QuasiRMatrix")
        .def_readonly("monomials", &QuasiRMatrix::monomials)
        .def_property_readonly("entries",
                               [](const QuasiRMatrix& r) { return r.tensor.entry_count(); });

    py::class_<ModuleAction>(m, "ModuleAction")
        .def_readonly("alg_dim", &ModuleAction::alg_dim)
        .def_readonly("dim", &ModuleAction::v_dim);

    py::class_<CrossedBimodule>(m, "CrossedBimodule")
        .def_readonly("h_dim", &CrossedBimodule::h_dim)
        .def_readonly("dim", &CrossedBimodule::v_dim);

    py::class_<LinMap>(m, "LinMap")
        .def_readonly("dom", &LinMap::dom)
        .def_readonly("cod", &LinMap::cod);

    py::class_<CliffordSpec>(m, "CliffordSpec");

    py::class_<QuantumDouble>(m, "QuantumDouble")
        .def(py::init<const WeakHopfAlgebra&>(), py::arg("h"))
        .def_property_readonly("dim_h", &QuantumDouble::dim_h)
        .def_property_readonly("dim_d", &QuantumDouble::dim_d)
        .def("check_quasi_cocommutative", &QuantumDouble::check_quasi_cocommutative,
             py::arg("max_terms") = (1ull << 26))
        .def("check_qybe", &QuantumDouble::check_qybe, py::arg("max_terms") = (1ull << 26));

    // monoids
    m.def("trivial_monoid", &trivial_monoid);
    m.def("cyclic_group", &cyclic_group, py::arg("n"));
    m.def("symmetric_group", &symmetric_group, py::arg("n"));
    m.def("semilattice_y", &semilattice_y);
    m.def("sprime_monoid", &sprime_monoid);
    m.def("s3_adjoined", &s3_adjoined);
    m.def("adjoin_absorbing", &adjoin_absorbing, py::arg("group"), py::arg("label") = "e");
    m.def("unit_matrix_group", &unit_matrix_group, py::arg("modulus"));
    m.def(
        "reduction_hom",
        [](std::uint32_t from_mod, std::uint32_t to_mod) {
            ReductionHom r = reduction_hom(from_mod, to_mod);
            return py::make_tuple(r.map, r.surjective, r.report);
        },
        py::arg("from_modulus"), py::arg("to_modulus"),
        "Returns (index_map, surjective, report)");
    m.def("build_paper_monoid", &build_paper_monoid,
          "The 440-element Clifford monoid of 2x2 unit matrix groups");
    m.def("check_monoid", &check_monoid);
    m.def("check_clifford", &check_clifford);
    m.def("element_inverse", &element_inverse, py::arg("monoid"), py::arg("x"));
    m.def("clifford_inverses", &clifford_inverses);
    m.def("assemble_clifford", &assemble_clifford, py::arg("spec"));
    m.def(
        "monoid_algebra",
        [](const FiniteMonoid& s, const std::string& field) {
            return monoid_algebra(s, parse_field(field));
        },
        py::arg("monoid"), py::arg("field") = "Q");

    // algebra constructors and checks
    m.def("dual", &dual);
    m.def("opposite", &opposite);
    m.def("coopposite", &coopposite);
    m.def("star_cop", &star_cop);
    m.def("tensor_product", &tensor_product, py::arg("h"), py::arg("k"));
    m.def("check_algebra_axioms",
          [](const WeakHopfAlgebra& h) { return check_algebra_axioms(h.base); });
    m.def("check_coalgebra_axioms",
          [](const WeakHopfAlgebra& h) { return check_coalgebra_axioms(h.base); });
    m.def("check_almost_bialgebra",
          [](const WeakHopfAlgebra& h) { return check_almost_bialgebra(h.base); });
    m.def("check_weak_antipode", &check_weak_antipode);
    m.def("check_anti_bialgebra_morphism", &check_anti_bialgebra_morphism);
    m.def("check_perfect", &check_perfect);
    m.def("check_coperfect", &check_coperfect);
    m.def("check_perfect_variant", &check_perfect_variant);

    // pairing
    m.def("canonical_eval_pairing", &canonical_eval_pairing);
    m.def("check_weak_hopf_pair", &check_weak_hopf_pair, py::arg("x"), py::arg("a"),
          py::arg("form"));
    m.def("check_skew_pair", &check_skew_pair, py::arg("x"), py::arg("a"), py::arg("form"));

    // doubles
    m.def("derive_actions", &derive_actions, py::arg("x"), py::arg("a"), py::arg("form"));
    m.def("check_quasi_matched", &check_quasi_matched);
    m.def("build_quasi_bicrossed", &build_quasi_bicrossed);
    m.def("quantum_double", &quantum_double, py::arg("h"), py::arg("force") = false,
          py::arg("max_terms") = (1ull << 24));
    m.def("r_matrix", &r_matrix);
    m.def("r_bar", &r_bar);
    m.def("check_quasi_cocommutative",
          py::overload_cast<const QuasiBicrossedProduct&, const QuasiRMatrix&, std::uint64_t>(
              &check_quasi_cocommutative),
          py::arg("d"), py::arg("r"), py::arg("max_terms") = (1ull << 24));
    m.def("check_quasi_braided", &check_quasi_braided, py::arg("d"), py::arg("r"),
          py::arg("max_terms") = (1ull << 24));
    m.def("check_qybe",
          py::overload_cast<const QuasiBicrossedProduct&, const QuasiRMatrix&, std::uint64_t>(
              &check_qybe),
          py::arg("d"), py::arg("r"), py::arg("max_terms") = (1ull << 24));
    m.def("check_regular", &check_regular, py::arg("d"), py::arg("r"), py::arg("rbar"),
          py::arg("max_terms") = (1ull << 24));
    m.def("check_r_invertible", &check_r_invertible, py::arg("d"), py::arg("r"), py::arg("rbar"),
          py::arg("max_terms") = (1ull << 24));

    // representations
    m.def("regular_module",
          [](const QuasiBicrossedProduct& d) { return regular_module(d.alg); });
    m.def("check_module",
          [](const QuasiBicrossedProduct& d, const ModuleAction& act) {
              return check_module(d.alg, act);
          });
    m.def("double_module_to_crossed", &double_module_to_crossed, py::arg("d"), py::arg("act"));
    m.def("crossed_to_double_module", &crossed_to_double_module, py::arg("d"), py::arg("cb"));
    m.def("check_crossed_bimodule", &check_crossed_bimodule, py::arg("h"), py::arg("cb"));
    m.def("braid_operator", &braid_operator, py::arg("act"), py::arg("r"));
    m.def("check_braid_and_regularity", &check_braid_and_regularity, py::arg("c"),
          py::arg("cbar"));

    // file formats
    m.def("save_monoid", [](const FiniteMonoid& s, const std::string& path) {
        write_json_file(path, monoid_to_json(s));
    });
    m.def("load_monoid",
          [](const std::string& path) { return monoid_from_json(read_json_file(path)); });
    m.def("save_algebra", [](const WeakHopfAlgebra& h, const std::string& path) {
        write_json_file(path, algebra_to_json(h));
    });
    m.def("load_algebra",
          [](const std::string& path) { return algebra_from_json(read_json_file(path)); });
    m.def("load_clifford_spec", [](const std::string& path) {
        return clifford_spec_from_json(read_json_file(path),
                                       std::filesystem::path(path).parent_path());
    });
    m.def("save_clifford_spec", [](const CliffordSpec& s, const std::string& path) {
        write_json_file(path, clifford_spec_to_json(s));
    });
    m.def("paper_clifford_spec", &paper_clifford_spec);

    m.attr("__version__") = kToolVersion;
}
