#include "homcat/io.hpp"
#include "homcat/parallel.hpp"
#include "homcat/smash.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace homcat;

namespace {

py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }

// Q -> fractions.Fraction, F_p -> int residue
py::object to_py(const Scalar& s) {
    if (s.modulus()) return py::int_(s.residue());
    return fraction_type()(s.str());
}

Scalar from_py(const py::handle& h, const FieldSpec& f) {
    if (py::isinstance<py::bool_>(h)) throw py::type_error("booleans are not scalars");
    if (py::isinstance<py::int_>(h) || py::isinstance<py::str>(h) || py::isinstance(h, fraction_type()))
        return Scalar::parse(py::str(h).cast<std::string>(), f);
    throw py::type_error("scalars must be int, str or fractions.Fraction");
}

LinearMap map_from_rows(const std::vector<std::vector<py::object>>& rows, const std::string& field) {
    const FieldSpec f = FieldSpec::parse(field);
    std::vector<std::vector<Scalar>> r;
    for (const auto& row : rows) {
        r.emplace_back();
        for (const auto& x : row) r.back().push_back(from_py(x, f));
    }
    return LinearMap::from_rows(r);
}

py::list map_rows(const LinearMap& m) {
    const Matrix d = m.to_matrix();
    py::list out;
    for (std::size_t i = 0; i < d.rows; ++i) {
        py::list row;
        for (std::size_t j = 0; j < d.cols; ++j) row.append(to_py(d.at(i, j)));
        out.append(row);
    }
    return out;
}

py::list vec_list(const Vec& v, std::size_t n) {
    py::list out;
    for (std::size_t i = 0; i < n; ++i) out.append(to_py(coeff(v, static_cast<Index>(i))));
    return out;
}

py::dict document_dict(const io::Document& d) {
    py::dict out;
    out["field"] = d.field.str();
    if (d.hopf) out["hopf"] = *d.hopf;
    if (d.algebra) out["algebra"] = *d.algebra;
    if (d.coalgebra) out["coalgebra"] = *d.coalgebra;
    if (d.monoidal) out["datum"] = *d.monoidal;
    if (!d.doi_modules.empty()) out["doi_modules"] = d.doi_modules;
    if (!d.yd_modules.empty()) out["yd_modules"] = d.yd_modules;
    if (d.q_map) out["q_map"] = *d.q_map;
    return out;
}

std::string hopf_document(const HomHopfAlgebra& H, const std::string& field) {
    io::json d = io::document_json(FieldSpec::parse(field));
    d["hopf"] = io::hopf_json(H);
    return io::serialize(d);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hom-Hopf algebras, Doi-Hopf modules and braidings";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("set_thread_count", &set_thread_count, py::arg("n"));
    m.def("thread_count", &thread_count);

    py::class_<LinearMap>(m, "LinearMap")
        .def(py::init(&map_from_rows), py::arg("rows"), py::arg("field") = "Q")
        .def_static("identity", &LinearMap::identity)
        .def_property_readonly("dom", &LinearMap::dom)
        .def_property_readonly("cod", &LinearMap::cod)
        .def("rows", &map_rows)
        .def("rank", &LinearMap::rank)
        .def("is_identity", &LinearMap::is_identity)
        .def("inverse", &LinearMap::inverse)
        .def("transpose", &LinearMap::transpose)
        .def("kron", &LinearMap::kron)
        .def("__matmul__", [](const LinearMap& a, const LinearMap& b) { return a * b; })
        .def("__add__", &LinearMap::operator+)
        .def("__sub__", [](const LinearMap& a, const LinearMap& b) { return a - b; })
        .def("__eq__", [](const LinearMap& a, const LinearMap& b) { return a == b; })
        .def("__repr__", [](const LinearMap& a) {
            return "<LinearMap " + std::to_string(a.dom()) + " -> " + std::to_string(a.cod()) + ", nnz " +
                   std::to_string(a.nnz()) + ">";
        });

    py::class_<Failure>(m, "Failure")
        .def_readonly("axiom", &Failure::axiom)
        .def_readonly("witness", &Failure::witness)
        .def("__repr__", [](const Failure& f) {
            std::string w;
            for (Index i : f.witness) w += (w.empty() ? "" : ", ") + std::to_string(i);
            return "<Failure " + f.axiom + " at (" + w + ")>";
        });
    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("failures", &CheckReport::failures)
        .def_property_readonly("passed", &CheckReport::passed)
        .def("failed", &CheckReport::failed)
        .def("count", &CheckReport::count)
        .def("__bool__", &CheckReport::passed)
        .def("__repr__", [](const CheckReport& r) {
            return "<CheckReport " + std::string(r.passed() ? "passed" : "failed") + ", " +
                   std::to_string(r.failures.size()) + " failure(s)>";
        });

    py::class_<HomAlgebra>(m, "HomAlgebra")
        .def_readonly("dim", &HomAlgebra::dim)
        .def_readonly("mul", &HomAlgebra::mul)
        .def_readonly("alpha", &HomAlgebra::alpha)
        .def_property_readonly("unit", [](const HomAlgebra& A) { return vec_list(A.unit, A.dim); });
    py::class_<HomCoalgebra>(m, "HomCoalgebra")
        .def_readonly("dim", &HomCoalgebra::dim)
        .def_readonly("comul", &HomCoalgebra::comul)
        .def_readonly("counit", &HomCoalgebra::counit)
        .def_readonly("gamma", &HomCoalgebra::gamma);
    py::class_<HomBialgebra>(m, "HomBialgebra")
        .def_readonly("alg", &HomBialgebra::alg)
        .def_readonly("co", &HomBialgebra::co);
    py::class_<HomHopfAlgebra>(m, "HomHopfAlgebra")
        .def_property_readonly("dim", &HomHopfAlgebra::dim)
        .def_property_readonly("alg", &HomHopfAlgebra::alg)
        .def_property_readonly("co", &HomHopfAlgebra::co)
        .def_property_readonly("bi", [](const HomHopfAlgebra& H) { return H.bi; })
        .def_property_readonly("alpha", &HomHopfAlgebra::alpha)
        .def_readonly("antipode", &HomHopfAlgebra::S)
        .def("with_antipode", [](HomHopfAlgebra H, const LinearMap& S) {
            H.S = S;
            H.S_inv.reset();
            return H;
        });

    m.def("check_hom_algebra", &check_hom_algebra);
    m.def("check_hom_coalgebra", &check_hom_coalgebra);
    m.def("check_hom_bialgebra", &check_hom_bialgebra);
    m.def("check_antipode", &check_antipode);
    m.def("check_hom_hopf", &check_hom_hopf);
    m.def("cyclic_group_algebra", &cyclic_group_algebra, py::arg("n"));
    m.def("sweedler", &sweedler);
    m.def("twist_classical", &twist_classical, py::arg("classical"), py::arg("aut"));
    m.def("opposite", &opposite);
    m.def("dual_hopf", &dual_hopf);
    m.def("tensor_hopf", &tensor_hopf);

    py::class_<DoiDatum>(m, "DoiDatum").def("fingerprint", &DoiDatum::fingerprint);
    py::class_<MonoidalDoiDatum>(m, "MonoidalDoiDatum")
        .def_readonly("datum", &MonoidalDoiDatum::datum)
        .def_property_readonly("dims", [](const MonoidalDoiDatum& G) {
            return py::make_tuple(G.datum.H.dim(), G.datum.A.dim(), G.datum.C.dim());
        });
    py::class_<DoiModule>(m, "DoiModule")
        .def_readonly("dim", &DoiModule::dim)
        .def_readonly("action", &DoiModule::action)
        .def_readonly("coaction", &DoiModule::coaction)
        .def_readonly("mu", &DoiModule::mu);
    py::class_<YDModule>(m, "YDModule").def_readonly("dim", &YDModule::dim);

    m.def("yd_datum", &yd_datum);
    m.def("ck_datum", &ck_datum);
    m.def("ak_datum", &ak_datum);
    m.def("check_monoidal_datum", &check_monoidal_datum);
    m.def("check_comodule_algebra", [](const MonoidalDoiDatum& G) { return check_comodule_algebra(G.datum.A); });
    m.def("check_module_coalgebra", [](const MonoidalDoiDatum& G) { return check_module_coalgebra(G.datum.C); });
    m.def("canonical_doi_module", py::overload_cast<const MonoidalDoiDatum&>(&canonical_doi_module));
    m.def("unit_doi", &unit_doi);
    m.def("tensor_doi", &tensor_doi, py::arg("datum"), py::arg("M"), py::arg("N"), py::arg("verify") = true);
    m.def("check_doi_module", &check_doi_module);
    m.def("check_yd", &check_yd);
    m.def("check_yd_alt", &check_yd_alt);

    py::class_<BraidingFlags>(m, "BraidingFlags")
        .def_readonly("linearity", &BraidingFlags::linearity)
        .def_readonly("colinearity", &BraidingFlags::colinearity)
        .def_readonly("hexagon_first", &BraidingFlags::hexagon_first)
        .def_readonly("hexagon_second", &BraidingFlags::hexagon_second)
        .def("all", &BraidingFlags::all);
    py::class_<BraidingData>(m, "BraidingData")
        .def_readonly("Q", &BraidingData::Q)
        .def_readonly("R", &BraidingData::R)
        .def_readonly("verified", &BraidingData::verified);
    m.def("yd_braiding_map", &yd_braiding_map);
    m.def("twisted_conv_inverse", &twisted_conv_inverse);
    m.def("make_braiding", &make_braiding);
    m.def("check_braiding_conditions", &check_braiding_conditions);
    m.def("braid", &braid);
    m.def("braid_inverse", &braid_inverse);
    m.def("check_hexagons_on",
          [](const BraidingData& B, const DoiModule& M, const DoiModule& N, const DoiModule& P) {
              return check_hexagons_on(B, M, N, P);
          });

    py::class_<DrinfeldDouble>(m, "DrinfeldDouble")
        .def_readonly("hopf", &DrinfeldDouble::hopf)
        .def_readonly("qt_report", &DrinfeldDouble::qt_report)
        .def_property_readonly("product", [](const DrinfeldDouble& D) { return D.smash.product; });
    m.def("drinfeld_double", &drinfeld_double);

    m.def("load_document", [](const std::string& path) { return document_dict(io::load_document(path)); },
          py::arg("path"));
    m.def("parse_document",
          [](const std::string& text) { return document_dict(io::parse_document(io::json::parse(text))); },
          py::arg("text"));
    m.def("hopf_document", &hopf_document, py::arg("H"), py::arg("field") = "Q");
}
