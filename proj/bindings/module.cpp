// Python bindings for the main operations. Rationals cross the boundary
// as exact "p/q" strings; complexes and sequences as document text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rft/document.hpp"
#include "rft/models.hpp"
#include "rft/verify_suite.hpp"

namespace py = pybind11;
using namespace rft;

namespace {

HomologyData doc_homology(const ComplexDocument& doc) { return document_homology(doc); }

py::dict torsion_report(const std::string& text) {
    ComplexDocument doc = parse_complex_document(text);
    HomologyData h = doc_homology(doc);
    TorsionBreakdown breakdown = reidemeister_torsion_breakdown(doc.complex, h);
    py::dict out;
    out["torsion"] = to_string(breakdown.value);
    out["abs"] = to_string(abs(breakdown.value));
    py::list factors;
    for (const auto& f : breakdown.degree_factors) factors.append(to_string(f));
    out["degree_factors"] = factors;
    out["betti"] = h.betti_vector();
    return out;
}

py::dict ses_report(const std::string& text) {
    SESDocument doc = parse_ses_document(text);
    if (auto r = validate_ses(doc.ses); !r.ok)
        throw std::invalid_argument("not a short exact sequence: " + r.message);
    MultiplicativityReport report = verify_multiplicativity(doc.ses);
    py::dict out;
    out["torsion_a"] = to_string(report.torsion_a);
    out["torsion_b"] = to_string(report.torsion_b);
    out["torsion_d"] = to_string(report.torsion_d);
    out["corrective"] = to_string(report.corrective);
    out["sign"] = report.sign;
    out["signed_equal"] = report.signed_equal;
    out["abs_equal"] = report.abs_equal;
    out["equal"] = report.equal;
    return out;
}

std::string symplectic_value(const std::string& text) {
    ComplexDocument doc = parse_complex_document(text);
    if (doc.pairings.empty())
        throw std::invalid_argument("document carries no pairing blocks");
    SymplecticChainComplex s;
    s.complex = doc.complex;
    s.pairings = doc.pairings;
    if (auto r = validate_symplectic(s); !r.ok)
        throw std::invalid_argument("not a symplectic complex: " + r.message);
    return to_string(symplectic_torsion(s, doc_homology(doc)));
}

py::dict model_report(const std::string& name, std::optional<long> param) {
    ManifoldModel m = model(name, param);
    py::dict out;
    out["name"] = m.name;
    out["dim"] = m.dim;
    out["dims"] = m.complex.dims();
    out["betti"] = m.preferred_h.betti_vector();
    const Rational t = manifold_torsion(m);
    out["torsion"] = to_string(t);
    out["abs"] = to_string(abs(t));
    if (m.has_pairings())
        out["intersection_torsion"] = to_string(intersection_torsion(m));
    return out;
}

std::string model_document(const std::string& name, std::optional<long> param) {
    ManifoldModel m = model(name, param);
    ComplexDocument doc;
    doc.complex = m.complex;
    doc.homology_reps.assign(m.complex.length() + 1, std::nullopt);
    doc.pairings = m.pairings;
    return serialize(doc);
}

py::list suite_report(std::uint64_t seed, std::size_t cases) {
    SuiteOptions options;
    options.seed = seed;
    options.cases = cases;
    py::list out;
    for (const auto& r : run_verify_suite(options)) {
        py::dict entry;
        entry["id"] = r.id;
        entry["name"] = r.name;
        entry["passed"] = r.passed;
        entry["detail"] = r.detail;
        out.append(entry);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reidemeister-Franz torsion of based chain complexes";
    m.def("torsion", &torsion_report, py::arg("document"),
          "Torsion report for a complex document");
    m.def("betti", [](const std::string& text) {
        return homology(parse_complex(text)).betti_vector();
    }, py::arg("document"), "Betti numbers of a complex document");
    m.def("ses_verify", &ses_report, py::arg("document"),
          "Multiplicativity report for an SES document");
    m.def("symplectic_torsion", &symplectic_value, py::arg("document"),
          "Closed-form symplectic torsion of a document with pairings");
    m.def("model", &model_report, py::arg("name"), py::arg("param") = std::nullopt,
          "Built-in model report");
    m.def("model_document", &model_document, py::arg("name"),
          py::arg("param") = std::nullopt, "Built-in model as document text");
    m.def("roundtrip", [](const std::string& text) {
        return serialize(parse_complex_document(text));
    }, py::arg("document"), "Canonical serialization of a complex document");
    m.def("verify_suite", &suite_report, py::arg("seed") = 42,
          py::arg("cases") = std::size_t{0}, "Run the acceptance criteria");

    py::register_exception<SyntaxError>(m, "DocumentSyntaxError", PyExc_ValueError);
    py::register_exception<SemanticError>(m, "DocumentSemanticError", PyExc_ValueError);
    py::register_exception<UnknownModel>(m, "UnknownModelError", PyExc_ValueError);
}
