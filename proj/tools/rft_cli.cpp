// rft: torsion computations and theorem verification from the command
// line. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rft/document.hpp"
#include "rft/models.hpp"
#include "rft/verify_suite.hpp"

using nlohmann::json;
using namespace rft;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json rational_list(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

void emit(const json& report, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << text;
}

/// Override the preferred homology bases from a document holding
/// homology blocks for the same dims.
HomologyData homology_with_override(const ComplexDocument& doc,
                                    const std::string& bases_path) {
    HomologyData h = document_homology(doc);
    if (bases_path.empty()) return h;
    ComplexDocument bases = parse_complex_document(read_file(bases_path));
    if (bases.complex.dims() != doc.complex.dims())
        throw InputError("--bases document has different dims");
    for (std::size_t p = 0; p < bases.homology_reps.size(); ++p)
        if (bases.homology_reps[p])
            set_homology_reps(doc.complex, h, p, *bases.homology_reps[p]);
    return h;
}

int cmd_torsion(const std::string& file, const std::string& bases, bool as_json) {
    ComplexDocument doc = parse_complex_document(read_file(file));
    HomologyData h = homology_with_override(doc, bases);
    TorsionBreakdown breakdown = reidemeister_torsion_breakdown(doc.complex, h);

    json report{{"command", "torsion"},
                {"torsion", to_string(breakdown.value)},
                {"abs", to_string(abs(breakdown.value))},
                {"degree_factors", rational_list(breakdown.degree_factors)},
                {"betti", homology(doc.complex).betti_vector()}};
    std::ostringstream text;
    text << "torsion = " << to_string(breakdown.value) << '\n'
         << "|torsion| = " << to_string(abs(breakdown.value)) << '\n';
    for (std::size_t p = 0; p < breakdown.degree_factors.size(); ++p)
        text << "degree " << p
             << " factor = " << to_string(breakdown.degree_factors[p]) << '\n';
    emit(report, as_json, text.str());
    return 0;
}

int cmd_homology(const std::string& file, bool as_json) {
    ComplexDocument doc = parse_complex_document(read_file(file));
    HomologyData h = document_homology(doc);
    json report{{"command", "homology"}, {"betti", h.betti_vector()}};
    std::ostringstream text;
    text << "betti =";
    for (std::size_t b : h.betti_vector()) text << ' ' << b;
    text << '\n';
    emit(report, as_json, text.str());
    return 0;
}

int cmd_ses_verify(const std::string& file, bool as_json) {
    SESDocument doc = parse_ses_document(read_file(file));
    if (auto r = validate_ses(doc.ses); !r.ok)
        throw InputError("not a short exact sequence: " + r.message);
    MultiplicativityReport report = verify_multiplicativity(doc.ses);

    json out{{"command", "ses-verify"},
             {"torsion_a", to_string(report.torsion_a)},
             {"torsion_b", to_string(report.torsion_b)},
             {"torsion_d", to_string(report.torsion_d)},
             {"corrective", to_string(report.corrective)},
             {"compatibility", rational_list(report.compatibility)},
             {"sign", report.sign},
             {"signed_equal", report.signed_equal},
             {"abs_equal", report.abs_equal},
             {"equal", report.equal}};
    std::ostringstream text;
    text << "T(A) = " << to_string(report.torsion_a) << '\n'
         << "T(B) = " << to_string(report.torsion_b) << '\n'
         << "T(D) = " << to_string(report.torsion_d) << '\n'
         << "corrective term = " << to_string(report.corrective) << '\n'
         << "predicted sign = " << report.sign << '\n'
         << "multiplicativity: " << (report.equal ? "ok" : "FAILED") << '\n';
    emit(out, as_json, text.str());
    if (!report.equal) throw VerificationFailure("multiplicativity check failed");
    return 0;
}

int cmd_symplectic(const std::string& file, bool as_json) {
    ComplexDocument doc = parse_complex_document(read_file(file));
    if (doc.pairings.empty()) throw InputError("document carries no pairing blocks");
    SymplecticChainComplex s;
    s.complex = doc.complex;
    s.pairings = doc.pairings;
    if (auto r = validate_symplectic(s); !r.ok)
        throw InputError("not a symplectic complex: " + r.message);

    const Rational closed = symplectic_torsion(s, document_homology(doc));
    const Rational direct = abs(reidemeister_torsion(doc.complex, document_homology(doc)));
    const bool equal = closed == direct;
    json out{{"command", "symplectic"},
             {"closed_form", to_string(closed)},
             {"abs_torsion", to_string(direct)},
             {"equal", equal}};
    std::ostringstream text;
    text << "closed form = " << to_string(closed) << '\n'
         << "|torsion| = " << to_string(direct) << '\n'
         << "agreement: " << (equal ? "ok" : "FAILED") << '\n';
    emit(out, as_json, text.str());
    if (!equal) throw VerificationFailure("closed form disagrees with torsion");
    return 0;
}

int cmd_model(const std::string& name, std::optional<long> param, bool as_json) {
    ManifoldModel m = param ? model(name, *param) : model(name);
    const Rational t = manifold_torsion(m);
    json out{{"command", "model"},
             {"name", m.name},
             {"dim", m.dim},
             {"dims", m.complex.dims()},
             {"betti", m.preferred_h.betti_vector()},
             {"torsion", to_string(t)},
             {"abs", to_string(abs(t))}};
    std::ostringstream text;
    text << "model " << m.name << " (dimension " << m.dim << ")\n" << "dims =";
    for (std::size_t d : m.complex.dims()) text << ' ' << d;
    text << "\nbetti =";
    for (std::size_t b : m.preferred_h.betti_vector()) text << ' ' << b;
    text << "\ntorsion = " << to_string(t) << '\n';
    if (m.has_pairings()) {
        const Rational it = intersection_torsion(m);
        out["intersection_torsion"] = to_string(it);
        text << "intersection torsion = " << to_string(it) << '\n';
    }
    emit(out, as_json, text.str());
    return 0;
}

int cmd_verify_suite(std::uint64_t seed, std::size_t cases, bool as_json) {
    SuiteOptions options;
    options.seed = seed;
    options.cases = cases;
    const auto results = run_verify_suite(options);
    if (as_json) {
        json out = json::array();
        for (const auto& r : results)
            out.push_back({{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"detail", r.detail}});
        std::cout << json{{"command", "verify-suite"},
                          {"seed", seed},
                          {"criteria", out},
                          {"passed", all_passed(results)}}
                         .dump(2)
                  << '\n';
    } else {
        for (const auto& r : results)
            std::cout << "criterion " << r.id << " [" << r.name
                      << "]: " << (r.passed ? "PASS" : "FAIL")
                      << (r.detail.empty() ? "" : " - ") << r.detail << '\n';
    }
    if (!all_passed(results)) throw VerificationFailure("acceptance criteria failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reidemeister-Franz torsion of based chain complexes"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable reports");

    std::string file, bases;
    auto* torsion = app.add_subcommand("torsion", "torsion of a complex document");
    torsion->add_option("file", file, "complex document")->required();
    torsion->add_option("--bases", bases, "homology-basis override document");

    auto* homology_cmd = app.add_subcommand("homology", "betti numbers of a document");
    homology_cmd->add_option("file", file, "complex document")->required();

    auto* ses = app.add_subcommand("ses-verify", "multiplicativity for an SES document");
    ses->add_option("file", file, "ses document")->required();

    auto* symplectic = app.add_subcommand("symplectic", "closed-form symplectic torsion");
    symplectic->add_option("file", file, "complex document with pairings")->required();

    std::string model_name;
    std::optional<long> model_param;
    auto* model_cmd = app.add_subcommand("model", "built-in model and its torsion");
    model_cmd->add_option("name", model_name, "model name")->required();
    model_cmd->add_option("param", model_param, "model parameter");

    std::uint64_t seed = 42;
    std::size_t cases = 0;
    auto* suite = app.add_subcommand("verify-suite", "run all acceptance criteria");
    suite->add_option("--seed", seed, "seed for the randomized corpora");
    suite->add_option("--cases", cases, "override the corpus sizes");

    for (auto* sub : {torsion, homology_cmd, ses, symplectic, model_cmd, suite})
        sub->add_flag("--json", as_json, "machine-readable reports");

    try {
        app.parse(argc, argv);
        if (*torsion) return cmd_torsion(file, bases, as_json);
        if (*homology_cmd) return cmd_homology(file, as_json);
        if (*ses) return cmd_ses_verify(file, as_json);
        if (*symplectic) return cmd_symplectic(file, as_json);
        if (*model_cmd) return cmd_model(model_name, model_param, as_json);
        if (*suite) return cmd_verify_suite(seed, cases, as_json);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const VerificationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << '\n';
        return 2;
    } catch (const SemanticError& e) {
        std::cerr << "semantic error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
