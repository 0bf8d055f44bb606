#include "rft/verify_suite.hpp"

#include <sstream>

#include "rft/generators.hpp"
#include "rft/models.hpp"

namespace rft {

namespace {

class Criterion {
  public:
    Criterion(int id, std::string name) {
        result_.id = id;
        result_.name = std::move(name);
        result_.passed = true;
    }

    void require(bool ok, const std::string& what) {
        if (!ok) {
            result_.passed = false;
            if (!result_.detail.empty()) result_.detail += "; ";
            result_.detail += what;
        }
    }

    void note(const std::string& text) {
        if (result_.passed && result_.detail.empty()) result_.detail = text;
    }

    CriterionResult finish() && { return std::move(result_); }

  private:
    CriterionResult result_;
};

std::mt19937_64 rng_for(const SuiteOptions& o, int criterion) {
    return std::mt19937_64(o.seed * 1000 + static_cast<std::uint64_t>(criterion));
}

std::size_t corpus(const SuiteOptions& o, std::size_t dflt) {
    return o.cases > 0 ? o.cases : dflt;
}

CriterionResult point_and_disk(const SuiteOptions&) {
    Criterion c(1, "point and disk torsion equal 1");
    c.require(manifold_torsion(model("point")) == 1, "point");
    for (long m : {2, 4, 6}) {
        std::ostringstream what;
        what << "disk(" << m << ")";
        c.require(manifold_torsion(model("disk", m)) == 1, what.str());
    }
    return std::move(c).finish();
}

CriterionResult sphere_torsion(const SuiteOptions&) {
    Criterion c(2, "sphere torsion values");
    for (long n : {1, 3, 5})
        c.require(abs(manifold_torsion(model("sphere_minimal", n))) == 1,
                  "minimal S^" + std::to_string(n));
    for (long n : {1, 3})
        c.require(abs(manifold_torsion(model("sphere_simplicial", n))) == 1,
                  "simplicial S^" + std::to_string(n));
    for (const auto& m : {model("sphere_minimal", 2), model("sphere_simplicial", 2)})
        c.require(abs(manifold_torsion(m)) == abs(determinant(m.pairings.at(0))),
                  "S^2 value vs det of the 0-2 pairing (" + m.name + ")");
    return std::move(c).finish();
}

CriterionResult splitting_independence(const SuiteOptions& o) {
    Criterion c(3, "splitting-choice independence");
    auto rng = rng_for(o, 3);
    const std::size_t complexes = corpus(o, 20);
    std::size_t checked = 0;
    for (std::size_t k = 0; k < complexes; ++k) {
        auto complex = random_complex(rng);
        auto h = homology(complex);
        const Rational t = reidemeister_torsion(complex, h);
        for (int trial = 0; trial < 100; ++trial, ++checked)
            if (reidemeister_torsion(complex, h, rng) != t) {
                c.require(false, "complex " + std::to_string(k) + " split " +
                                     std::to_string(trial));
                break;
            }
    }
    c.note(std::to_string(checked) + " randomized splits");
    return std::move(c).finish();
}

CriterionResult base_change_law(const SuiteOptions& o) {
    Criterion c(4, "base-change law");
    auto rng = rng_for(o, 4);
    std::uniform_int_distribution<long> entry(-2, 2);
    const std::size_t wanted = corpus(o, 200);
    std::size_t done = 0;
    while (done < wanted) {
        auto complex = random_complex(rng);
        auto h = homology(complex);
        const Rational t = reidemeister_torsion(complex, h);
        const std::size_t n = complex.length();

        std::vector<Matrix> change(n + 1);
        for (std::size_t p = 0; p <= n; ++p) {
            const std::size_t m = complex.dim(static_cast<long>(p));
            for (;;) {
                Matrix u(m, m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) u(i, j) = entry(rng);
                if (rank(u) == m) {
                    change[p] = std::move(u);
                    break;
                }
            }
        }
        std::vector<Matrix> new_boundaries;
        for (std::size_t p = 1; p <= n; ++p)
            new_boundaries.push_back(*inverse(change[p - 1]) *
                                     complex.boundary(static_cast<long>(p)) * change[p]);
        BasedChainComplex moved(complex.dims(), new_boundaries);
        auto h2 = homology(moved);

        std::vector<OrderedBasis> old_c(n + 1), new_c(n + 1);
        std::vector<Matrix> reps(n + 1);
        bool transported = true;
        for (std::size_t p = 0; p <= n && transported; ++p) {
            const std::size_t m = complex.dim(static_cast<long>(p));
            reps[p] = *inverse(change[p]) * h.degrees[p].homology_reps.vectors;
            try {
                set_homology_reps(moved, h2, p, reps[p]);
            } catch (const InconsistentHomologyData&) {
                transported = false;
            }
            old_c[p] = OrderedBasis(m, *inverse(change[p]));
            new_c[p] = OrderedBasis(m, Matrix::identity(m));
        }
        if (!transported) continue;
        const Rational direct = reidemeister_torsion(moved, h2);
        if (change_of_basis(moved, h2, t, old_c, new_c, reps, reps) != direct)
            c.require(false, "case " + std::to_string(done));
        ++done;
    }
    c.note(std::to_string(done) + " base changes");
    return std::move(c).finish();
}

CriterionResult multiplicativity(const SuiteOptions& o) {
    Criterion c(5, "multiplicativity for short exact sequences");
    auto rng = rng_for(o, 5);
    const std::size_t total = corpus(o, 500);
    const std::size_t acyclic = total / 5;
    for (std::size_t k = 0; k < total; ++k) {
        const bool want_acyclic = k < acyclic;
        auto s = random_ses(rng, want_acyclic);
        auto report = verify_multiplicativity(s);
        if (!report.equal) c.require(false, "instance " + std::to_string(k));
        if (want_acyclic && report.corrective != 1)
            c.require(false, "acyclic corrective " + std::to_string(k));
    }
    c.note(std::to_string(total) + " sequences, " + std::to_string(acyclic) +
           " all-acyclic");
    return std::move(c).finish();
}

CriterionResult direct_sum_law(const SuiteOptions& o) {
    Criterion c(6, "direct-sum product law");
    auto rng = rng_for(o, 6);
    const std::size_t pairs = corpus(o, 100);
    for (std::size_t k = 0; k < pairs; ++k) {
        auto a = random_complex(rng);
        auto d = random_complex(rng);
        auto s = direct_sum_ses(a, d);
        auto report = verify_multiplicativity(s);
        const Rational sum = reidemeister_torsion(direct_sum(a, d));
        if (!report.equal || abs(sum) != abs(reidemeister_torsion(a) *
                                             reidemeister_torsion(d)))
            c.require(false, "pair " + std::to_string(k));
    }
    c.note(std::to_string(pairs) + " pairs");
    return std::move(c).finish();
}

CriterionResult symplectic_law(const SuiteOptions& o) {
    Criterion c(7, "symplectic closed form vs torsion");
    auto rng = rng_for(o, 7);
    const std::size_t instances = corpus(o, 50);
    for (std::size_t k = 0; k < instances; ++k) {
        auto s = random_symplectic_q2(rng);
        if (symplectic_torsion(s) != abs(reidemeister_torsion(s.complex)))
            c.require(false, "q=2 instance " + std::to_string(k));
    }
    const auto product = model("s3xs3");
    c.require(symplectic_torsion(as_symplectic(product)) == 1, "s3xs3 value");
    c.require(abs(manifold_torsion(product)) == 1, "s3xs3 torsion");
    c.note(std::to_string(instances) + " q=2 instances plus s3xs3");
    return std::move(c).finish();
}

CriterionResult intersection_law(const SuiteOptions& o) {
    Criterion c(8, "intersection-pairing torsion");
    for (const auto& m : {model("sphere_minimal", 2), model("sphere_simplicial", 2),
                          tetrahedron_sphere_model(), model("s3xs3"),
                          model("connected_sum_s3xs3", 2)})
        c.require(intersection_torsion(m) == abs(manifold_torsion(m)), m.name);

    auto rng = rng_for(o, 8);
    std::uniform_int_distribution<long> num(1, 5), den(1, 5);
    for (const auto& m : {model("sphere_minimal", 1), model("sphere_minimal", 3),
                          model("sphere_minimal", 5), model("sphere_simplicial", 1),
                          model("sphere_simplicial", 3)}) {
        c.require(intersection_torsion(m) == 1, m.name + " closed form");
        for (int trial = 0; trial < 20; ++trial) {
            HomologyData h = homology(m.complex);
            const std::size_t n = m.dim;
            for (std::size_t p = 0; 2 * p < n; ++p) {
                const Rational lambda = Rational(num(rng)) / den(rng);
                for (std::size_t deg : {p, n - p})
                    if (h.betti(deg) > 0)
                        set_homology_reps(
                            m.complex, h, deg,
                            h.degrees[deg].homology_reps.vectors.scaled(lambda));
            }
            if (abs(manifold_torsion(m, h)) != 1)
                c.require(false, m.name + " rescaling " + std::to_string(trial));
        }
    }
    return std::move(c).finish();
}

CriterionResult cell_independence(const SuiteOptions&) {
    Criterion c(9, "cell-decomposition independence for S^2");
    auto minimal = model("sphere_minimal", 2);
    auto octa = model("sphere_simplicial", 2);
    auto tetra = tetrahedron_sphere_model();
    auto reps_of = [](const ManifoldModel& m) {
        std::vector<Matrix> reps;
        for (const auto& deg : m.preferred_h.degrees)
            reps.push_back(deg.homology_reps.vectors);
        return reps;
    };
    c.require(cell_independence_check(minimal, octa, reps_of(octa)),
              "minimal vs octahedron");
    c.require(cell_independence_check(minimal, tetra, reps_of(tetra)),
              "minimal vs tetrahedron");
    c.require(cell_independence_check(octa, tetra, reps_of(tetra)),
              "octahedron vs tetrahedron");
    return std::move(c).finish();
}

CriterionResult connected_sum(const SuiteOptions&) {
    Criterion c(10, "connected-sum formula with trivial corrective term");
    for (const auto& [left, right, tag] :
         {std::tuple{model("sphere_simplicial", 2), model("sphere_simplicial", 2),
                     std::string("S2#S2")},
          std::tuple{model("s3xs3"), model("s3xs3"), std::string("s3xs3#s3xs3")}}) {
        auto report = verify_connected_sum_theorem(assemble_connected_sum(left, right));
        c.require(report.corrective == 1, tag + " corrective");
        c.require(report.abs_equal, tag + " formula");
    }
    return std::move(c).finish();
}

CriterionResult punctured(const SuiteOptions&) {
    Criterion c(11, "punctured-manifold formula");
    for (const auto& m : {model("sphere_simplicial", 2), model("s3xs3")}) {
        auto report = verify_punctured_theorem(m);
        c.require(report.disk == 1, m.name + " disk factor");
        c.require(report.corrective == 1, m.name + " corrective");
        c.require(report.abs_equal, m.name + " formula");
    }
    return std::move(c).finish();
}

CriterionResult prime_decomposition(const SuiteOptions&) {
    Criterion c(12, "prime-decomposition product formula");
    for (std::size_t k : {1, 2, 3}) {
        auto report = verify_prime_decomposition(k);
        c.require(report.equal, "k=" + std::to_string(k));
        c.require(report.sphere_factors_trivial,
                  "k=" + std::to_string(k) + " sphere factors");
    }
    return std::move(c).finish();
}

}  // namespace

std::vector<CriterionResult> run_verify_suite(const SuiteOptions& options) {
    std::vector<CriterionResult> results;
    results.push_back(point_and_disk(options));
    results.push_back(sphere_torsion(options));
    results.push_back(splitting_independence(options));
    results.push_back(base_change_law(options));
    results.push_back(multiplicativity(options));
    results.push_back(direct_sum_law(options));
    results.push_back(symplectic_law(options));
    results.push_back(intersection_law(options));
    results.push_back(cell_independence(options));
    results.push_back(connected_sum(options));
    results.push_back(punctured(options));
    results.push_back(prime_decomposition(options));
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace rft
