#include "doctest.h"

#include <random>

#include "rft/torsion.hpp"

using namespace rft;

namespace {

BasedChainComplex two_term(long entry) {
    return BasedChainComplex({1, 1}, {Matrix::from_int_rows({{entry}})});
}

BasedChainComplex sphere_like(std::size_t n) {
    std::vector<std::size_t> dims(n + 1, 0);
    dims[0] = dims[n] = 1;
    std::vector<Matrix> boundaries;
    for (std::size_t p = 1; p <= n; ++p) boundaries.emplace_back(dims[p - 1], dims[p]);
    return BasedChainComplex(dims, boundaries);
}

// Seeded random complex with a few degrees and small dimensions: pick a
// random chain map d with d*d = 0 by composing projections through random
// intermediate subspaces.
BasedChainComplex random_complex(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(1, 3), sz(1, 4);
    std::uniform_int_distribution<long> entry(-2, 2);
    const std::size_t n = len(rng);
    std::vector<std::size_t> dims(n + 1);
    for (auto& d : dims) d = sz(rng);
    for (;;) {
        std::vector<Matrix> boundaries;
        bool ok = true;
        for (std::size_t p = 1; p <= n; ++p) {
            Matrix d(dims[p - 1], dims[p]);
            if (p == 1) {
                for (std::size_t i = 0; i < d.rows(); ++i)
                    for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) = entry(rng);
            } else {
                // image must land in ker(previous d); build via kernel basis
                OrderedBasis k = kernel_basis(boundaries.back());
                Matrix coeff(k.count(), dims[p]);
                for (std::size_t i = 0; i < coeff.rows(); ++i)
                    for (std::size_t j = 0; j < coeff.cols(); ++j) coeff(i, j) = entry(rng);
                d = k.vectors * coeff;
            }
            boundaries.push_back(std::move(d));
        }
        BasedChainComplex c(dims, boundaries);
        if (ok && validate(c).ok) return c;
    }
}

}  // namespace

TEST_CASE("point complex has torsion 1") {
    BasedChainComplex point({1}, {});
    CHECK(reidemeister_torsion(point) == Rational(1));
}

TEST_CASE("acyclic two-term complex: torsion is det^{-1}") {
    CHECK(reidemeister_torsion(two_term(2)) == Rational(1) / 2);
    CHECK(reidemeister_torsion(two_term(-3)) == Rational(-1) / 3);
    CHECK(reidemeister_torsion(two_term(1)) == Rational(1));
}

TEST_CASE("minimal spheres have torsion of absolute value 1") {
    for (std::size_t n : {1, 2, 3, 5}) {
        auto c = sphere_like(n);
        CHECK(abs(reidemeister_torsion(c)) == Rational(1));
    }
}

TEST_CASE("torsion is independent of the splitting choices") {
    std::mt19937_64 gen(7);
    for (int inst = 0; inst < 20; ++inst) {
        auto c = random_complex(gen);
        auto h = homology(c);
        const Rational reference = reidemeister_torsion(c, h);
        for (int trial = 0; trial < 100; ++trial) {
            std::mt19937_64 rng(1000 * inst + trial);
            CHECK(reidemeister_torsion(c, h, rng) == reference);
        }
    }
}

TEST_CASE("torsion is deterministic") {
    std::mt19937_64 gen(11);
    auto c = random_complex(gen);
    CHECK(reidemeister_torsion(c) == reidemeister_torsion(c));
}

TEST_CASE("breakdown factors multiply to the torsion") {
    std::mt19937_64 gen(13);
    auto c = random_complex(gen);
    auto b = reidemeister_torsion_breakdown(c, homology(c));
    Rational prod(1);
    for (std::size_t p = 0; p < b.degree_factors.size(); ++p)
        prod *= (p % 2 == 0) ? Rational(1) / b.degree_factors[p] : b.degree_factors[p];
    CHECK(prod == b.value);
}

TEST_CASE("homology transition determinants") {
    auto c = sphere_like(1);  // circle: betti (1,1)
    auto h = homology(c);
    Matrix old_reps = Matrix::from_int_rows({{1}});
    Matrix new_reps = Matrix::from_int_rows({{3}});
    // old = (1/3) * new, so [old -> new] = 1/3
    CHECK(homology_transition(c, h, 0, old_reps, new_reps) == Rational(1) / 3);
    CHECK(homology_transition(c, h, 0, old_reps, old_reps) == Rational(1));
}

TEST_CASE("transition mod boundaries ignores boundary components") {
    // 0 -> Q --[2]--> Q^2 with image spanned by (2,0): H_0 has betti 1
    BasedChainComplex c({2, 1}, {Matrix::from_int_rows({{2}, {0}})});
    auto h = homology(c);
    Matrix old_reps = Matrix::from_int_rows({{0}, {1}});
    Matrix shifted = Matrix::from_int_rows({{4}, {1}});  // same class mod B_0
    CHECK(homology_transition(c, h, 0, old_reps, shifted) == Rational(1));
}

TEST_CASE("change of basis law matches direct recomputation") {
    std::mt19937_64 gen(17);
    std::uniform_int_distribution<long> entry(-2, 2);
    int done = 0;
    while (done < 40) {
        auto c = random_complex(gen);
        auto h = homology(c);
        const Rational t = reidemeister_torsion(c, h);
        const std::size_t n = c.length();

        // Random invertible chain-basis change per degree; realize it by
        // conjugating the boundary maps.
        std::vector<Matrix> change(n + 1);
        for (std::size_t p = 0; p <= n; ++p) {
            const std::size_t m = c.dim(static_cast<long>(p));
            for (;;) {
                Matrix u(m, m);
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) u(i, j) = entry(gen);
                if (rank(u) == m) {
                    change[p] = std::move(u);
                    break;
                }
            }
        }
        std::vector<Matrix> new_boundaries;
        for (std::size_t p = 1; p <= n; ++p)
            new_boundaries.push_back( *inverse(change[p - 1]) *
                                     c.boundary(static_cast<long>(p)) * change[p]);
        BasedChainComplex c2(c.dims(), new_boundaries);
        auto h2 = homology(c2);

        // Keep the homology classes fixed: transport reps along change^{-1}.
        std::vector<Matrix> old_h_reps(n + 1), new_h_reps(n + 1);
        bool transported = true;
        for (std::size_t p = 0; p <= n; ++p) {
            old_h_reps[p] = h.degrees[p].homology_reps.vectors;
            Matrix moved = (*inverse(change[p])) * old_h_reps[p];
            try {
                set_homology_reps(c2, h2, p, moved);
            } catch (const InconsistentHomologyData&) {
                transported = false;
                break;
            }
            new_h_reps[p] = moved;
        }
        REQUIRE(transported);
        const Rational t2 = reidemeister_torsion(c2, h2);

        // Predict t2 from t. The old preferred basis expressed in new
        // coordinates is change[p]^{-1} columns... which is exactly the
        // transition data [c_p -> c'_p] computed against the new complex.
        std::vector<OrderedBasis> old_c(n + 1), new_c(n + 1);
        std::vector<Matrix> reps_old(n + 1), reps_new(n + 1);
        for (std::size_t p = 0; p <= n; ++p) {
            const std::size_t m = c.dim(static_cast<long>(p));
            // both bases written in the *new* coordinates
            old_c[p] = OrderedBasis(m, *inverse(change[p]));
            new_c[p] = OrderedBasis(m, Matrix::identity(m));
            reps_old[p] = new_h_reps[p];  // class unchanged
            reps_new[p] = new_h_reps[p];
        }
        CHECK(change_of_basis(c2, h2, t, old_c, new_c, reps_old, reps_new) == t2);
        ++done;
    }
}

TEST_CASE("change of basis: rescaling homology reps only") {
    auto c = sphere_like(1);
    auto h = homology(c);
    const Rational t = reidemeister_torsion(c, h);
    CHECK(t == Rational(1));

    // Multiply the degree-0 homology representative by 3.
    auto h2 = homology(c);
    set_homology_reps(c, h2, 0, Matrix::from_int_rows({{3}}));
    const Rational t2 = reidemeister_torsion(c, h2);

    std::vector<OrderedBasis> no_change;
    std::vector<Matrix> old_reps{Matrix::from_int_rows({{1}})};
    std::vector<Matrix> new_reps{Matrix::from_int_rows({{3}})};
    CHECK(change_of_basis(c, h2, t, no_change, no_change, old_reps, new_reps) == t2);
    CHECK(t2 == Rational(1) / 3);
}

TEST_CASE("change of basis: rescaling a chain basis vector only") {
    auto c = two_term(2);
    auto h = homology(c);
    const Rational t = reidemeister_torsion(c, h);
    CHECK(t == Rational(1) / 2);

    // New degree-1 basis c'_1 = (1/5) c_1; complex in the new basis has
    // boundary entry 2/5.
    BasedChainComplex c2({1, 1}, {Matrix::from_rows({{Rational(2) / 5}})});
    auto h2 = homology(c2);
    const Rational t2 = reidemeister_torsion(c2, h2);
    CHECK(t2 == Rational(5) / 2);

    std::vector<OrderedBasis> old_c(2), new_c(2);
    old_c[0] = OrderedBasis::standard(1);
    new_c[0] = OrderedBasis::standard(1);
    old_c[1] = OrderedBasis(1, Matrix::from_int_rows({{5}}));  // old basis in new coords
    new_c[1] = OrderedBasis::standard(1);
    std::vector<Matrix> no_reps;
    CHECK(change_of_basis(c2, h2, t, old_c, new_c, no_reps, no_reps) == t2);
}
