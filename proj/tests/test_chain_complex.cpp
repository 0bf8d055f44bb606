#include "doctest.h"

#include <random>

#include "rft/chain_complex.hpp"

using namespace rft;

namespace {

BasedChainComplex two_term(long entry) {
    return BasedChainComplex({1, 1}, {Matrix::from_int_rows({{entry}})});
}

// Octahedron boundary complex of S^2: vertices +-e1, +-e2, +-e3.
// Built by hand here as an oracle-independent fixture; the models module
// has its own generator that must agree.
BasedChainComplex octahedron() {
    // vertices 0..5 = +x,-x,+y,-y,+z,-z; edges between non-antipodal pairs,
    // ordered lexicographically; faces pick one vertex per axis.
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (b / 2 != a / 2) edges.emplace_back(a, b);
    std::vector<std::array<int, 3>> faces;
    for (int x = 0; x < 2; ++x)
        for (int y = 2; y < 4; ++y)
            for (int z = 4; z < 6; ++z) faces.push_back({x, y, z});
    Matrix d1(6, edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
        d1(edges[j].first, j) = -1;
        d1(edges[j].second, j) = 1;
    }
    auto edge_index = [&](int a, int b) {
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (edges[j] == std::make_pair(a, b)) return j;
        REQUIRE(false);
        return std::size_t(0);
    };
    Matrix d2(edges.size(), faces.size());
    for (std::size_t j = 0; j < faces.size(); ++j) {
        auto [a, b, c] = faces[j];
        d2(edge_index(a, b), j) = 1;
        d2(edge_index(b, c), j) = 1;
        d2(edge_index(a, c), j) = -1;
    }
    return BasedChainComplex({6, 12, 8}, {d1, d2});
}

}  // namespace

TEST_CASE("validate accepts zero-differential and acyclic complexes") {
    BasedChainComplex s3({1, 0, 0, 1},
                         {Matrix(1, 0), Matrix(0, 0), Matrix(0, 1)});
    CHECK(validate(s3).ok);
    CHECK(validate(two_term(1)).ok);
}

TEST_CASE("validate reports the failing degree") {
    BasedChainComplex bad({1, 1, 1},
                          {Matrix::from_int_rows({{1}}), Matrix::from_int_rows({{1}})});
    auto report = validate(bad);
    CHECK(!report.ok);
    CHECK(report.degree == 1);
}

TEST_CASE("boundary shape mismatch is rejected") {
    CHECK_THROWS_AS(BasedChainComplex({1, 2}, {Matrix(1, 1)}), InvalidComplex);
}

TEST_CASE("octahedron betti numbers") {
    auto c = octahedron();
    REQUIRE(validate(c).ok);
    auto h = homology(c);
    CHECK(h.betti_vector() == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("product-style and acyclic betti numbers") {
    BasedChainComplex s3xs3(
        {1, 0, 0, 2, 0, 0, 1},
        {Matrix(1, 0), Matrix(0, 0), Matrix(0, 2), Matrix(2, 0), Matrix(0, 0),
         Matrix(0, 1)});
    CHECK(homology(s3xs3).betti_vector() ==
          std::vector<std::size_t>{1, 0, 0, 2, 0, 0, 1});

    auto h2 = homology(two_term(2));
    CHECK(h2.betti_vector() == std::vector<std::size_t>{0, 0});
    CHECK(h2.acyclic());
}

TEST_CASE("splitting of the minimal sphere is the standard basis") {
    BasedChainComplex s3({1, 0, 0, 1},
                         {Matrix(1, 0), Matrix(0, 0), Matrix(0, 1)});
    auto s = split(s3, homology(s3));
    CHECK(s.degrees[0].combined == Matrix::identity(1));
    CHECK(s.degrees[3].combined == Matrix::identity(1));
    CHECK(s.degrees[0].section_vectors.count() == 0);
}

TEST_CASE("splitting of the acyclic [2] complex") {
    auto c = two_term(2);
    auto s = split(c, homology(c));
    // degree 0: b_0 = {2}, nothing else
    CHECK(s.degrees[0].combined == Matrix::from_int_rows({{2}}));
    CHECK(s.degrees[0].lifted_homology.count() == 0);
    // degree 1: only the section, the recorded preimage e_1
    CHECK(s.degrees[1].combined == Matrix::identity(1));
    // d_1 applied to the section hits b_0 exactly
    CHECK(c.boundary(1) * s.degrees[1].section_vectors.vectors ==
          s.degrees[0].boundary_basis.vectors);
}

TEST_CASE("combined bases have full rank in every degree (octahedron)") {
    auto c = octahedron();
    auto h = homology(c);
    auto s = split(c, h);
    for (std::size_t p = 0; p <= c.length(); ++p)
        CHECK(determinant(s.degrees[p].combined) != 0);
}

TEST_CASE("splitting dimension count and randomized sections stay full rank") {
    auto c = octahedron();
    auto h = homology(c);
    for (std::size_t p = 0; p <= c.length(); ++p) {
        const auto& deg = h.degrees[p];
        const std::size_t prev =
            p == 0 ? 0 : h.degrees[p - 1].boundary_basis.count();
        CHECK(deg.boundary_basis.count() + deg.betti + prev ==
              c.dim(static_cast<long>(p)));
    }
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        auto s = split(c, h, rng);
        for (std::size_t p = 0; p <= c.length(); ++p) {
            CHECK(determinant(s.degrees[p].combined) != 0);
            // sections still map onto the chosen boundary basis
            if (p > 0)
                CHECK(c.boundary(static_cast<long>(p)) * s.degrees[p].section_vectors.vectors ==
                      s.degrees[p - 1].boundary_basis.vectors);
        }
    }
}

TEST_CASE("homology rep overrides are checked") {
    auto c = two_term(0);  // 0 -> Q --0--> Q -> 0, betti (1,1)
    auto h = homology(c);
    set_homology_reps(c, h, 0, Matrix::from_int_rows({{5}}));
    CHECK(h.degrees[0].homology_reps.vectors == Matrix::from_int_rows({{5}}));
    CHECK_THROWS_AS(set_homology_reps(c, h, 0, Matrix::from_int_rows({{0}})),
                    InconsistentHomologyData);
}
