#include "rft/models.hpp"

#include <algorithm>
#include <sstream>

namespace rft {

namespace {

using Cell = std::vector<int>;

BasedChainComplex simplicial_complex(const std::vector<std::vector<Cell>>& cells) {
    std::vector<std::size_t> dims;
    for (const auto& layer : cells) dims.push_back(layer.size());
    auto index_of = [](const std::vector<Cell>& layer, const Cell& c) {
        return static_cast<std::size_t>(
            std::find(layer.begin(), layer.end(), c) - layer.begin());
    };
    std::vector<Matrix> boundaries;
    for (std::size_t p = 1; p < cells.size(); ++p) {
        Matrix d(dims[p - 1], dims[p]);
        for (std::size_t j = 0; j < cells[p].size(); ++j) {
            for (std::size_t k = 0; k < cells[p][j].size(); ++k) {
                Cell face = cells[p][j];
                face.erase(face.begin() + static_cast<long>(k));
                d(index_of(cells[p - 1], face), j) = (k % 2 == 0) ? 1 : -1;
            }
        }
        boundaries.push_back(std::move(d));
    }
    return BasedChainComplex(dims, boundaries);
}

/// Boundary of the (n+1)-dimensional cross-polytope: vertices 0..2n+1
/// with antipodal pairs (2i, 2i+1); cells are the vertex sets without an
/// antipodal pair.
std::vector<std::vector<Cell>> cross_polytope_cells(std::size_t n) {
    const int verts = 2 * static_cast<int>(n) + 2;
    std::vector<std::vector<Cell>> cells(n + 1);
    for (int mask = 1; mask < (1 << verts); ++mask) {
        Cell c;
        bool ok = true;
        for (int v = 0; v < verts && ok; ++v)
            if (mask & (1 << v)) {
                if (v % 2 == 1 && (mask & (1 << (v - 1)))) ok = false;
                c.push_back(v);
            }
        if (ok && c.size() <= n + 1) cells[c.size() - 1].push_back(c);
    }
    for (auto& layer : cells) std::sort(layer.begin(), layer.end());
    return cells;
}

std::vector<std::vector<Cell>> restrict_cells(const std::vector<std::vector<Cell>>& cells,
                                              const std::vector<int>& verts,
                                              std::size_t top_dim) {
    std::vector<std::vector<Cell>> out(top_dim + 1);
    for (std::size_t p = 0; p < cells.size() && p <= top_dim; ++p)
        for (const Cell& c : cells[p])
            if (std::all_of(c.begin(), c.end(), [&](int v) {
                    return std::find(verts.begin(), verts.end(), v) != verts.end();
                }))
                out[p].push_back(c);
    return out;
}

BasedChainComplex zero_boundary_complex(std::vector<std::size_t> dims) {
    std::vector<Matrix> boundaries;
    for (std::size_t p = 1; p < dims.size(); ++p)
        boundaries.emplace_back(dims[p - 1], dims[p]);
    return BasedChainComplex(std::move(dims), std::move(boundaries));
}

Matrix hyperbolic_sum(std::size_t pairs) {
    Matrix w(2 * pairs, 2 * pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        w(2 * i, 2 * i + 1) = 1;
        w(2 * i + 1, 2 * i) = -1;
    }
    return w;
}

ManifoldModel finish(std::string name, std::size_t dim, BasedChainComplex complex,
                     std::vector<Matrix> pairings = {}) {
    ManifoldModel m;
    m.name = std::move(name);
    m.dim = dim;
    m.complex = std::move(complex);
    m.preferred_h = homology(m.complex);
    m.pairings = std::move(pairings);
    return m;
}

/// Wedge-style punctured piece in dimension 6: a vertex, `middle`
/// 3-cells, and the seam 5-sphere capped by a 6-cell.
BasedChainComplex punctured_piece_6(std::size_t middle) {
    std::vector<std::size_t> dims{1, 0, 0, middle, 0, 1, 1};
    std::vector<Matrix> boundaries;
    for (std::size_t p = 1; p <= 6; ++p) boundaries.emplace_back(dims[p - 1], dims[p]);
    boundaries[5] = Matrix::identity(1);  // the 6-cell caps the seam
    return BasedChainComplex(dims, boundaries);
}

/// Abstract Mayer-Vietoris assembly in dimension 6 gluing two punctured
/// pieces (with `lm` and `rm` middle cells) along a 5-sphere seam. The
/// union keeps one shared vertex, one shared 5-cell and both 6-cells.
DecomposedModel assemble_6(std::size_t lm, std::size_t rm, ManifoldModel whole) {
    DecomposedModel d;
    d.seam = zero_boundary_complex({1, 0, 0, 0, 0, 1, 0});
    d.left = punctured_piece_6(lm);
    d.right = punctured_piece_6(rm);
    d.whole = std::move(whole);

    d.ses.a = d.seam;
    d.ses.b = direct_sum(d.left, d.right);
    d.ses.d = d.whole.complex;
    for (std::size_t p = 0; p <= 6; ++p) {
        const std::size_t bl = d.left.dim(static_cast<long>(p));
        const std::size_t br = d.right.dim(static_cast<long>(p));
        Matrix i(bl + br, d.seam.dim(static_cast<long>(p)));
        Matrix pi(d.whole.complex.dim(static_cast<long>(p)), bl + br);
        if (p == 0 || p == 5) {
            i(0, 0) = 1;
            i(bl, 0) = 1;
            pi(0, 0) = 1;
            pi(0, bl) = -1;
        } else if (p == 3) {
            for (std::size_t j = 0; j < lm; ++j) pi(j, j) = 1;
            for (std::size_t j = 0; j < rm; ++j) pi(lm + j, bl + j) = -1;
        } else if (p == 6) {
            pi(0, 0) = 1;
            pi(1, bl) = -1;
        }
        d.ses.i.push_back(std::move(i));
        d.ses.pi.push_back(std::move(pi));
    }
    return d;
}

/// The union complex for the dimension-6 assemblies: shared vertex and
/// seam 5-cell, all middle cells, both capping 6-cells.
ManifoldModel union_model_6(std::size_t middle, std::size_t pairs, std::string name) {
    std::vector<std::size_t> dims{1, 0, 0, middle, 0, 1, 2};
    std::vector<Matrix> boundaries;
    for (std::size_t p = 1; p <= 6; ++p) boundaries.emplace_back(dims[p - 1], dims[p]);
    boundaries[5] = Matrix::from_int_rows({{1, 1}});
    std::vector<Matrix> pairings{Matrix::identity(1), Matrix(0, 0), Matrix(0, 0),
                                 hyperbolic_sum(pairs)};
    return finish(std::move(name), 6, BasedChainComplex(dims, boundaries),
                  std::move(pairings));
}

/// Octahedron hemisphere decomposition of S^2 along the equator square.
DecomposedModel assemble_hemispheres(ManifoldModel whole) {
    auto cells = cross_polytope_cells(2);
    auto equator = restrict_cells(cells, {0, 1, 2, 3}, 2);
    auto north = restrict_cells(cells, {0, 1, 2, 3, 4}, 2);
    auto south = restrict_cells(cells, {0, 1, 2, 3, 5}, 2);

    DecomposedModel d;
    d.seam = simplicial_complex(equator);
    d.left = simplicial_complex(north);
    d.right = simplicial_complex(south);
    d.whole = std::move(whole);

    d.ses.a = d.seam;
    d.ses.b = direct_sum(d.left, d.right);
    d.ses.d = d.whole.complex;
    auto index_of = [](const std::vector<Cell>& layer, const Cell& c) {
        return static_cast<std::size_t>(
            std::find(layer.begin(), layer.end(), c) - layer.begin());
    };
    for (std::size_t p = 0; p <= 2; ++p) {
        const std::size_t bl = north[p].size(), br = south[p].size();
        Matrix i(bl + br, equator[p].size());
        for (std::size_t j = 0; j < equator[p].size(); ++j) {
            i(index_of(north[p], equator[p][j]), j) = 1;
            i(bl + index_of(south[p], equator[p][j]), j) = 1;
        }
        Matrix pi(cells[p].size(), bl + br);
        for (std::size_t j = 0; j < bl; ++j) pi(index_of(cells[p], north[p][j]), j) = 1;
        for (std::size_t j = 0; j < br; ++j)
            pi(index_of(cells[p], south[p][j]), bl + j) = -1;
        d.ses.i.push_back(std::move(i));
        d.ses.pi.push_back(std::move(pi));
    }
    return d;
}

bool is_sphere_2(const ManifoldModel& m) {
    return m.dim == 2 && m.preferred_h.betti_vector() == std::vector<std::size_t>{1, 0, 1};
}

std::size_t middle_pairs(const ManifoldModel& m) {
    return m.preferred_h.betti(3) / 2;
}

HomologyData stacked_homology(const ChainSES& ses, const HomologyData& h_left,
                              const HomologyData& h_right,
                              const BasedChainComplex& left) {
    HomologyData hb = homology(ses.b);
    for (std::size_t p = 0; p < hb.degrees.size(); ++p) {
        const Matrix& l = h_left.degrees[p].homology_reps.vectors;
        const Matrix& r = h_right.degrees[p].homology_reps.vectors;
        if (l.cols() + r.cols() == 0) continue;
        const std::size_t bl = left.dim(static_cast<long>(p));
        Matrix reps(ses.b.dim(static_cast<long>(p)), l.cols() + r.cols());
        for (std::size_t i = 0; i < l.rows(); ++i)
            for (std::size_t j = 0; j < l.cols(); ++j) reps(i, j) = l(i, j);
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) reps(bl + i, l.cols() + j) = r(i, j);
        set_homology_reps(ses.b, hb, p, std::move(reps));
    }
    return hb;
}

}  // namespace

ManifoldModel model(const std::string& name, std::optional<long> param) {
    auto need = [&](long lo) {
        if (!param || *param < lo) throw UnknownModel("model " + name + " needs a parameter >= " + std::to_string(lo));
        return static_cast<std::size_t>(*param);
    };
    if (name == "point") return finish("point", 0, BasedChainComplex({1}, {}));
    if (name == "disk") {
        const std::size_t m = need(2);
        std::vector<std::size_t> dims(m + 1, 0);
        dims[0] = dims[m - 1] = dims[m] = 1;
        std::vector<Matrix> boundaries;
        for (std::size_t p = 1; p <= m; ++p) boundaries.emplace_back(dims[p - 1], dims[p]);
        boundaries[m - 1] = Matrix::identity(1);
        return finish("disk", m, BasedChainComplex(dims, boundaries));
    }
    if (name == "sphere_minimal") {
        const std::size_t n = need(1);
        std::vector<std::size_t> dims(n + 1, 0);
        dims[0] = dims[n] = 1;
        std::vector<Matrix> pairings;
        if (n % 2 == 0) {
            pairings.assign(n / 2 + 1, Matrix(0, 0));
            pairings[0] = Matrix::identity(1);
        }
        return finish("sphere_minimal", n, zero_boundary_complex(dims),
                      std::move(pairings));
    }
    if (name == "sphere_simplicial") {
        const std::size_t n = need(1);
        if (n > 3) throw UnknownModel("sphere_simplicial supports n <= 3");
        std::vector<Matrix> pairings;
        if (n % 2 == 0) {
            pairings.assign(n / 2 + 1, Matrix(0, 0));
            pairings[0] = Matrix::identity(1);
        }
        return finish("sphere_simplicial", n,
                      simplicial_complex(cross_polytope_cells(n)), std::move(pairings));
    }
    if (name == "s3xs3")
        return finish("s3xs3", 6, zero_boundary_complex({1, 0, 0, 2, 0, 0, 1}),
                      {Matrix::identity(1), Matrix(0, 0), Matrix(0, 0), hyperbolic_sum(1)});
    if (name == "connected_sum_s3xs3") {
        const std::size_t k = need(1);
        return finish("connected_sum_s3xs3", 6,
                      zero_boundary_complex({1, 0, 0, 2 * k, 0, 0, 1}),
                      {Matrix::identity(1), Matrix(0, 0), Matrix(0, 0), hyperbolic_sum(k)});
    }
    throw UnknownModel("unknown model: " + name);
}

ManifoldModel tetrahedron_sphere_model() {
    std::vector<std::vector<Cell>> cells(3);
    for (int v = 0; v < 4; ++v) cells[0].push_back({v});
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) cells[1].push_back({a, b});
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) cells[2].push_back({a, b, c});
    return finish("sphere_tetrahedron", 2, simplicial_complex(cells),
                  {Matrix::identity(1), Matrix(0, 0)});
}

Rational manifold_torsion(const ManifoldModel& m) {
    return reidemeister_torsion(m.complex, m.preferred_h);
}

Rational manifold_torsion(const ManifoldModel& m, const HomologyData& h) {
    return reidemeister_torsion(m.complex, h);
}

Rational intersection_torsion(const ManifoldModel& m) {
    if (m.dim % 2 == 1) return 1;
    if (!m.has_pairings()) throw MissingPairings("model carries no intersection pairings");
    const std::size_t half = m.dim / 2;
    Rational value = 1;
    for (std::size_t p = 0; p < half; ++p) {
        const Matrix& w = m.pairings.at(p);
        if (w.rows() == 0) continue;
        const Rational det = abs(determinant(w));
        value *= (p % 2 == 0) ? Rational(1) / det : det;
    }
    const Matrix& mid = m.pairings.at(half);
    Rational root = 1;
    if (mid.rows() > 0) {
        if (mid == -mid.transpose()) {
            root = abs(pfaffian(mid));
        } else {
            auto r = sqrt_exact(abs(determinant(mid)));
            if (!r) throw NonSquareDeterminant("middle determinant has no rational root");
            root = *r;
        }
    }
    value *= (half % 2 == 0) ? Rational(1) / root : root;
    return abs(value);
}

bool cell_independence_check(const ManifoldModel& m1, const ManifoldModel& m2,
                             const std::vector<Matrix>& transported_reps) {
    if (transported_reps.size() != m2.complex.length() + 1)
        throw InconsistentCorrespondence("expected one representative matrix per degree");
    HomologyData h2 = homology(m2.complex);
    for (std::size_t p = 0; p < transported_reps.size(); ++p) {
        if (m1.preferred_h.betti(p) != h2.betti(p))
            throw InconsistentCorrespondence("betti numbers disagree");
        if (h2.betti(p) == 0) continue;
        try {
            set_homology_reps(m2.complex, h2, p, transported_reps[p]);
        } catch (const InconsistentHomologyData& e) {
            throw InconsistentCorrespondence(e.what());
        }
    }
    return abs(manifold_torsion(m1)) == abs(reidemeister_torsion(m2.complex, h2));
}

DecomposedModel assemble_connected_sum(const ManifoldModel& left,
                                       const ManifoldModel& right) {
    if (is_sphere_2(left) && is_sphere_2(right))
        return assemble_hemispheres(model("sphere_simplicial", 2));
    if (left.dim == 6 && right.dim == 6 && middle_pairs(right) == 1) {
        const std::size_t lm = 2 * middle_pairs(left);
        std::ostringstream name;
        name << "connected_sum_s3xs3(" << middle_pairs(left) + 1 << ")_union";
        return assemble_6(lm, 2, union_model_6(lm + 2, middle_pairs(left) + 1, name.str()));
    }
    throw UnsupportedDimension("unsupported connected-sum combination");
}

RecipeBases proof_recipe_bases(const DecomposedModel& d) {
    if (auto r = validate_ses(d.ses); !r.ok)
        throw DegenerateStep("invalid decomposition: " + r.message);
    RecipeBases rb;
    rb.seam = homology(d.ses.a);
    rb.left = homology(d.left);
    rb.right = homology(d.right);
    rb.whole = d.whole.preferred_h;

    // seam top class := image of the whole fundamental class under the
    // connecting map
    const std::size_t n = d.whole.dim;
    const Matrix delta = connecting_homomorphism(d.ses, rb.seam, rb.whole, n);
    if (delta.rows() != 1 || delta.cols() != 1 || delta(0, 0) == 0)
        throw DegenerateStep("connecting map does not carry the fundamental class");
    set_homology_reps(d.ses.a, rb.seam, n - 1,
                      rb.seam.degrees[n - 1].homology_reps.vectors * delta);

    // one determinant normalization on the bottom class of the left
    // piece makes the corrective term exactly 1
    HomologyData hb = stacked_homology(d.ses, rb.left, rb.right, d.left);
    const Rational t0 =
        corrective_term(build_long_exact_sequence(d.ses, rb.seam, hb, rb.whole));
    set_homology_reps(d.left, rb.left, 0,
                      rb.left.degrees[0].homology_reps.vectors.scaled(t0));
    hb = stacked_homology(d.ses, rb.left, rb.right, d.left);
    if (corrective_term(build_long_exact_sequence(d.ses, rb.seam, hb, rb.whole)) != 1)
        throw DegenerateStep("normalization failed to trivialize the corrective term");
    return rb;
}

ConnectedSumReport verify_connected_sum_theorem(const DecomposedModel& d) {
    const RecipeBases rb = proof_recipe_bases(d);
    ConnectedSumReport report;
    const HomologyData hb = stacked_homology(d.ses, rb.left, rb.right, d.left);
    report.corrective =
        corrective_term(build_long_exact_sequence(d.ses, rb.seam, hb, rb.whole));
    report.whole = reidemeister_torsion(d.whole.complex, rb.whole);
    report.left = reidemeister_torsion(d.left, rb.left);
    report.right = reidemeister_torsion(d.right, rb.right);
    report.seam = reidemeister_torsion(d.seam, rb.seam);
    const Rational rhs = report.left * report.right / report.seam;
    report.equal = report.whole == rhs;
    report.abs_equal = abs(report.whole) == abs(rhs);
    return report;
}

PuncturedReport verify_punctured_theorem(const ManifoldModel& m) {
    DecomposedModel d;
    if (is_sphere_2(m)) {
        d = assemble_hemispheres(m);
    } else if (m.dim == 6 && middle_pairs(m) >= 1) {
        // right piece with no middle cells is exactly the capped disk
        d = assemble_6(2 * middle_pairs(m), 0,
                       union_model_6(2 * middle_pairs(m), middle_pairs(m),
                                     m.name + "_punctured_union"));
    } else {
        throw UnsupportedDimension("no disk-removal model for " + m.name);
    }
    const RecipeBases rb = proof_recipe_bases(d);
    PuncturedReport report;
    const HomologyData hb = stacked_homology(d.ses, rb.left, rb.right, d.left);
    report.corrective =
        corrective_term(build_long_exact_sequence(d.ses, rb.seam, hb, rb.whole));
    report.punctured = reidemeister_torsion(d.left, rb.left);
    report.disk = reidemeister_torsion(d.right, rb.right);
    report.whole = reidemeister_torsion(d.whole.complex, rb.whole);
    report.seam = reidemeister_torsion(d.seam, rb.seam);
    report.equal = report.punctured == report.whole * report.seam && report.disk == 1;
    report.abs_equal = abs(report.punctured) == abs(report.whole * report.seam) &&
                       abs(report.disk) == 1;
    return report;
}

PrimeDecompositionReport verify_prime_decomposition(std::size_t k) {
    if (k < 1 || k > 4) throw UnknownModel("prime decomposition supports 1 <= k <= 4");
    PrimeDecompositionReport report;
    report.sphere_factors_trivial = true;
    ManifoldModel left = model("s3xs3");
    report.summand_product = abs(manifold_torsion(left));
    for (std::size_t step = 1; step <= k; ++step) {
        const ManifoldModel right = model("s3xs3");
        const DecomposedModel d = assemble_connected_sum(left, right);
        report.steps.push_back(verify_connected_sum_theorem(d));
        if (abs(report.steps.back().seam) != 1) report.sphere_factors_trivial = false;
        report.summand_product *= abs(manifold_torsion(right));
        report.total = abs(report.steps.back().whole);
        left = model("connected_sum_s3xs3", static_cast<long>(step) + 1);
    }
    bool all_steps = true;
    for (const auto& s : report.steps) all_steps = all_steps && s.abs_equal;
    report.equal = all_steps && report.total == report.summand_product;
    return report;
}

SymplecticChainComplex as_symplectic(const ManifoldModel& m) {
    if (m.dim % 4 != 2 || !m.has_pairings())
        throw UnsupportedDimension("model has no symplectic presentation");
    for (std::size_t p = 1; p <= m.complex.length(); ++p)
        if (!m.complex.boundary(static_cast<long>(p)).is_zero())
            throw UnsupportedDimension("symplectic presentation needs zero boundaries");
    SymplecticChainComplex s;
    s.complex = m.complex;
    s.pairings = m.pairings;
    return s;
}

}  // namespace rft
