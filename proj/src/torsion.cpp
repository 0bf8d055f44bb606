#include "rft/torsion.hpp"

namespace rft {

namespace {

TorsionBreakdown torsion_of_splitting(const HomologySplitting& splitting) {
    TorsionBreakdown result;
    for (std::size_t p = 0; p < splitting.degrees.size(); ++p) {
        Rational det = determinant(splitting.degrees[p].combined);
        if (det == 0)
            throw InconsistentHomologyData("combined basis is singular in some degree");
        result.value *= (p % 2 == 0) ? Rational(1) / det : det;
        result.degree_factors.push_back(std::move(det));
    }
    return result;
}

}  // namespace

TorsionBreakdown reidemeister_torsion_breakdown(const BasedChainComplex& c,
                                                const HomologyData& h) {
    return torsion_of_splitting(split(c, h));
}

Rational reidemeister_torsion(const BasedChainComplex& c, const HomologyData& h) {
    return reidemeister_torsion_breakdown(c, h).value;
}

Rational reidemeister_torsion(const BasedChainComplex& c) {
    return reidemeister_torsion(c, homology(c));
}

Rational reidemeister_torsion(const BasedChainComplex& c, const HomologyData& h,
                              std::mt19937_64& rng) {
    return torsion_of_splitting(split(c, h, rng)).value;
}

Rational homology_transition(const BasedChainComplex& c, const HomologyData& h,
                             std::size_t p, const Matrix& old_reps,
                             const Matrix& new_reps) {
    if (old_reps.cols() != new_reps.cols())
        throw DimensionMismatch("homology bases of different sizes");
    if (old_reps.cols() == 0) return Rational(1);
    // Coordinates of the old classes in the new basis, modulo boundaries:
    // solve [new | b_p] x = old and read off the new-block coordinates.
    const Matrix& boundaries = h.degrees.at(p).boundary_basis.vectors;
    auto coords = solve(new_reps.hstack(boundaries), old_reps);
    if (!coords) throw NotExpressible("homology class outside the span of the new basis");
    Matrix a(new_reps.cols(), old_reps.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = (*coords)(i, j);
    // old_i = sum_j a_ji new_j, so [old -> new] = det(a^T) = det(a).
    return determinant(a);
}

Rational change_of_basis(const BasedChainComplex& c, const HomologyData& h,
                         const Rational& t,
                         const std::vector<OrderedBasis>& old_c,
                         const std::vector<OrderedBasis>& new_c,
                         const std::vector<Matrix>& old_h_reps,
                         const std::vector<Matrix>& new_h_reps) {
    Rational result = t;
    for (std::size_t p = 0; p <= c.length(); ++p) {
        Rational chain_factor(1);
        if (p < old_c.size() && p < new_c.size() && old_c[p].count() > 0)
            chain_factor = transition_determinant(old_c[p], new_c[p]);
        Rational homology_factor(1);
        if (p < old_h_reps.size() && p < new_h_reps.size() && old_h_reps[p].cols() > 0)
            homology_factor = homology_transition(c, h, p, old_h_reps[p], new_h_reps[p]);
        const Rational ratio = homology_factor / chain_factor;
        result *= (p % 2 == 0) ? ratio : Rational(1) / ratio;
    }
    return result;
}

}  // namespace rft
