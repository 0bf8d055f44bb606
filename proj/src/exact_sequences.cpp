#include "rft/exact_sequences.hpp"

#include <sstream>

namespace rft {

namespace {

ValidationReport fail(std::size_t p, const std::string& what) {
    std::ostringstream msg;
    msg << what << " in degree " << p;
    return {false, msg.str(), p};
}

Matrix top_rows(const Matrix& m, std::size_t k) {
    Matrix out(k, m.cols());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

/// Coordinates of cycle vectors in the homology basis of `target`,
/// read off modulo the boundary subspace.
Matrix homology_coords(const DegreeHomology& target, const Matrix& vecs) {
    const std::size_t k = target.betti;
    if (k == 0 || vecs.cols() == 0) return Matrix(k, vecs.cols());
    const Matrix basis =
        target.homology_reps.vectors.hstack(target.boundary_basis.vectors);
    auto sol = solve(basis, vecs);
    if (!sol)
        throw InconsistentHomologyData("vector does not lie in the cycle space of the target");
    return top_rows(*sol, k);
}

/// Matrix of the map on homology induced by the chain map f in degree p.
Matrix induced_on_homology(const Matrix& f, const DegreeHomology& src,
                           const DegreeHomology& dst) {
    if (src.betti == 0) return Matrix(dst.betti, 0);
    return homology_coords(dst, f * src.homology_reps.vectors);
}

Matrix connecting_impl(const ChainSES& s, const HomologyData& ha,
                       const HomologyData& hd, std::size_t p, std::mt19937_64* rng) {
    const std::size_t src_betti = p < hd.degrees.size() ? hd.degrees[p].betti : 0;
    const std::size_t dst_betti = p >= 1 ? ha.degrees[p - 1].betti : 0;
    if (src_betti == 0 || p == 0) return Matrix(dst_betti, src_betti);

    const Matrix& reps = hd.degrees[p].homology_reps.vectors;
    Matrix lifts_sol = [&] {
        auto sol = solve(s.pi[p], reps);
        if (!sol) throw LiftFailure("pi is not surjective in the lifted degree");
        return *sol;
    }();
    if (rng) {
        const OrderedBasis ker = kernel_basis(s.pi[p]);
        std::uniform_int_distribution<long> entry(-3, 3);
        Matrix mix(ker.count(), src_betti);
        for (std::size_t i = 0; i < mix.rows(); ++i)
            for (std::size_t j = 0; j < mix.cols(); ++j) mix(i, j) = entry(*rng);
        lifts_sol = lifts_sol + ker.vectors * mix;
    }
    const Matrix chains = s.b.boundary(static_cast<long>(p)) * lifts_sol;
    auto pulled = solve(s.i[p - 1], chains);
    if (!pulled) throw LiftFailure("boundary of the lift is not in the image of i");
    return homology_coords(ha.degrees[p - 1], *pulled);
}

}  // namespace

ValidationReport validate_ses(const ChainSES& s) {
    const std::size_t n = s.a.length();
    if (s.b.length() != n || s.d.length() != n)
        return {false, "complexes have different lengths", std::nullopt};
    if (s.i.size() != n + 1 || s.pi.size() != n + 1)
        return {false, "expected one i and one pi matrix per degree", std::nullopt};
    for (std::size_t p = 0; p <= n; ++p) {
        const long lp = static_cast<long>(p);
        const Matrix& i = s.i[p];
        const Matrix& pi = s.pi[p];
        if (i.rows() != s.b.dim(lp) || i.cols() != s.a.dim(lp))
            return fail(p, "i has the wrong shape");
        if (pi.rows() != s.d.dim(lp) || pi.cols() != s.b.dim(lp))
            return fail(p, "pi has the wrong shape");
        if (rank(i) != s.a.dim(lp)) return fail(p, "i is not injective");
        if (rank(pi) != s.d.dim(lp)) return fail(p, "pi is not surjective");
        if (!(pi * i).is_zero()) return fail(p, "pi o i != 0");
        if (s.a.dim(lp) + s.d.dim(lp) != s.b.dim(lp))
            return fail(p, "ker(pi) != im(i)");
        if (p >= 1) {
            if (s.b.boundary(lp) * s.i[p] != s.i[p - 1] * s.a.boundary(lp))
                return fail(p, "i is not a chain map");
            if (s.pi[p - 1] * s.b.boundary(lp) != s.d.boundary(lp) * s.pi[p])
                return fail(p, "pi is not a chain map");
        }
    }
    if (auto r = validate(s.a); !r.ok) return r;
    if (auto r = validate(s.b); !r.ok) return r;
    if (auto r = validate(s.d); !r.ok) return r;
    return {};
}

std::vector<Rational> compatible_bases_check(const ChainSES& s) {
    std::vector<Rational> dets;
    for (std::size_t p = 0; p <= s.a.length(); ++p) {
        const std::size_t md = s.d.dim(static_cast<long>(p));
        auto lift = solve(s.pi[p], Matrix::identity(md));
        if (!lift) throw LiftFailure("pi is not surjective");
        // Combined basis written in the standard coordinates of B_p; the
        // transition determinant to the standard basis is its determinant.
        dets.push_back(determinant(s.i[p].hstack(*lift)));
    }
    return dets;
}

Matrix connecting_homomorphism(const ChainSES& s, const HomologyData& ha,
                               const HomologyData& hd, std::size_t p) {
    return connecting_impl(s, ha, hd, p, nullptr);
}

Matrix connecting_homomorphism(const ChainSES& s, const HomologyData& ha,
                               const HomologyData& hd, std::size_t p,
                               std::mt19937_64& rng) {
    return connecting_impl(s, ha, hd, p, &rng);
}

LongExactSequence build_long_exact_sequence(const ChainSES& s, const HomologyData& ha,
                                            const HomologyData& hb,
                                            const HomologyData& hd) {
    check_consistent(s.a, ha);
    check_consistent(s.b, hb);
    check_consistent(s.d, hd);
    const std::size_t n = s.a.length();

    LongExactSequence les;
    std::vector<std::size_t> dims(3 * n + 3);
    for (std::size_t p = 0; p <= n; ++p) {
        dims[3 * p] = hd.degrees[p].betti;
        dims[3 * p + 1] = hb.degrees[p].betti;
        dims[3 * p + 2] = ha.degrees[p].betti;
        les.degree_tags.push_back({p, 'D'});
        les.degree_tags.push_back({p, 'B'});
        les.degree_tags.push_back({p, 'A'});
    }

    std::vector<Matrix> boundaries;
    for (std::size_t p = 0; p <= n; ++p) {
        if (p >= 1)
            boundaries.push_back(connecting_homomorphism(s, ha, hd, p));  // slot 3p
        boundaries.push_back(
            induced_on_homology(s.pi[p], hb.degrees[p], hd.degrees[p]));  // slot 3p+1
        boundaries.push_back(
            induced_on_homology(s.i[p], ha.degrees[p], hb.degrees[p]));   // slot 3p+2
    }
    les.complex = BasedChainComplex(dims, boundaries);
    return les;
}

Rational corrective_term(const LongExactSequence& les) {
    const HomologyData h = homology(les.complex);
    if (!h.acyclic()) throw NotExact("long exact sequence has nonzero homology");
    return reidemeister_torsion(les.complex, h);
}

MultiplicativityReport verify_multiplicativity(const ChainSES& s, const HomologyData& ha,
                                               const HomologyData& hb,
                                               const HomologyData& hd) {
    MultiplicativityReport report;
    report.compatibility = compatible_bases_check(s);
    bool all_plus_one = true;
    for (const Rational& det : report.compatibility) {
        if (abs(det) != 1)
            throw IncompatibleBases("a compatibility determinant is not +-1");
        if (det != 1) all_plus_one = false;
    }
    report.torsion_a = reidemeister_torsion(s.a, ha);
    report.torsion_b = reidemeister_torsion(s.b, hb);
    report.torsion_d = reidemeister_torsion(s.d, hd);
    report.corrective = corrective_term(build_long_exact_sequence(s, ha, hb, hd));

    const long n = static_cast<long>(s.a.length());
    auto cycles = [&](const BasedChainComplex& c, long p) {
        return static_cast<long>(c.dim(p)) - static_cast<long>(rank(c.boundary(p)));
    };
    long e = 0;
    for (long p = 0; p <= n; ++p) {
        if (p >= 1) e += static_cast<long>(s.d.dim(p)) * static_cast<long>(ha.betti(p - 1));
        if (p < n) e += cycles(s.a, p) * cycles(s.d, p + 1);
    }
    report.sign = e % 2 == 0 ? 1 : -1;

    const Rational rhs =
        Rational(report.sign) * report.torsion_a * report.torsion_d * report.corrective;
    report.signed_equal = report.torsion_b == rhs;
    report.abs_equal = abs(report.torsion_b) == abs(rhs);
    report.equal = all_plus_one ? report.signed_equal : report.abs_equal;
    return report;
}

MultiplicativityReport verify_multiplicativity(const ChainSES& s) {
    return verify_multiplicativity(s, homology(s.a), homology(s.b), homology(s.d));
}

BasedChainComplex direct_sum(const BasedChainComplex& a, const BasedChainComplex& d) {
    const std::size_t n = std::max(a.length(), d.length());
    std::vector<std::size_t> dims(n + 1);
    std::vector<Matrix> boundaries;
    for (std::size_t p = 0; p <= n; ++p)
        dims[p] = a.dim(static_cast<long>(p)) + d.dim(static_cast<long>(p));
    for (std::size_t p = 1; p <= n; ++p) {
        const long lp = static_cast<long>(p);
        Matrix block(dims[p - 1], dims[p]);
        const Matrix da = a.boundary(lp), dd = d.boundary(lp);
        for (std::size_t r = 0; r < da.rows(); ++r)
            for (std::size_t c = 0; c < da.cols(); ++c) block(r, c) = da(r, c);
        for (std::size_t r = 0; r < dd.rows(); ++r)
            for (std::size_t c = 0; c < dd.cols(); ++c)
                block(da.rows() + r, da.cols() + c) = dd(r, c);
        boundaries.push_back(std::move(block));
    }
    return BasedChainComplex(dims, boundaries);
}

ChainSES direct_sum_ses(const BasedChainComplex& a, const BasedChainComplex& d) {
    ChainSES s;
    const std::size_t n = std::max(a.length(), d.length());
    auto pad = [&](const BasedChainComplex& c) {
        if (c.length() == n) return c;
        std::vector<std::size_t> dims(n + 1, 0);
        std::vector<Matrix> boundaries;
        for (std::size_t p = 0; p <= c.length(); ++p) dims[p] = c.dims()[p];
        for (std::size_t p = 1; p <= n; ++p)
            boundaries.push_back(c.boundary(static_cast<long>(p)));
        return BasedChainComplex(dims, boundaries);
    };
    s.a = pad(a);
    s.d = pad(d);
    s.b = direct_sum(a, d);
    for (std::size_t p = 0; p <= n; ++p) {
        const std::size_t ma = s.a.dim(static_cast<long>(p));
        const std::size_t md = s.d.dim(static_cast<long>(p));
        Matrix i(ma + md, ma), pi(md, ma + md);
        for (std::size_t j = 0; j < ma; ++j) i(j, j) = 1;
        for (std::size_t j = 0; j < md; ++j) pi(j, ma + j) = 1;
        s.i.push_back(std::move(i));
        s.pi.push_back(std::move(pi));
    }
    return s;
}

}  // namespace rft
