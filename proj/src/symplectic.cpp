#include "rft/symplectic.hpp"

#include <sstream>

namespace rft {

namespace {

ValidationReport fail(std::size_t p, const std::string& what) {
    std::ostringstream msg;
    msg << what << " at p = " << p;
    return {false, msg.str(), p};
}

bool is_middle_normal_form(const Matrix& m, char& variant) {
    if (m.rows() != m.cols()) return false;
    const std::size_t n = m.rows();
    if (n == 0) {
        variant = 'A';
        return true;
    }
    if (n % 2 != 0) return false;
    const std::size_t l = n / 2;
    for (char v : {'S', 'A'}) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Rational want = 0;
                if (i < l && j == l + i) want = 1;
                if (i >= l && j == i - l) want = (v == 'S') ? 1 : -1;
                if (m(i, j) != want) ok = false;
            }
        if (ok) {
            variant = v;
            return true;
        }
    }
    return false;
}

}  // namespace

ValidationReport validate_symplectic(const SymplecticChainComplex& s) {
    const std::size_t q = s.complex.length();
    if (q % 4 != 2) return {false, "length is not 2 mod 4", std::nullopt};
    const std::size_t half = q / 2;
    if (s.pairings.size() != half + 1)
        return {false, "expected one pairing matrix per degree 0..q/2", std::nullopt};
    if (auto r = validate(s.complex); !r.ok) return r;
    for (std::size_t p = 0; p <= half; ++p) {
        const Matrix& w = s.pairings[p];
        if (w.rows() != s.complex.dim(static_cast<long>(p)) ||
            w.cols() != s.complex.dim(static_cast<long>(q - p)))
            return fail(p, "pairing has the wrong shape");
        if (w.rows() != w.cols() || (w.rows() > 0 && determinant(w) == 0))
            return fail(p, "pairing is degenerate");
    }
    if (s.pairings[half] != -s.pairings[half].transpose())
        return fail(half, "middle pairing is not antisymmetric");
    for (std::size_t p = 0; p < half; ++p) {
        const Matrix lhs =
            s.complex.boundary(static_cast<long>(p) + 1).transpose() * s.pairings[p];
        Matrix rhs = s.pairings[p + 1] * s.complex.boundary(static_cast<long>(q - p));
        if (p % 2 == 0) rhs = -rhs;
        if (lhs != rhs) return fail(p, "boundary compatibility fails");
    }
    return {};
}

OmegaCompatibility check_omega_compatible(const SymplecticChainComplex& s,
                                          const std::vector<OrderedBasis>& bases) {
    const std::size_t q = s.complex.length();
    if (bases.size() != q + 1)
        throw DimensionMismatch("expected one basis per degree 0..q");
    for (std::size_t p = 0; p <= q; ++p)
        if (bases[p].ambient_dim != s.complex.dim(static_cast<long>(p)) ||
            bases[p].count() != s.complex.dim(static_cast<long>(p)))
            throw DimensionMismatch("basis does not span its degree");
    const std::size_t half = q / 2;
    OmegaCompatibility result;
    for (std::size_t p = 0; p < half; ++p) {
        const Matrix in_bases =
            bases[p].vectors.transpose() * s.pairings[p] * bases[q - p].vectors;
        if (in_bases != Matrix::identity(in_bases.rows())) return result;
    }
    const Matrix mid =
        bases[half].vectors.transpose() * s.pairings[half] * bases[half].vectors;
    if (!is_middle_normal_form(mid, result.middle_variant)) return result;
    result.compatible = true;
    return result;
}

std::vector<OrderedBasis> omega_normalize(const SymplecticChainComplex& s) {
    const std::size_t q = s.complex.length();
    const std::size_t half = q / 2;
    std::vector<OrderedBasis> bases(q + 1);
    for (std::size_t p = 0; p < half; ++p) {
        const std::size_t m = s.complex.dim(static_cast<long>(p));
        bases[p] = OrderedBasis::standard(m);
        auto inv = inverse(s.pairings[p]);
        if (!inv) throw NotOmegaCompatible("degenerate pairing cannot be normalized");
        bases[q - p] = OrderedBasis(m, *inv);
    }

    // Skew Gram-Schmidt in the middle degree: peel off hyperbolic pairs
    // (e, f) with w(e, f) = 1 and project the rest into their complement.
    const Matrix& w = s.pairings[half];
    const std::size_t m = s.complex.dim(static_cast<long>(half));
    auto pair_with = [&](const Matrix& x, const Matrix& y) {
        return (x.transpose() * w * y)(0, 0);
    };
    std::vector<Matrix> pool;
    for (std::size_t j = 0; j < m; ++j) pool.push_back(Matrix::identity(m).column(j));
    std::vector<Matrix> es, fs;
    while (!pool.empty()) {
        Matrix e = pool.front();
        pool.erase(pool.begin());
        std::size_t partner = pool.size();
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (pair_with(e, pool[j]) != 0) {
                partner = j;
                break;
            }
        if (partner == pool.size())
            throw NotOmegaCompatible("middle pairing is degenerate");
        Matrix f = pool[partner].scaled(1 / pair_with(e, pool[partner]));
        pool.erase(pool.begin() + static_cast<long>(partner));
        for (Matrix& x : pool)
            x = x + f.scaled(pair_with(x, e)) - e.scaled(pair_with(x, f));
        es.push_back(std::move(e));
        fs.push_back(std::move(f));
    }
    Matrix mid(m, 0);
    for (const Matrix& e : es) mid = mid.hstack(e);
    for (const Matrix& f : fs) mid = mid.hstack(f);
    bases[half] = OrderedBasis(m, mid);
    return bases;
}

Matrix induced_homology_pairing(const SymplecticChainComplex& s, std::size_t p,
                                const Matrix& reps_p, const Matrix& reps_qmp) {
    const std::size_t q = s.complex.length();
    if (p > q / 2) throw DimensionMismatch("pairing degree beyond q/2");
    if (reps_p.rows() != s.complex.dim(static_cast<long>(p)) ||
        reps_qmp.rows() != s.complex.dim(static_cast<long>(q - p)))
        throw DimensionMismatch("representatives have the wrong ambient dimension");
    if (!(s.complex.boundary(static_cast<long>(p)) * reps_p).is_zero() ||
        !(s.complex.boundary(static_cast<long>(q - p)) * reps_qmp).is_zero())
        throw InconsistentHomologyData("representative is not a cycle");
    return reps_p.transpose() * s.pairings[p] * reps_qmp;
}

Rational pfaffian(const Matrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("pfaffian of a non-square matrix");
    const std::size_t n = m.rows();
    if (n % 2 != 0) return 0;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    // recursive expansion along the first remaining row
    auto rec = [&](auto&& self, std::vector<std::size_t> rows) -> Rational {
        if (rows.empty()) return 1;
        Rational sum = 0;
        for (std::size_t j = 1; j < rows.size(); ++j) {
            const Rational entry = m(rows[0], rows[j]);
            if (entry == 0) continue;
            std::vector<std::size_t> rest;
            for (std::size_t k = 1; k < rows.size(); ++k)
                if (k != j) rest.push_back(rows[k]);
            const Rational term = entry * self(self, std::move(rest));
            sum += (j % 2 == 1) ? term : -term;
        }
        return sum;
    };
    return rec(rec, idx);
}

Rational symplectic_torsion(const SymplecticChainComplex& s, const HomologyData& h) {
    if (auto r = validate_symplectic(s); !r.ok)
        throw NotOmegaCompatible("invalid symplectic complex: " + r.message);
    check_consistent(s.complex, h);
    const std::size_t q = s.complex.length();
    const std::size_t half = q / 2;

    std::vector<OrderedBasis> standard;
    for (std::size_t p = 0; p <= q; ++p)
        standard.push_back(OrderedBasis::standard(s.complex.dim(static_cast<long>(p))));
    if (!check_omega_compatible(s, standard).compatible)
        throw NotOmegaCompatible("chain bases are not in pairing normal form");

    Rational value = 1;
    for (std::size_t p = 0; p < half; ++p) {
        if (h.betti(p) != h.betti(q - p))
            throw NotOmegaCompatible("homology pairing is not square");
        if (h.betti(p) == 0) continue;
        const Rational det = determinant(induced_homology_pairing(
            s, p, h.degrees[p].homology_reps.vectors,
            h.degrees[q - p].homology_reps.vectors));
        if (det == 0) throw NotOmegaCompatible("homology pairing is degenerate");
        value *= (p % 2 == 0) ? Rational(1) / det : det;
    }

    const Matrix mid = induced_homology_pairing(
        s, half, h.degrees[half].homology_reps.vectors,
        h.degrees[half].homology_reps.vectors);
    Rational root;
    if (mid == -mid.transpose()) {
        root = abs(pfaffian(mid));
    } else {
        auto r = sqrt_exact(determinant(mid));
        if (!r) throw NonSquareDeterminant("middle determinant has no rational root");
        root = *r;
    }
    if (mid.rows() > 0 && root == 0)
        throw NotOmegaCompatible("middle homology pairing is degenerate");
    if (mid.rows() == 0) root = 1;
    // q/2 is odd, so the root's exponent (-1)^{q/2+1} is +1
    value *= root;
    return abs(value);
}

Rational symplectic_torsion(const SymplecticChainComplex& s) {
    return symplectic_torsion(s, homology(s.complex));
}

SymplecticChainComplex random_symplectic_q2(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> ksz(1, 3), lsz(1, 2);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (;;) {
        const std::size_t k = ksz(rng), l = lsz(rng), m1 = 2 * l;
        Matrix w1(m1, m1);
        for (std::size_t i = 0; i < l; ++i) {
            w1(i, l + i) = 1;
            w1(l + i, i) = -1;
        }
        // d_2 lands in the span of the first l middle vectors (isotropic
        // for w1), which forces d_1 d_2 = 0 below.
        Matrix d2(m1, k);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < k; ++j) d2(i, j) = entry(rng);
        const Matrix d1 = -(d2.transpose() * w1.transpose());
        SymplecticChainComplex s;
        s.complex = BasedChainComplex({k, m1, k}, {d1, d2});
        s.pairings = {Matrix::identity(k), w1};
        if (!validate_symplectic(s).ok) continue;
        try {
            symplectic_torsion(s);
        } catch (const std::runtime_error&) {
            continue;  // degenerate homology pairing; redraw
        }
        return s;
    }
}

}  // namespace rft
