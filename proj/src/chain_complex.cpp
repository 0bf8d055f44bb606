#include "rft/chain_complex.hpp"

#include <algorithm>
#include <sstream>

namespace rft {

BasedChainComplex::BasedChainComplex(std::vector<std::size_t> dims,
                                     std::vector<Matrix> boundaries,
                                     std::vector<std::vector<std::string>> cell_labels)
    : dims_(std::move(dims)), boundaries_(std::move(boundaries)),
      cell_labels_(std::move(cell_labels)) {
    if (dims_.empty()) throw InvalidComplex("a complex needs at least degree 0");
    if (boundaries_.size() != dims_.size() - 1)
        throw InvalidComplex("expected one boundary matrix per degree 1..n");
    for (std::size_t p = 1; p < dims_.size(); ++p) {
        const Matrix& d = boundaries_[p - 1];
        if (d.rows() != dims_[p - 1] || d.cols() != dims_[p]) {
            std::ostringstream msg;
            msg << "boundary " << p << " has shape " << d.rows() << "x" << d.cols()
                << ", expected " << dims_[p - 1] << "x" << dims_[p];
            throw InvalidComplex(msg.str());
        }
    }
}

Matrix BasedChainComplex::boundary(long p) const {
    if (p >= 1 && p <= static_cast<long>(length()))
        return boundaries_[static_cast<std::size_t>(p) - 1];
    return Matrix(dim(p - 1), dim(p));
}

std::size_t BasedChainComplex::total_dim() const {
    std::size_t total = 0;
    for (auto d : dims_) total += d;
    return total;
}

ValidationReport validate(const BasedChainComplex& c) {
    for (std::size_t p = 1; p < c.length(); ++p) {
        if (!(c.boundary(static_cast<long>(p)) * c.boundary(static_cast<long>(p) + 1))
                 .is_zero()) {
            std::ostringstream msg;
            msg << "d_" << p << " o d_" << p + 1 << " != 0";
            return {false, msg.str(), p};
        }
    }
    return {};
}

std::vector<std::size_t> HomologyData::betti_vector() const {
    std::vector<std::size_t> b;
    b.reserve(degrees.size());
    for (const auto& d : degrees) b.push_back(d.betti);
    return b;
}

bool HomologyData::acyclic() const {
    return std::all_of(degrees.begin(), degrees.end(),
                       [](const DegreeHomology& d) { return d.betti == 0; });
}

namespace {

/// Complete `base` (independent columns) to a larger independent family by
/// greedily appending candidate columns in order.
std::vector<std::size_t> greedy_completion(const Matrix& base, const Matrix& candidates,
                                           std::size_t target_rank) {
    Matrix current = base;
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < candidates.cols() && rank(current) < target_rank; ++j) {
        Matrix trial = current.hstack(candidates.column(j));
        if (rank(trial) == current.cols() + 1) {
            current = std::move(trial);
            chosen.push_back(j);
        }
    }
    return chosen;
}

}  // namespace

HomologyData homology(const BasedChainComplex& c) {
    if (auto report = validate(c); !report.ok)
        throw InvalidComplex("invalid complex: " + report.message);
    HomologyData h;
    h.degrees.resize(c.length() + 1);
    for (std::size_t p = 0; p <= c.length(); ++p) {
        DegreeHomology& deg = h.degrees[p];
        deg.cycle_basis = kernel_basis(c.boundary(static_cast<long>(p)));
        ImageBasis image = image_basis(c.boundary(static_cast<long>(p) + 1));
        deg.boundary_basis = std::move(image.basis);
        deg.boundary_preimages = std::move(image.preimage_columns);
        deg.betti = deg.cycle_basis.count() - deg.boundary_basis.count();
        const auto chosen =
            greedy_completion(deg.boundary_basis.vectors, deg.cycle_basis.vectors,
                              deg.cycle_basis.count());
        deg.homology_reps =
            OrderedBasis(c.dim(static_cast<long>(p)), deg.cycle_basis.vectors.columns(chosen));
    }
    return h;
}

void check_consistent(const BasedChainComplex& c, const HomologyData& h) {
    if (h.degrees.size() != c.length() + 1)
        throw InconsistentHomologyData("homology data has wrong number of degrees");
    for (std::size_t p = 0; p <= c.length(); ++p) {
        const DegreeHomology& deg = h.degrees[p];
        const Matrix d = c.boundary(static_cast<long>(p));
        if (deg.homology_reps.count() != deg.betti)
            throw InconsistentHomologyData("representative count != betti number");
        if (deg.homology_reps.count() > 0 &&
            deg.homology_reps.vectors.rows() != c.dim(static_cast<long>(p)))
            throw InconsistentHomologyData("representative has wrong ambient dimension");
        if (!(d * deg.homology_reps.vectors).is_zero())
            throw InconsistentHomologyData("representative is not a cycle");
        const Matrix stacked = deg.boundary_basis.vectors.hstack(deg.homology_reps.vectors);
        if (rank(stacked) != deg.boundary_basis.count() + deg.betti)
            throw InconsistentHomologyData("representatives dependent modulo boundaries");
    }
}

void set_homology_reps(const BasedChainComplex& c, HomologyData& h, std::size_t p,
                       Matrix reps) {
    if (p >= h.degrees.size()) throw InconsistentHomologyData("degree out of range");
    h.degrees[p].homology_reps = OrderedBasis(c.dim(static_cast<long>(p)), std::move(reps));
    check_consistent(c, h);
}

namespace {

Matrix random_entries(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> entry(-3, 3);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        Matrix m = random_entries(rng, n, n);
        if (rank(m) == n) return m;
    }
}

HomologySplitting split_impl(const BasedChainComplex& c, const HomologyData& h,
                             std::mt19937_64* rng) {
    check_consistent(c, h);
    const std::size_t n = c.length();

    // Boundary bases b_p = (image basis of d_{p+1}) * U_p and matching
    // section matrices S_{p+1} with d_{p+1} S_{p+1} = b_p.
    std::vector<Matrix> bases(n + 1), sections(n + 2);
    for (std::size_t p = 0; p <= n; ++p) {
        const DegreeHomology& deg = h.degrees[p];
        const std::size_t r = deg.boundary_basis.count();
        Matrix unit_preimages(c.dim(static_cast<long>(p) + 1), r);
        for (std::size_t j = 0; j < r; ++j) unit_preimages(deg.boundary_preimages[j], j) = 1;
        if (rng) {
            const Matrix mix = random_invertible(*rng, r);
            bases[p] = deg.boundary_basis.vectors * mix;
            sections[p + 1] = unit_preimages * mix;
            // Any section may differ by cycles of degree p+1.
            const OrderedBasis cycles = kernel_basis(c.boundary(static_cast<long>(p) + 1));
            sections[p + 1] =
                sections[p + 1] + cycles.vectors * random_entries(*rng, cycles.count(), r);
        } else {
            bases[p] = deg.boundary_basis.vectors;
            sections[p + 1] = unit_preimages;
        }
    }
    sections[0] = Matrix(0, 0);  // B_{-1} = 0

    HomologySplitting splitting;
    splitting.degrees.resize(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        DegreeSplitting& deg = splitting.degrees[p];
        const std::size_t m_p = c.dim(static_cast<long>(p));
        deg.boundary_basis = OrderedBasis(m_p, bases[p]);
        Matrix reps = h.degrees[p].homology_reps.vectors;
        if (rng && bases[p].cols() > 0 && reps.cols() > 0)
            reps = reps + bases[p] * random_entries(*rng, bases[p].cols(), reps.cols());
        deg.lifted_homology = OrderedBasis(m_p, reps);
        deg.section_vectors =
            OrderedBasis(m_p, p == 0 ? Matrix(m_p, 0) : sections[p]);
        deg.combined = deg.boundary_basis.vectors.hstack(deg.lifted_homology.vectors)
                           .hstack(deg.section_vectors.vectors);
        if (deg.combined.cols() != m_p)
            throw InconsistentHomologyData("splitting blocks do not fill the degree");
    }
    return splitting;
}

}  // namespace

HomologySplitting split(const BasedChainComplex& c, const HomologyData& h) {
    return split_impl(c, h, nullptr);
}

HomologySplitting split(const BasedChainComplex& c, const HomologyData& h,
                        std::mt19937_64& rng) {
    return split_impl(c, h, &rng);
}

}  // namespace rft
