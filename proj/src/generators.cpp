#include "rft/generators.hpp"

namespace rft {

Matrix random_entries(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                      long lo, long hi) {
    std::uniform_int_distribution<long> entry(lo, hi);
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

Matrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    Matrix m = Matrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> row(0, n - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (std::size_t step = 0; step < 3 * n; ++step) {
        std::size_t r = row(rng), s = row(rng);
        if (r == s) continue;
        const long c = coeff(rng);
        for (std::size_t j = 0; j < n; ++j) m(r, j) += Rational(c) * m(s, j);
    }
    return m;
}

BasedChainComplex random_complex(std::mt19937_64& rng, std::size_t max_len,
                                 std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> len(1, max_len), sz(1, max_dim);
    const std::size_t n = len(rng);
    std::vector<std::size_t> dims(n + 1);
    for (auto& d : dims) d = sz(rng);
    std::vector<Matrix> boundaries;
    for (std::size_t p = 1; p <= n; ++p) {
        if (p == 1) {
            boundaries.push_back(random_entries(rng, dims[0], dims[1], -2, 2));
        } else {
            // image constrained to ker of the previous boundary
            const OrderedBasis k = kernel_basis(boundaries.back());
            boundaries.push_back(k.vectors *
                                 random_entries(rng, k.count(), dims[p], -2, 2));
        }
    }
    return BasedChainComplex(dims, boundaries);
}

BasedChainComplex random_acyclic_complex(std::mt19937_64& rng, std::size_t max_len,
                                         std::size_t max_block) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<std::size_t> block(0, max_block);
    const std::size_t n = len(rng);
    // block_size[p] spans degrees p and p-1 with an invertible boundary
    std::vector<std::size_t> block_size(n + 2, 0);
    for (std::size_t p = 1; p <= n; ++p) block_size[p] = block(rng);
    if (block_size[1] == 0) block_size[1] = 1;

    std::vector<std::size_t> dims(n + 1);
    for (std::size_t p = 0; p <= n; ++p) dims[p] = block_size[p] + block_size[p + 1];
    std::vector<Matrix> boundaries;
    for (std::size_t p = 1; p <= n; ++p) {
        Matrix d(dims[p - 1], dims[p]);
        const Matrix u = random_invertible(rng, block_size[p]);
        for (std::size_t r = 0; r < u.rows(); ++r)
            for (std::size_t c = 0; c < u.cols(); ++c)
                d(block_size[p - 1] + r, c) = u(r, c);
        boundaries.push_back(std::move(d));
    }
    // mix by unimodular changes so the block structure is not visible
    std::vector<Matrix> mix(n + 1), mix_inv(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        mix[p] = random_unimodular(rng, dims[p]);
        mix_inv[p] = *inverse(mix[p]);
    }
    for (std::size_t p = 1; p <= n; ++p)
        boundaries[p - 1] = mix_inv[p - 1] * boundaries[p - 1] * mix[p];
    return BasedChainComplex(dims, boundaries);
}

ChainSES random_ses(std::mt19937_64& rng, bool acyclic) {
    auto make = [&] {
        return acyclic ? random_acyclic_complex(rng, 3, 2) : random_complex(rng, 3, 3);
    };
    BasedChainComplex a = make();
    BasedChainComplex d = make();
    // equalize lengths through the zero-padding of the split sum
    ChainSES padded = direct_sum_ses(a, d);
    a = padded.a;
    d = padded.d;
    const std::size_t n = a.length();

    std::vector<Matrix> l(n + 1);
    for (std::size_t p = 0; p <= n; ++p)
        l[p] = random_entries(rng, a.dim(static_cast<long>(p)),
                              d.dim(static_cast<long>(p)), -2, 2);

    std::vector<std::size_t> dims(n + 1);
    for (std::size_t p = 0; p <= n; ++p)
        dims[p] = a.dim(static_cast<long>(p)) + d.dim(static_cast<long>(p));
    std::vector<Matrix> boundaries;
    for (std::size_t p = 1; p <= n; ++p) {
        const long lp = static_cast<long>(p);
        const Matrix k = a.boundary(lp) * l[p] - l[p - 1] * d.boundary(lp);
        Matrix block(dims[p - 1], dims[p]);
        const Matrix da = a.boundary(lp), dd = d.boundary(lp);
        for (std::size_t r = 0; r < da.rows(); ++r)
            for (std::size_t c = 0; c < da.cols(); ++c) block(r, c) = da(r, c);
        for (std::size_t r = 0; r < k.rows(); ++r)
            for (std::size_t c = 0; c < k.cols(); ++c) block(r, da.cols() + c) = k(r, c);
        for (std::size_t r = 0; r < dd.rows(); ++r)
            for (std::size_t c = 0; c < dd.cols(); ++c)
                block(da.rows() + r, da.cols() + c) = dd(r, c);
        boundaries.push_back(std::move(block));
    }

    ChainSES s;
    s.a = a;
    s.d = d;
    s.b = BasedChainComplex(dims, boundaries);
    s.i = padded.i;
    s.pi = padded.pi;
    return s;
}

}  // namespace rft
