#pragma once

// Slow reference implementations, algorithmically independent of the
// library routines they cross-check.

#include "matspace/matrix.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using matspace::Elem;
using matspace::FieldTable;
using matspace::Matrix;

// Gaussian binomial by the stepwise product formula; every intermediate
// quotient is itself a binomial, so the division is exact.
inline std::uint64_t gaussian_binomial(unsigned d, unsigned k, unsigned q) {
    if (k > d) return 0;
    auto qpow = [&](unsigned e) {
        unsigned __int128 r = 1;
        while (e--) r *= q;
        return r;
    };
    unsigned __int128 g = 1;
    for (unsigned i = 0; i < k; ++i) g = g * (qpow(d - i) - 1) / (qpow(i + 1) - 1);
    return static_cast<std::uint64_t>(g);
}

inline std::uint64_t gl_order(unsigned q, unsigned n) {
    auto qpow = [&](unsigned e) {
        std::uint64_t r = 1;
        while (e--) r *= q;
        return r;
    };
    std::uint64_t order = 1;
    for (unsigned i = 0; i < n; ++i) order *= qpow(n) - qpow(i);
    return order;
}

// Laplace expansion along the first row.
inline Elem det_cofactor(const Matrix& m) {
    const FieldTable& f = m.field();
    unsigned n = m.rows();
    if (n == 1) return m.at(0, 0);
    Elem total = 0;
    for (unsigned j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        Matrix minor(f, n - 1, n - 1);
        for (unsigned r = 1; r < n; ++r)
            for (unsigned c = 0, cc = 0; c < n; ++c)
                if (c != j) minor.set(r - 1, cc++, m.at(r, c));
        Elem term = f.mul(m.at(0, j), det_cofactor(minor));
        total = (j % 2 == 0) ? f.add(total, term) : f.sub(total, term);
    }
    return total;
}

// Largest r with a nonzero r x r minor.
inline unsigned rank_by_minors(const Matrix& m) {
    const FieldTable& f = m.field();
    unsigned best = 0;
    unsigned nr = m.rows(), nc = m.cols();
    for (unsigned r = 1; r <= std::min(nr, nc); ++r) {
        bool found = false;
        std::vector<unsigned> ri(r), ci(r);
        for (unsigned i = 0; i < r; ++i) ri[i] = i;
        auto next = [r](std::vector<unsigned>& idx, unsigned limit) {
            unsigned i = r;
            while (i-- > 0) {
                if (++idx[i] <= limit - (r - i)) {
                    for (unsigned j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            for (unsigned i = 0; i < r; ++i) ci[i] = i;
            do {
                Matrix sub(f, r, r);
                for (unsigned i = 0; i < r; ++i)
                    for (unsigned j = 0; j < r; ++j) sub.set(i, j, m.at(ri[i], ci[j]));
                if (det_cofactor(sub) != 0) {
                    found = true;
                    break;
                }
            } while (next(ci, nc));
            if (found) break;
        } while (next(ri, nr));
        if (!found) break;
        best = r;
    }
    return best;
}

// Characteristic polynomial of det(tI - M) from principal-minor sums:
// the coefficient of t^(n-k) is (-1)^k times the k-th sum.
inline std::vector<Elem> char_poly_minor_sums(const Matrix& m) {
    const FieldTable& f = m.field();
    unsigned n = m.rows();
    std::vector<Elem> cp(n + 1, 0);
    cp[n] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        Elem sum = 0;
        std::vector<unsigned> idx(k);
        for (unsigned i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            Matrix sub(f, k, k);
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) sub.set(i, j, m.at(idx[i], idx[j]));
            sum = f.add(sum, det_cofactor(sub));
            unsigned i = k;
            bool more = false;
            while (i-- > 0) {
                if (++idx[i] <= n - (k - i)) {
                    for (unsigned j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (!more) break;
        }
        cp[n - k] = (k % 2 == 0) ? sum : f.neg(sum);
    }
    return cp;
}

} // namespace oracle
