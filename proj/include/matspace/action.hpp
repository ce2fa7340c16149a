#pragma once

#include "matspace/subspace.hpp"

#include <optional>
#include <vector>

namespace matspace {

// The invertible n x n matrices over the field, ascending by row-major
// entry order, with the position of each element's inverse.  Memoized per
// (field, n); enumeration budget q^(n^2) <= 2^24.
struct GLList {
    std::vector<Matrix> mats;
    std::vector<std::uint32_t> inv; // mats[inv[i]] == mats[i]^-1
};
const GLList& enumerate_gl(const FieldTable& f, unsigned n);

// M -> P M Q, or M -> P M^T Q when transposed is set.  P and Q invertible.
struct FrobeniusMap {
    Matrix p, q;
    bool transposed = false;

    Matrix apply(const Matrix& m) const;
    Subspace apply(const Subspace& s) const;
    bool operator==(const FrobeniusMap& o) const {
        return p == o.p && q == o.q && transposed == o.transposed;
    }
};

// All Frobenius maps on M_n(K), deduplicated by their action (two (P, Q)
// pairs that induce the same map count once).  Order: non-transposed maps
// first, then transposed, (P, Q) ascending within each block; every map
// keeps the first (P, Q) pair that produced it.
std::vector<FrobeniusMap> enumerate_frobenius(const FieldTable& f, unsigned n);

// Witness for subspace equivalence under (P, Q) . V = P V Q^-1.
struct EquivalenceWitness {
    Matrix p, q; // p * S * q^-1 == T elementwise on spans
};

// Exhaustive equivalence test with dim and rank-profile pre-filters.
// Returns the lexicographically least witness (P, then Q, by entry order)
// or definitive absence.  Square ambient, n <= 3, q <= 3.
std::optional<EquivalenceWitness> are_equivalent(const Subspace& s, const Subspace& t);

// Orbit label of a hyperplane V of M_n: the rank of the (unique up to
// scale) nonzero element of trace_orthogonal(V).
unsigned hyperplane_orbit(const Subspace& v);

} // namespace matspace
