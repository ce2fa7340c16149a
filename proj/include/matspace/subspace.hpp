#pragma once

#include "matspace/matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace matspace {

// Linear subspace of a matrix space M_{n,p}(GF(q)), elements vectorized
// row-major into K^(n*p).  Plain vector spaces use the row shape (1, d).
// The stored basis is the reduced-row-echelon canonical form, so two
// subspaces are equal iff their stored bases are identical.
class Subspace {
public:
    // Zero subspace of the given ambient shape.
    Subspace(const FieldTable& f, unsigned amb_rows, unsigned amb_cols);
    static Subspace full(const FieldTable& f, unsigned amb_rows, unsigned amb_cols);
    // Span of generators; all must share one shape and field.
    static Subspace span_of(const std::vector<Matrix>& gens);
    // Rows of `rows` are generators (vectorized); reduced internally.
    static Subspace from_rows(const FieldTable& f, unsigned amb_rows, unsigned amb_cols,
                              const Matrix& rows);
    // Rows already in reduced echelon form with no zero rows; trusted.
    static Subspace from_rref_rows(const FieldTable& f, unsigned amb_rows, unsigned amb_cols,
                                   Matrix rows);

    const FieldTable& field() const { return basis_.field(); }
    unsigned ambient_rows() const { return amb_rows_; }
    unsigned ambient_cols() const { return amb_cols_; }
    unsigned ambient_dim() const { return amb_rows_ * amb_cols_; }
    bool square_ambient() const { return amb_rows_ == amb_cols_; }
    unsigned dim() const { return basis_.rows(); }

    // dim() x ambient_dim() matrix in reduced echelon form.
    const Matrix& basis() const { return basis_; }
    Matrix basis_element(unsigned i) const;

    bool contains(const Matrix& m) const;
    bool contains(const Subspace& other) const;
    // Sum of coords[i] * basis_element(i); coords.size() == dim().
    Matrix element(const std::vector<Elem>& coords) const;
    // Inverse of element(); throws value_error if m is not a member.
    std::vector<Elem> coordinates(const Matrix& m) const;

    // Span of the transposed elements; ambient shape (p, n).
    Subspace transposed() const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    // Ambient shape, then dim, then basis entries; a canonical total order.
    bool operator<(const Subspace& o) const;

private:
    unsigned amb_rows_, amb_cols_;
    Matrix basis_;
};

Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);

// Same field and basis rows, reinterpreted under a new ambient shape with
// the same total dimension.
Subspace reshaped(const Subspace& s, unsigned amb_rows, unsigned amb_cols);

// Orthogonal of S under the trace form (A, B) -> tr(AB); square ambient.
// Dimension-reversing involution: dim + dim-of-orthogonal == n^2.
Subspace trace_orthogonal(const Subspace& s);

// One-dimensional subspace of K^d, kept as its canonical representative
// (first nonzero coordinate scaled to 1).
class Line {
public:
    Line(const FieldTable& f, const std::vector<Elem>& v); // v nonzero
    const FieldTable& field() const { return *f_; }
    unsigned d() const { return static_cast<unsigned>(rep_.size()); }
    const std::vector<Elem>& rep() const { return rep_; }
    Subspace space() const;
    bool operator==(const Line& o) const { return rep_ == o.rep_; }
    bool operator<(const Line& o) const { return rep_ < o.rep_; }

private:
    const FieldTable* f_;
    std::vector<Elem> rep_;
};

// All lines of K^d in canonical order; (q^d - 1)/(q - 1) of them.
std::vector<Line> all_lines(const FieldTable& f, unsigned d);

// Number of k-dimensional subspaces of K^d (Gaussian binomial), computed
// exactly by the q-Pascal recurrence.  Throws guard_error when the count
// cannot be represented.
std::uint64_t subspace_count(unsigned d, unsigned k, unsigned q);

// Visits every k-dimensional subspace of K^d exactly once, in lexicographic
// order of (pivot-column set, free entries).  Total count is guarded at 2^32.
void enumerate_subspaces(const FieldTable& f, unsigned d, unsigned k,
                         const std::function<void(const Subspace&)>& fn);

// Number of pivot patterns: C(d, k).
std::uint64_t pattern_count(unsigned d, unsigned k);

// Same enumeration restricted to pivot patterns [pat_lo, pat_hi); disjoint
// ranges partition the full enumeration, which makes parallel runs exact.
void enumerate_subspaces_patterns(const FieldTable& f, unsigned d, unsigned k,
                                  std::uint64_t pat_lo, std::uint64_t pat_hi,
                                  const std::function<void(const Subspace&)>& fn);

// Visits all q^dim elements (zero included) in ascending coordinate order,
// first coordinate most significant.  The same Matrix workspace is reused
// between calls.  Guard: q^dim <= 2^24.
void for_each_element(const Subspace& s, const std::function<void(const Matrix&)>& fn);

// Element tally by rank, index 0..min(n,p).  Guard: q^dim <= 2^24.
std::vector<std::uint64_t> rank_profile(const Subspace& s);

// True iff no element is invertible (square ambient; early exit).
bool is_singular_subspace(const Subspace& s);

// Number of invertible elements (square ambient).
std::uint64_t count_nonsingular(const Subspace& s);

} // namespace matspace
