#pragma once

#include "matspace/subspace.hpp"

namespace matspace {
namespace catalog {

// Construction rule throughout: one generator per free parameter of the
// defining block form, then span (so every space lands in canonical form).

// m_d(D) = {M in M_n : M x = 0 for all x in D}; codimension n.
Subspace m_d(const Line& d);

// m^D = {M in M_n : im M inside the hyperplane orthogonal to D};
// equals m_d(D) transposed, codimension n.
Subspace m_sup_d(const Line& d);

// Matrices with a zero lower-right (n-s) x (p-t) block:
// dimension s*t + s*(p-t) + (n-s)*t.
Subspace r_st(const FieldTable& f, unsigned n, unsigned p, unsigned s, unsigned t);

// Trace-zero matrices, dimension n^2 - 1.
Subspace sl(const FieldTable& f, unsigned n);

// Upper-triangular matrices, dimension n(n+1)/2.
Subspace upper_triangular(const FieldTable& f, unsigned n);

// Block shape [M C; 0 a] with M of size (n-1), C a column, a a scalar;
// dimension n^2 - n + 1.  Requires n >= 2.
Subspace h_space(const FieldTable& f, unsigned n);

// The five GF(2)-specific 3x3 spaces.  Each constructor checks the field.
//
// j3: lower-triangular trace-zero: [a 0 0; c b 0; d e a+b], dim 5.
Subspace j3(const FieldTable& f);
// v1: all of M_3 except entry (3,3): [M C; L 0], dim 8.
Subspace v1(const FieldTable& f);
// v2: [M C; L a] with tr M = 0, dim 8.
Subspace v2(const FieldTable& f);
// f_space: [0 0 a; 0 0 b; c d e], dim 5.
Subspace f_space(const FieldTable& f);
// g_space: [0 a c; 0 0 b; a+b d e], dim 5.
Subspace g_space(const FieldTable& f);

} // namespace catalog
} // namespace matspace
