#pragma once

#include "matspace/preserver.hpp"
#include "matspace/subspace.hpp"

#include <string>

namespace matspace {

// Resolves a space name for the command line.  Recognized forms:
//   m<n>            full n x n space
//   sl<n>           trace-zero matrices
//   t2+             upper-triangular 2 x 2 matrices
//   h<n>            block shape [M C; 0 a]
//   v1 v2 j3 f g    the GF(2)-specific 3 x 3 spaces
//   m_d:a,b,...     matrices killing the spanned line
//   m^d:a,b,...     matrices with images inside the orthogonal hyperplane
//   r:s,t           3 x 3 matrices with a zero lower-right block
// Anything else is read as a fixture file: one matrix literal per line,
// blank lines and '#' comments ignored, the span of the literals taken.
Subspace lookup_space(const FieldTable& f, const std::string& name);

// Reads a basis-image table: lines "i: matrix literal" assigning an image
// to domain.basis_element(i), each index exactly once.  The codomain is the
// full space of the image shape.
SubspaceLinearMap load_map(const Subspace& domain, const std::string& path);

} // namespace matspace
