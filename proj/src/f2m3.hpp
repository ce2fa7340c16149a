#pragma once

// Packed kernels for 3x3 matrices over GF(2) and for subspaces of the
// 9-dimensional vectorized ambient.  A matrix is 9 bits, bit (3*i + j) =
// entry (i, j); the packed value therefore matches the row-major
// vectorization used by Subspace, with bit position = coordinate index.
// These kernels carry the census and the exhaustive equivalence scans.

#include "matspace/subspace.hpp"

#include <array>
#include <cstdint>

namespace matspace {
namespace f2m3 {

using Mat = std::uint16_t; // 9 bits used

inline Mat row(Mat m, unsigned i) { return static_cast<Mat>((m >> (3 * i)) & 7u); }

inline Mat mul(Mat a, Mat b) {
    Mat out = 0;
    for (unsigned i = 0; i < 3; ++i) {
        Mat ar = row(a, i), acc = 0;
        if (ar & 1) acc = static_cast<Mat>(acc ^ row(b, 0));
        if (ar & 2) acc = static_cast<Mat>(acc ^ row(b, 1));
        if (ar & 4) acc = static_cast<Mat>(acc ^ row(b, 2));
        out = static_cast<Mat>(out | (acc << (3 * i)));
    }
    return out;
}

inline Mat transpose(Mat m) {
    Mat out = 0;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            if (m & (Mat{1} << (3 * i + j))) out = static_cast<Mat>(out | (Mat{1} << (3 * j + i)));
    return out;
}

// Rank table over all 512 packed matrices.
const std::array<std::uint8_t, 512>& rank_table();

inline unsigned rank(Mat m) { return rank_table()[m]; }

// In-place reduced echelon form of k packed row vectors (bit j = coordinate
// j, pivot = least significant set bit).  Rows end up sorted by pivot; k is
// preserved for independent inputs.
void rref_rows(std::uint16_t* rows, unsigned k);

// rows must already be canonical (rref_rows output); 5 rows max 45 bits.
inline std::uint64_t signature(const std::uint16_t* rows, unsigned k) {
    std::uint64_t sig = 0;
    for (unsigned i = 0; i < k; ++i) sig |= std::uint64_t{rows[i]} << (9 * i);
    return sig;
}

// Packs a subspace of M_3(GF(2)); basis rows keep their canonical order.
std::array<std::uint16_t, 9> pack(const Subspace& s);
Subspace unpack(const FieldTable& f, const std::uint16_t* rows, unsigned k);

// True iff some nonzero combination of the k rows has rank 3 (Gray-code
// walk with early exit).
bool contains_invertible(const std::uint16_t* rows, unsigned k);

// Rank tally over all 2^k combinations, index 0..3.
std::array<std::uint64_t, 4> profile(const std::uint16_t* rows, unsigned k);

} // namespace f2m3
} // namespace matspace
