#include "f2m3.hpp"

namespace matspace {
namespace f2m3 {

const std::array<std::uint8_t, 512>& rank_table() {
    static const std::array<std::uint8_t, 512> table = [] {
        std::array<std::uint8_t, 512> t{};
        for (unsigned m = 0; m < 512; ++m) {
            std::uint16_t rows[3] = {row(static_cast<Mat>(m), 0), row(static_cast<Mat>(m), 1),
                                     row(static_cast<Mat>(m), 2)};
            unsigned rank = 0;
            for (unsigned c = 0; c < 3; ++c) {
                unsigned bit = 1u << c;
                unsigned pr = rank;
                while (pr < 3 && !(rows[pr] & bit)) ++pr;
                if (pr == 3) continue;
                std::swap(rows[rank], rows[pr]);
                for (unsigned i = 0; i < 3; ++i)
                    if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
                ++rank;
            }
            t[m] = static_cast<std::uint8_t>(rank);
        }
        return t;
    }();
    return table;
}

void rref_rows(std::uint16_t* rows, unsigned k) {
    unsigned r = 0;
    for (unsigned c = 0; c < 9 && r < k; ++c) {
        std::uint16_t bit = static_cast<std::uint16_t>(1u << c);
        unsigned pr = r;
        while (pr < k && !(rows[pr] & bit)) ++pr;
        if (pr == k) continue;
        std::swap(rows[r], rows[pr]);
        for (unsigned i = 0; i < k; ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        ++r;
    }
}

std::array<std::uint16_t, 9> pack(const Subspace& s) {
    if (s.field().q() != 2 || s.ambient_dim() != 9)
        throw dimension_error("packed kernels need a 9-dimensional GF(2) ambient");
    std::array<std::uint16_t, 9> rows{};
    for (unsigned i = 0; i < s.dim(); ++i) {
        std::uint16_t r = 0;
        for (unsigned j = 0; j < 9; ++j)
            if (s.basis().at(i, j)) r = static_cast<std::uint16_t>(r | (1u << j));
        rows[i] = r;
    }
    return rows;
}

Subspace unpack(const FieldTable& f, const std::uint16_t* rows, unsigned k) {
    Matrix basis(f, k, 9);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < 9; ++j)
            if (rows[i] & (1u << j)) basis.set(i, j, 1);
    return Subspace::from_rref_rows(f, 3, 3, basis);
}

bool contains_invertible(const std::uint16_t* rows, unsigned k) {
    const auto& ranks = rank_table();
    std::uint16_t cur = 0;
    unsigned gray = 0;
    for (unsigned idx = 1; idx < (1u << k); ++idx) {
        unsigned next = idx ^ (idx >> 1);
        unsigned flipped = gray ^ next;
        unsigned bit = 0;
        while (!(flipped & (1u << bit))) ++bit;
        cur ^= rows[bit];
        gray = next;
        if (ranks[cur] == 3) return true;
    }
    return false;
}

std::array<std::uint64_t, 4> profile(const std::uint16_t* rows, unsigned k) {
    const auto& ranks = rank_table();
    std::array<std::uint64_t, 4> tally{};
    tally[0] = 1; // the zero combination
    std::uint16_t cur = 0;
    unsigned gray = 0;
    for (unsigned idx = 1; idx < (1u << k); ++idx) {
        unsigned next = idx ^ (idx >> 1);
        unsigned flipped = gray ^ next;
        unsigned bit = 0;
        while (!(flipped & (1u << bit))) ++bit;
        cur ^= rows[bit];
        gray = next;
        ++tally[ranks[cur]];
    }
    return tally;
}

} // namespace f2m3
} // namespace matspace
