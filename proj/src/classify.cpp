#include "matspace/classify.hpp"

#include "matspace/catalog.hpp"
#include "matspace/parallel.hpp"
#include "f2m3.hpp"

#include <algorithm>
#include <stdexcept>

namespace matspace {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::m_d: return "m_d";
        case Kind::m_sup_d: return "m^d";
        case Kind::first_kind: return "first_kind";
        case Kind::second_kind: return "second_kind";
        case Kind::unclassified: return "unclassified";
    }
    return "?";
}

std::optional<LineResult> common_kernel_line(const Subspace& v) {
    if (!v.square_ambient()) throw dimension_error("common kernel line needs a square ambient");
    const FieldTable& f = v.field();
    unsigned n = v.ambient_rows();
    if (v.dim() == 0) return LineResult{Line(f, [&] {
                                            std::vector<Elem> e(n, 0);
                                            e[0] = 1;
                                            return e;
                                        }()),
                                        n};
    Matrix stacked(f, v.dim() * n, n);
    for (unsigned i = 0; i < v.dim(); ++i) {
        Matrix b = v.basis_element(i);
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) stacked.set(i * n + r, c, b.at(r, c));
    }
    auto kernel = stacked.kernel_basis();
    if (kernel.empty()) return std::nullopt;
    return LineResult{Line(f, kernel[0]), static_cast<unsigned>(kernel.size())};
}

std::optional<LineResult> common_coimage_line(const Subspace& v) {
    // d is orthogonal to every image iff d lies in the common kernel of the
    // transposed elements.
    return common_kernel_line(v.transposed());
}

namespace {

const Subspace& first_kind_reference(const FieldTable& f) {
    static const Subspace ref = catalog::r_st(f, 3, 3, 1, 1);
    return ref;
}

const Subspace& second_kind_reference(const FieldTable& f) {
    static const Subspace ref = catalog::j3(f);
    return ref;
}

} // namespace

Classification classify_singular(const Subspace& v) {
    const FieldTable& f = v.field();
    if (f.q() != 2 || v.ambient_rows() != 3 || v.ambient_cols() != 3 || v.dim() != 5)
        throw dimension_error("classification covers 5-dimensional subspaces of M_3(GF(2))");
    if (!is_singular_subspace(v))
        throw value_error("classification covers singular subspaces only");

    Classification result;
    result.kernel_line = common_kernel_line(v);
    result.coimage_line = common_coimage_line(v);
    if (result.kernel_line && result.coimage_line)
        throw std::logic_error("both structural tests fired on a 5-dimensional subspace");

    if (result.kernel_line) {
        result.kind = Kind::m_d;
        return result;
    }
    if (result.coimage_line) {
        result.kind = Kind::m_sup_d;
        return result;
    }
    if (auto w = are_equivalent(v, first_kind_reference(f))) {
        result.kind = Kind::first_kind;
        result.witness = w;
        return result;
    }
    if (auto w = are_equivalent(v, second_kind_reference(f))) {
        result.kind = Kind::second_kind;
        result.witness = w;
        return result;
    }
    result.kind = Kind::unclassified;
    return result;
}

namespace {

// RREF bases of the k-dimensional subspaces of GF(2)^d as packed rows,
// pivot patterns [pat_lo, pat_hi) in lex order, free entries in row-major
// odometer order (first free slot most significant).  Mirrors
// enumerate_subspaces_patterns bit for bit.
template <class Fn>
void for_each_f2_rref(unsigned d, unsigned k, std::uint64_t pat_lo, std::uint64_t pat_hi, Fn&& fn) {
    std::vector<unsigned> pivots(k);
    for (unsigned i = 0; i < k; ++i) pivots[i] = i;
    std::uint64_t pat = 0;
    do {
        if (pat >= pat_hi) break;
        if (pat++ < pat_lo) continue;
        unsigned pivot_mask = 0;
        for (unsigned c : pivots) pivot_mask |= 1u << c;
        std::vector<std::pair<unsigned, unsigned>> free_slots; // (row, col)
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = pivots[i] + 1; j < d; ++j)
                if (!(pivot_mask & (1u << j))) free_slots.emplace_back(i, j);
        std::uint64_t combos = std::uint64_t{1} << free_slots.size();
        std::uint16_t base[16] = {};
        for (unsigned i = 0; i < k; ++i) base[i] = static_cast<std::uint16_t>(1u << pivots[i]);
        std::uint16_t rows[16];
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            for (unsigned i = 0; i < k; ++i) rows[i] = base[i];
            for (size_t s = 0; s < free_slots.size(); ++s)
                if (idx & (std::uint64_t{1} << (free_slots.size() - 1 - s)))
                    rows[free_slots[s].first] =
                        static_cast<std::uint16_t>(rows[free_slots[s].first] |
                                                   (1u << free_slots[s].second));
            fn(rows);
        }
    } while ([&] {
        for (unsigned i = k; i-- > 0;) {
            if (pivots[i] < d - (k - i)) {
                ++pivots[i];
                for (unsigned j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
                return true;
            }
        }
        return false;
    }());
}

} // namespace

CensusResult census_5dim_singular(unsigned jobs) {
    const FieldTable& f = make_field(2);
    const unsigned d = 9, k = 5;
    std::uint64_t patterns = pattern_count(d, k);

    struct Chunk {
        std::uint64_t total = 0, singular = 0;
        std::array<std::uint64_t, 5> by_kind{};
    };
    auto chunks = run_partitioned<Chunk>(patterns, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        Chunk c;
        for_each_f2_rref(d, k, lo, hi, [&](const std::uint16_t* rows) {
            ++c.total;
            if (f2m3::contains_invertible(rows, k)) return;
            ++c.singular;
            Subspace s = f2m3::unpack(f, rows, k);
            Classification cls = classify_singular(s);
            ++c.by_kind[static_cast<size_t>(cls.kind)];
        });
        return c;
    });

    CensusResult result;
    result.partitions = static_cast<unsigned>(chunks.size());
    for (const Chunk& c : chunks) {
        result.total += c.total;
        result.singular += c.singular;
        for (size_t i = 0; i < result.by_kind.size(); ++i) result.by_kind[i] += c.by_kind[i];
    }
    return result;
}

InsideCensus census_inside(const Subspace& v, unsigned k, unsigned jobs) {
    const FieldTable& f = v.field();
    if (f.q() != 2 || v.ambient_rows() != 3 || v.ambient_cols() != 3)
        throw dimension_error("inside-census covers subspaces of M_3(GF(2))");
    if (k > v.dim()) throw dimension_error("inside-census dimension exceeds the space");

    auto vrows = f2m3::pack(v);
    unsigned m = v.dim();
    std::uint64_t patterns = pattern_count(m, k);

    struct Chunk {
        std::uint64_t total = 0;
        std::vector<std::pair<Subspace, Classification>> singular;
    };
    auto chunks = run_partitioned<Chunk>(patterns, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        Chunk c;
        for_each_f2_rref(m, k, lo, hi, [&](const std::uint16_t* coord_rows) {
            ++c.total;
            // Map coordinate rows through the basis of v into the ambient.
            std::uint16_t arows[16];
            for (unsigned i = 0; i < k; ++i) {
                std::uint16_t acc = 0;
                for (unsigned b = 0; b < m; ++b)
                    if (coord_rows[i] & (1u << b)) acc ^= vrows[b];
                arows[i] = acc;
            }
            if (f2m3::contains_invertible(arows, k)) return;
            f2m3::rref_rows(arows, k);
            Subspace s = f2m3::unpack(f, arows, k);
            Classification cls =
                (k == 5) ? classify_singular(s) : Classification{};
            c.singular.emplace_back(std::move(s), std::move(cls));
        });
        return c;
    });

    InsideCensus result;
    result.partitions = static_cast<unsigned>(chunks.size());
    for (Chunk& c : chunks) {
        result.total += c.total;
        for (auto& entry : c.singular) result.singular.push_back(std::move(entry));
    }
    std::sort(result.singular.begin(), result.singular.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

std::vector<std::vector<unsigned>> intersection_dim_table(const std::vector<Subspace>& spaces) {
    std::vector<std::vector<unsigned>> dims(spaces.size(), std::vector<unsigned>(spaces.size(), 0));
    for (size_t i = 0; i < spaces.size(); ++i)
        for (size_t j = 0; j < spaces.size(); ++j)
            dims[i][j] = (i == j) ? spaces[i].dim() : meet(spaces[i], spaces[j]).dim();
    return dims;
}

} // namespace matspace
