#include "matspace/catalog.hpp"

namespace matspace {
namespace catalog {

namespace {

void require_f2(const FieldTable& f, const char* name) {
    if (f.q() != 2)
        throw unsupported_field_error(std::string(name) + " is defined over GF(2) only");
}

Matrix with_row(const FieldTable& f, unsigned n, unsigned i, const std::vector<Elem>& row) {
    Matrix m(f, n, n);
    for (unsigned j = 0; j < n; ++j) m.set(i, j, row[j]);
    return m;
}

} // namespace

Subspace m_d(const Line& d) {
    const FieldTable& f = d.field();
    unsigned n = d.d();
    // Each row of M must annihilate the representative of D, so rows range
    // over the hyperplane {x : <x, rep> = 0}; one generator per (row slot,
    // hyperplane basis vector).
    Matrix constraint(f, 1, n);
    for (unsigned j = 0; j < n; ++j) constraint.set(0, j, d.rep()[j]);
    auto hyperplane = constraint.kernel_basis();
    std::vector<Matrix> gens;
    gens.reserve(size_t{n} * hyperplane.size());
    for (unsigned i = 0; i < n; ++i)
        for (const auto& w : hyperplane) gens.push_back(with_row(f, n, i, w));
    return Subspace::span_of(gens);
}

Subspace m_sup_d(const Line& d) { return m_d(d).transposed(); }

Subspace r_st(const FieldTable& f, unsigned n, unsigned p, unsigned s, unsigned t) {
    if (s > n || t > p) throw dimension_error("r_st block sizes exceed the ambient shape");
    std::vector<Matrix> gens;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < p; ++j)
            if (i < s || j < t) gens.push_back(Matrix::unit(f, n, p, i, j));
    if (gens.empty()) return Subspace(f, n, p);
    return Subspace::span_of(gens);
}

Subspace sl(const FieldTable& f, unsigned n) {
    std::vector<Matrix> gens;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (i != j) gens.push_back(Matrix::unit(f, n, n, i, j));
    for (unsigned i = 0; i + 1 < n; ++i) {
        Matrix m(f, n, n);
        m.set(i, i, 1);
        m.set(i + 1, i + 1, f.neg(1));
        gens.push_back(m);
    }
    return Subspace::span_of(gens);
}

Subspace upper_triangular(const FieldTable& f, unsigned n) {
    std::vector<Matrix> gens;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) gens.push_back(Matrix::unit(f, n, n, i, j));
    return Subspace::span_of(gens);
}

Subspace h_space(const FieldTable& f, unsigned n) {
    if (n < 2) throw dimension_error("h_space needs n >= 2");
    // Everything except the bottom row's first n-1 entries.
    std::vector<Matrix> gens;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (!(i == n - 1 && j < n - 1)) gens.push_back(Matrix::unit(f, n, n, i, j));
    return Subspace::span_of(gens);
}

Subspace j3(const FieldTable& f) {
    require_f2(f, "j3");
    auto unit = [&](unsigned i, unsigned j) { return Matrix::unit(f, 3, 3, i, j); };
    std::vector<Matrix> gens{
        unit(0, 0) + unit(2, 2), // a
        unit(1, 1) + unit(2, 2), // b
        unit(1, 0),              // c
        unit(2, 0),              // d
        unit(2, 1),              // e
    };
    return Subspace::span_of(gens);
}

Subspace v1(const FieldTable& f) {
    require_f2(f, "v1");
    std::vector<Matrix> gens;
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            if (!(i == 2 && j == 2)) gens.push_back(Matrix::unit(f, 3, 3, i, j));
    return Subspace::span_of(gens);
}

Subspace v2(const FieldTable& f) {
    require_f2(f, "v2");
    auto unit = [&](unsigned i, unsigned j) { return Matrix::unit(f, 3, 3, i, j); };
    std::vector<Matrix> gens{
        unit(0, 0) + unit(1, 1), // trace-zero diagonal part of M
        unit(0, 1),
        unit(1, 0),
        unit(0, 2), // C
        unit(1, 2),
        unit(2, 0), // L
        unit(2, 1),
        unit(2, 2), // a
    };
    return Subspace::span_of(gens);
}

Subspace f_space(const FieldTable& f) {
    require_f2(f, "f_space");
    auto unit = [&](unsigned i, unsigned j) { return Matrix::unit(f, 3, 3, i, j); };
    std::vector<Matrix> gens{unit(0, 2), unit(1, 2), unit(2, 0), unit(2, 1), unit(2, 2)};
    return Subspace::span_of(gens);
}

Subspace g_space(const FieldTable& f) {
    require_f2(f, "g_space");
    auto unit = [&](unsigned i, unsigned j) { return Matrix::unit(f, 3, 3, i, j); };
    std::vector<Matrix> gens{
        unit(0, 1) + unit(2, 0), // a
        unit(1, 2) + unit(2, 0), // b
        unit(0, 2),              // c
        unit(2, 1),              // d
        unit(2, 2),              // e
    };
    return Subspace::span_of(gens);
}

} // namespace catalog
} // namespace matspace
