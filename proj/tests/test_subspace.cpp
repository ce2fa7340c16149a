#include "matspace/subspace.hpp"

#include "matspace/catalog.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace matspace;

namespace {

// Deterministic sample of subspaces of M_2(GF(3)) for the lattice laws.
std::vector<Subspace> sample_spaces(const FieldTable& f, unsigned count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Subspace> out;
    std::uint64_t total = matrix_space_size(f, 2, 2);
    while (out.size() < count) {
        std::vector<Matrix> gens;
        unsigned g = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned i = 0; i < g; ++i)
            gens.push_back(Matrix::decode(f, 2, 2, rng() % total));
        out.push_back(Subspace::span_of(gens));
    }
    return out;
}

} // namespace

TEST_CASE("span is canonical under generator shuffling and scaling") {
    const FieldTable& f = make_field(3);
    Matrix a = Matrix::parse(f, "1 2; 0 1");
    Matrix b = Matrix::parse(f, "0 1; 1 0");
    Subspace s = Subspace::span_of({a, b});
    CHECK(s.dim() == 2);
    CHECK(Subspace::span_of({b, a}) == s);
    CHECK(Subspace::span_of({a.scaled(2), b, a + b}) == s);
    CHECK(s.contains(a + b.scaled(2)));
    CHECK_FALSE(s.contains(Matrix::identity(f, 2)));
}

TEST_CASE("element and coordinates invert each other") {
    Subspace sl3 = catalog::sl(make_field(2), 3);
    for (unsigned i = 0; i < sl3.dim(); ++i) {
        std::vector<Elem> coords(sl3.dim(), 0);
        coords[i] = 1;
        CHECK(sl3.coordinates(sl3.basis_element(i)) == coords);
        CHECK(sl3.element(coords) == sl3.basis_element(i));
    }
    CHECK_THROWS_AS(sl3.coordinates(Matrix::identity(make_field(2), 3)), value_error);
}

TEST_CASE("lattice laws on sampled subspaces") {
    const FieldTable& f = make_field(3);
    auto spaces = sample_spaces(f, 24, 1);
    for (const Subspace& a : spaces)
        for (const Subspace& b : spaces) {
            Subspace m = meet(a, b), j = join(a, b);
            CHECK(m == meet(b, a));
            CHECK(j == join(b, a));
            CHECK(a.contains(m));
            CHECK(j.contains(a));
            CHECK(m.dim() + j.dim() == a.dim() + b.dim());
            CHECK(join(a, m) == a);
            CHECK(meet(a, j) == a);
        }
    // modular law: a <= c implies join(a, meet(b, c)) == meet(join(a, b), c)
    for (const Subspace& b : spaces)
        for (const Subspace& c : spaces) {
            Subspace a = meet(c, b);
            CHECK(join(a, meet(b, c)) == meet(join(a, b), c));
        }
}

TEST_CASE("trace orthogonal is a dimension-reversing involution") {
    const FieldTable& f = make_field(2);
    for (const Subspace& s :
         {catalog::sl(f, 3), catalog::j3(f), catalog::v1(f), catalog::v2(f),
          catalog::upper_triangular(f, 3), catalog::r_st(f, 3, 3, 1, 1)}) {
        Subspace orth = trace_orthogonal(s);
        CHECK(s.dim() + orth.dim() == 9);
        CHECK(trace_orthogonal(orth) == s);
    }
    CHECK(trace_orthogonal(catalog::sl(f, 3)) ==
          Subspace::span_of({Matrix::identity(f, 3)}));
    CHECK(trace_orthogonal(catalog::v1(f)) ==
          Subspace::span_of({Matrix::unit(f, 3, 3, 2, 2)}));
}

TEST_CASE("orthogonal of the lower-triangular trace-zero space") {
    const FieldTable& f = make_field(2);
    // [a 0 0; b a 0; d c a] spans the orthogonal of j3
    Subspace expected = Subspace::span_of({
        Matrix::parse(f, "1 0 0; 0 1 0; 0 0 1"),
        Matrix::parse(f, "0 0 0; 1 0 0; 0 0 0"),
        Matrix::parse(f, "0 0 0; 0 0 0; 0 1 0"),
        Matrix::parse(f, "0 0 0; 0 0 0; 1 0 0"),
    });
    CHECK(trace_orthogonal(catalog::j3(f)) == expected);
}

TEST_CASE("subspace counts follow the product formula") {
    for (unsigned q : {2u, 3u, 4u}) {
        for (unsigned d = 0; d <= 6; ++d)
            for (unsigned k = 0; k <= d; ++k)
                CHECK(subspace_count(d, k, q) == oracle::gaussian_binomial(d, k, q));
    }
    CHECK(subspace_count(9, 5, 2) == 3309747);
    CHECK(subspace_count(8, 5, 2) == 97155);
    CHECK(subspace_count(4, 3, 3) == 40);
    CHECK_THROWS_AS(subspace_count(120, 60, 9), guard_error);
}

TEST_CASE("enumeration visits each subspace once in canonical order") {
    const FieldTable& f = make_field(2);
    for (unsigned k = 0; k <= 4; ++k) {
        std::vector<Subspace> seen;
        enumerate_subspaces(f, 4, k, [&](const Subspace& s) {
            CHECK(s.dim() == k);
            seen.push_back(s);
        });
        CHECK(seen.size() == subspace_count(4, k, 2));
        for (size_t i = 0; i + 1 < seen.size(); ++i) CHECK(seen[i] != seen[i + 1]);
        std::sort(seen.begin(), seen.end());
        CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
    }
    std::uint64_t lines = 0;
    enumerate_subspaces(make_field(3), 4, 1, [&](const Subspace&) { ++lines; });
    CHECK(lines == 40);
}

TEST_CASE("pattern ranges partition the enumeration") {
    const FieldTable& f = make_field(2);
    std::vector<Subspace> serial;
    enumerate_subspaces(f, 5, 2, [&](const Subspace& s) { serial.push_back(s); });
    std::uint64_t patterns = pattern_count(5, 2);
    CHECK(patterns == 10);
    std::vector<Subspace> pieced;
    for (std::uint64_t lo = 0; lo < patterns; lo += 3)
        enumerate_subspaces_patterns(f, 5, 2, lo, std::min(lo + 3, patterns),
                                     [&](const Subspace& s) { pieced.push_back(s); });
    CHECK(pieced == serial);
}

TEST_CASE("all_lines is canonical and complete") {
    const FieldTable& f = make_field(3);
    auto lines = all_lines(f, 3);
    CHECK(lines.size() == 13);
    for (const Line& l : lines) {
        unsigned lead = 0;
        while (l.rep()[lead] == 0) ++lead;
        CHECK(l.rep()[lead] == 1);
        CHECK(l.space().dim() == 1);
    }
    for (size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i] < lines[i + 1]);
    CHECK(Line(f, {0, 2, 1}) == Line(f, {0, 1, 2})); // scaling collapses
}

TEST_CASE("for_each_element covers q^dim elements in encode order") {
    Subspace t2 = catalog::upper_triangular(make_field(3), 2);
    std::vector<std::uint64_t> codes;
    for_each_element(t2, [&](const Matrix& m) { codes.push_back(m.encode()); });
    CHECK(codes.size() == 27);
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK(codes.front() == 0);
}

TEST_CASE("rank profile and singularity") {
    const FieldTable& f = make_field(2);
    auto profile = rank_profile(Subspace::full(f, 2, 2));
    CHECK(profile == std::vector<std::uint64_t>{1, 9, 6});
    CHECK(count_nonsingular(catalog::sl(f, 3)) == 80);
    CHECK(is_singular_subspace(catalog::r_st(f, 3, 3, 1, 1)));
    CHECK(is_singular_subspace(catalog::j3(f)));
    CHECK_FALSE(is_singular_subspace(catalog::sl(f, 3)));
}

TEST_CASE("reshaped reinterprets the ambient shape") {
    const FieldTable& f = make_field(2);
    Subspace rows = Subspace::span_of({Matrix::parse(f, "1 0 0 0"), Matrix::parse(f, "0 1 0 0")});
    Subspace square = reshaped(rows, 2, 2);
    CHECK(square.ambient_rows() == 2);
    CHECK(square.dim() == 2);
    CHECK(square.contains(Matrix::parse(f, "1 1; 0 0")));
    CHECK(reshaped(square, 1, 4) == rows);
    CHECK_THROWS_AS(reshaped(rows, 3, 3), dimension_error);
}

TEST_CASE("transposed subspace") {
    const FieldTable& f = make_field(2);
    Subspace j3 = catalog::j3(f);
    CHECK(j3.transposed().transposed() == j3);
    for (unsigned i = 0; i < j3.dim(); ++i)
        CHECK(j3.transposed().contains(j3.basis_element(i).transposed()));
}

TEST_CASE("enumeration guard rejects oversized requests") {
    CHECK_THROWS_AS(enumerate_subspaces(make_field(9), 9, 4, [](const Subspace&) {}),
                    guard_error);
}
