#pragma once

#include "matspace/field.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace matspace {

// Dense row-major matrix over a shared FieldTable.  Value semantics; the
// field table outlives every matrix (make_field hands out process-wide
// singletons).  All elimination-based routines pivot on the first nonzero
// entry of the current column, so results are deterministic.
class Matrix {
public:
    Matrix(const FieldTable& f, unsigned rows, unsigned cols);
    static Matrix identity(const FieldTable& f, unsigned n);
    // E_ij: single 1 at (i, j).
    static Matrix unit(const FieldTable& f, unsigned rows, unsigned cols, unsigned i, unsigned j);

    const FieldTable& field() const { return *f_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }

    Elem at(unsigned i, unsigned j) const { return e_[i * cols_ + j]; }
    void set(unsigned i, unsigned j, Elem v) { e_[i * cols_ + j] = v; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(Elem c) const;
    Matrix transposed() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    unsigned rank() const;
    Elem det() const;         // square only
    Elem trace() const;       // square only
    Matrix inverse() const;   // square, nonsingular
    Matrix rref() const;

    // Adjugate via cofactor expansion; square, n <= 4.
    Matrix adjugate() const;

    // Coefficients of det(t*I - M), ascending powers of t, length n + 1,
    // leading coefficient 1.  Square, n <= 4; exact symbolic expansion.
    std::vector<Elem> char_poly() const;

    // Canonical bases (row-reduced echelon form, no zero vectors) of the
    // null space and the column space.  kernel vectors have length cols(),
    // image vectors length rows().  dim kernel + rank == cols().
    std::vector<std::vector<Elem>> kernel_basis() const;
    std::vector<std::vector<Elem>> image_basis() const;

    // Row-major vectorization, used by Subspace.
    std::vector<Elem> vec() const { return e_; }
    static Matrix unvec(const FieldTable& f, unsigned rows, unsigned cols,
                        const std::vector<Elem>& v);

    // Base-q integer whose most significant digit is entry (0,0); the
    // ascending encode order is the row-major lexicographic entry order.
    // Requires q^(rows*cols) to fit in 64 bits.
    std::uint64_t encode() const;
    static Matrix decode(const FieldTable& f, unsigned rows, unsigned cols, std::uint64_t code);

    // Literal format: rows separated by ';', entries by whitespace,
    // e.g. "0 1 0; 0 0 1; 1 1 0".
    std::string to_string() const;
    static Matrix parse(const FieldTable& f, std::string_view text);

    // Shape-major, then row-major entry order.  Gives the canonical total
    // order used for lexicographically-least witnesses.
    bool operator<(const Matrix& o) const;

private:
    const FieldTable* f_;
    unsigned rows_, cols_;
    std::vector<Elem> e_;
};

// Dimension over the base field of {M : AM == MA}; a must be square.
unsigned centralizer_dim(const Matrix& a);

// Number of distinct matrices of the given shape (q^(rows*cols)); throws
// guard_error if it does not fit in 64 bits.
std::uint64_t matrix_space_size(const FieldTable& f, unsigned rows, unsigned cols);

// Monic ascending-coefficient polynomial rendered as "t^3 + t + 1".
std::string poly_to_string(const std::vector<Elem>& coeffs);

} // namespace matspace
