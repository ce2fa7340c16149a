#include "matspace/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace matspace {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw dimension_error(msg);
}

// In-place reduced row echelon form; returns the pivot columns in order.
// Pivot choice: first row with a nonzero entry in the current column.
std::vector<unsigned> rref_in_place(const FieldTable& f, std::vector<Elem>& a,
                                    unsigned rows, unsigned cols) {
    std::vector<unsigned> pivots;
    unsigned r = 0;
    for (unsigned c = 0; c < cols && r < rows; ++c) {
        unsigned pr = r;
        while (pr < rows && a[pr * cols + c] == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (unsigned j = c; j < cols; ++j) std::swap(a[r * cols + j], a[pr * cols + j]);
        Elem piv = a[r * cols + c];
        if (piv != 1) {
            Elem s = f.inv(piv);
            for (unsigned j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], s);
        }
        for (unsigned i = 0; i < rows; ++i) {
            if (i == r) continue;
            Elem m = a[i * cols + c];
            if (m == 0) continue;
            for (unsigned j = c; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(m, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Rank of a GF(2) matrix with cols <= 64, rows packed into machine words.
unsigned rank_f2_packed(const std::vector<Elem>& e, unsigned rows, unsigned cols) {
    std::vector<std::uint64_t> w(rows, 0);
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j)
            if (e[i * cols + j]) w[i] |= std::uint64_t{1} << j;
    unsigned rank = 0;
    for (unsigned c = 0; c < cols && rank < rows; ++c) {
        std::uint64_t bit = std::uint64_t{1} << c;
        unsigned pr = rank;
        while (pr < rows && !(w[pr] & bit)) ++pr;
        if (pr == rows) continue;
        std::swap(w[rank], w[pr]);
        for (unsigned i = 0; i < rows; ++i)
            if (i != rank && (w[i] & bit)) w[i] ^= w[rank];
        ++rank;
    }
    return rank;
}

using Poly = std::vector<Elem>; // ascending coefficients, no trailing zeros

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const FieldTable& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : Elem{0};
        Elem y = i < b.size() ? b[i] : Elem{0};
        r[i] = f.add(x, y);
    }
    poly_trim(r);
    return r;
}

Poly poly_mul(const FieldTable& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    poly_trim(r);
    return r;
}

Poly poly_neg(const FieldTable& f, Poly a) {
    for (auto& c : a) c = f.neg(c);
    return a;
}

// Determinant of a small matrix of polynomials by cofactor expansion
// along the first row.
Poly poly_det(const FieldTable& f, const std::vector<Poly>& m, unsigned n) {
    if (n == 1) return m[0];
    Poly result;
    for (unsigned j = 0; j < n; ++j) {
        std::vector<Poly> minor;
        minor.reserve((n - 1) * (n - 1));
        for (unsigned i = 1; i < n; ++i)
            for (unsigned c = 0; c < n; ++c)
                if (c != j) minor.push_back(m[i * n + c]);
        Poly term = poly_mul(f, m[j], poly_det(f, minor, n - 1));
        if (j % 2 == 1) term = poly_neg(f, term);
        result = poly_add(f, result, term);
    }
    return result;
}

} // namespace

Matrix::Matrix(const FieldTable& f, unsigned rows, unsigned cols)
    : f_(&f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

Matrix Matrix::identity(const FieldTable& f, unsigned n) {
    Matrix m(f, n, n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::unit(const FieldTable& f, unsigned rows, unsigned cols, unsigned i, unsigned j) {
    Matrix m(f, rows, cols);
    m.set(i, j, 1);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_, "matrix shape/field mismatch in +");
    Matrix r(*f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->add(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_, "matrix shape/field mismatch in -");
    Matrix r(*f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->sub(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_ && f_ == o.f_, "matrix shape/field mismatch in *");
    Matrix r(*f_, rows_, o.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            Elem a = at(i, k);
            if (a == 0) continue;
            for (unsigned j = 0; j < o.cols_; ++j)
                r.e_[i * o.cols_ + j] = f_->add(r.e_[i * o.cols_ + j], f_->mul(a, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::scaled(Elem c) const {
    Matrix r(*f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_->mul(e_[i], c);
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(*f_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](Elem x) { return x == 0; });
}

unsigned Matrix::rank() const {
    if (f_->q() == 2 && cols_ <= 64) return rank_f2_packed(e_, rows_, cols_);
    std::vector<Elem> a = e_;
    return static_cast<unsigned>(rref_in_place(*f_, a, rows_, cols_).size());
}

Elem Matrix::det() const {
    require(is_square(), "det of a non-square matrix");
    std::vector<Elem> a = e_;
    unsigned n = rows_;
    Elem d = 1;
    for (unsigned c = 0; c < n; ++c) {
        unsigned pr = c;
        while (pr < n && a[pr * n + c] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != c) {
            for (unsigned j = c; j < n; ++j) std::swap(a[c * n + j], a[pr * n + j]);
            d = f_->neg(d);
        }
        Elem piv = a[c * n + c];
        d = f_->mul(d, piv);
        Elem s = f_->inv(piv);
        for (unsigned i = c + 1; i < n; ++i) {
            Elem m = f_->mul(a[i * n + c], s);
            if (m == 0) continue;
            for (unsigned j = c; j < n; ++j)
                a[i * n + j] = f_->sub(a[i * n + j], f_->mul(m, a[c * n + j]));
        }
    }
    return d;
}

Elem Matrix::trace() const {
    require(is_square(), "trace of a non-square matrix");
    Elem t = 0;
    for (unsigned i = 0; i < rows_; ++i) t = f_->add(t, at(i, i));
    return t;
}

Matrix Matrix::inverse() const {
    require(is_square(), "inverse of a non-square matrix");
    unsigned n = rows_;
    std::vector<Elem> aug(n * 2 * n, 0);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug[i * 2 * n + j] = at(i, j);
        aug[i * 2 * n + n + i] = 1;
    }
    auto pivots = rref_in_place(*f_, aug, n, 2 * n);
    if (pivots.size() != n || pivots.back() >= n)
        throw value_error("inverse of a singular matrix");
    Matrix r(*f_, n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) r.set(i, j, aug[i * 2 * n + n + j]);
    return r;
}

Matrix Matrix::rref() const {
    std::vector<Elem> a = e_;
    rref_in_place(*f_, a, rows_, cols_);
    Matrix r(*f_, rows_, cols_);
    r.e_ = std::move(a);
    return r;
}

Matrix Matrix::adjugate() const {
    require(is_square(), "adjugate of a non-square matrix");
    require(rows_ <= 4, "adjugate supported up to 4x4");
    unsigned n = rows_;
    Matrix adj(*f_, n, n);
    if (n == 1) {
        adj.set(0, 0, 1);
        return adj;
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Matrix minor(*f_, n - 1, n - 1);
            unsigned mr = 0;
            for (unsigned r = 0; r < n; ++r) {
                if (r == i) continue;
                unsigned mc = 0;
                for (unsigned c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.set(mr, mc, at(r, c));
                    ++mc;
                }
                ++mr;
            }
            Elem cof = minor.det();
            if ((i + j) % 2 == 1) cof = f_->neg(cof);
            adj.set(j, i, cof); // transpose of the cofactor matrix
        }
    return adj;
}

std::vector<Elem> Matrix::char_poly() const {
    require(is_square(), "char_poly of a non-square matrix");
    require(rows_ <= 4, "char_poly supported up to 4x4");
    unsigned n = rows_;
    std::vector<Poly> m(n * n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Poly p;
            if (at(i, j) != 0) p.push_back(f_->neg(at(i, j)));
            if (i == j) {
                p.resize(2, 0);
                p[1] = 1; // + t on the diagonal
            }
            m[i * n + j] = std::move(p);
        }
    Poly d = poly_det(*f_, m, n);
    d.resize(n + 1, 0);
    return d;
}

std::vector<std::vector<Elem>> Matrix::kernel_basis() const {
    std::vector<Elem> a = e_;
    auto pivots = rref_in_place(*f_, a, rows_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (unsigned c : pivots) is_pivot[c] = true;

    std::vector<Elem> rows;
    unsigned count = 0;
    for (unsigned j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Elem> v(cols_, 0);
        v[j] = 1;
        for (unsigned i = 0; i < pivots.size(); ++i) v[pivots[i]] = f_->neg(a[i * cols_ + j]);
        rows.insert(rows.end(), v.begin(), v.end());
        ++count;
    }
    rref_in_place(*f_, rows, count, cols_); // canonical echelon form
    std::vector<std::vector<Elem>> basis;
    basis.reserve(count);
    for (unsigned i = 0; i < count; ++i)
        basis.emplace_back(rows.begin() + i * cols_, rows.begin() + (i + 1) * cols_);
    return basis;
}

std::vector<std::vector<Elem>> Matrix::image_basis() const {
    Matrix t = transposed();
    std::vector<Elem> a = t.e_;
    auto pivots = rref_in_place(*f_, a, t.rows_, t.cols_);
    std::vector<std::vector<Elem>> basis;
    basis.reserve(pivots.size());
    for (unsigned i = 0; i < pivots.size(); ++i)
        basis.emplace_back(a.begin() + i * t.cols_, a.begin() + (i + 1) * t.cols_);
    return basis;
}

Matrix Matrix::unvec(const FieldTable& f, unsigned rows, unsigned cols,
                     const std::vector<Elem>& v) {
    require(v.size() == size_t{rows} * cols, "unvec length mismatch");
    Matrix m(f, rows, cols);
    m.e_ = v;
    return m;
}

std::uint64_t Matrix::encode() const {
    std::uint64_t code = 0;
    for (Elem x : e_) {
        if (code > (UINT64_MAX - x) / f_->q())
            throw guard_error("matrix encode does not fit in 64 bits");
        code = code * f_->q() + x;
    }
    return code;
}

Matrix Matrix::decode(const FieldTable& f, unsigned rows, unsigned cols, std::uint64_t code) {
    Matrix m(f, rows, cols);
    for (size_t i = m.e_.size(); i-- > 0;) {
        m.e_[i] = static_cast<Elem>(code % f.q());
        code /= f.q();
    }
    if (code != 0) throw value_error("matrix decode index out of range");
    return m;
}

std::string Matrix::to_string() const {
    std::string s;
    for (unsigned i = 0; i < rows_; ++i) {
        if (i) s += "; ";
        for (unsigned j = 0; j < cols_; ++j) {
            if (j) s += ' ';
            s += std::to_string(unsigned{at(i, j)});
        }
    }
    return s;
}

Matrix Matrix::parse(const FieldTable& f, std::string_view text) {
    std::vector<std::vector<Elem>> rows;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t sep = text.find(';', pos);
        std::string_view row_text = text.substr(pos, sep == std::string_view::npos ? sep : sep - pos);
        std::istringstream iss{std::string(row_text)};
        std::vector<Elem> row;
        long v;
        while (iss >> v) {
            if (v < 0 || v >= long(f.q()))
                throw parse_error("matrix entry " + std::to_string(v) + " out of range for GF(" +
                                  std::to_string(f.q()) + ')');
            row.push_back(static_cast<Elem>(v));
        }
        if (!iss.eof()) throw parse_error("bad matrix entry in literal");
        if (!row.empty()) rows.push_back(std::move(row));
        if (sep == std::string_view::npos) break;
        pos = sep + 1;
    }
    if (rows.empty()) throw parse_error("empty matrix literal");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw parse_error("ragged matrix literal");
    Matrix m(f, static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
    for (unsigned i = 0; i < m.rows(); ++i)
        for (unsigned j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
    return m;
}

bool Matrix::operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return e_ < o.e_;
}

unsigned centralizer_dim(const Matrix& a) {
    if (!a.is_square()) throw dimension_error("centralizer_dim of a non-square matrix");
    const FieldTable& f = a.field();
    unsigned n = a.rows();
    // Columns of the commutator operator M -> AM - MA in the E_kl basis.
    Matrix op(f, n * n, n * n);
    for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l) {
            Matrix e = Matrix::unit(f, n, n, k, l);
            Matrix c = a * e - e * a;
            auto v = c.vec();
            for (unsigned r = 0; r < n * n; ++r) op.set(r, k * n + l, v[r]);
        }
    return n * n - op.rank();
}

std::uint64_t matrix_space_size(const FieldTable& f, unsigned rows, unsigned cols) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < rows * cols; ++i) {
        if (size > UINT64_MAX / f.q()) throw guard_error("matrix space size does not fit in 64 bits");
        size *= f.q();
    }
    return size;
}

std::string poly_to_string(const std::vector<Elem>& coeffs) {
    std::string s;
    for (size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        if (!s.empty()) s += " + ";
        std::string term;
        if (i == 0) {
            term = std::to_string(unsigned{coeffs[i]});
        } else {
            if (coeffs[i] != 1) term += std::to_string(unsigned{coeffs[i]}) + "*";
            term += "t";
            if (i > 1) term += "^" + std::to_string(i);
        }
        s += term;
    }
    return s.empty() ? "0" : s;
}

} // namespace matspace
