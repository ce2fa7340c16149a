#include "matspace/subspace.hpp"

#include <algorithm>
#include <cmath>

namespace matspace {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw dimension_error(msg);
}

Matrix strip_zero_rows(const Matrix& rref) {
    unsigned nonzero = rref.rows();
    while (nonzero > 0) {
        bool zero = true;
        for (unsigned j = 0; j < rref.cols(); ++j)
            if (rref.at(nonzero - 1, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) break;
        --nonzero;
    }
    Matrix out(rref.field(), nonzero, rref.cols());
    for (unsigned i = 0; i < nonzero; ++i)
        for (unsigned j = 0; j < rref.cols(); ++j) out.set(i, j, rref.at(i, j));
    return out;
}

} // namespace

Subspace::Subspace(const FieldTable& f, unsigned amb_rows, unsigned amb_cols)
    : amb_rows_(amb_rows), amb_cols_(amb_cols), basis_(f, 0, amb_rows * amb_cols) {}

Subspace Subspace::full(const FieldTable& f, unsigned amb_rows, unsigned amb_cols) {
    return from_rref_rows(f, amb_rows, amb_cols,
                          Matrix::identity(f, amb_rows * amb_cols));
}

Subspace Subspace::from_rows(const FieldTable& f, unsigned amb_rows, unsigned amb_cols,
                             const Matrix& rows) {
    require(rows.cols() == amb_rows * amb_cols, "generator length does not match ambient");
    return from_rref_rows(f, amb_rows, amb_cols, strip_zero_rows(rows.rref()));
}

Subspace Subspace::from_rref_rows(const FieldTable& f, unsigned amb_rows, unsigned amb_cols,
                                  Matrix rows) {
    (void)f;
    Subspace s(rows.field(), amb_rows, amb_cols);
    s.basis_ = std::move(rows);
    return s;
}

Subspace Subspace::span_of(const std::vector<Matrix>& gens) {
    if (gens.empty()) throw dimension_error("span_of needs at least one generator");
    const FieldTable& f = gens[0].field();
    unsigned n = gens[0].rows(), p = gens[0].cols();
    Matrix rows(f, static_cast<unsigned>(gens.size()), n * p);
    for (unsigned i = 0; i < gens.size(); ++i) {
        require(gens[i].rows() == n && gens[i].cols() == p && &gens[i].field() == &f,
                "span_of generators must share one shape and field");
        auto v = gens[i].vec();
        for (unsigned j = 0; j < n * p; ++j) rows.set(i, j, v[j]);
    }
    return from_rows(f, n, p, rows);
}

Matrix Subspace::basis_element(unsigned i) const {
    std::vector<Elem> v(ambient_dim());
    for (unsigned j = 0; j < ambient_dim(); ++j) v[j] = basis_.at(i, j);
    return Matrix::unvec(field(), amb_rows_, amb_cols_, v);
}

bool Subspace::contains(const Matrix& m) const {
    require(m.rows() == amb_rows_ && m.cols() == amb_cols_ && &m.field() == &field(),
            "membership test against a different ambient");
    const FieldTable& f = field();
    std::vector<Elem> v = m.vec();
    for (unsigned i = 0; i < dim(); ++i) {
        // pivot of row i is its first nonzero column
        unsigned piv = 0;
        while (basis_.at(i, piv) == 0) ++piv;
        Elem c = v[piv];
        if (c == 0) continue;
        for (unsigned j = piv; j < ambient_dim(); ++j)
            v[j] = f.sub(v[j], f.mul(c, basis_.at(i, j)));
    }
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    require(other.amb_rows_ == amb_rows_ && other.amb_cols_ == amb_cols_ &&
                &other.field() == &field(),
            "containment test against a different ambient");
    for (unsigned i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_element(i))) return false;
    return true;
}

Matrix Subspace::element(const std::vector<Elem>& coords) const {
    require(coords.size() == dim(), "coordinate count does not match dim");
    const FieldTable& f = field();
    std::vector<Elem> v(ambient_dim(), 0);
    for (unsigned i = 0; i < dim(); ++i) {
        if (coords[i] == 0) continue;
        for (unsigned j = 0; j < ambient_dim(); ++j)
            v[j] = f.add(v[j], f.mul(coords[i], basis_.at(i, j)));
    }
    return Matrix::unvec(f, amb_rows_, amb_cols_, v);
}

std::vector<Elem> Subspace::coordinates(const Matrix& m) const {
    require(m.rows() == amb_rows_ && m.cols() == amb_cols_, "coordinates in a different ambient");
    const FieldTable& f = field();
    std::vector<Elem> v = m.vec();
    std::vector<Elem> coords(dim(), 0);
    for (unsigned i = 0; i < dim(); ++i) {
        unsigned piv = 0;
        while (basis_.at(i, piv) == 0) ++piv;
        Elem c = v[piv]; // rows below/above have 0 in this pivot column
        coords[i] = c;
        if (c == 0) continue;
        for (unsigned j = piv; j < ambient_dim(); ++j)
            v[j] = f.sub(v[j], f.mul(c, basis_.at(i, j)));
    }
    if (!std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; }))
        throw value_error("matrix is not a member of the subspace");
    return coords;
}

Subspace Subspace::transposed() const {
    std::vector<Matrix> gens;
    gens.reserve(dim());
    for (unsigned i = 0; i < dim(); ++i) gens.push_back(basis_element(i).transposed());
    if (gens.empty()) return Subspace(field(), amb_cols_, amb_rows_);
    return span_of(gens);
}

bool Subspace::operator==(const Subspace& o) const {
    return amb_rows_ == o.amb_rows_ && amb_cols_ == o.amb_cols_ && basis_ == o.basis_;
}

bool Subspace::operator<(const Subspace& o) const {
    if (amb_rows_ != o.amb_rows_) return amb_rows_ < o.amb_rows_;
    if (amb_cols_ != o.amb_cols_) return amb_cols_ < o.amb_cols_;
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_ < o.basis_;
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.ambient_rows() != b.ambient_rows() || a.ambient_cols() != b.ambient_cols() ||
        &a.field() != &b.field())
        throw dimension_error("join of subspaces with different ambients");
    const FieldTable& f = a.field();
    unsigned d = a.ambient_dim();
    Matrix rows(f, a.dim() + b.dim(), d);
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = 0; j < d; ++j) rows.set(i, j, a.basis().at(i, j));
    for (unsigned i = 0; i < b.dim(); ++i)
        for (unsigned j = 0; j < d; ++j) rows.set(a.dim() + i, j, b.basis().at(i, j));
    return Subspace::from_rows(f, a.ambient_rows(), a.ambient_cols(), rows);
}

Subspace meet(const Subspace& a, const Subspace& b) {
    if (a.ambient_rows() != b.ambient_rows() || a.ambient_cols() != b.ambient_cols() ||
        &a.field() != &b.field())
        throw dimension_error("meet of subspaces with different ambients");
    // Zassenhaus: echelonize [A A; B 0]; rows whose left half is zero carry
    // a basis of the intersection in their right half.
    const FieldTable& f = a.field();
    unsigned d = a.ambient_dim();
    unsigned na = a.dim(), nb = b.dim();
    Matrix block(f, na + nb, 2 * d);
    for (unsigned i = 0; i < na; ++i)
        for (unsigned j = 0; j < d; ++j) {
            block.set(i, j, a.basis().at(i, j));
            block.set(i, d + j, a.basis().at(i, j));
        }
    for (unsigned i = 0; i < nb; ++i)
        for (unsigned j = 0; j < d; ++j) block.set(na + i, j, b.basis().at(i, j));
    Matrix red = block.rref();
    std::vector<Matrix> gens;
    for (unsigned i = 0; i < red.rows(); ++i) {
        bool left_zero = true;
        for (unsigned j = 0; j < d; ++j)
            if (red.at(i, j) != 0) {
                left_zero = false;
                break;
            }
        if (!left_zero) continue;
        std::vector<Elem> v(d);
        bool zero = true;
        for (unsigned j = 0; j < d; ++j) {
            v[j] = red.at(i, d + j);
            if (v[j]) zero = false;
        }
        if (!zero) gens.push_back(Matrix::unvec(f, a.ambient_rows(), a.ambient_cols(), v));
    }
    if (gens.empty()) return Subspace(f, a.ambient_rows(), a.ambient_cols());
    return Subspace::span_of(gens);
}

Subspace reshaped(const Subspace& s, unsigned amb_rows, unsigned amb_cols) {
    if (amb_rows * amb_cols != s.ambient_dim())
        throw dimension_error("reshape must keep the ambient dimension");
    return Subspace::from_rref_rows(s.field(), amb_rows, amb_cols, s.basis());
}

Subspace trace_orthogonal(const Subspace& s) {
    if (!s.square_ambient()) throw dimension_error("trace_orthogonal needs a square matrix ambient");
    const FieldTable& f = s.field();
    unsigned n = s.ambient_rows();
    if (s.dim() == 0) return Subspace::full(f, n, n);
    // tr(A B) pairs vec(B) against vec(A^T), so the orthogonal is the kernel
    // of the matrix whose rows are the transposed basis elements.
    Matrix constraints(f, s.dim(), n * n);
    for (unsigned i = 0; i < s.dim(); ++i) {
        auto v = s.basis_element(i).transposed().vec();
        for (unsigned j = 0; j < n * n; ++j) constraints.set(i, j, v[j]);
    }
    auto kernel = constraints.kernel_basis();
    if (kernel.empty()) return Subspace(f, n, n);
    std::vector<Matrix> gens;
    gens.reserve(kernel.size());
    for (const auto& v : kernel) gens.push_back(Matrix::unvec(f, n, n, v));
    return Subspace::span_of(gens);
}

Line::Line(const FieldTable& f, const std::vector<Elem>& v) : f_(&f), rep_(v) {
    unsigned lead = 0;
    while (lead < rep_.size() && rep_[lead] == 0) ++lead;
    if (lead == rep_.size()) throw dimension_error("a line needs a nonzero representative");
    Elem s = f.inv(rep_[lead]);
    for (auto& x : rep_) x = f.mul(x, s);
}

Subspace Line::space() const {
    Matrix row(*f_, 1, d());
    for (unsigned j = 0; j < d(); ++j) row.set(0, j, rep_[j]);
    return Subspace::from_rref_rows(*f_, 1, d(), row);
}

std::vector<Line> all_lines(const FieldTable& f, unsigned d) {
    std::vector<Line> lines;
    for (unsigned lead = 0; lead < d; ++lead) {
        unsigned free = d - lead - 1;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < free; ++i) total *= f.q();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<Elem> v(d, 0);
            v[lead] = 1;
            std::uint64_t rest = idx;
            for (unsigned j = d; j-- > lead + 1;) {
                v[j] = static_cast<Elem>(rest % f.q());
                rest /= f.q();
            }
            lines.emplace_back(f, v);
        }
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::uint64_t subspace_count(unsigned d, unsigned k, unsigned q) {
    if (k > d) return 0;
    // Quick magnitude check before the exact recurrence.
    double bits = double(k) * double(d - k) * std::log2(double(q));
    if (bits > 62)
        throw guard_error("subspace count is at least q^" + std::to_string(k * (d - k)) +
                          ", beyond 64-bit range");
    // G(d, k) = G(d-1, k-1) + q^k * G(d-1, k)
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (unsigned dd = 1; dd <= d; ++dd) {
        for (unsigned kk = std::min(dd, k); kk >= 1; --kk) {
            std::uint64_t qk = 1;
            for (unsigned i = 0; i < kk; ++i) qk *= q;
            row[kk] = row[kk - 1] + qk * row[kk];
        }
    }
    return row[k];
}

std::uint64_t pattern_count(unsigned d, unsigned k) {
    if (k > d) return 0;
    std::uint64_t c = 1;
    for (unsigned i = 0; i < k; ++i) c = c * (d - i) / (i + 1);
    return c;
}

namespace {

// Advances pivots to the next k-combination of {0..d-1} in lex order.
bool next_combination(std::vector<unsigned>& pivots, unsigned d) {
    unsigned k = static_cast<unsigned>(pivots.size());
    for (unsigned i = k; i-- > 0;) {
        if (pivots[i] < d - (k - i)) {
            ++pivots[i];
            for (unsigned j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

void enumerate_subspaces_patterns(const FieldTable& f, unsigned d, unsigned k,
                                  std::uint64_t pat_lo, std::uint64_t pat_hi,
                                  const std::function<void(const Subspace&)>& fn) {
    if (k > d) throw dimension_error("subspace dimension exceeds ambient dimension");
    std::uint64_t total = subspace_count(d, k, f.q());
    if (total > (std::uint64_t{1} << 32))
        throw guard_error("enumeration of " + std::to_string(total) +
                          " subspaces exceeds the 2^32 budget");
    if (k == 0) {
        if (pat_lo == 0 && pat_hi > 0) fn(Subspace(f, 1, d));
        return;
    }
    std::vector<unsigned> pivots(k);
    for (unsigned i = 0; i < k; ++i) pivots[i] = i;
    std::uint64_t pat = 0;
    do {
        if (pat >= pat_hi) break;
        if (pat++ < pat_lo) continue;
        std::vector<bool> is_pivot(d, false);
        for (unsigned c : pivots) is_pivot[c] = true;
        // Free slots in row-major order; the first is the most significant
        // digit of the enumeration counter.
        std::vector<std::pair<unsigned, unsigned>> free_slots;
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = pivots[i] + 1; j < d; ++j)
                if (!is_pivot[j]) free_slots.emplace_back(i, j);
        std::uint64_t combos = 1;
        for (size_t i = 0; i < free_slots.size(); ++i) combos *= f.q();
        Matrix rows(f, k, d);
        for (unsigned i = 0; i < k; ++i) rows.set(i, pivots[i], 1);
        for (std::uint64_t idx = 0; idx < combos; ++idx) {
            std::uint64_t rest = idx;
            for (size_t s = free_slots.size(); s-- > 0;) {
                rows.set(free_slots[s].first, free_slots[s].second,
                         static_cast<Elem>(rest % f.q()));
                rest /= f.q();
            }
            fn(Subspace::from_rref_rows(f, 1, d, rows));
        }
    } while (next_combination(pivots, d));
}

void enumerate_subspaces(const FieldTable& f, unsigned d, unsigned k,
                         const std::function<void(const Subspace&)>& fn) {
    enumerate_subspaces_patterns(f, d, k, 0, std::max<std::uint64_t>(pattern_count(d, k), 1), fn);
}

namespace {

std::uint64_t element_budget(const Subspace& s) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < s.dim(); ++i) {
        total *= s.field().q();
        if (total > (std::uint64_t{1} << 24))
            throw guard_error("element enumeration over q^" + std::to_string(s.dim()) +
                              " exceeds the 2^24 budget");
    }
    return total;
}

} // namespace

void for_each_element(const Subspace& s, const std::function<void(const Matrix&)>& fn) {
    element_budget(s);
    const FieldTable& f = s.field();
    unsigned k = s.dim(), d = s.ambient_dim();
    // Partial sums along the coordinate odometer: level i holds the
    // contribution of coordinates 0..i.
    std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(d, 0));
    std::vector<Elem> coord(k, 0);
    Matrix work(f, s.ambient_rows(), s.ambient_cols());

    // Recursion over coordinate positions, first coordinate outermost.
    std::function<void(unsigned)> walk = [&](unsigned level) {
        if (level == k) {
            Matrix m = Matrix::unvec(f, s.ambient_rows(), s.ambient_cols(), partial[k]);
            fn(m);
            return;
        }
        for (unsigned c = 0; c < f.q(); ++c) {
            if (c == 0) {
                partial[level + 1] = partial[level];
            } else {
                for (unsigned j = 0; j < d; ++j)
                    partial[level + 1][j] =
                        f.add(partial[level][j],
                              f.mul(static_cast<Elem>(c), s.basis().at(level, j)));
            }
            walk(level + 1);
        }
    };
    walk(0);
}

std::vector<std::uint64_t> rank_profile(const Subspace& s) {
    unsigned maxr = std::min(s.ambient_rows(), s.ambient_cols());
    std::vector<std::uint64_t> tally(maxr + 1, 0);
    for_each_element(s, [&](const Matrix& m) { ++tally[m.rank()]; });
    return tally;
}

bool is_singular_subspace(const Subspace& s) {
    if (!s.square_ambient()) throw dimension_error("singularity test needs a square ambient");
    element_budget(s);
    unsigned n = s.ambient_rows();
    bool singular = true;
    // for_each_element has no early exit; do the walk manually.
    const FieldTable& f = s.field();
    unsigned k = s.dim(), d = s.ambient_dim();
    std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(d, 0));
    std::function<bool(unsigned)> walk = [&](unsigned level) -> bool {
        if (level == k) {
            Matrix m = Matrix::unvec(f, n, n, partial[k]);
            return m.rank() == n; // found an invertible element
        }
        for (unsigned c = 0; c < f.q(); ++c) {
            if (c == 0) {
                partial[level + 1] = partial[level];
            } else {
                for (unsigned j = 0; j < d; ++j)
                    partial[level + 1][j] =
                        f.add(partial[level][j],
                              f.mul(static_cast<Elem>(c), s.basis().at(level, j)));
            }
            if (walk(level + 1)) return true;
        }
        return false;
    };
    singular = !walk(0);
    return singular;
}

std::uint64_t count_nonsingular(const Subspace& s) {
    if (!s.square_ambient()) throw dimension_error("nonsingular count needs a square ambient");
    auto profile = rank_profile(s);
    return profile[s.ambient_rows()];
}

} // namespace matspace
