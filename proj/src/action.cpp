#include "matspace/action.hpp"

#include "f2m3.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace matspace {

const GLList& enumerate_gl(const FieldTable& f, unsigned n) {
    static std::map<std::pair<unsigned, unsigned>, GLList> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(f.q(), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::uint64_t space = 1;
    for (unsigned i = 0; i < n * n; ++i) {
        space *= f.q();
        if (space > (std::uint64_t{1} << 24))
            throw guard_error("GL enumeration over q^" + std::to_string(n * n) +
                              " matrices exceeds the 2^24 budget");
    }

    GLList list;
    for (std::uint64_t code = 0; code < space; ++code) {
        Matrix m = Matrix::decode(f, n, n, code);
        if (m.det() != 0) list.mats.push_back(std::move(m));
    }
    list.inv.resize(list.mats.size());
    // The list is encode-ascending, so inverses can be located by search.
    std::vector<std::uint64_t> codes(list.mats.size());
    for (size_t i = 0; i < list.mats.size(); ++i) codes[i] = list.mats[i].encode();
    for (size_t i = 0; i < list.mats.size(); ++i) {
        std::uint64_t target = list.mats[i].inverse().encode();
        auto pos = std::lower_bound(codes.begin(), codes.end(), target);
        list.inv[i] = static_cast<std::uint32_t>(pos - codes.begin());
    }
    auto [ins, ok] = cache.emplace(key, std::move(list));
    (void)ok;
    return ins->second;
}

Matrix FrobeniusMap::apply(const Matrix& m) const {
    return transposed ? p * m.transposed() * q : p * m * q;
}

Subspace FrobeniusMap::apply(const Subspace& s) const {
    std::vector<Matrix> gens;
    gens.reserve(s.dim());
    for (unsigned i = 0; i < s.dim(); ++i) gens.push_back(apply(s.basis_element(i)));
    if (gens.empty()) return Subspace(s.field(), s.ambient_rows(), s.ambient_cols());
    return Subspace::span_of(gens);
}

std::vector<FrobeniusMap> enumerate_frobenius(const FieldTable& f, unsigned n) {
    const GLList& gl = enumerate_gl(f, n);
    std::uint64_t pair_count = std::uint64_t{gl.mats.size()} * gl.mats.size() * 2;
    if (pair_count > (std::uint64_t{1} << 26))
        throw guard_error("Frobenius enumeration over " + std::to_string(pair_count) +
                          " (P, Q) pairs exceeds the 2^26 budget");

    // Action signature: images of the n^2 matrix units.
    std::vector<Matrix> units;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) units.push_back(Matrix::unit(f, n, n, i, j));

    std::vector<FrobeniusMap> maps;
    std::set<std::vector<std::uint64_t>> seen;
    for (int t = 0; t < 2; ++t)
        for (const Matrix& p : gl.mats)
            for (const Matrix& q : gl.mats) {
                FrobeniusMap g{p, q, t == 1};
                std::vector<std::uint64_t> sig;
                sig.reserve(units.size());
                for (const Matrix& u : units) sig.push_back(g.apply(u).encode());
                if (seen.insert(std::move(sig)).second) maps.push_back(std::move(g));
            }
    return maps;
}

namespace {

std::optional<EquivalenceWitness> are_equivalent_f2m3(const Subspace& s, const Subspace& t) {
    const FieldTable& f = s.field();
    const GLList& gl = enumerate_gl(f, 3);
    unsigned k = s.dim();

    auto srows = f2m3::pack(s);
    auto trows = f2m3::pack(t);
    std::uint64_t target = f2m3::signature(trows.data(), k);

    std::vector<f2m3::Mat> packed(gl.mats.size());
    for (size_t i = 0; i < gl.mats.size(); ++i) {
        f2m3::Mat m = 0;
        for (unsigned r = 0; r < 3; ++r)
            for (unsigned c = 0; c < 3; ++c)
                if (gl.mats[i].at(r, c)) m = static_cast<f2m3::Mat>(m | (1u << (3 * r + c)));
        packed[i] = m;
    }

    std::uint16_t work[9];
    for (size_t pi = 0; pi < packed.size(); ++pi) {
        f2m3::Mat p = packed[pi];
        for (size_t qi = 0; qi < packed.size(); ++qi) {
            f2m3::Mat qinv = packed[gl.inv[qi]];
            for (unsigned i = 0; i < k; ++i)
                work[i] = f2m3::mul(p, f2m3::mul(srows[i], qinv));
            f2m3::rref_rows(work, k);
            if (f2m3::signature(work, k) == target)
                return EquivalenceWitness{gl.mats[pi], gl.mats[qi]};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<EquivalenceWitness> are_equivalent(const Subspace& s, const Subspace& t) {
    if (s.ambient_rows() != t.ambient_rows() || s.ambient_cols() != t.ambient_cols() ||
        &s.field() != &t.field())
        throw dimension_error("equivalence test needs a common ambient");
    if (!s.square_ambient()) throw dimension_error("equivalence test needs a square ambient");
    const FieldTable& f = s.field();
    unsigned n = s.ambient_rows();
    if (n > 3 || f.q() > 3)
        throw guard_error("exhaustive equivalence scan supports n <= 3, q <= 3");

    if (s.dim() != t.dim()) return std::nullopt;
    if (s == t) {
        Matrix id = Matrix::identity(f, n);
        return EquivalenceWitness{id, id};
    }
    if (s.dim() > 0 && rank_profile(s) != rank_profile(t)) return std::nullopt;

    if (f.q() == 2 && n == 3 && s.dim() > 0) return are_equivalent_f2m3(s, t);

    const GLList& gl = enumerate_gl(f, n);
    for (size_t pi = 0; pi < gl.mats.size(); ++pi)
        for (size_t qi = 0; qi < gl.mats.size(); ++qi) {
            const Matrix& qinv = gl.mats[gl.inv[qi]];
            std::vector<Matrix> gens;
            gens.reserve(s.dim());
            for (unsigned i = 0; i < s.dim(); ++i)
                gens.push_back(gl.mats[pi] * s.basis_element(i) * qinv);
            if (gens.empty()) continue;
            if (Subspace::span_of(gens) == t)
                return EquivalenceWitness{gl.mats[pi], gl.mats[qi]};
        }
    return std::nullopt;
}

unsigned hyperplane_orbit(const Subspace& v) {
    if (!v.square_ambient()) throw dimension_error("hyperplane orbit needs a square ambient");
    unsigned n = v.ambient_rows();
    if (v.dim() != n * n - 1) throw dimension_error("hyperplane orbit needs a codimension-1 subspace");
    Subspace orth = trace_orthogonal(v);
    if (orth.dim() != 1) throw dimension_error("trace orthogonal of a hyperplane must be a line");
    return orth.basis_element(0).rank();
}

} // namespace matspace
