#include "matspace/preserver.hpp"

#include "matspace/catalog.hpp"
#include "matspace/parallel.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace matspace {

namespace {

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t limit,
                            const char* what) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        v *= base;
        if (v > limit) throw guard_error(std::string(what) + " exceeds the enumeration guard");
    }
    return v;
}

// Ascending coordinate order, first coordinate most significant; mirrors
// for_each_element but exposes the coordinates.
template <class Fn>
void walk_coords(const FieldTable& f, unsigned k, Fn&& fn) {
    std::uint64_t total = checked_power(f.q(), k, std::uint64_t{1} << 24, "domain walk");
    std::vector<Elem> coords(k, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (unsigned i = k; i-- > 0;) {
            coords[i] = static_cast<Elem>(c % f.q());
            c /= f.q();
        }
        fn(coords);
    }
}

Matrix combine(const FieldTable& f, unsigned rows, unsigned cols,
               const std::vector<Matrix>& parts, const std::vector<Elem>& coords) {
    Matrix out(f, rows, cols);
    for (size_t i = 0; i < parts.size(); ++i)
        if (coords[i] != 0) out = out + parts[i].scaled(coords[i]);
    return out;
}

// Sum over i, k of X(i,k) * Y(k,i); the trace of X*Y without the product.
Elem trace_of_product(const Matrix& x, const Matrix& y) {
    const FieldTable& f = x.field();
    Elem acc = 0;
    for (unsigned i = 0; i < x.rows(); ++i)
        for (unsigned k = 0; k < x.cols(); ++k) acc = f.add(acc, f.mul(x.at(i, k), y.at(k, i)));
    return acc;
}

template <class Check>
bool walk_map(const SubspaceLinearMap& m, Check&& check) {
    const FieldTable& f = m.domain.field();
    bool ok = true;
    walk_coords(f, m.domain.dim(), [&](const std::vector<Elem>& coords) {
        if (!ok) return;
        Matrix x = m.domain.element(coords);
        Matrix y = combine(f, m.codomain.ambient_rows(), m.codomain.ambient_cols(), m.images,
                           coords);
        if (!check(x, y)) ok = false;
    });
    return ok;
}

void require_square(const SubspaceLinearMap& m, const char* what) {
    if (!m.domain.square_ambient() || !m.codomain.square_ambient())
        throw dimension_error(std::string(what) + " needs square ambient spaces");
}

} // namespace

Matrix SubspaceLinearMap::apply(const Matrix& m) const {
    std::vector<Elem> coords = domain.coordinates(m);
    return combine(domain.field(), codomain.ambient_rows(), codomain.ambient_cols(), images,
                   coords);
}

bool SubspaceLinearMap::is_injective() const {
    const FieldTable& f = domain.field();
    unsigned amb = codomain.ambient_dim();
    Matrix rows(f, static_cast<unsigned>(images.size()), amb);
    for (size_t i = 0; i < images.size(); ++i) {
        std::vector<Elem> v = images[i].vec();
        for (unsigned j = 0; j < amb; ++j) rows.set(static_cast<unsigned>(i), j, v[j]);
    }
    return rows.rank() == images.size();
}

SubspaceLinearMap restrict_frobenius(const FrobeniusMap& u, const Subspace& domain) {
    if (!domain.square_ambient()) throw dimension_error("Frobenius restriction needs a square ambient");
    SubspaceLinearMap m{domain,
                        Subspace::full(domain.field(), domain.ambient_rows(), domain.ambient_cols()),
                        {}};
    m.images.reserve(domain.dim());
    for (unsigned i = 0; i < domain.dim(); ++i) m.images.push_back(u.apply(domain.basis_element(i)));
    return m;
}

bool is_weak_preserver(const SubspaceLinearMap& f) {
    require_square(f, "singularity predicate");
    return walk_map(f, [](const Matrix& x, const Matrix& y) {
        return x.det() == 0 || y.det() != 0;
    });
}

bool is_strong_preserver(const SubspaceLinearMap& f) {
    require_square(f, "singularity predicate");
    return walk_map(f, [](const Matrix& x, const Matrix& y) {
        return (x.det() == 0) == (y.det() == 0);
    });
}

bool is_det_preserver(const SubspaceLinearMap& f) {
    require_square(f, "determinant predicate");
    return walk_map(f, [](const Matrix& x, const Matrix& y) { return x.det() == y.det(); });
}

bool is_rank_preserver(const SubspaceLinearMap& f) {
    return walk_map(f, [](const Matrix& x, const Matrix& y) { return x.rank() == y.rank(); });
}

bool is_image_preserver(const SubspaceLinearMap& f) {
    if (f.domain.ambient_rows() != f.codomain.ambient_rows())
        throw dimension_error("image predicate needs matching row spaces");
    return walk_map(f, [](const Matrix& x, const Matrix& y) {
        return x.image_basis() == y.image_basis();
    });
}

std::optional<Matrix> rank_violation(const SubspaceLinearMap& f) {
    std::optional<Matrix> hit;
    walk_map(f, [&](const Matrix& x, const Matrix& y) {
        if (x.rank() != y.rank()) {
            hit = x;
            return false;
        }
        return true;
    });
    return hit;
}

SubspaceLinearMap phi_counterexample(const FieldTable& f, unsigned n) {
    if (n < 3) throw dimension_error("the bottom-row counterexample needs n >= 3");
    Subspace dom = catalog::h_space(f, n);
    SubspaceLinearMap m{dom, Subspace::full(f, n, n), {}};
    m.images.reserve(dom.dim());
    for (unsigned i = 0; i < dom.dim(); ++i) {
        Matrix b = dom.basis_element(i);
        Matrix img = b;
        img.set(0, n - 1, f.add(b.at(0, n - 1), b.at(1, 1)));
        m.images.push_back(img);
    }
    return m;
}

SubspaceLinearMap alphabeta_counterexample() {
    const FieldTable& f = make_field(2);
    Subspace dom = catalog::v1(f);
    SubspaceLinearMap m{dom, Subspace::full(f, 3, 3), {}};
    m.images.reserve(dom.dim());
    for (unsigned i = 0; i < dom.dim(); ++i) {
        Matrix b = dom.basis_element(i);
        Matrix img = b;
        img.set(1, 0, f.add(b.at(1, 0), f.add(b.at(2, 1), b.at(0, 2))));
        m.images.push_back(img);
    }
    return m;
}

std::optional<FrobeniusMap> frobenius_extension(const SubspaceLinearMap& f) {
    require_square(f, "Frobenius extension");
    unsigned n = f.domain.ambient_rows();
    if (f.codomain.ambient_rows() != n)
        throw dimension_error("Frobenius extension needs matching ambient sizes");
    for (const FrobeniusMap& u : enumerate_frobenius(f.domain.field(), n)) {
        bool match = true;
        for (unsigned i = 0; i < f.domain.dim() && match; ++i)
            match = u.apply(f.domain.basis_element(i)) == f.images[i];
        if (match) return u;
    }
    return std::nullopt;
}

EmbeddingSearch search_embeddings(const Subspace& domain, unsigned n, SearchPredicate predicate,
                                  bool check_extension, unsigned jobs) {
    const FieldTable& f = domain.field();
    const unsigned q = f.q();
    if (domain.ambient_rows() != n || domain.ambient_cols() != n)
        throw dimension_error("search domain must live inside the target space");
    if (domain.dim() != 3) throw guard_error("search supports 3-dimensional domains");
    std::uint64_t e64 = checked_power(q, n * n, 4096, "scan table size");
    const unsigned E = static_cast<unsigned>(e64);
    std::uint64_t inj_total =
        std::uint64_t{E - 1} * (E - q) * (E - static_cast<std::uint64_t>(q) * q);
    if (inj_total > 100000000ull) throw guard_error("injective map count exceeds the scan guard");

    // Index tables over the full target space; indices are Matrix::encode.
    std::vector<Matrix> mats;
    mats.reserve(E);
    for (unsigned i = 0; i < E; ++i) mats.push_back(Matrix::decode(f, n, n, i));
    std::vector<std::uint16_t> add_tab(static_cast<size_t>(E) * E);
    for (unsigned a = 0; a < E; ++a)
        for (unsigned b = 0; b < E; ++b)
            add_tab[static_cast<size_t>(a) * E + b] =
                static_cast<std::uint16_t>((mats[a] + mats[b]).encode());
    std::vector<std::uint16_t> smul_tab(static_cast<size_t>(q) * E);
    for (unsigned c = 0; c < q; ++c)
        for (unsigned a = 0; a < E; ++a)
            smul_tab[static_cast<size_t>(c) * E + a] =
                static_cast<std::uint16_t>(mats[a].scaled(static_cast<Elem>(c)).encode());
    std::vector<char> singular(E);
    for (unsigned a = 0; a < E; ++a) singular[a] = mats[a].det() == 0;

    // Domain coordinate tuples, split by whether the third coordinate is
    // zero (those images do not depend on A3 and are checked once per
    // (A1, A2) pair) and by singularity of the domain element.
    struct Tuple {
        unsigned c12; // c1 * q + c2
        unsigned c3;
    };
    std::vector<Tuple> sing_pair, sing_a3, nonsing_pair, nonsing_a3;
    walk_coords(f, 3, [&](const std::vector<Elem>& coords) {
        Tuple t{static_cast<unsigned>(coords[0]) * q + coords[1], coords[2]};
        bool sing = domain.element(coords).det() == 0;
        if (t.c3 == 0)
            (sing ? sing_pair : nonsing_pair).push_back(t);
        else
            (sing ? sing_a3 : nonsing_a3).push_back(t);
    });

    std::unordered_set<std::uint64_t> ext_sigs;
    if (check_extension) {
        for (const FrobeniusMap& u : enumerate_frobenius(f, n)) {
            std::uint64_t sig = 0;
            for (unsigned i = 0; i < 3; ++i)
                sig |= u.apply(domain.basis_element(i)).encode() << (20 * i);
            ext_sigs.insert(sig);
        }
    }

    constexpr size_t example_cap = 8;
    struct Chunk {
        std::uint64_t injective = 0, hits = 0, ext = 0, nonext = 0;
        std::vector<std::array<std::uint16_t, 3>> examples;
    };
    auto at = [&](const std::vector<std::uint16_t>& tab, unsigned a, unsigned b) {
        return tab[static_cast<size_t>(a) * E + b];
    };
    auto chunks = run_partitioned<Chunk>(E, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        Chunk c;
        std::vector<std::uint32_t> span12(E, 0);
        std::uint32_t epoch = 0;
        std::vector<std::uint16_t> pre(static_cast<size_t>(q) * q);
        for (unsigned a1 = static_cast<unsigned>(lo); a1 < hi; ++a1) {
            for (unsigned a2 = 0; a2 < E; ++a2) {
                for (unsigned c1 = 0; c1 < q; ++c1)
                    for (unsigned c2 = 0; c2 < q; ++c2)
                        pre[c1 * q + c2] = at(add_tab, at(smul_tab, c1, a1), at(smul_tab, c2, a2));
                bool indep = a1 != 0;
                for (unsigned s = 0; s < q && indep; ++s)
                    if (at(smul_tab, s, a1) == a2) indep = false;
                ++epoch;
                for (unsigned i = 0; i < q * q; ++i) span12[pre[i]] = epoch;
                if (indep) c.injective += E - q * q;

                bool pair_ok = true;
                for (const Tuple& t : nonsing_pair)
                    if (singular[pre[t.c12]]) {
                        pair_ok = false;
                        break;
                    }
                if (pair_ok && predicate == SearchPredicate::strong)
                    for (const Tuple& t : sing_pair)
                        if (!singular[pre[t.c12]]) {
                            pair_ok = false;
                            break;
                        }
                if (!pair_ok || !indep) continue;

                for (unsigned a3 = 0; a3 < E; ++a3) {
                    if (span12[a3] == epoch) continue; // dependent triple
                    bool ok = true;
                    for (const Tuple& t : nonsing_a3) {
                        if (singular[at(add_tab, pre[t.c12], at(smul_tab, t.c3, a3))]) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok && predicate == SearchPredicate::strong)
                        for (const Tuple& t : sing_a3)
                            if (!singular[at(add_tab, pre[t.c12], at(smul_tab, t.c3, a3))]) {
                                ok = false;
                                break;
                            }
                    if (!ok) continue;
                    ++c.hits;
                    if (check_extension) {
                        std::uint64_t sig = a1 | (std::uint64_t{a2} << 20) | (std::uint64_t{a3} << 40);
                        if (ext_sigs.count(sig)) {
                            ++c.ext;
                        } else {
                            ++c.nonext;
                            if (c.examples.size() < example_cap)
                                c.examples.push_back({static_cast<std::uint16_t>(a1),
                                                      static_cast<std::uint16_t>(a2),
                                                      static_cast<std::uint16_t>(a3)});
                        }
                    }
                }
            }
        }
        return c;
    });

    EmbeddingSearch result;
    result.tuples = static_cast<std::uint64_t>(E) * E * E;
    result.extension_checked = check_extension;
    result.partitions = static_cast<unsigned>(chunks.size());
    std::vector<std::array<std::uint16_t, 3>> examples;
    for (const Chunk& c : chunks) {
        result.injective += c.injective;
        result.hits += c.hits;
        result.extendable += c.ext;
        result.non_extendable += c.nonext;
        for (const auto& e : c.examples)
            if (examples.size() < example_cap) examples.push_back(e);
    }
    for (const auto& e : examples) {
        SubspaceLinearMap m{domain, Subspace::full(f, n, n), {}};
        for (unsigned i = 0; i < 3; ++i) m.images.push_back(mats[e[i]]);
        result.non_extendable_examples.push_back(std::move(m));
    }
    return result;
}

RepresentationOracle representation_lemma_oracle(const FieldTable& f, unsigned n, unsigned p,
                                                 unsigned r) {
    const unsigned q = f.q();
    const unsigned dim_v = n * r;
    std::uint64_t e_img64 = checked_power(q, n * p, 1u << 12, "image space");
    std::uint64_t e_v64 = checked_power(q, n * r, 1u << 12, "domain space");
    const unsigned e_img = static_cast<unsigned>(e_img64);
    const unsigned e_v = static_cast<unsigned>(e_v64);
    std::uint64_t maps_total = checked_power(e_img64, dim_v, std::uint64_t{1} << 24, "map count");

    std::vector<Matrix> img_mats, v_mats;
    for (unsigned i = 0; i < e_img; ++i) img_mats.push_back(Matrix::decode(f, n, p, i));
    for (unsigned i = 0; i < e_v; ++i) v_mats.push_back(Matrix::decode(f, n, r, i));

    // contained[m][b]: column space of img_mats[b] inside that of v_mats[m].
    std::vector<char> contained(static_cast<size_t>(e_v) * e_img);
    for (unsigned m = 0; m < e_v; ++m) {
        unsigned rank_m = v_mats[m].rank();
        for (unsigned b = 0; b < e_img; ++b) {
            Matrix aug(f, n, r + p);
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned j = 0; j < r; ++j) aug.set(i, j, v_mats[m].at(i, j));
                for (unsigned j = 0; j < p; ++j) aug.set(i, r + j, img_mats[b].at(i, j));
            }
            contained[static_cast<size_t>(m) * e_img + b] = aug.rank() == rank_m;
        }
    }
    std::vector<std::uint16_t> add_tab(static_cast<size_t>(e_img) * e_img);
    for (unsigned a = 0; a < e_img; ++a)
        for (unsigned b = 0; b < e_img; ++b)
            add_tab[static_cast<size_t>(a) * e_img + b] =
                static_cast<std::uint16_t>((img_mats[a] + img_mats[b]).encode());
    std::vector<std::uint16_t> smul_tab(static_cast<size_t>(q) * e_img);
    for (unsigned c = 0; c < q; ++c)
        for (unsigned a = 0; a < e_img; ++a)
            smul_tab[static_cast<size_t>(c) * e_img + a] =
                static_cast<std::uint16_t>(img_mats[a].scaled(static_cast<Elem>(c)).encode());

    // Coordinates of v_mats[m] against the unit basis are the base-q digits
    // of m, most significant first.
    std::vector<std::vector<Elem>> v_coords(e_v, std::vector<Elem>(dim_v));
    for (unsigned m = 0; m < e_v; ++m) {
        unsigned c = m;
        for (unsigned i = dim_v; i-- > 0;) {
            v_coords[m][i] = static_cast<Elem>(c % q);
            c /= q;
        }
    }

    // The identity map (meaningful when r == p) sends unit (i, j) of the
    // domain to the same unit of the image space; basis index of unit (i, j)
    // is i*r + j, so compare against these image indices.
    std::vector<unsigned> id_idx(dim_v, 0);
    if (r == p)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < r; ++j)
                id_idx[i * r + j] = static_cast<unsigned>(Matrix::unit(f, n, p, i, j).encode());

    RepresentationOracle result;
    result.maps = maps_total;
    result.all_right_multiplications = true;
    std::vector<unsigned> img_idx(dim_v);
    for (std::uint64_t map_code = 0; map_code < maps_total; ++map_code) {
        std::uint64_t c = map_code;
        for (unsigned i = dim_v; i-- > 0;) {
            img_idx[i] = static_cast<unsigned>(c % e_img);
            c /= e_img;
        }
        bool ok = true;
        for (unsigned m = 1; m < e_v && ok; ++m) {
            unsigned phi = 0;
            for (unsigned i = 0; i < dim_v; ++i)
                phi = add_tab[static_cast<size_t>(phi) * e_img +
                              smul_tab[static_cast<size_t>(v_coords[m][i]) * e_img + img_idx[i]]];
            ok = contained[static_cast<size_t>(m) * e_img + phi];
        }
        if (!ok) continue;
        ++result.survivors;

        // Recover C from the images of the first-row units (unit (0, j) is
        // basis index j) and confirm the map is M -> M*C.
        Matrix cmat(f, r, p);
        for (unsigned j = 0; j < r; ++j)
            for (unsigned col = 0; col < p; ++col) cmat.set(j, col, img_mats[img_idx[j]].at(0, col));
        bool right_mult = true;
        for (unsigned m = 0; m < e_v && right_mult; ++m) {
            unsigned phi = 0;
            for (unsigned i = 0; i < dim_v; ++i)
                phi = add_tab[static_cast<size_t>(phi) * e_img +
                              smul_tab[static_cast<size_t>(v_coords[m][i]) * e_img + img_idx[i]]];
            right_mult = v_mats[m] * cmat == img_mats[phi];
        }
        result.all_right_multiplications = result.all_right_multiplications && right_mult;

        bool zero_map = true;
        for (unsigned i = 0; i < dim_v; ++i) zero_map = zero_map && img_idx[i] == 0;
        if (zero_map) result.includes_zero = true;
        if (r == p && img_idx == id_idx) result.includes_identity = true;
    }
    result.all_right_multiplications = result.all_right_multiplications && result.survivors > 0;
    return result;
}

AddToNonsingularOracle add_to_nonsingular_oracle(const FieldTable& f, unsigned p) {
    if (p > 3 || f.q() > 3) throw guard_error("add-to-nonsingular oracle is limited to p <= 3, q <= 3");
    const GLList& gl = enumerate_gl(f, p);
    AddToNonsingularOracle result;
    result.candidates = matrix_space_size(f, p, p);
    bool zero_ok = false;
    for (std::uint64_t code = 0; code < result.candidates; ++code) {
        Matrix a = Matrix::decode(f, p, p, code);
        bool keeps = true;
        for (const Matrix& inv : gl.mats) {
            if ((a + inv).det() == 0) {
                keeps = false;
                break;
            }
        }
        if (keeps) {
            ++result.satisfiers;
            if (a.is_zero()) zero_ok = true;
        }
    }
    result.only_zero = result.satisfiers == 1 && zero_ok;
    return result;
}

namespace {

Subspace centralizer_subspace(const Matrix& a) {
    const FieldTable& f = a.field();
    unsigned n = a.rows();
    Matrix op(f, n * n, n * n);
    for (unsigned k = 0; k < n; ++k)
        for (unsigned l = 0; l < n; ++l) {
            Matrix e = Matrix::unit(f, n, n, k, l);
            Matrix col = a * e - e * a;
            std::vector<Elem> v = col.vec();
            for (unsigned i = 0; i < n * n; ++i) op.set(i, k * n + l, v[i]);
        }
    auto kernel = op.kernel_basis();
    Matrix rows(f, static_cast<unsigned>(kernel.size()), n * n);
    for (size_t i = 0; i < kernel.size(); ++i)
        for (unsigned j = 0; j < n * n; ++j) rows.set(static_cast<unsigned>(i), j, kernel[i][j]);
    return Subspace::from_rref_rows(f, n, n, rows);
}

} // namespace

CentralizerCriterion centralizer_rank1_criterion() {
    const FieldTable& f = make_field(2);
    Subspace sl3 = catalog::sl(f, 3);
    CentralizerCriterion result;
    for_each_element(sl3, [&](const Matrix& a) {
        ++result.checked;
        bool rank_one = a.rank() == 1;
        Subspace cent = centralizer_subspace(a);
        bool criterion = cent.dim() == 5 && is_singular_subspace(meet(cent, sl3));
        if (rank_one != criterion) {
            ++result.violations;
            if (!result.first_violation) result.first_violation = a;
        }
    });
    return result;
}

TraceFormIdentities trace_form_identities() {
    const FieldTable& f = make_field(2);
    Subspace sl3 = catalog::sl(f, 3);
    std::vector<Matrix> elems;
    std::vector<Elem> dets;
    std::vector<Matrix> squares;
    for_each_element(sl3, [&](const Matrix& a) {
        elems.push_back(a);
        dets.push_back(a.det());
        squares.push_back(a * a);
    });

    TraceFormIdentities result;
    result.cube_trace_equals_det = true;
    for (size_t i = 0; i < elems.size(); ++i)
        if (trace_of_product(squares[i], elems[i]) != dets[i]) {
            result.cube_trace_equals_det = false;
            break;
        }

    result.polarization_identity = true;
    for (size_t i = 0; i < elems.size() && result.polarization_identity; ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            Elem lhs = f.sub(f.sub((elems[i] + elems[j]).det(), dets[i]), dets[j]);
            Elem rhs = f.add(trace_of_product(squares[i], elems[j]),
                             trace_of_product(squares[j], elems[i]));
            if (lhs != rhs) {
                result.polarization_identity = false;
                break;
            }
        }
    return result;
}

bool ternary_identity_holds(const SubspaceLinearMap& f) {
    unsigned k = f.domain.dim();
    std::vector<Matrix> basis;
    basis.reserve(k);
    for (unsigned i = 0; i < k; ++i) basis.push_back(f.domain.basis_element(i));
    auto bracket = [](const Matrix& x, const Matrix& y) { return x * y - y * x; };
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
            Matrix lhs_b = bracket(f.images[i], f.images[j]);
            Matrix rhs_b = bracket(basis[i], basis[j]);
            for (unsigned l = 0; l < k; ++l)
                if (trace_of_product(lhs_b, f.images[l]) != trace_of_product(rhs_b, basis[l]))
                    return false;
        }
    return true;
}

} // namespace matspace
