#include "matspace/suites.hpp"

#include "matspace/action.hpp"
#include "matspace/catalog.hpp"
#include "matspace/classify.hpp"
#include "matspace/common.hpp"
#include "matspace/preserver.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace matspace {

namespace {

Subspace v2_with_m_d(const FieldTable& f, const Line& d) { return meet(catalog::v2(f), catalog::m_d(d)); }

std::vector<Subspace> sorted(std::vector<Subspace> spaces) {
    std::sort(spaces.begin(), spaces.end());
    return spaces;
}

void counts_suite(Report& r, const SuiteOptions&) {
    const FieldTable& f2 = make_field(2);
    r.parameters["field"] = 2;

    Subspace sl3 = catalog::sl(f2, 3);
    r.add("sl3-nonsingular", "invertible elements of the trace-zero 3x3 matrices over GF(2)", 80,
          count_nonsingular(sl3));

    std::uint64_t poly_tt1 = 0, poly_t31 = 0;
    const std::vector<Elem> t3_t_1{1, 1, 0, 1}; // t^3 + t + 1, ascending
    const std::vector<Elem> t3_1{1, 0, 0, 1};   // t^3 + 1
    for_each_element(sl3, [&](const Matrix& a) {
        if (a.det() == 0) return;
        std::vector<Elem> cp = a.char_poly();
        if (cp == t3_t_1) ++poly_tt1;
        if (cp == t3_1) ++poly_t31;
    });
    r.add("sl3-charpoly-irreducible", "invertible trace-zero elements with polynomial t^3 + t + 1",
          24, poly_tt1);
    r.add("sl3-charpoly-split", "invertible trace-zero elements with polynomial t^3 + 1", 56,
          poly_t31);

    r.add("v2-nonsingular", "invertible elements of the v2 hyperplane over GF(2)", 88,
          count_nonsingular(catalog::v2(f2)));

    r.add("gl3-f2-order", "invertible 3x3 matrices over GF(2)", 168,
          enumerate_gl(f2, 3).mats.size());
    r.add("gl2-f2-order", "invertible 2x2 matrices over GF(2)", 6, enumerate_gl(f2, 2).mats.size());
    r.add("gl3-f3-order", "invertible 3x3 matrices over GF(3)", 11232,
          enumerate_gl(make_field(3), 3).mats.size());
    r.add("gl2-f4-order", "invertible 2x2 matrices over GF(4)", 180,
          enumerate_gl(make_field(4), 2).mats.size());

    r.add("t2plus-f4-nonsingular", "invertible upper-triangular 2x2 matrices over GF(4)", 36,
          count_nonsingular(catalog::upper_triangular(make_field(4), 2)));

    r.add("five-dim-subspace-count", "5-dimensional subspaces of a 9-dimensional GF(2) space",
          3309747, subspace_count(9, 5, 2));
}

void census_suite(Report& r, const SuiteOptions& opts) {
    r.parameters["field"] = 2;
    CensusResult c = census_5dim_singular(opts.jobs);
    r.partitions = c.partitions;
    r.add("census-total", "5-dimensional subspaces of the 3x3 matrices over GF(2)", 3309747,
          c.total);
    r.add("census-singular", "subspaces with no invertible element", 1372, c.singular);
    r.add("census-kind-m_d", "singular subspaces killing a common line", 441,
          c.by_kind[static_cast<size_t>(Kind::m_d)]);
    r.add("census-kind-m-sup-d", "singular subspaces with images inside a common hyperplane", 441,
          c.by_kind[static_cast<size_t>(Kind::m_sup_d)]);
    r.add("census-kind-first", "singular subspaces equivalent to the zero-block space r(1,1)", 49,
          c.by_kind[static_cast<size_t>(Kind::first_kind)]);
    r.add("census-kind-second", "singular subspaces equivalent to j3", 441,
          c.by_kind[static_cast<size_t>(Kind::second_kind)]);
    r.add("census-unclassified", "subspaces outside the four-kind taxonomy", 0,
          c.by_kind[static_cast<size_t>(Kind::unclassified)]);
}

void v2_structure_suite(Report& r, const SuiteOptions& opts) {
    const FieldTable& f = make_field(2);
    r.parameters["field"] = 2;
    Subspace v2 = catalog::v2(f);
    InsideCensus ic = census_inside(v2, 5, opts.jobs);
    r.partitions = ic.partitions;

    r.add("v2-5dim-total", "5-dimensional subspaces of the 8-dimensional v2", 97155, ic.total);
    r.add("v2-singular-count", "singular ones among them", 18, ic.singular.size());

    std::array<std::uint64_t, 5> by_kind{};
    for (const auto& entry : ic.singular) ++by_kind[static_cast<size_t>(entry.second.kind)];
    r.add("v2-kind-m_d", "kind tally: common kernel line", 7,
          by_kind[static_cast<size_t>(Kind::m_d)]);
    r.add("v2-kind-m-sup-d", "kind tally: common image hyperplane", 7,
          by_kind[static_cast<size_t>(Kind::m_sup_d)]);
    r.add("v2-kind-first", "kind tally: equivalent to r(1,1)", 1,
          by_kind[static_cast<size_t>(Kind::first_kind)]);
    r.add("v2-kind-second", "kind tally: equivalent to j3", 3,
          by_kind[static_cast<size_t>(Kind::second_kind)]);
    r.add("v2-unclassified", "kind tally: outside the taxonomy", 0,
          by_kind[static_cast<size_t>(Kind::unclassified)]);

    // The non-maximal survivors are exactly the intersections with the
    // fourteen codimension-n spaces attached to the seven lines.
    std::vector<Subspace> expected_nonmax;
    for (const Line& d : all_lines(f, 3)) {
        expected_nonmax.push_back(meet(v2, catalog::m_d(d)));
        expected_nonmax.push_back(meet(v2, catalog::m_sup_d(d)));
    }
    bool nonmax_dims_ok = true;
    for (const Subspace& s : expected_nonmax) nonmax_dims_ok = nonmax_dims_ok && s.dim() == 5;
    r.add("v2-nonmaximal-dims", "each line intersection has dimension 5", true, nonmax_dims_ok);
    std::vector<Subspace> actual_nonmax;
    for (const auto& entry : ic.singular)
        if (entry.second.kind == Kind::m_d || entry.second.kind == Kind::m_sup_d)
            actual_nonmax.push_back(entry.first);
    r.add("v2-nonmaximal-set", "the fourteen non-maximal survivors are the line intersections",
          true, sorted(expected_nonmax) == sorted(actual_nonmax));

    std::vector<Subspace> first_kind, second_kind;
    for (const auto& entry : ic.singular) {
        if (entry.second.kind == Kind::first_kind) first_kind.push_back(entry.first);
        if (entry.second.kind == Kind::second_kind) second_kind.push_back(entry.first);
    }
    r.add("v2-first-kind-is-f", "the unique first-kind survivor is the corner space f", true,
          first_kind.size() == 1 && first_kind[0] == catalog::f_space(f));

    std::vector<Subspace> expected_second;
    for (const Matrix& p : enumerate_gl(f, 2).mats) {
        Matrix q(f, 3, 3);
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j) q.set(i, j, p.at(i, j));
        q.set(2, 2, 1);
        FrobeniusMap u{q, q.inverse(), false};
        expected_second.push_back(u.apply(catalog::g_space(f)));
    }
    std::sort(expected_second.begin(), expected_second.end());
    expected_second.erase(std::unique(expected_second.begin(), expected_second.end()),
                          expected_second.end());
    r.add("v2-second-kind-set",
          "the second-kind survivors are g conjugated by the block-diagonal group", true,
          expected_second.size() == 3 && sorted(second_kind) == expected_second);

    // Meet-dimension dichotomy over the full table: a survivor attached to a
    // line outside the top plane meets every other survivor in dimension at
    // most 3; every other survivor meets one in dimension 4.
    std::vector<Subspace> spaces;
    spaces.reserve(ic.singular.size());
    for (const auto& entry : ic.singular) spaces.push_back(entry.first);
    auto dims = intersection_dim_table(spaces);
    std::vector<char> type_a(spaces.size(), 0);
    for (size_t i = 0; i < spaces.size(); ++i) {
        const Classification& cls = ic.singular[i].second;
        if (cls.kind == Kind::m_d && cls.kernel_line)
            type_a[i] = cls.kernel_line->line.rep()[2] != 0;
        if (cls.kind == Kind::m_sup_d && cls.coimage_line)
            type_a[i] = cls.coimage_line->line.rep()[2] != 0;
    }
    unsigned type_a_count = 0;
    bool dichotomy = true;
    for (size_t i = 0; i < spaces.size(); ++i) {
        unsigned widest = 0;
        for (size_t j = 0; j < spaces.size(); ++j)
            if (j != i) widest = std::max(widest, dims[i][j]);
        if (type_a[i]) ++type_a_count;
        if (static_cast<bool>(type_a[i]) != (widest <= 3)) dichotomy = false;
    }
    r.add("v2-dichotomy-split", "survivors attached to lines outside the top plane", 8,
          type_a_count);
    r.add("v2-dichotomy", "meet dimension at most 3 exactly on that side of the split", true,
          dichotomy);

    bool partners_ok = true;
    for (size_t i = 0; i < spaces.size(); ++i) {
        if (!type_a[i]) continue;
        Kind opposite =
            ic.singular[i].second.kind == Kind::m_d ? Kind::m_sup_d : Kind::m_d;
        std::set<size_t> partners, expected_partners;
        for (size_t j = 0; j < spaces.size(); ++j) {
            if (j != i && dims[i][j] == 3) partners.insert(j);
            if (j != i && ic.singular[j].second.kind == opposite) expected_partners.insert(j);
        }
        if (partners != expected_partners) partners_ok = false;
    }
    r.add("v2-dim3-partners",
          "dimension-3 meets pair each split survivor with the seven opposite-side ones", true,
          partners_ok);

    r.add("v2-meet-example-lines",
          "meet of the survivors attached to two distinct lines through the last coordinate", 2,
          meet(v2_with_m_d(f, Line(f, {0, 0, 1})), v2_with_m_d(f, Line(f, {0, 1, 1}))).dim());
    r.add("v2-meet-example-f", "meet of the first-line survivor with the corner space f", 4,
          meet(v2_with_m_d(f, Line(f, {1, 0, 0})), catalog::f_space(f)).dim());
}

void sl3_structure_suite(Report& r, const SuiteOptions& opts) {
    const FieldTable& f = make_field(2);
    r.parameters["field"] = 2;
    Subspace sl3 = catalog::sl(f, 3);

    InsideCensus ic = census_inside(sl3, 5, opts.jobs);
    r.partitions = ic.partitions;
    r.add("sl3-5dim-total", "5-dimensional subspaces of the 8-dimensional trace-zero space", 97155,
          ic.total);
    std::array<std::uint64_t, 5> by_kind{};
    for (const auto& entry : ic.singular) ++by_kind[static_cast<size_t>(entry.second.kind)];
    r.add("sl3-no-first-kind", "no singular subspace equivalent to r(1,1)", 0,
          by_kind[static_cast<size_t>(Kind::first_kind)]);
    r.add("sl3-unclassified", "no subspace outside the taxonomy", 0,
          by_kind[static_cast<size_t>(Kind::unclassified)]);
    r.add("sl3-kind-m_d", "survivors killing a common line", 7,
          by_kind[static_cast<size_t>(Kind::m_d)]);
    r.add("sl3-kind-m-sup-d", "survivors with images inside a common hyperplane", 7,
          by_kind[static_cast<size_t>(Kind::m_sup_d)]);

    std::vector<Subspace> expected_md, actual_md;
    for (const Line& d : all_lines(f, 3)) expected_md.push_back(meet(sl3, catalog::m_d(d)));
    for (const auto& entry : ic.singular)
        if (entry.second.kind == Kind::m_d) actual_md.push_back(entry.first);
    r.add("sl3-m_d-set", "those survivors are the seven line intersections", true,
          sorted(expected_md) == sorted(actual_md));

    CentralizerCriterion cc = centralizer_rank1_criterion();
    r.add("sl3-centralizer-checked", "trace-zero elements examined", 256, cc.checked);
    r.add("sl3-centralizer-criterion",
          "rank one is equivalent to a 5-dimensional centralizer whose trace-zero part is "
          "singular",
          0, cc.violations);

    TraceFormIdentities ti = trace_form_identities();
    r.add("sl3-cube-trace", "the trace of the cube equals the determinant on all elements", true,
          ti.cube_trace_equals_det);
    r.add("sl3-polarization", "the determinant polarization identity holds on all pairs", true,
          ti.polarization_identity);

    const GLList& gl = enumerate_gl(f, 3);
    bool ternary_ok = true;
    for (size_t i = 0; i < gl.mats.size() && ternary_ok; ++i) {
        FrobeniusMap u{gl.mats[i], gl.mats[gl.inv[i]], false};
        ternary_ok = ternary_identity_holds(restrict_frobenius(u, sl3));
    }
    r.add("sl3-ternary-conjugations",
          "the bracket-trace identity holds for all 168 conjugation maps", true, ternary_ok);

    std::uint64_t stabilizers = 0;
    bool theorem_form = true;
    Matrix id3 = Matrix::identity(f, 3);
    for (const FrobeniusMap& u : enumerate_frobenius(f, 3)) {
        if (u.apply(sl3) != sl3) continue;
        ++stabilizers;
        if (u.q * u.p != id3) theorem_form = false;
    }
    r.add("sl3-frobenius-candidates", "distinct maps of the form X -> PXQ or PX^TQ", 56448,
          enumerate_frobenius(f, 3).size());
    r.add("sl3-stabilizers", "maps stabilizing the trace-zero space", 336, stabilizers);
    r.add("sl3-stabilizer-form", "each stabilizer is a plain or transposed conjugation", true,
          theorem_form);
}

void counterexamples_suite(Report& r, const SuiteOptions&) {
    const FieldTable& f = make_field(2);
    r.parameters["field"] = 2;

    SubspaceLinearMap phi = phi_counterexample(f, 3);
    r.add("phi-strong", "the corner-shift map preserves singularity in both directions "
                        "over all 128 elements",
          true, is_strong_preserver(phi));
    auto violation = rank_violation(phi);
    ordered_json witness = nullptr;
    if (violation)
        witness = ordered_json{{"element", violation->to_string()},
                               {"rank_before", violation->rank()},
                               {"rank_after", phi.apply(*violation).rank()}};
    r.add("phi-rank-witness", "first element whose rank moves under the map",
          ordered_json{{"element", "0 0 0; 0 1 0; 0 0 0"}, {"rank_before", 1}, {"rank_after", 2}},
          witness);
    r.add("phi-no-extension", "no candidate map agrees with it on the domain", false,
          frobenius_extension(phi).has_value());

    SubspaceLinearMap ab = alphabeta_counterexample();
    r.add("ab-det-preserver", "the corner-feedback map preserves determinants over all 256 "
                              "elements",
          true, is_det_preserver(ab));
    bool involution = true;
    for (unsigned i = 0; i < ab.domain.dim() && involution; ++i)
        involution = ab.apply(ab.images[i]) == ab.domain.basis_element(i);
    r.add("ab-involution", "applying the map twice gives the identity", true, involution);
    r.add("ab-no-extension", "no candidate map agrees with it on the domain", false,
          frobenius_extension(ab).has_value());

    bool adj_identity = true;
    for (unsigned bits = 0; bits < 16; ++bits) {
        Elem l1 = bits & 1, l2 = (bits >> 1) & 1, c1 = (bits >> 2) & 1, c2 = (bits >> 3) & 1;
        Matrix l(f, 1, 2), c(f, 2, 1), alpha(f, 2, 2), beta(f, 2, 2);
        l.set(0, 0, l1);
        l.set(0, 1, l2);
        c.set(0, 0, c1);
        c.set(1, 0, c2);
        alpha.set(1, 0, l2);
        beta.set(1, 0, c1);
        Matrix prod = l * (alpha.adjugate() + beta.adjugate()) * c;
        if (prod.at(0, 0) != 0) adj_identity = false;
    }
    r.add("ab-adjugate-identity",
          "the row-adjugate-column contraction vanishes for all 16 corner pairs", true,
          adj_identity);

    r.add("frobenius-candidates", "distinct maps of the form X -> PXQ or PX^TQ over GF(2), n=3",
          56448, enumerate_frobenius(f, 3).size());
}

void oracles_suite(Report& r, const SuiteOptions&) {
    const FieldTable& f2 = make_field(2);
    r.parameters["fields"] = ordered_json::array({2, 3});

    RepresentationOracle rep = representation_lemma_oracle(f2, 2, 2, 2);
    r.add("representation-maps", "linear maps from the full 2x2 space into itself", 65536,
          rep.maps);
    r.add("representation-survivors", "maps shrinking every column space", 16, rep.survivors);
    r.add("representation-right-mult", "every survivor is a right multiplication", true,
          rep.all_right_multiplications);
    r.add("representation-zero", "the zero map survives", true, rep.includes_zero);
    r.add("representation-identity", "the identity map survives", true, rep.includes_identity);

    for (unsigned q : {2u, 3u})
        for (unsigned p : {2u, 3u}) {
            AddToNonsingularOracle oracle = add_to_nonsingular_oracle(make_field(q), p);
            r.add("add-nonsingular-p" + std::to_string(p) + "-q" + std::to_string(q),
                  "only the zero matrix keeps every invertible matrix invertible when added", true,
                  oracle.only_zero);
        }
}

void m2_hyperplanes_fields(Report& r, const std::vector<unsigned>& fields,
                           const SuiteOptions& opts) {
    for (unsigned q : fields) {
        std::string sx = "-q" + std::to_string(q);
        const FieldTable& f = make_field(q);
        Subspace t2 = catalog::upper_triangular(f, 2);
        Subspace sl2 = catalog::sl(f, 2);

        std::uint64_t rank1 = 0, rank2 = 0;
        bool all_classified = true;
        enumerate_subspaces(f, 4, 3, [&](const Subspace& s) {
            Subspace v = reshaped(s, 2, 2);
            unsigned orbit = hyperplane_orbit(v);
            if (orbit == 1)
                ++rank1;
            else if (orbit == 2)
                ++rank2;
            else
                all_classified = false;
            if (q <= 3 && all_classified) {
                const Subspace& rep = orbit == 1 ? t2 : sl2;
                if (!are_equivalent(v, rep)) all_classified = false;
            }
        });
        std::uint64_t e1 = (q + 1) * (q + 1);
        std::uint64_t total = 1;
        for (int i = 0; i < 4; ++i) total *= q;
        std::uint64_t e2 = (total - 1) / (q - 1) - e1;
        r.add("hyperplane-orbits" + sx, "hyperplanes split by the rank of the trace form witness",
              ordered_json::array({e1, e2}), ordered_json::array({rank1, rank2}));
        if (q <= 3)
            r.add("hyperplane-classified" + sx,
                  "each hyperplane is equivalent to the triangular or trace-zero representative",
                  true, all_classified);

        EmbeddingSearch weak_t2 = search_embeddings(t2, 2, SearchPredicate::weak, true, opts.jobs);
        EmbeddingSearch strong_t2 =
            search_embeddings(t2, 2, SearchPredicate::strong, true, opts.jobs);
        EmbeddingSearch weak_sl2 =
            search_embeddings(sl2, 2, SearchPredicate::weak, true, opts.jobs);
        EmbeddingSearch strong_sl2 =
            search_embeddings(sl2, 2, SearchPredicate::strong, true, opts.jobs);
        r.partitions = weak_t2.partitions;

        std::uint64_t inj = q == 2 ? 2520 : q == 3 ? 449280 : 15422400;
        r.add("injective-maps" + sx, "injective linear maps from each hyperplane into the full "
                                     "2x2 space",
              ordered_json::array({inj, inj}),
              ordered_json::array({weak_t2.injective, weak_sl2.injective}));

        if (q <= 3) {
            r.add("strong-t2plus-extends" + sx,
                  "injective two-sided preservers from the triangular hyperplane all extend", 0,
                  strong_t2.non_extendable);
            r.add("strong-sl2-extends" + sx,
                  "injective two-sided preservers from the trace-zero hyperplane all extend", 0,
                  strong_sl2.non_extendable);
            r.add("weak-sl2-extends" + sx,
                  "injective one-sided preservers from the trace-zero hyperplane all extend", 0,
                  weak_sl2.non_extendable);
            r.add("weak-t2plus-gap" + sx,
                  "some injective one-sided preserver from the triangular hyperplane does not "
                  "extend",
                  true, weak_t2.non_extendable >= 1);
        } else {
            r.add("weak-t2plus-extends" + sx,
                  "injective one-sided preservers from the triangular hyperplane all extend", 0,
                  weak_t2.non_extendable);
            r.add("weak-sl2-extends" + sx,
                  "injective one-sided preservers from the trace-zero hyperplane all extend", 0,
                  weak_sl2.non_extendable);
        }
        r.add("strong-within-weak" + sx, "two-sided hits are a subset of one-sided hits", true,
              strong_t2.hits <= weak_t2.hits && strong_sl2.hits <= weak_sl2.hits);
    }
}

void m2_hyperplanes_suite(Report& r, const SuiteOptions& opts) {
    std::vector<unsigned> fields = opts.field ? std::vector<unsigned>{opts.field}
                                              : std::vector<unsigned>{2, 3};
    for (unsigned q : fields)
        if (q != 2 && q != 3)
            throw value_error("the m2-hyperplanes suite runs over GF(2) and GF(3)");
    r.parameters["fields"] = fields;
    m2_hyperplanes_fields(r, fields, opts);
}

void m2_hyperplanes_f4_suite(Report& r, const SuiteOptions& opts) {
    if (opts.field && opts.field != 4)
        throw value_error("the m2-hyperplanes-f4 suite is pinned to GF(4)");
    r.parameters["field"] = 4;
    if (!opts.long_running) {
        const char* reason = "pass --long-running to enable the GF(4) scan";
        r.add_skipped("hyperplane-orbits-q4", "hyperplanes split by the trace form witness rank",
                      reason);
        r.add_skipped("injective-maps-q4", "injective linear maps from each hyperplane", reason);
        r.add_skipped("weak-t2plus-extends-q4",
                      "injective one-sided preservers from the triangular hyperplane all extend",
                      reason);
        r.add_skipped("weak-sl2-extends-q4",
                      "injective one-sided preservers from the trace-zero hyperplane all extend",
                      reason);
        return;
    }
    m2_hyperplanes_fields(r, {4}, opts);
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "counts",   "census",          "v2-structure",   "sl3-structure",
        "counterexamples", "oracles", "m2-hyperplanes", "m2-hyperplanes-f4"};
    return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.suite = name;
    r.parameters["jobs"] = opts.jobs;
    r.parameters["seed"] = opts.seed;
    r.parameters["long_running"] = opts.long_running;

    if (name == "counts")
        counts_suite(r, opts);
    else if (name == "census")
        census_suite(r, opts);
    else if (name == "v2-structure")
        v2_structure_suite(r, opts);
    else if (name == "sl3-structure")
        sl3_structure_suite(r, opts);
    else if (name == "counterexamples")
        counterexamples_suite(r, opts);
    else if (name == "oracles")
        oracles_suite(r, opts);
    else if (name == "m2-hyperplanes")
        m2_hyperplanes_suite(r, opts);
    else if (name == "m2-hyperplanes-f4")
        m2_hyperplanes_f4_suite(r, opts);
    else
        throw value_error("unknown suite: " + name);

    r.runtime_ms = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                  std::chrono::steady_clock::now() - start)
                                                  .count());
    return r;
}

} // namespace matspace
