#include "matspace/preserver.hpp"

#include "matspace/catalog.hpp"

#include "doctest.h"

using namespace matspace;

TEST_CASE("restricting a Frobenius map gives a faithful linear map") {
    const FieldTable& f = make_field(2);
    const GLList& gl = enumerate_gl(f, 3);
    Subspace sl3 = catalog::sl(f, 3);
    FrobeniusMap u{gl.mats[11], gl.mats[60], false};
    SubspaceLinearMap m = restrict_frobenius(u, sl3);
    CHECK(m.is_injective());
    CHECK(is_strong_preserver(m));
    CHECK(is_rank_preserver(m));
    for_each_element(sl3, [&](const Matrix& x) { CHECK(m.apply(x) == u.apply(x)); });
    auto back = frobenius_extension(m);
    REQUIRE(back.has_value());
    for_each_element(sl3, [&](const Matrix& x) { CHECK(back->apply(x) == u.apply(x)); });
}

TEST_CASE("the corner-shift map preserves determinants but not ranks") {
    const FieldTable& f = make_field(2);
    SubspaceLinearMap phi = phi_counterexample(f, 3);
    CHECK(phi.domain == catalog::h_space(f, 3));
    CHECK(phi.is_injective());
    CHECK(is_det_preserver(phi));
    CHECK(is_strong_preserver(phi));
    CHECK(is_weak_preserver(phi));
    CHECK_FALSE(is_rank_preserver(phi));
    CHECK_FALSE(is_image_preserver(phi));

    auto v = rank_violation(phi);
    REQUIRE(v.has_value());
    CHECK(*v == Matrix::unit(f, 3, 3, 1, 1));
    CHECK(v->rank() == 1);
    CHECK(phi.apply(*v).rank() == 2);

    CHECK_FALSE(frobenius_extension(phi).has_value());
}

TEST_CASE("the corner-shift map works over every supported field") {
    for (unsigned q : {3u, 4u}) {
        const FieldTable& f = make_field(q);
        SubspaceLinearMap phi = phi_counterexample(f, 3);
        CHECK(is_det_preserver(phi));
        CHECK_FALSE(is_rank_preserver(phi));
    }
}

TEST_CASE("the double-feedback involution preserves determinants, no extension") {
    SubspaceLinearMap ab = alphabeta_counterexample();
    const FieldTable& f = ab.domain.field();
    CHECK(ab.domain == catalog::v1(f));
    CHECK(ab.is_injective());
    CHECK(is_det_preserver(ab));
    CHECK(is_strong_preserver(ab));
    for (unsigned i = 0; i < ab.domain.dim(); ++i)
        CHECK(ab.apply(ab.images[i]) == ab.domain.basis_element(i));
    CHECK_FALSE(frobenius_extension(ab).has_value());
}

TEST_CASE("determinant preservation coincides with the strong property over GF(2)") {
    const FieldTable& f = make_field(2);
    SubspaceLinearMap phi = phi_counterexample(f, 3);
    SubspaceLinearMap ab = alphabeta_counterexample();
    CHECK(is_det_preserver(phi) == is_strong_preserver(phi));
    CHECK(is_det_preserver(ab) == is_strong_preserver(ab));
    // and a non-injective map that is weak but not strong: [a b; 0 c] -> aI
    Subspace t2 = catalog::upper_triangular(f, 2);
    std::vector<Matrix> images{Matrix::identity(f, 2), Matrix(f, 2, 2), Matrix(f, 2, 2)};
    SubspaceLinearMap diag{t2, Subspace::full(f, 2, 2), images};
    REQUIRE(t2.basis_element(0) == Matrix::unit(f, 2, 2, 0, 0));
    CHECK(is_weak_preserver(diag));
    CHECK_FALSE(is_strong_preserver(diag));
    CHECK_FALSE(diag.is_injective());
}

TEST_CASE("embedding search over the triangular domain, weak predicate") {
    const FieldTable& f = make_field(2);
    Subspace t2 = catalog::upper_triangular(f, 2);
    EmbeddingSearch es = search_embeddings(t2, 2, SearchPredicate::weak, true, 1);
    CHECK(es.tuples == 4096);
    CHECK(es.injective == 2520);
    CHECK(es.extension_checked);
    CHECK(es.extendable + es.non_extendable == es.hits);
    CHECK(es.non_extendable >= 1);
    CHECK(es.non_extendable_examples.size() <= 8);
    for (const SubspaceLinearMap& m : es.non_extendable_examples) {
        CHECK(m.is_injective());
        CHECK(is_weak_preserver(m));
        CHECK_FALSE(frobenius_extension(m).has_value());
    }
}

TEST_CASE("embedding search counters are jobs-invariant") {
    const FieldTable& f = make_field(2);
    Subspace sl2 = catalog::sl(f, 2);
    EmbeddingSearch serial = search_embeddings(sl2, 2, SearchPredicate::strong, true, 1);
    EmbeddingSearch parallel = search_embeddings(sl2, 2, SearchPredicate::strong, true, 4);
    CHECK(serial.injective == parallel.injective);
    CHECK(serial.hits == parallel.hits);
    CHECK(serial.extendable == parallel.extendable);
    CHECK(serial.non_extendable == parallel.non_extendable);
    CHECK(serial.non_extendable == 0);
    CHECK(parallel.partitions > 1);
    // every strong hit is a weak hit
    EmbeddingSearch weak = search_embeddings(sl2, 2, SearchPredicate::weak, false, 1);
    CHECK(serial.hits <= weak.hits);
}

TEST_CASE("search rejects oversized domains") {
    const FieldTable& f = make_field(2);
    CHECK_THROWS_AS(
        search_embeddings(catalog::sl(f, 3), 3, SearchPredicate::weak, false, 1),
        guard_error);
}

TEST_CASE("column space shrinkage forces right multiplication") {
    const FieldTable& f = make_field(2);
    RepresentationOracle rep = representation_lemma_oracle(f, 2, 2, 2);
    CHECK(rep.maps == 65536);
    CHECK(rep.survivors == 16);
    CHECK(rep.all_right_multiplications);
    CHECK(rep.includes_zero);
    CHECK(rep.includes_identity);
    // non-square target: maps M_{2,1} -> M_{2,2}
    RepresentationOracle rect = representation_lemma_oracle(f, 2, 2, 1);
    CHECK(rect.maps == 256);
    CHECK(rect.all_right_multiplications);
    CHECK(rect.survivors == 4); // the 1 x 2 choices of C
}

TEST_CASE("only zero preserves invertibility additively") {
    for (unsigned q : {2u, 3u})
        for (unsigned p : {2u, 3u}) {
            AddToNonsingularOracle oracle = add_to_nonsingular_oracle(make_field(q), p);
            CHECK(oracle.only_zero);
            CHECK(oracle.satisfiers == 1);
            std::uint64_t total = 1;
            for (unsigned i = 0; i < p * p; ++i) total *= q;
            CHECK(oracle.candidates == total);
        }
}

TEST_CASE("centralizer dimension detects rank one on trace-zero matrices") {
    CentralizerCriterion cc = centralizer_rank1_criterion();
    CHECK(cc.checked == 256);
    CHECK(cc.violations == 0);
    CHECK_FALSE(cc.first_violation.has_value());
    // the diagonal idempotent shows why the singularity condition is needed:
    // its centralizer has dimension 5 yet contains an invertible trace-zero
    // element
    const FieldTable& f = make_field(2);
    Matrix a = Matrix::parse(f, "1 0 0; 0 1 0; 0 0 0");
    CHECK(centralizer_dim(a) == 5);
    Matrix witness = Matrix::parse(f, "0 1 0; 1 1 0; 0 0 1");
    CHECK(witness.trace() == 0);
    CHECK(witness.det() != 0);
    CHECK((a * witness) == (witness * a));
}

TEST_CASE("trace identities on the trace-zero space") {
    TraceFormIdentities ti = trace_form_identities();
    CHECK(ti.cube_trace_equals_det);
    CHECK(ti.polarization_identity);
}

TEST_CASE("the bracket-trace identity holds for conjugations and fails for a collapse") {
    const FieldTable& f = make_field(2);
    Subspace sl3 = catalog::sl(f, 3);
    const GLList& gl = enumerate_gl(f, 3);
    FrobeniusMap u{gl.mats[100], gl.mats[gl.inv[100]], false};
    CHECK(ternary_identity_holds(restrict_frobenius(u, sl3)));
    // the collapse to zero misses every triple with a nonzero bracket trace
    std::vector<Matrix> collapse(sl3.dim(), Matrix(f, 3, 3));
    SubspaceLinearMap zero{sl3, Subspace::full(f, 3, 3), collapse};
    CHECK_FALSE(ternary_identity_holds(zero));
}
