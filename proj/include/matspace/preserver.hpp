#pragma once

#include "matspace/action.hpp"
#include "matspace/subspace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace matspace {

// Linear map given by the images of the domain's canonical basis.  The
// codomain is an ambient shape carrier (usually a full matrix space); the
// images need not span it.
struct SubspaceLinearMap {
    Subspace domain;
    Subspace codomain;
    std::vector<Matrix> images; // images[i] corresponds to domain.basis_element(i)

    Matrix apply(const Matrix& m) const; // m must lie in the domain
    bool is_injective() const;           // images linearly independent
};

// Restriction of a Frobenius map; codomain is the full target space.
SubspaceLinearMap restrict_frobenius(const FrobeniusMap& u, const Subspace& domain);

// Each predicate walks every element of the domain (guard q^dim <= 2^24).
bool is_weak_preserver(const SubspaceLinearMap& f);   // X invertible => f(X) invertible
bool is_strong_preserver(const SubspaceLinearMap& f); // X invertible <=> f(X) invertible
bool is_det_preserver(const SubspaceLinearMap& f);
bool is_rank_preserver(const SubspaceLinearMap& f);
bool is_image_preserver(const SubspaceLinearMap& f);  // column space of f(X) == that of X
// First element in ascending coordinate order whose rank changes, if any.
std::optional<Matrix> rank_violation(const SubspaceLinearMap& f);

// On the bottom-row-constrained space h_space(n): adds entry (1,1) of X to
// entry (0, n-1).  Determinant preserving (the added term never meets the
// bottom-row cofactor), hence strong, but not a rank preserver.  n >= 3.
SubspaceLinearMap phi_counterexample(const FieldTable& f, unsigned n);

// On v1 over GF(2) (all of M_3 with entry (2,2) forced to zero): adds
// X(2,1) + X(0,2) to entry (1,0).  A determinant-preserving involution.
SubspaceLinearMap alphabeta_counterexample();

// First Frobenius map (enumeration order) agreeing with f on the domain
// basis, after scanning the full candidate list.  Agreement on the basis
// gives agreement everywhere since both sides are linear.
std::optional<FrobeniusMap> frobenius_extension(const SubspaceLinearMap& f);

enum class SearchPredicate { weak, strong };

struct EmbeddingSearch {
    std::uint64_t tuples = 0;         // all image tuples, q^(n^2 * dim)
    std::uint64_t injective = 0;      // tuples with independent images
    std::uint64_t hits = 0;           // injective maps passing the predicate
    bool extension_checked = false;
    std::uint64_t extendable = 0;     // hits with a Frobenius extension
    std::uint64_t non_extendable = 0;
    std::vector<SubspaceLinearMap> non_extendable_examples; // first few, scan order
    unsigned partitions = 1;
};

// Exhaustive scan of every linear map from the domain into the full n x n
// matrix space over the same field, in ascending image-tuple order.  The
// predicate is evaluated over all domain elements with early exit; hits are
// counted among injective maps only.  With check_extension, each hit is
// matched against the restrictions of all Frobenius maps.  Guards: domain
// dimension 3, q^(n^2) <= 4096, injective count <= 10^8.
EmbeddingSearch search_embeddings(const Subspace& domain, unsigned n, SearchPredicate predicate,
                                  bool check_extension, unsigned jobs = 1);

struct RepresentationOracle {
    std::uint64_t maps = 0;      // all linear maps M_{n,r} -> M_{n,p}
    std::uint64_t survivors = 0; // maps with column space of phi(M) inside that of M
    bool all_right_multiplications = false;
    bool includes_zero = false;
    bool includes_identity = false; // only meaningful when r == p
};

// Enumerates every linear map phi from the full M_{n,r} to M_{n,p} and keeps
// those with im phi(M) inside im M for all M; checks that the survivors are
// exactly the maps M -> MC, C recovered from the images of the first-row
// units.  Guard: q^(np * nr) <= 2^24.
RepresentationOracle representation_lemma_oracle(const FieldTable& f, unsigned n, unsigned p,
                                                 unsigned r);

struct AddToNonsingularOracle {
    std::uint64_t candidates = 0; // all A in M_p
    std::uint64_t satisfiers = 0; // A with A + P invertible for every invertible P
    bool only_zero = false;
};

// For every A, tests A + P over all invertible P (early exit); the only
// matrix that never ruins invertibility must be 0.  Guard: p <= 3, q <= 3.
AddToNonsingularOracle add_to_nonsingular_oracle(const FieldTable& f, unsigned p);

struct CentralizerCriterion {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::optional<Matrix> first_violation;
};

// Over all A in the trace-zero 3 x 3 matrices over GF(2): rank A == 1 holds
// iff the centralizer of A has dimension 5 and its trace-zero part contains
// only singular matrices.
CentralizerCriterion centralizer_rank1_criterion();

struct TraceFormIdentities {
    bool cube_trace_equals_det = false; // tr(A^3) == det A on all of sl_3(F_2)
    bool polarization_identity = false; // det(A+B)-det A-det B == tr(A^2B)+tr(B^2A), all pairs
};

TraceFormIdentities trace_form_identities();

// tr([f(A), f(B)] f(C)) == tr([A, B] C) checked on all basis triples of the
// domain; trilinearity extends the check to every triple.
bool ternary_identity_holds(const SubspaceLinearMap& f);

} // namespace matspace
