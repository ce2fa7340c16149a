#pragma once

#include "matspace/action.hpp"
#include "matspace/subspace.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace matspace {

// Taxonomy of the singular 5-dimensional subspaces of M_3(GF(2)):
//   m_d        contained in {M : M x = 0 on a line D}
//   m_sup_d    contained in {M : im M inside a fixed hyperplane}
//   first_kind equivalent to the zero-block space r_st(1, 1)
//   second_kind equivalent to j3
//   unclassified  none of the above (a verdict, not an error)
enum class Kind { m_d, m_sup_d, first_kind, second_kind, unclassified };

const char* kind_name(Kind k);

struct LineResult {
    Line line;          // canonical representative
    unsigned space_dim; // of the full candidate space; >= 2 means non-unique
};

// Line inside the intersection of the kernels of all elements, if any.
std::optional<LineResult> common_kernel_line(const Subspace& v);
// Line D with im M inside D-orthogonal for every element, if any.
std::optional<LineResult> common_coimage_line(const Subspace& v);

struct Classification {
    Kind kind = Kind::unclassified;
    std::optional<LineResult> kernel_line;
    std::optional<LineResult> coimage_line;
    std::optional<EquivalenceWitness> witness; // for the two orbit kinds
};

// Pre: v is a singular 5-dimensional subspace of M_3(GF(2)).  The two
// structural tests are always both evaluated; them firing together would
// contradict the taxonomy and throws.
Classification classify_singular(const Subspace& v);

struct CensusResult {
    std::uint64_t total = 0;    // all 5-dim subspaces of M_3(GF(2))
    std::uint64_t singular = 0; // those with no invertible element
    std::array<std::uint64_t, 5> by_kind{}; // indexed by Kind
    unsigned partitions = 1;
};

// Full enumeration of the 5-dimensional subspaces of M_3(GF(2)); jobs > 1
// partitions the pivot-pattern range, and results are independent of jobs.
CensusResult census_5dim_singular(unsigned jobs = 1);

struct InsideCensus {
    std::uint64_t total = 0; // k-dim subspaces of v
    std::vector<std::pair<Subspace, Classification>> singular; // ascending canonical order
    unsigned partitions = 1;
};

// Census of the k-dimensional singular subspaces of v, a subspace of
// M_3(GF(2)).  Same partition contract as census_5dim_singular.
InsideCensus census_inside(const Subspace& v, unsigned k, unsigned jobs = 1);

// dims[i][j] = dim(meet(spaces[i], spaces[j])).
std::vector<std::vector<unsigned>> intersection_dim_table(const std::vector<Subspace>& spaces);

} // namespace matspace
