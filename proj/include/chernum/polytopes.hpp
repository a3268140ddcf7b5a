#pragma once

#include "chernum/graded_poly.hpp"
#include "chernum/numbers.hpp"
#include "chernum/partition.hpp"

#include <utility>
#include <vector>

namespace chernum {

enum class PolytopeKind { associahedron, permutohedron };

inline const char* to_string(PolytopeKind k) {
    return k == PolytopeKind::associahedron ? "associahedron" : "permutohedron";
}

// Face counts keyed by face type: a partition of n with k parts corresponds
// to faces of dimension n - k.
struct FaceCensus {
    int n = 0;
    PolytopeKind polytope = PolytopeKind::associahedron;
    IntByPartition counts;
};

// A dissection of a convex polygon by pairwise non-crossing diagonals.
// Vertices are labelled 0..span; the chord (0, span) is the base edge.
struct Dissection {
    std::vector<std::pair<int, int>> diagonals; // sorted, canonical
    std::vector<int> cell_sizes;                // vertex counts, descending
};

// All dissections of the convex (span+1)-gon on vertices 0..span, enumerated
// by recursive splitting (memoized per span length). span = n+1 gives the
// (n+2)-gon whose dissections index the faces of the n-1 dimensional
// associahedron.
std::vector<Dissection> enumerate_dissections(int span);

// Census of non-crossing dissections of the (n+2)-gon: a dissection with
// cells of sizes s_1..s_k is counted under the partition (s_1-2, ..., s_k-2).
// Explicit enumeration for n <= 8; count-only dynamic programming beyond.
FaceCensus dissection_census(int n);
FaceCensus dissection_census_enumerated(int n);
FaceCensus dissection_census_counted(int n);

// Ordered set partitions of {1..n} keyed by block-size multiset.
// Closed form: n!/prod(l_i!) times the arrangements of the size multiset.
FaceCensus ordered_partition_census(int n);
// Brute force over surjections [n] -> [k]; intended for n <= 7.
FaceCensus ordered_partition_census_enumerated(int n);

// Ordered Bell number by the recurrence a(n) = sum_k C(n,k) a(n-k).
Int fubini_number(int n);

// True iff for every partition with k parts the polynomial coefficient
// equals (-1)^k times the census count, with no terms unmatched either way.
bool match_coefficients(const FaceCensus& census, const PolyZ& poly);

} // namespace chernum
