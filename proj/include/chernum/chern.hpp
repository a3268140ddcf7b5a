#pragma once

#include "chernum/graded_poly.hpp"
#include "chernum/series.hpp"
#include "chernum/symmetric.hpp"

#include <string>

namespace chernum {

enum class Convention { tangent, normal };

inline const char* to_string(Convention c) {
    return c == Convention::tangent ? "tangent" : "normal";
}

// A variety's dimension together with its monomial characteristic numbers,
// tangent or normal convention. `numbers` may store explicit zeros; the
// record is complete when every partition of `dimension` has an entry.
struct ChernRecord {
    std::string name;
    int dimension = 0;
    Convention convention = Convention::tangent;
    IntByPartition numbers;
    bool complete = false;
};

// Fills in zero entries for every missing partition; the result is complete.
ChernRecord record_from_gf(std::string name, int dimension, Convention convention,
                           const PolyZ& gf);

// Generating function of the monomial Chern numbers of the tangent bundle of
// CP^n: [x^n](1 + t_1 x + ... + t_n x^n)^{n+1}. Checked against the Bell
// polynomial identity B_{2n+1,n+1}(1, t_1, ..., t_n).
PolyZ cpn_tangent_gf(int n);

// Normal-bundle counterpart: [x^n](1 + t_1 x + ... + t_n x^n)^{-(n+1)},
// checked against (n+1) L_n.
PolyZ cpn_normal_gf(int n);

// Verifies C(tau) * C(nu) = 1 as computed truncated series for CP^n, and
// that the weight-n extractions reproduce the two generating functions.
bool duality_check(int n);

// (n+1)! M_n via the reciprocal series, checked against the memoized M_n.
PolyZ theta_tangent_gf(int n);

// The single term (n+1)! t_n.
PolyZ theta_normal_gf(int n);

struct ThetaPowerGF {
    PolyZ tangent;
    PolyZ normal;
};

// Generating functions for the smooth zero locus of a section of the k-th
// power of the polarisation bundle, computed from first principles (normal
// root k x, fundamental-class pairing k (n+1)!) and checked against the
// k^{n+1}-scaled theta values.
ThetaPowerGF theta_power_gf(int n, int k);

// Tangent generating function of a degree-d hypersurface in CP^m (complex
// dimension m-1): d * [x^{m-1}] (1 + sum x^j t_j)^{m+1} (1 + sum (dx)^j t_j)^{-1}.
PolyZ hypersurface_gf(int m, int d);

ChernRecord cpn_record(int n, Convention convention);
ChernRecord theta_record(int n, Convention convention);
ChernRecord theta_power_record(int n, int k, Convention convention);
ChernRecord hypersurface_record(int m, int d);

// Monomial numbers of the other bundle convention, via the product basis and
// the multiplicative inversion polynomials (an invertible integer change).
IntByPartition convert_convention_numbers(int dimension, const IntByPartition& numbers,
                                          Convention from);
ChernRecord convert_record(const ChernRecord& record);

// Signed Euler characteristic: the monomial number at (1,...,1) in the
// tangent convention (normal records are converted first).
Int euler_characteristic(const ChernRecord& record);

} // namespace chernum
