#pragma once

#include "chernum/chern.hpp"
#include "chernum/numbers.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chernum {

// A surface identified by its two Chern numbers c_1^2 and c_2 = chi.
struct SurfaceRecord {
    std::string name;
    Int c1sq = 0;
    Int c2 = 0;
};

// d = gcd of the (known) Chern numbers; extremely_divisible means d = |chi|
// with chi != 0. `witnessed` marks a negative verdict obtained from a
// partial record through an explicit non-multiple witness.
struct DivisibilityVerdict {
    Int d = 0;
    Int chi = 0;
    bool extremely_divisible = false;
    bool witnessed = false;
};

// Verdict for a Chern record. Complete records give the full verdict; a
// partial tangent record is accepted only when it contains chi and some
// number not divisible by |chi| (a witnessed negative verdict).
DivisibilityVerdict gcd_chern_numbers(const ChernRecord& record);

// Verdict for a surface: d = gcd(|c1^2|, |c2|), divisible iff c2 | c1^2.
DivisibilityVerdict surface_verdict(const SurfaceRecord& s);

SurfaceRecord del_pezzo_surface(int degree);      // (d, 12-d), 1 <= d <= 9
SurfaceRecord toric_surface(int n_gon);           // (12-N, N), N >= 3

std::map<int, DivisibilityVerdict> del_pezzo_scan();
std::map<int, DivisibilityVerdict> toric_surface_scan(int max_n);
std::map<int, DivisibilityVerdict> hypersurface_scan(int max_d);

// (c1^2, c2) of the degree-d surface in CP^3, from the generating function
// and the basis conversion.
SurfaceRecord hypersurface_surface(int d);

// Signature from c_1^2 = 2 chi + 3 tau; non-integral values flag
// inconsistent input but are still returned exactly.
Rational surface_signature(const SurfaceRecord& s);

// (c_1^2 + c_2) / 12.
Rational surface_todd(const SurfaceRecord& s);

struct SlopeResult {
    Rational slope;
    bool bmy_ok = false; // slope <= 3
};

SlopeResult chern_slope(const SurfaceRecord& s);

// Single rational mu with a = mu * b across all partitions, if one exists.
// 0/0 entries are ignored; a zero against a nonzero forces failure unless
// mu = 0 fits everything.
std::optional<Rational> proportionality_check(const ChernRecord& a, const ChernRecord& b);

// Dimension-2 ChernRecord from (c1^2, c2) via the basis conversion.
ChernRecord surface_to_record(const SurfaceRecord& s);

} // namespace chernum
