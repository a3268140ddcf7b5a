#pragma once

#include "chernum/chern.hpp"
#include "chernum/graded_poly.hpp"
#include "chernum/series.hpp"

#include <vector>

namespace chernum {

// Exponential of the formal group of geometric complex cobordisms:
// beta(z) = z + sum_{n>=1} theta_n z^{n+1} / (n+1)!, truncated mod z^{N+1},
// with theta_n the class of the n-dimensional theta divisor.
SeriesTheta theta_exponential(int order);

// Compositional inverse of theta_exponential (the Mischenko series). Entry
// n-1 of the result is (n+1) [u^{n+1}] alpha, i.e. the class of CP^n written
// in the theta generators, for n = 1..N. Each entry is checked against
// (n+1) L_n at tau_k = theta_k / (k+1)!.
std::vector<ThetaExpr> mischenko_logarithm(int max_n);

// (n+1) L_n(tau_1, ..., tau_n) with tau_k = theta_k / (k+1)!.
ThetaExpr cpn_in_theta(int n);

// Expansion of a cobordism class in the theta basis from its complete
// normal-convention Chern record: sum_lambda c^nu_lambda theta_lambda / (lambda+1)!.
ThetaExpr decompose_in_theta(const ChernRecord& record);

// For all n <= max_n: the Mischenko entry equals the decomposition of the
// normal record of CP^n.
bool cobordism_consistency_check(int max_n);

} // namespace chernum
