#pragma once

#include "chernum/graded_poly.hpp"
#include "chernum/numbers.hpp"
#include "chernum/partition.hpp"

#include <map>

namespace chernum {

// Expansion of e_{mu_1} * ... * e_{mu_k} (products of elementary symmetric
// polynomials) in the monomial symmetric basis {m_lambda}, computed by
// brute-force symbolic expansion in nvars variables. Requires
// nvars >= weight(mu) so that no m_lambda is truncated away; nvars <= 16.
PolyZ elementary_to_monomial(const Partition& mu, int nvars);

enum class BasisDirection {
    products_to_monomial, // given numbers c_{mu_1}...c_{mu_k}, recover c_lambda
    monomial_to_products, // given monomial numbers c_lambda, form the products
};

// Invertible linear change between the product basis c_{mu_1}...c_{mu_k} and
// the monomial basis c_lambda at a fixed weight n. The input must carry a
// value for every partition of n. Round trips are exact.
RationalByPartition chern_basis_convert(const RationalByPartition& values,
                                        BasisDirection direction);

IntByPartition chern_basis_convert(const IntByPartition& values, BasisDirection direction);

} // namespace chernum
