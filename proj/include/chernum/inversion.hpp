#pragma once

#include "chernum/graded_poly.hpp"
#include "chernum/series.hpp"

#include <string>
#include <vector>

namespace chernum {

enum class LagrangeRoute { recursive, direct_formula };
enum class MultInvRoute { recursive, determinant };

struct InversionResult {
    int n = 0;
    PolyZ polynomial;
    std::string route;
};

// L_n: the coefficient of x^{n+1} in the compositional inverse of
// x + t_1 x^2 + ... + t_n x^{n+1}. The direct route evaluates
// [x^n](x/f)^{n+1} and divides exactly by n+1.
InversionResult lagrange_polynomial(int n, LagrangeRoute route);

// M_n: the coefficient of x^n in the reciprocal of 1 + t_1 x + ... + t_n x^n,
// or (-1)^n times the Hessenberg determinant in t_1..t_n.
InversionResult mult_inversion_polynomial(int n, MultInvRoute route);

// Memoized accessors (recursive route).
PolyZ lagrange(int n);
PolyZ mult_inversion(int n);

// Determinant of the n x n lower-Hessenberg matrix with first column
// z_1..z_n, unit superdiagonal, and constant skew diagonals. Evaluated by
// the first-row cofactor expansion collapsed to the linear recursion
// D_m = sum_{k=1..m} (-1)^{k-1} z_k D_{m-k}.
template <typename R>
R hessenberg_determinant(const std::vector<R>& z) {
    if (z.empty()) throw std::invalid_argument("hessenberg_determinant: need n >= 1");
    std::vector<R> d;
    d.reserve(z.size() + 1);
    d.push_back(RingTraits<R>::one());
    for (size_t m = 1; m <= z.size(); ++m) {
        R acc = RingTraits<R>::zero();
        for (size_t k = 1; k <= m; ++k) {
            R term = z[k - 1] * d[m - k];
            if (k % 2 == 0) acc -= term;
            else acc += term;
        }
        d.push_back(std::move(acc));
    }
    return d.back();
}

// The symbolic Hessenberg determinant in t_1..t_n, equal to (-1)^n M_n.
PolyZ hessenberg_symbolic(int n);

// Partial ordinary Bell polynomial: the coefficient of x^n in
// (z_1 x + z_2 x^2 + ...)^k, a polynomial in t_1..t_{n-k+1}.
PolyZ bell_partial(int n, int k);

// gcd of the coefficients of bell_partial(n, k); checked against the known
// value k / gcd(n, k).
Int bell_gcd(int n, int k);

// n! M_n(z_k = p_k / k!): the inversion polynomial for reciprocals of
// exponential-form series 1 + sum p_k x^k / k!. Integral by construction;
// cross-checked against a factorial-normalized reciprocal extraction.
PolyZ hat_mult_inversion(int n);

} // namespace chernum
