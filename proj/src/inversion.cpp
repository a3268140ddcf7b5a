#include "chernum/inversion.hpp"

#include <map>
#include <mutex>

namespace chernum {

namespace {

PolyZ lagrange_recursive(int n) {
    SeriesPolyZ f = universal_lagrange_series(n, n + 1);
    return f.comp_inverse().coeff(n + 1);
}

PolyZ lagrange_direct(int n) {
    // (x/f)^{n+1} = (1 + t_1 x + ... + t_n x^n)^{-(n+1)}
    SeriesPolyZ u = universal_unit_series(n, n);
    PolyZ num = u.pow(-(n + 1)).coeff(n);
    return divide_exact(num, Int(n + 1));
}

PolyZ mult_inversion_recursive(int n) {
    SeriesPolyZ u = universal_unit_series(n, n);
    return u.recip().coeff(n);
}

PolyZ mult_inversion_determinant(int n) {
    PolyZ det = hessenberg_symbolic(n);
    return n % 2 == 0 ? det : -det;
}

} // namespace

InversionResult lagrange_polynomial(int n, LagrangeRoute route) {
    if (n < 1) throw std::invalid_argument("lagrange_polynomial: need n >= 1");
    switch (route) {
        case LagrangeRoute::recursive:
            return {n, lagrange_recursive(n), "recursive"};
        case LagrangeRoute::direct_formula:
            return {n, lagrange_direct(n), "direct-formula"};
    }
    throw std::invalid_argument("lagrange_polynomial: unknown route");
}

InversionResult mult_inversion_polynomial(int n, MultInvRoute route) {
    if (n < 1) throw std::invalid_argument("mult_inversion_polynomial: need n >= 1");
    switch (route) {
        case MultInvRoute::recursive:
            return {n, mult_inversion_recursive(n), "recursive"};
        case MultInvRoute::determinant:
            return {n, mult_inversion_determinant(n), "determinant"};
    }
    throw std::invalid_argument("mult_inversion_polynomial: unknown route");
}

PolyZ lagrange(int n) {
    static std::mutex mtx;
    static std::map<int, PolyZ> cache;
    if (n < 1) throw std::invalid_argument("lagrange: need n >= 1");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, lagrange_recursive(n)).first;
    return it->second;
}

PolyZ mult_inversion(int n) {
    static std::mutex mtx;
    static std::map<int, PolyZ> cache;
    if (n < 1) throw std::invalid_argument("mult_inversion: need n >= 1");
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, mult_inversion_recursive(n)).first;
    return it->second;
}

PolyZ hessenberg_symbolic(int n) {
    if (n < 1) throw std::invalid_argument("hessenberg_symbolic: need n >= 1");
    std::vector<PolyZ> z;
    z.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) z.push_back(PolyZ::variable(k));
    return hessenberg_determinant(z);
}

PolyZ bell_partial(int n, int k) {
    if (k < 1 || n < k) throw std::invalid_argument("bell_partial: need n >= k >= 1");
    SeriesPolyZ u(n);
    for (int m = 1; m <= n - k + 1; ++m) u.set_coeff(m, PolyZ::variable(m));
    return u.pow(k).coeff(n);
}

Int bell_gcd(int n, int k) {
    Int g = gcd_coefficients(bell_partial(n, k));
    Int expected = divide_exact(Int(k), int_gcd(Int(n), Int(k)));
    if (g != expected)
        throw VerificationError("bell_gcd: computed gcd disagrees with k/gcd(n,k)");
    return g;
}

PolyZ hat_mult_inversion(int n) {
    if (n < 1) throw std::invalid_argument("hat_mult_inversion: need n >= 1");
    const Int nfact = factorial(n);
    PolyQ scaled = substitute_scaled(mult_inversion(n),
                                     [](int k) { return Rational(1, factorial(k)); });
    PolyZ hat = to_integer(scaled * Rational(nfact));

    // Independent route: n! [x^n] recip(1 + sum t_k x^k / k!).
    TruncatedSeries<PolyQ> u = SeriesPolyQ::unit(n);
    for (int k = 1; k <= n; ++k)
        u.set_coeff(k, PolyQ::monomial(Partition::single(k), Rational(1, factorial(k))));
    PolyZ check = to_integer(u.recip().coeff(n) * Rational(nfact));
    if (hat != check)
        throw VerificationError("hat_mult_inversion: substitution and reciprocal routes disagree");
    return hat;
}

} // namespace chernum
