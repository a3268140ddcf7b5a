#include "chernum/cobordism.hpp"

#include "chernum/inversion.hpp"

namespace chernum {

SeriesTheta theta_exponential(int order) {
    if (order < 1) throw std::invalid_argument("theta_exponential: need order >= 1");
    SeriesTheta beta = SeriesTheta::identity(order);
    for (int n = 1; n + 1 <= order; ++n)
        beta.set_coeff(n + 1, ThetaExpr::monomial(Partition::single(n),
                                                  Rational(Int(1), factorial(n + 1))));
    return beta;
}

ThetaExpr cpn_in_theta(int n) {
    ThetaExpr tau = substitute_scaled(lagrange(n).retag<ThetaVars>(), [](int k) {
        return Rational(Int(1), factorial(k + 1));
    });
    return tau * Rational(Int(n + 1));
}

std::vector<ThetaExpr> mischenko_logarithm(int max_n) {
    if (max_n < 1) throw std::invalid_argument("mischenko_logarithm: need max_n >= 1");
    SeriesTheta alpha = theta_exponential(max_n + 1).comp_inverse();
    std::vector<ThetaExpr> classes;
    classes.reserve(static_cast<size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        ThetaExpr cls = alpha.coeff(n + 1) * Rational(Int(n + 1));
        if (cls != cpn_in_theta(n))
            throw VerificationError("mischenko_logarithm: disagrees with (n+1) L_n(tau)");
        classes.push_back(std::move(cls));
    }
    return classes;
}

ThetaExpr decompose_in_theta(const ChernRecord& record) {
    if (!record.complete)
        throw std::invalid_argument("decompose_in_theta: record must be complete");
    if (record.convention != Convention::normal)
        throw std::invalid_argument("decompose_in_theta: record must use the normal convention");
    ThetaExpr out;
    for (const auto& [lambda, number] : record.numbers) {
        if (number == 0) continue;
        Rational denom = 1;
        for (int part : lambda.parts()) denom *= Rational(factorial(part + 1));
        out.add_term(lambda, Rational(number) / denom);
    }
    return out;
}

bool cobordism_consistency_check(int max_n) {
    std::vector<ThetaExpr> log = mischenko_logarithm(max_n);
    for (int n = 1; n <= max_n; ++n) {
        if (log[static_cast<size_t>(n - 1)] !=
            decompose_in_theta(cpn_record(n, Convention::normal)))
            return false;
    }
    return true;
}

} // namespace chernum
