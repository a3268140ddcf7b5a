#pragma once

#include "chernum/graded_poly.hpp"
#include "chernum/numbers.hpp"

#include <vector>

namespace chernum {

template <typename R>
struct RingTraits {
    static R zero() { return R(0); }
    static R one() { return R(1); }
};

template <typename C, typename Tag>
struct RingTraits<GradedPoly<C, Tag>> {
    static GradedPoly<C, Tag> zero() { return {}; }
    static GradedPoly<C, Tag> one() { return GradedPoly<C, Tag>::constant(C(1)); }
};

// One-variable formal power series modulo x^{N+1} over a commutative
// coefficient ring R (Int, Rational, or a GradedPoly). All operations are
// exact modulo the truncation. Orders are explicit: binary operations demand
// equal orders and never re-truncate silently.
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order)
        : order_(order), c_(static_cast<size_t>(order) + 1, RingTraits<R>::zero()) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    }

    static TruncatedSeries constant(R v, int order) {
        TruncatedSeries s(order);
        s.c_[0] = std::move(v);
        return s;
    }

    static TruncatedSeries unit(int order) { return constant(RingTraits<R>::one(), order); }

    // The series x (zero when order == 0).
    static TruncatedSeries identity(int order) {
        TruncatedSeries s(order);
        if (order >= 1) s.c_[1] = RingTraits<R>::one();
        return s;
    }

    int order() const { return order_; }

    const R& coeff(int n) const {
        if (n < 0 || n > order_)
            throw std::invalid_argument("coeff: index exceeds truncation order");
        return c_[static_cast<size_t>(n)];
    }

    void set_coeff(int n, R v) {
        if (n < 0 || n > order_)
            throw std::invalid_argument("set_coeff: index exceeds truncation order");
        c_[static_cast<size_t>(n)] = std::move(v);
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!(v == RingTraits<R>::zero())) return false;
        return true;
    }

    bool operator==(const TruncatedSeries&) const = default;

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (int i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    TruncatedSeries operator-() const {
        TruncatedSeries r(order_);
        for (int i = 0; i <= order_; ++i) r.c_[i] = -c_[i];
        return r;
    }

    // Cauchy product truncated at the common order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries r(a.order_);
        const R zero = RingTraits<R>::zero();
        for (int i = 0; i <= a.order_; ++i) {
            if (a.c_[i] == zero) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (b.c_[j] == zero) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    // Multiplicative inverse; requires constant term equal to the ring unit.
    // q_0 = 1, q_n = -sum_{k=1..n} a_k q_{n-k}.
    TruncatedSeries recip() const {
        if (!(c_[0] == RingTraits<R>::one()))
            throw std::domain_error("recip: constant term must be 1");
        TruncatedSeries q(order_);
        q.c_[0] = RingTraits<R>::one();
        const R zero = RingTraits<R>::zero();
        for (int n = 1; n <= order_; ++n) {
            R acc = zero;
            for (int k = 1; k <= n; ++k) {
                if (c_[k] == zero) continue;
                acc += c_[k] * q.c_[n - k];
            }
            q.c_[n] = -acc;
        }
        return q;
    }

    // a(inner(x)) by Horner evaluation; inner must have zero constant term.
    TruncatedSeries compose(const TruncatedSeries& inner) const {
        check_order(inner);
        if (!(inner.c_[0] == RingTraits<R>::zero()))
            throw std::domain_error("compose: inner series must have zero constant term");
        TruncatedSeries r = constant(c_[order_], order_);
        for (int i = order_ - 1; i >= 0; --i) {
            r = r * inner;
            r.c_[0] += c_[i];
        }
        return r;
    }

    // Compositional inverse g with g(f(x)) = x mod x^{N+1}; requires
    // f = x + higher order. Solved degree by degree from
    // sum_{j<=m} g_j [x^m] f^j = [m == 1].
    TruncatedSeries comp_inverse() const {
        if (order_ < 1) throw std::invalid_argument("comp_inverse: order must be >= 1");
        if (!(c_[0] == RingTraits<R>::zero()))
            throw std::domain_error("comp_inverse: constant term must be 0");
        if (!(c_[1] == RingTraits<R>::one()))
            throw std::domain_error("comp_inverse: linear coefficient must be 1");
        std::vector<TruncatedSeries> powers; // powers[j] = f^{j+1}
        powers.reserve(static_cast<size_t>(order_));
        powers.push_back(*this);
        for (int j = 2; j <= order_; ++j) powers.push_back(powers.back() * *this);
        TruncatedSeries g(order_);
        g.c_[1] = RingTraits<R>::one();
        for (int m = 2; m <= order_; ++m) {
            R acc = RingTraits<R>::zero();
            for (int j = 1; j < m; ++j) acc += g.c_[j] * powers[static_cast<size_t>(j - 1)].c_[m];
            g.c_[m] = -acc; // [x^m] f^m = 1
        }
        return g;
    }

    // a^e by repeated squaring; negative e goes through recip and therefore
    // requires a unit constant term.
    TruncatedSeries pow(int e) const {
        if (e < 0) return recip().pow(-e);
        TruncatedSeries r = unit(order_);
        TruncatedSeries base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            if ((e >>= 1) != 0) base = base * base;
        }
        return r;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order > order_)
            throw std::invalid_argument("truncated: cannot extend a truncated series");
        TruncatedSeries r(new_order);
        for (int i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
        return r;
    }

private:
    void check_order(const TruncatedSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("series order mismatch");
    }

    int order_;
    std::vector<R> c_;
};

// Explicit-order power: re-truncates a down to N first (never extends).
template <typename R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, int e, int n_order) {
    return a.truncated(n_order).pow(e);
}

using SeriesZ = TruncatedSeries<Int>;
using SeriesQ = TruncatedSeries<Rational>;
using SeriesPolyZ = TruncatedSeries<PolyZ>;
using SeriesPolyQ = TruncatedSeries<PolyQ>;
using SeriesTheta = TruncatedSeries<ThetaExpr>;

// 1 + t_1 x + t_2 x^2 + ... + t_nvars x^nvars, truncated at the given order.
inline SeriesPolyZ universal_unit_series(int nvars, int order) {
    SeriesPolyZ u = SeriesPolyZ::unit(order);
    for (int k = 1; k <= nvars && k <= order; ++k) u.set_coeff(k, PolyZ::variable(k));
    return u;
}

// x + t_1 x^2 + ... + t_nvars x^{nvars+1}: the universal series with unit
// linear coefficient whose compositional inverse generates L_n.
inline SeriesPolyZ universal_lagrange_series(int nvars, int order) {
    SeriesPolyZ f(order);
    if (order >= 1) f.set_coeff(1, PolyZ::constant(Int(1)));
    for (int k = 1; k + 1 <= order && k <= nvars; ++k) f.set_coeff(k + 1, PolyZ::variable(k));
    return f;
}

} // namespace chernum
