#pragma once

#include "chernum/numbers.hpp"
#include "chernum/partition.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace chernum {

// Variable namespaces. A GradedPoly over TVars lives in t_1, t_2, ...; a
// GradedPoly over ThetaVars lives in theta_1, theta_2, ... The tag is purely
// a compile-time marker so t- and theta-expressions cannot be mixed.
struct TVars {
    static constexpr const char* ns = "t";
};
struct ThetaVars {
    static constexpr const char* ns = "theta";
};

// Polynomial in weighted variables v_1, v_2, ... (v_k has weight k), with a
// monomial v_{l1} v_{l2} ... identified with the partition (l1, l2, ...).
// Zero coefficients are never stored.
template <typename C, typename Tag = TVars>
class GradedPoly {
public:
    using Coeff = C;
    using VarTag = Tag;
    using TermMap = std::map<Partition, C, PartitionLess>;

    GradedPoly() = default;

    static GradedPoly constant(C c) {
        GradedPoly p;
        p.add_term(Partition(), std::move(c));
        return p;
    }

    static GradedPoly variable(int k) { return monomial(Partition::single(k), C(1)); }

    static GradedPoly monomial(Partition part, C c) {
        GradedPoly p;
        p.add_term(std::move(part), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    C coeff(const Partition& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(Partition p, C c) {
        if (c == C(0)) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(std::move(p), std::move(c));
        } else {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    GradedPoly& operator+=(const GradedPoly& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }

    GradedPoly& operator-=(const GradedPoly& o) {
        for (const auto& [p, c] : o.terms_) add_term(p, -c);
        return *this;
    }

    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }

    GradedPoly operator-() const {
        GradedPoly r;
        for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
        return r;
    }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        GradedPoly r;
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_) r.add_term(merge(pa, pb), ca * cb);
        return r;
    }

    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    GradedPoly& operator*=(const C& s) {
        if (s == C(0)) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_) c *= s;
        return *this;
    }

    friend GradedPoly operator*(GradedPoly a, const C& s) { return a *= s; }
    friend GradedPoly operator*(const C& s, GradedPoly a) { return a *= s; }

    bool operator==(const GradedPoly&) const = default;

    // Weight of the highest term; 0 for the zero polynomial.
    int max_weight() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        return terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
    }

    template <typename F>
    auto map_coeffs(F f) const {
        GradedPoly<decltype(f(std::declval<const C&>())), Tag> r;
        for (const auto& [p, c] : terms_) r.add_term(p, f(c));
        return r;
    }

    template <typename NewTag>
    GradedPoly<C, NewTag> retag() const {
        GradedPoly<C, NewTag> r;
        for (const auto& [p, c] : terms_) r.add_term(p, c);
        return r;
    }

private:
    TermMap terms_;
};

using PolyZ = GradedPoly<Int, TVars>;
using PolyQ = GradedPoly<Rational, TVars>;
// Partition (l1,...,lk) stands for the monomial theta_{l1} ... theta_{lk}.
using ThetaExpr = GradedPoly<Rational, ThetaVars>;

using IntByPartition = std::map<Partition, Int, PartitionLess>;
using RationalByPartition = std::map<Partition, Rational, PartitionLess>;

template <typename Tag>
Int gcd_coefficients(const GradedPoly<Int, Tag>& p) {
    Int g = 0;
    for (const auto& [part, c] : p.terms()) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

template <typename Tag>
Int gcd_coefficients(const GradedPoly<Rational, Tag>& p) {
    Int g = 0;
    for (const auto& [part, c] : p.terms()) {
        if (!is_integral(c)) throw std::domain_error("gcd_coefficients: non-integral coefficient");
        g = int_gcd(g, numerator(c));
        if (g == 1) break;
    }
    return g;
}

// Replace each variable v_k by scale(k) * v_k, i.e. multiply the term at
// partition l by prod_i scale(l_i).
template <typename C, typename Tag, typename F>
GradedPoly<Rational, Tag> substitute_scaled(const GradedPoly<C, Tag>& p, F scale) {
    GradedPoly<Rational, Tag> r;
    for (const auto& [part, c] : p.terms()) {
        Rational factor = 1;
        for (int k : part.parts()) factor *= scale(k);
        r.add_term(part, Rational(c) * factor);
    }
    return r;
}

// Relabel variables: each part k becomes remap(k), or disappears (variable
// set to 1) when remap(k) is empty.
template <typename C, typename Tag, typename F>
GradedPoly<C, Tag> substitute_parts(const GradedPoly<C, Tag>& p, F remap) {
    GradedPoly<C, Tag> r;
    for (const auto& [part, c] : p.terms()) {
        std::vector<int> parts;
        for (int k : part.parts()) {
            std::optional<int> m = remap(k);
            if (m) parts.push_back(*m);
        }
        r.add_term(Partition(std::move(parts)), c);
    }
    return r;
}

template <typename Tag>
GradedPoly<Rational, Tag> to_rational(const GradedPoly<Int, Tag>& p) {
    return p.map_coeffs([](const Int& c) { return Rational(c); });
}

template <typename Tag>
GradedPoly<Int, Tag> to_integer(const GradedPoly<Rational, Tag>& p) {
    return p.map_coeffs([](const Rational& c) {
        if (!is_integral(c)) throw std::domain_error("to_integer: non-integral coefficient");
        return numerator(c);
    });
}

template <typename Tag>
GradedPoly<Int, Tag> divide_exact(const GradedPoly<Int, Tag>& p, const Int& k) {
    return p.map_coeffs([&](const Int& c) { return divide_exact(c, k); });
}

namespace detail {

inline void append_coeff(std::ostream& os, const Int& c, bool lead, bool bare) {
    Int a = boost::multiprecision::abs(c);
    if (lead) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || bare) os << a.str() << (bare ? "" : " ");
}

inline void append_coeff(std::ostream& os, const Rational& c, bool lead, bool bare) {
    Rational a = boost::multiprecision::abs(c);
    if (lead) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || bare) os << coeff_string(a) << (bare ? "" : " ");
}

} // namespace detail

// Human-readable form, terms in canonical order, variables by ascending
// index inside a monomial: "-t4 + 6 t1 t3 + 3 t2^2 - 21 t1^2 t2 + 14 t1^4".
template <typename C, typename Tag>
std::string to_string(const GradedPoly<C, Tag>& p, const std::string& var = Tag::ns) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (const auto& [part, c] : p.terms()) {
        detail::append_coeff(os, c, lead, part.empty());
        // parts descending -> emit ascending with multiplicities
        const auto& v = part.parts();
        for (auto it = v.rbegin(); it != v.rend();) {
            int k = *it;
            int mult = 0;
            while (it != v.rend() && *it == k) ++mult, ++it;
            os << var << k;
            if (mult > 1) os << "^" << mult;
            if (it != v.rend()) os << " ";
        }
        lead = false;
    }
    return os.str();
}

} // namespace chernum
