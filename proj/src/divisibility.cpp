#include "chernum/divisibility.hpp"

namespace chernum {

namespace {

using boost::multiprecision::abs;

DivisibilityVerdict verdict_from(const Int& d, const Int& chi, bool witnessed = false) {
    DivisibilityVerdict v;
    v.d = d;
    v.chi = chi;
    v.extremely_divisible = chi != 0 && d == abs(chi);
    v.witnessed = witnessed;
    return v;
}

} // namespace

DivisibilityVerdict gcd_chern_numbers(const ChernRecord& record) {
    Int d = 0;
    for (const auto& [p, c] : record.numbers) d = int_gcd(d, c);

    if (record.complete) {
        const Int chi = euler_characteristic(record);
        if (chi == 0)
            throw std::domain_error("gcd_chern_numbers: chi = 0, predicate undefined");
        return verdict_from(d, chi);
    }

    // Partial records: only a witnessed negative verdict is sound, and only
    // in the tangent convention (here chi is read off directly).
    if (record.convention != Convention::tangent)
        throw std::invalid_argument("gcd_chern_numbers: partial record must be tangent-convention");
    auto chi_it = record.numbers.find(Partition::ones(record.dimension));
    if (chi_it == record.numbers.end())
        throw std::invalid_argument("gcd_chern_numbers: partial record lacks c_(1,...,1)");
    const Int chi = chi_it->second;
    if (chi == 0)
        throw std::invalid_argument("gcd_chern_numbers: chi = 0, predicate undefined");
    bool witness = false;
    for (const auto& [p, c] : record.numbers)
        if (c % chi != 0) witness = true;
    if (!witness)
        throw std::invalid_argument(
            "gcd_chern_numbers: partial record with no non-multiple witness is inconclusive");
    DivisibilityVerdict v = verdict_from(d, chi, true);
    v.extremely_divisible = false;
    return v;
}

DivisibilityVerdict surface_verdict(const SurfaceRecord& s) {
    if (s.c2 == 0) throw std::invalid_argument("surface_verdict: c2 = 0");
    DivisibilityVerdict v;
    v.d = int_gcd(abs(s.c1sq), abs(s.c2)); // gcd(0, m) = m
    v.chi = s.c2;
    v.extremely_divisible = s.c1sq % s.c2 == 0;
    return v;
}

SurfaceRecord del_pezzo_surface(int degree) {
    if (degree < 1 || degree > 9)
        throw std::invalid_argument("del_pezzo_surface: degree must be 1..9");
    return {"S_" + std::to_string(degree), Int(degree), Int(12 - degree)};
}

SurfaceRecord toric_surface(int n_gon) {
    if (n_gon < 3) throw std::invalid_argument("toric_surface: need N >= 3");
    return {"X_" + std::to_string(n_gon), Int(12 - n_gon), Int(n_gon)};
}

std::map<int, DivisibilityVerdict> del_pezzo_scan() {
    std::map<int, DivisibilityVerdict> out;
    for (int d = 1; d <= 9; ++d) out.emplace(d, surface_verdict(del_pezzo_surface(d)));
    return out;
}

std::map<int, DivisibilityVerdict> toric_surface_scan(int max_n) {
    if (max_n < 3) throw std::invalid_argument("toric_surface_scan: need max_n >= 3");
    std::map<int, DivisibilityVerdict> out;
    for (int n = 3; n <= max_n; ++n) {
        SurfaceRecord s = toric_surface(n);
        if (surface_todd(s) != 1)
            throw VerificationError("toric_surface_scan: Todd genus is not 1");
        out.emplace(n, surface_verdict(s));
    }
    return out;
}

SurfaceRecord hypersurface_surface(int d) {
    ChernRecord rec = hypersurface_record(3, d);
    IntByPartition products =
        chern_basis_convert(rec.numbers, BasisDirection::monomial_to_products);
    SurfaceRecord s;
    s.name = "V_" + std::to_string(d);
    s.c1sq = products.at(Partition{1, 1});
    s.c2 = products.at(Partition{2});
    return s;
}

std::map<int, DivisibilityVerdict> hypersurface_scan(int max_d) {
    if (max_d < 1) throw std::invalid_argument("hypersurface_scan: need max_d >= 1");
    std::map<int, DivisibilityVerdict> out;
    for (int d = 1; d <= max_d; ++d) out.emplace(d, surface_verdict(hypersurface_surface(d)));
    return out;
}

Rational surface_signature(const SurfaceRecord& s) {
    return Rational(s.c1sq - 2 * s.c2) / 3;
}

Rational surface_todd(const SurfaceRecord& s) { return Rational(s.c1sq + s.c2) / 12; }

SlopeResult chern_slope(const SurfaceRecord& s) {
    if (s.c2 == 0) throw std::invalid_argument("chern_slope: c2 = 0");
    SlopeResult r;
    r.slope = Rational(s.c1sq) / Rational(s.c2);
    r.bmy_ok = r.slope <= 3;
    return r;
}

std::optional<Rational> proportionality_check(const ChernRecord& a, const ChernRecord& b) {
    if (a.dimension != b.dimension)
        throw std::invalid_argument("proportionality_check: dimension mismatch");
    if (!a.complete || !b.complete)
        throw std::invalid_argument("proportionality_check: records must be complete");
    std::optional<Rational> mu;
    for (const Partition& p : partitions_of(a.dimension)) {
        const Int va = a.numbers.at(p), vb = b.numbers.at(p);
        if (va == 0 && vb == 0) continue;
        if (vb == 0) return std::nullopt; // nonzero against zero: no finite ratio
        Rational ratio = Rational(va) / Rational(vb);
        if (mu && *mu != ratio) return std::nullopt;
        mu = ratio;
    }
    if (!mu) mu = Rational(1); // both records identically zero
    return mu;
}

ChernRecord surface_to_record(const SurfaceRecord& s) {
    IntByPartition products;
    products.emplace(Partition{2}, s.c2);
    products.emplace(Partition{1, 1}, s.c1sq);
    ChernRecord r;
    r.name = s.name;
    r.dimension = 2;
    r.convention = Convention::tangent;
    r.numbers = chern_basis_convert(products, BasisDirection::products_to_monomial);
    r.complete = true;
    return r;
}

} // namespace chernum
