#include "chernum/chern.hpp"

#include "chernum/inversion.hpp"

namespace chernum {

ChernRecord record_from_gf(std::string name, int dimension, Convention convention,
                           const PolyZ& gf) {
    ChernRecord r;
    r.name = std::move(name);
    r.dimension = dimension;
    r.convention = convention;
    for (const Partition& p : partitions_of(dimension)) r.numbers.emplace(p, 0);
    for (const auto& [p, c] : gf.terms()) {
        if (p.weight() != dimension)
            throw std::invalid_argument("record_from_gf: inhomogeneous generating function");
        r.numbers[p] = c;
    }
    r.complete = true;
    return r;
}

PolyZ cpn_tangent_gf(int n) {
    if (n < 1) throw std::invalid_argument("cpn_tangent_gf: need n >= 1");
    PolyZ gf = universal_unit_series(n, n).pow(n + 1).coeff(n);
    // Bell identity: substitute z_1 = 1, z_{j+1} = t_j in B_{2n+1,n+1}.
    PolyZ bell = substitute_parts(bell_partial(2 * n + 1, n + 1), [](int k) {
        return k == 1 ? std::optional<int>() : std::optional<int>(k - 1);
    });
    if (gf != bell)
        throw VerificationError("cpn_tangent_gf: Bell polynomial identity failed");
    return gf;
}

PolyZ cpn_normal_gf(int n) {
    if (n < 1) throw std::invalid_argument("cpn_normal_gf: need n >= 1");
    PolyZ gf = universal_unit_series(n, n).pow(-(n + 1)).coeff(n);
    if (gf != lagrange(n) * Int(n + 1))
        throw VerificationError("cpn_normal_gf: disagrees with (n+1) L_n");
    return gf;
}

bool duality_check(int n) {
    if (n < 1) throw std::invalid_argument("duality_check: need n >= 1");
    SeriesPolyZ u = universal_unit_series(n, n);
    SeriesPolyZ tangent = u.pow(n + 1);
    SeriesPolyZ normal = u.pow(-(n + 1));
    if (!(tangent * normal == SeriesPolyZ::unit(n))) return false;
    return tangent.coeff(n) == cpn_tangent_gf(n) && normal.coeff(n) == cpn_normal_gf(n);
}

PolyZ theta_tangent_gf(int n) {
    if (n < 1) throw std::invalid_argument("theta_tangent_gf: need n >= 1");
    PolyZ gf = universal_unit_series(n, n).recip().coeff(n) * factorial(n + 1);
    if (gf != mult_inversion(n) * factorial(n + 1))
        throw VerificationError("theta_tangent_gf: disagrees with (n+1)! M_n");
    return gf;
}

PolyZ theta_normal_gf(int n) {
    if (n < 1) throw std::invalid_argument("theta_normal_gf: need n >= 1");
    return PolyZ::monomial(Partition::single(n), factorial(n + 1));
}

ThetaPowerGF theta_power_gf(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("theta_power_gf: need n, k >= 1");
    // Normal class 1 + sum (kx)^j t_j; pairing of x^n with the fundamental
    // class is k (n+1)!.
    SeriesPolyZ w = SeriesPolyZ::unit(n);
    for (int j = 1; j <= n; ++j)
        w.set_coeff(j, PolyZ::monomial(Partition::single(j), int_pow(Int(k), j)));
    const Int pairing = Int(k) * factorial(n + 1);
    ThetaPowerGF gf;
    gf.tangent = w.recip().coeff(n) * pairing;
    gf.normal = w.coeff(n) * pairing;
    const Int scale = int_pow(Int(k), n + 1);
    if (gf.tangent != theta_tangent_gf(n) * scale || gf.normal != theta_normal_gf(n) * scale)
        throw VerificationError("theta_power_gf: disagrees with k^{n+1}-scaled theta values");
    return gf;
}

PolyZ hypersurface_gf(int m, int d) {
    if (m < 2 || d < 1) throw std::invalid_argument("hypersurface_gf: need m >= 2, d >= 1");
    const int dim = m - 1;
    SeriesPolyZ ambient = universal_unit_series(dim, dim).pow(m + 1);
    SeriesPolyZ restriction = SeriesPolyZ::unit(dim);
    for (int j = 1; j <= dim; ++j)
        restriction.set_coeff(j, PolyZ::monomial(Partition::single(j), int_pow(Int(d), j)));
    return (ambient * restriction.recip()).coeff(dim) * Int(d);
}

ChernRecord cpn_record(int n, Convention convention) {
    PolyZ gf = convention == Convention::tangent ? cpn_tangent_gf(n) : cpn_normal_gf(n);
    return record_from_gf("CP^" + std::to_string(n), n, convention, gf);
}

ChernRecord theta_record(int n, Convention convention) {
    PolyZ gf = convention == Convention::tangent ? theta_tangent_gf(n) : theta_normal_gf(n);
    return record_from_gf("Theta^" + std::to_string(n), n, convention, gf);
}

ChernRecord theta_power_record(int n, int k, Convention convention) {
    ThetaPowerGF gf = theta_power_gf(n, k);
    return record_from_gf("Theta^" + std::to_string(n) + "(" + std::to_string(k) + ")", n,
                          convention,
                          convention == Convention::tangent ? gf.tangent : gf.normal);
}

ChernRecord hypersurface_record(int m, int d) {
    return record_from_gf(
        "V_" + std::to_string(d) + " in CP^" + std::to_string(m), m - 1,
        Convention::tangent, hypersurface_gf(m, d));
}

IntByPartition convert_convention_numbers(int dimension, const IntByPartition& numbers,
                                          Convention /*from*/) {
    // Same change in both directions: the total Chern classes of tangent and
    // normal bundle are mutual reciprocals, so c_i(other) = M_i(c_1, ..., c_i)
    // with this bundle's classes as variables.
    if (dimension < 1) throw std::invalid_argument("convert_convention_numbers: need dim >= 1");

    // 1. monomial numbers -> product-basis numbers of the same bundle
    IntByPartition products = chern_basis_convert(numbers, BasisDirection::monomial_to_products);

    // 2. products of the other bundle's classes, expanded in this bundle's
    //    product basis: prod_i M_{mu_i} evaluated at t_j = c_j.
    IntByPartition other_products;
    for (const Partition& mu : partitions_of(dimension)) {
        PolyZ expansion = PolyZ::constant(1);
        for (int part : mu.parts()) expansion *= mult_inversion(part);
        Int value = 0;
        for (const auto& [rho, coef] : expansion.terms()) {
            auto it = products.find(rho);
            if (it == products.end())
                throw VerificationError("convert_convention_numbers: missing product value");
            value += coef * it->second;
        }
        other_products.emplace(mu, value);
    }

    // 3. back to monomial numbers
    return chern_basis_convert(other_products, BasisDirection::products_to_monomial);
}

ChernRecord convert_record(const ChernRecord& record) {
    if (!record.complete)
        throw std::invalid_argument("convert_record: record must be complete");
    ChernRecord out;
    out.name = record.name;
    out.dimension = record.dimension;
    out.convention =
        record.convention == Convention::tangent ? Convention::normal : Convention::tangent;
    out.numbers =
        convert_convention_numbers(record.dimension, record.numbers, record.convention);
    out.complete = true;
    return out;
}

Int euler_characteristic(const ChernRecord& record) {
    const Partition top = Partition::ones(record.dimension);
    if (record.convention == Convention::tangent) {
        auto it = record.numbers.find(top);
        if (it == record.numbers.end())
            throw std::invalid_argument("euler_characteristic: c_(1,...,1) not present");
        return it->second;
    }
    return convert_record(record).numbers.at(top);
}

} // namespace chernum
