#include "chernum/symmetric.hpp"

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace chernum {

namespace {

// Exponent vectors are packed 4 bits per variable, so nvars <= 16 and every
// exponent <= 15. Weight-capped inputs (the CLI caps n at 12 by default)
// stay well inside both bounds.
constexpr int kMaxVars = 16;
constexpr int kMaxExponent = 15;

using Monomial = std::uint64_t;

int exponent_at(Monomial m, int var) { return static_cast<int>((m >> (4 * var)) & 0xF); }

// Multiply the expansion by e_i in nvars variables: convolve with all
// squarefree monomials of degree i.
std::unordered_map<Monomial, Int> multiply_by_elementary(
    const std::unordered_map<Monomial, Int>& acc, int i, int nvars) {
    // enumerate all subsets of {0..nvars-1} of size i as packed 0/1 vectors
    std::vector<Monomial> masks;
    std::vector<int> idx(static_cast<size_t>(i));
    for (int j = 0; j < i; ++j) idx[static_cast<size_t>(j)] = j;
    while (true) {
        Monomial m = 0;
        for (int j : idx) m |= Monomial(1) << (4 * j);
        masks.push_back(m);
        int pos = i - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == nvars - i + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < i; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    std::unordered_map<Monomial, Int> out;
    out.reserve(acc.size() * 2);
    for (const auto& [mono, c] : acc)
        for (Monomial mask : masks) out[mono + mask] += c;
    return out;
}

} // namespace

PolyZ elementary_to_monomial(const Partition& mu, int nvars) {
    const int n = mu.weight();
    if (nvars < n) throw std::invalid_argument("elementary_to_monomial: need nvars >= weight");
    if (nvars > kMaxVars) throw std::invalid_argument("elementary_to_monomial: nvars > 16 unsupported");
    if (n > kMaxExponent) throw std::invalid_argument("elementary_to_monomial: weight > 15 unsupported");

    std::unordered_map<Monomial, Int> acc;
    acc.emplace(0, 1);
    for (int part : mu.parts()) acc = multiply_by_elementary(acc, part, nvars);

    // The coefficient of m_lambda in a symmetric polynomial is the
    // coefficient of its leading monomial x1^{l1} x2^{l2} ...
    PolyZ out;
    for (const auto& [mono, c] : acc) {
        std::vector<int> exps;
        bool decreasing = true;
        int prev = kMaxExponent + 1;
        for (int v = 0; v < nvars; ++v) {
            int e = exponent_at(mono, v);
            if (e > prev) {
                decreasing = false;
                break;
            }
            prev = e;
            if (e > 0) exps.push_back(e);
        }
        if (decreasing) out.add_term(Partition(std::move(exps)), c);
    }
    return out;
}

namespace {

struct BasisMatrix {
    std::vector<Partition> partitions;            // reverse-lex order
    std::vector<std::vector<Int>> rows;           // rows[mu][lambda]
};

// A[mu][lambda] = coefficient of m_lambda in e_{mu_1}...e_{mu_k}, weight n.
const BasisMatrix& basis_matrix(int n) {
    static std::mutex mtx;
    static std::map<int, BasisMatrix> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    BasisMatrix m;
    m.partitions = partitions_of(n);
    std::map<Partition, size_t, PartitionLess> index;
    for (size_t i = 0; i < m.partitions.size(); ++i) index.emplace(m.partitions[i], i);
    for (const Partition& mu : m.partitions) {
        PolyZ e = elementary_to_monomial(mu, std::max(n, 1));
        std::vector<Int> row(m.partitions.size(), 0);
        for (const auto& [lambda, c] : e.terms()) row[index.at(lambda)] = c;
        m.rows.push_back(std::move(row));
    }
    return cache.emplace(n, std::move(m)).first->second;
}

// Exact Gaussian elimination for A x = b over the rationals.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw VerificationError("basis matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

} // namespace

RationalByPartition chern_basis_convert(const RationalByPartition& values,
                                        BasisDirection direction) {
    if (values.empty()) return {};
    const int n = values.begin()->first.weight();
    for (const auto& [p, v] : values)
        if (p.weight() != n)
            throw std::invalid_argument("chern_basis_convert: mixed weights in input");

    const BasisMatrix& m = basis_matrix(n);
    if (values.size() != m.partitions.size())
        throw std::invalid_argument("chern_basis_convert: need a value for every partition of n");

    std::vector<Rational> in(m.partitions.size());
    for (size_t i = 0; i < m.partitions.size(); ++i) in[i] = values.at(m.partitions[i]);

    std::vector<Rational> out;
    if (direction == BasisDirection::monomial_to_products) {
        // P_mu = sum_lambda A[mu][lambda] c_lambda
        out.assign(m.partitions.size(), Rational(0));
        for (size_t r = 0; r < m.rows.size(); ++r)
            for (size_t c = 0; c < in.size(); ++c)
                if (m.rows[r][c] != 0) out[r] += Rational(m.rows[r][c]) * in[c];
    } else {
        std::vector<std::vector<Rational>> a(m.rows.size());
        for (size_t r = 0; r < m.rows.size(); ++r)
            a[r].assign(m.rows[r].begin(), m.rows[r].end());
        out = solve_linear(std::move(a), in);
    }

    RationalByPartition result;
    for (size_t i = 0; i < m.partitions.size(); ++i) result.emplace(m.partitions[i], out[i]);
    return result;
}

IntByPartition chern_basis_convert(const IntByPartition& values, BasisDirection direction) {
    RationalByPartition rat;
    for (const auto& [p, v] : values) rat.emplace(p, Rational(v));
    RationalByPartition conv = chern_basis_convert(rat, direction);
    IntByPartition out;
    for (const auto& [p, v] : conv) {
        if (!is_integral(v))
            throw VerificationError("chern_basis_convert: non-integral result from integer input");
        out.emplace(p, numerator(v));
    }
    return out;
}

} // namespace chernum
