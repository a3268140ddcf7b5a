#include "chernum/symmetric.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace chernum;

namespace {

// Independent oracle: the coefficient of the monomial x^lambda in
// e_{mu_1}...e_{mu_k} counts 0/1 matrices with row sums mu and column sums
// lambda. Enumerated directly over the rows.
Int zero_one_matrix_count(const std::vector<int>& rows, std::vector<int> cols, size_t r = 0) {
    if (r == rows.size()) {
        for (int c : cols)
            if (c != 0) return 0;
        return 1;
    }
    const int n = static_cast<int>(cols.size());
    Int total = 0;
    // choose the support of row r: a subset of columns of size rows[r]
    std::vector<int> pick;
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            for (int c : pick) --cols[static_cast<size_t>(c)];
            bool ok = true;
            for (int c : pick)
                if (cols[static_cast<size_t>(c)] < 0) ok = false;
            if (ok) total += zero_one_matrix_count(rows, cols, r + 1);
            for (int c : pick) ++cols[static_cast<size_t>(c)];
            return;
        }
        for (int c = start; c <= n - need; ++c) {
            pick.push_back(c);
            rec(c + 1, need - 1);
            pick.pop_back();
        }
    };
    rec(0, rows[r]);
    return total;
}

} // namespace

TEST_SUITE("symmetric") {

TEST_CASE("elementary products in the monomial basis") {
    PolyZ e1sq = elementary_to_monomial(Partition{1, 1}, 2);
    PolyZ expected;
    expected.add_term(Partition{2}, 1);
    expected.add_term(Partition{1, 1}, 2);
    CHECK(e1sq == expected);

    PolyZ e1e2 = elementary_to_monomial(Partition{2, 1}, 3);
    expected = PolyZ();
    expected.add_term(Partition{2, 1}, 1);
    expected.add_term(Partition{1, 1, 1}, 3);
    CHECK(e1e2 == expected);

    PolyZ e1cu = elementary_to_monomial(Partition{1, 1, 1}, 3);
    expected = PolyZ();
    expected.add_term(Partition{3}, 1);
    expected.add_term(Partition{2, 1}, 3);
    expected.add_term(Partition{1, 1, 1}, 6);
    CHECK(e1cu == expected);

    CHECK_THROWS_AS(elementary_to_monomial(Partition{2, 1}, 2), std::invalid_argument);
}

TEST_CASE("expansion matches the 0/1 matrix oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            PolyZ e = elementary_to_monomial(mu, n);
            for (const Partition& lambda : partitions_of(n)) {
                std::vector<int> cols = lambda.parts();
                cols.resize(static_cast<size_t>(n), 0);
                CHECK(e.coeff(lambda) == zero_one_matrix_count(mu.parts(), cols));
            }
        }
    }
}

TEST_CASE("more variables than the weight do not change the expansion") {
    for (const Partition& mu : partitions_of(4))
        CHECK(elementary_to_monomial(mu, 4) == elementary_to_monomial(mu, 6));
}

TEST_CASE("flag variety product numbers convert to monomial numbers") {
    IntByPartition products;
    products.emplace(Partition{3}, 6);
    products.emplace(Partition{2, 1}, 24);
    products.emplace(Partition{1, 1, 1}, 48);
    IntByPartition mono = chern_basis_convert(products, BasisDirection::products_to_monomial);
    CHECK(mono.at(Partition{1, 1, 1}) == 6);
    CHECK(mono.at(Partition{2, 1}) == 6);
    CHECK(mono.at(Partition{3}) == -6);

    CHECK(chern_basis_convert(mono, BasisDirection::monomial_to_products) == products);
}

TEST_CASE("surface conversion") {
    IntByPartition products;
    products.emplace(Partition{2}, 3);      // c2
    products.emplace(Partition{1, 1}, 9);   // c1^2
    IntByPartition mono = chern_basis_convert(products, BasisDirection::products_to_monomial);
    CHECK(mono.at(Partition{2}) == 3);
    CHECK(mono.at(Partition{1, 1}) == 3);
}

TEST_CASE("round trips on random integer data") {
    std::mt19937 rng(1001);
    std::uniform_int_distribution<int> dist(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
        int w = 1 + trial % 4;
        IntByPartition data;
        for (const Partition& p : partitions_of(w)) data.emplace(p, dist(rng));
        auto products = chern_basis_convert(data, BasisDirection::monomial_to_products);
        CHECK(chern_basis_convert(products, BasisDirection::products_to_monomial) == data);
    }
}

TEST_CASE("basis matrix is unimodular up to weight 6") {
    for (int n = 1; n <= 6; ++n) {
        auto parts = partitions_of(n);
        std::vector<std::vector<Rational>> m;
        for (const Partition& mu : parts) {
            PolyZ e = elementary_to_monomial(mu, n);
            std::vector<Rational> row;
            for (const Partition& lambda : parts) row.emplace_back(e.coeff(lambda));
            m.push_back(std::move(row));
        }
        // fraction-free enough: exact rational elimination, det = prod pivots
        Rational det = 1;
        const size_t dim = m.size();
        for (size_t col = 0; col < dim; ++col) {
            size_t pivot = col;
            while (pivot < dim && m[pivot][col] == 0) ++pivot;
            REQUIRE(pivot < dim);
            if (pivot != col) {
                std::swap(m[pivot], m[col]);
                det = -det;
            }
            det *= m[col][col];
            for (size_t r = col + 1; r < dim; ++r) {
                if (m[r][col] == 0) continue;
                Rational f = m[r][col] / m[col][col];
                for (size_t c = col; c < dim; ++c) m[r][c] -= f * m[col][c];
            }
        }
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("input validation") {
    IntByPartition mixed;
    mixed.emplace(Partition{2}, 1);
    mixed.emplace(Partition{1}, 1);
    CHECK_THROWS_AS(chern_basis_convert(mixed, BasisDirection::monomial_to_products),
                    std::invalid_argument);

    IntByPartition incomplete;
    incomplete.emplace(Partition{2}, 1);
    CHECK_THROWS_AS(chern_basis_convert(incomplete, BasisDirection::products_to_monomial),
                    std::invalid_argument);
}

} // TEST_SUITE
