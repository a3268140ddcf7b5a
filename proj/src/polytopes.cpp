#include "chernum/polytopes.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace chernum {

namespace {

// Dissections of the polygon 0..span relative to its base chord (0, span),
// cached per span. Results for an interval (a, b) are the span (b-a) entries
// with all labels shifted by a.
class DissectionTable {
public:
    const std::vector<Dissection>& for_span(int span) {
        if (span < 1) throw std::invalid_argument("enumerate_dissections: span >= 1 required");
        while (static_cast<int>(table_.size()) <= span) build_next();
        return table_[static_cast<size_t>(span)];
    }

private:
    void build_next() {
        if (table_.empty()) {
            table_.push_back({});           // unused span 0
            table_.push_back({Dissection{}}); // span 1: bare edge, no cells
            return;
        }
        const int span = static_cast<int>(table_.size());
        std::vector<Dissection> out;
        std::vector<int> arcs;
        compose(span, arcs, out);
        table_.push_back(std::move(out));
    }

    // Choose the cell adjacent to the base chord: arc lengths l_1..l_r >= 1
    // summing to the span, r >= 2; each arc of length >= 2 hangs a sub-polygon.
    void compose(int remaining, std::vector<int>& arcs, std::vector<Dissection>& out) {
        if (remaining == 0) {
            if (arcs.size() >= 2) expand(arcs, out);
            return;
        }
        for (int l = 1; l <= remaining; ++l) {
            arcs.push_back(l);
            compose(remaining - l, arcs, out);
            arcs.pop_back();
        }
    }

    void expand(const std::vector<int>& arcs, std::vector<Dissection>& out) {
        const int r = static_cast<int>(arcs.size());
        std::vector<int> offsets(arcs.size());
        int pos = 0;
        for (size_t i = 0; i < arcs.size(); ++i) {
            offsets[i] = pos;
            pos += arcs[i];
        }
        // odometer over the choices for each arc of length >= 2
        std::vector<size_t> choice(arcs.size(), 0);
        while (true) {
            Dissection d;
            d.cell_sizes.push_back(r + 1);
            for (size_t i = 0; i < arcs.size(); ++i) {
                if (arcs[i] == 1) continue;
                const int a = offsets[i];
                d.diagonals.emplace_back(a, a + arcs[i]); // chord of the base cell
                const Dissection& sub = table_[static_cast<size_t>(arcs[i])][choice[i]];
                for (auto [x, y] : sub.diagonals) d.diagonals.emplace_back(x + a, y + a);
                for (int s : sub.cell_sizes) d.cell_sizes.push_back(s);
            }
            std::sort(d.diagonals.begin(), d.diagonals.end());
            std::sort(d.cell_sizes.begin(), d.cell_sizes.end(), std::greater<int>());
            out.push_back(std::move(d));
            // advance odometer
            size_t i = 0;
            for (; i < arcs.size(); ++i) {
                if (arcs[i] == 1) continue;
                if (++choice[i] < table_[static_cast<size_t>(arcs[i])].size()) break;
                choice[i] = 0;
            }
            if (i == arcs.size()) break;
        }
    }

    std::vector<std::vector<Dissection>> table_;
};

Partition cells_to_type(const std::vector<int>& cell_sizes) {
    std::vector<int> parts;
    parts.reserve(cell_sizes.size());
    for (int s : cell_sizes) parts.push_back(s - 2);
    return Partition(std::move(parts));
}

} // namespace

std::vector<Dissection> enumerate_dissections(int span) {
    static std::mutex mtx;
    static DissectionTable table;
    std::lock_guard<std::mutex> lock(mtx);
    return table.for_span(span);
}

FaceCensus dissection_census_enumerated(int n) {
    if (n < 1) throw std::invalid_argument("dissection_census: need n >= 1");
    FaceCensus census{n, PolytopeKind::associahedron, {}};
    for (const Dissection& d : enumerate_dissections(n + 1))
        census.counts[cells_to_type(d.cell_sizes)] += 1;
    return census;
}

FaceCensus dissection_census_counted(int n) {
    if (n < 1) throw std::invalid_argument("dissection_census: need n >= 1");
    // D(s) = census polynomial of the polygon with base chord spanning s
    // edges; a cell with r arcs contributes the variable t_{r-1}.
    std::vector<PolyZ> d(static_cast<size_t>(n) + 2);
    d[1] = PolyZ::constant(1);
    // conv[r][s] = sum over compositions of s into r positive arcs of prod D
    std::vector<std::vector<PolyZ>> conv(static_cast<size_t>(n) + 2,
                                         std::vector<PolyZ>(static_cast<size_t>(n) + 2));
    conv[1][1] = d[1];
    for (int s = 2; s <= n + 1; ++s) {
        for (int r = 2; r <= s; ++r) {
            PolyZ acc;
            for (int j = r - 1; j <= s - 1; ++j) acc += conv[static_cast<size_t>(r - 1)][static_cast<size_t>(j)] * d[static_cast<size_t>(s - j)];
            conv[static_cast<size_t>(r)][static_cast<size_t>(s)] = std::move(acc);
        }
        PolyZ total;
        for (int r = 2; r <= s; ++r)
            total += PolyZ::variable(r - 1) * conv[static_cast<size_t>(r)][static_cast<size_t>(s)];
        d[static_cast<size_t>(s)] = std::move(total);
        conv[1][static_cast<size_t>(s)] = d[static_cast<size_t>(s)];
    }
    FaceCensus census{n, PolytopeKind::associahedron, {}};
    for (const auto& [p, c] : d[static_cast<size_t>(n + 1)].terms()) census.counts.emplace(p, c);
    return census;
}

FaceCensus dissection_census(int n) {
    return n <= 8 ? dissection_census_enumerated(n) : dissection_census_counted(n);
}

FaceCensus ordered_partition_census(int n) {
    if (n < 1) throw std::invalid_argument("ordered_partition_census: need n >= 1");
    FaceCensus census{n, PolytopeKind::permutohedron, {}};
    for (const Partition& lambda : partitions_of(n)) {
        Int ways = factorial(n);
        for (int part : lambda.parts()) ways = divide_exact(ways, factorial(part));
        Int arrangements = factorial(lambda.size());
        int run = 1;
        const auto& parts = lambda.parts();
        for (size_t i = 1; i <= parts.size(); ++i) {
            if (i < parts.size() && parts[i] == parts[i - 1]) {
                ++run;
            } else {
                arrangements = divide_exact(arrangements, factorial(run));
                run = 1;
            }
        }
        census.counts.emplace(lambda, ways * arrangements);
    }
    return census;
}

FaceCensus ordered_partition_census_enumerated(int n) {
    if (n < 1) throw std::invalid_argument("ordered_partition_census: need n >= 1");
    if (n > 7)
        throw std::invalid_argument("ordered_partition_census_enumerated: n too large");
    FaceCensus census{n, PolytopeKind::permutohedron, {}};
    for (int k = 1; k <= n; ++k) {
        std::vector<int> f(static_cast<size_t>(n), 0);
        while (true) {
            std::vector<int> sizes(static_cast<size_t>(k), 0);
            for (int v : f) ++sizes[static_cast<size_t>(v)];
            if (std::find(sizes.begin(), sizes.end(), 0) == sizes.end())
                census.counts[Partition(sizes)] += 1;
            int pos = n - 1;
            while (pos >= 0 && f[static_cast<size_t>(pos)] == k - 1) {
                f[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++f[static_cast<size_t>(pos)];
        }
    }
    return census;
}

Int fubini_number(int n) {
    if (n < 0) throw std::invalid_argument("fubini_number: need n >= 0");
    std::vector<Int> a(static_cast<size_t>(n) + 1);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int acc = 0;
        for (int k = 1; k <= m; ++k) acc += binomial(m, k) * a[static_cast<size_t>(m - k)];
        a[static_cast<size_t>(m)] = acc;
    }
    return a[static_cast<size_t>(n)];
}

bool match_coefficients(const FaceCensus& census, const PolyZ& poly) {
    if (!poly.is_zero() && (!poly.is_homogeneous() || poly.max_weight() != census.n))
        throw std::invalid_argument("match_coefficients: weight mismatch");
    if (census.counts.size() != poly.terms().size()) return false;
    for (const auto& [p, count] : census.counts) {
        Int expected = p.size() % 2 == 0 ? count : -count;
        if (poly.coeff(p) != expected) return false;
    }
    return true;
}

} // namespace chernum
