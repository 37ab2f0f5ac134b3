#include <doctest.h>

#include <adicamata/dimension_group.hpp>
#include <adicamata/pipeline.hpp>

#include <bit>
#include <numeric>
#include <random>
#include <vector>

using namespace adicamata;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m((int)rows.size());
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// cofactor expansion, the slow reference
long long det_ref(const IntMatrix& m) {
    if (m.n == 0) return 1;
    if (m.n == 1) return m.at(0, 0);
    long long sum = 0;
    for (int j = 0; j < m.n; ++j) {
        IntMatrix minor(m.n - 1);
        for (int r = 1; r < m.n; ++r)
            for (int c = 0, cc = 0; c < m.n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        long long term = m.at(0, j) * det_ref(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

// gcd of the k x k minors (0 when all vanish)
long long minor_gcd(const IntMatrix& m, int k) {
    long long g = 0;
    // enumerate k-subsets via bitmasks; n <= 6 here
    for (int rm = 0; rm < (1 << m.n); ++rm) {
        if (std::popcount((unsigned)rm) != k) continue;
        for (int cm = 0; cm < (1 << m.n); ++cm) {
            if (std::popcount((unsigned)cm) != k) continue;
            IntMatrix sub(k);
            int ri = 0;
            for (int i = 0; i < m.n; ++i) {
                if (!(rm >> i & 1)) continue;
                int ci = 0;
                for (int j = 0; j < m.n; ++j) {
                    if (!(cm >> j & 1)) continue;
                    sub.at(ri, ci++) = m.at(i, j);
                }
                ++ri;
            }
            g = std::gcd(g, det_ref(sub));
        }
    }
    return g;
}

// invariant factors as quotients d_k / d_(k-1) of minor gcds
std::vector<long long> invariant_factors_ref(const IntMatrix& m) {
    std::vector<long long> d(m.n + 1, 0);
    d[0] = 1;
    int rank = 0;
    for (int k = 1; k <= m.n; ++k) {
        d[k] = minor_gcd(m, k);
        if (d[k] != 0) rank = k;
    }
    std::vector<long long> out;
    for (int k = 1; k <= rank; ++k) out.push_back(d[k] / d[k - 1]);
    while ((int)out.size() < m.n) out.push_back(0);
    return out;
}

int rank_ref(const IntMatrix& m) {
    for (int k = m.n; k >= 1; --k)
        if (minor_gcd(m, k) != 0) return k;
    return 0;
}

IntMatrix random_matrix(std::mt19937_64& g, int n) {
    std::uniform_int_distribution<int> entry(-3, 3);
    IntMatrix m(n);
    for (auto& e : m.entries) e = entry(g);
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    IntMatrix id = IntMatrix::identity(3);
    IntMatrix m = from_rows({{1, 2, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(mat_mul(id, m) == m);
    CHECK(mat_mul(m, id) == m);
    CHECK(mat_pow(m, 0) == id);
    CHECK(mat_pow(m, 2) == mat_mul(m, m));
    CHECK(transpose(transpose(m)) == m);
    CHECK(determinant(id) == 1);
    CHECK(determinant(m) == det_ref(m));
    CHECK(matrix_rank(m) == 3);
    CHECK(matrix_rank(from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("adjacency of the collared diagram") {
    Pipeline p = build_pipeline();
    IntMatrix m = adjacency_matrix(p.path_automaton);
    IntMatrix want = from_rows({
        {0, 1, 1, 0, 0, 0},
        {1, 0, 1, 0, 0, 0},
        {0, 1, 0, 0, 0, 1},
        {1, 0, 0, 0, 1, 0},
        {0, 0, 0, 1, 0, 1},
        {0, 0, 0, 1, 1, 0},
    });
    CHECK(m == want);
    long long total = 0;
    for (long long e : m.entries) total += e;
    CHECK(total == 12);
    CHECK(determinant(m) == 0);
    CHECK(matrix_rank(m) == 5);
}

TEST_CASE("elimination agrees with cofactor expansion") {
    std::mt19937_64 g(23);
    for (int round = 0; round < 50; ++round) {
        int n = 1 + (int)(g() % 5);
        IntMatrix m = random_matrix(g, n);
        CHECK(determinant(m) == det_ref(m));
        CHECK(matrix_rank(m) == rank_ref(m));
    }
}

TEST_CASE("smith form is a valid decomposition") {
    Pipeline p = build_pipeline();
    IntMatrix m = adjacency_matrix(p.path_automaton);
    std::mt19937_64 g(29);
    std::vector<IntMatrix> cases = {m, transpose(m), mat_pow(m, 2), mat_pow(transpose(m), 3)};
    for (int round = 0; round < 20; ++round)
        cases.push_back(random_matrix(g, 1 + (int)(g() % 4)));
    for (const IntMatrix& c : cases) {
        SmithResult r = smith_normal_form(c);
        CHECK(mat_mul(mat_mul(r.u, c), r.v) == r.s);
        long long du = determinant(r.u), dv = determinant(r.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (int i = 0; i < c.n; ++i)
            for (int j = 0; j < c.n; ++j)
                if (i != j) CHECK(r.s.at(i, j) == 0);
        for (int i = 0; i + 1 < c.n; ++i) {
            long long cur = r.s.at(i, i), nxt = r.s.at(i + 1, i + 1);
            CHECK(cur >= 0);
            if (cur == 0) CHECK(nxt == 0);
            if (cur != 0 && nxt != 0) CHECK(nxt % cur == 0);
        }
        CHECK(invariant_factors(c) == invariant_factors_ref(c));
    }
}

TEST_CASE("invariant factors of matrix powers") {
    Pipeline p = build_pipeline();
    IntMatrix m = adjacency_matrix(p.path_automaton);
    for (IntMatrix base : {m, transpose(m)}) {
        for (int k = 1; k <= 4; ++k) {
            IntMatrix mk = mat_pow(base, k);
            std::vector<long long> want = {1, 1, 1, 1, 1LL << (k - 1), 0};
            CHECK(invariant_factors(mk) == want);
            CHECK(invariant_factors(mk) == invariant_factors_ref(mk));
            CHECK(matrix_rank(mk) == 5);
        }
    }
}

TEST_CASE("direct limit report") {
    Pipeline p = build_pipeline();
    IntMatrix m = adjacency_matrix(p.path_automaton);
    DimensionGroupReport rep = dimension_group_report(m, 4);
    CHECK(rep.rank_sequence == std::vector<int>({5, 5, 5, 5}));
    CHECK(rep.invariant_factors_sequence.size() == 4);
    CHECK(rep.invariant_factors_sequence[0] == std::vector<long long>({1, 1, 1, 1, 1, 0}));
    CHECK(rep.invariant_factors_sequence[3] == std::vector<long long>({1, 1, 1, 1, 8, 0}));
    CHECK(rep.verdict == "consistent with ℤ⁴×ℤ[1/2]");
    CHECK(rep.positive_cone.find("K₀⁺") != std::string::npos);

    IntMatrix two = from_rows({{2}});
    DimensionGroupReport doubling = dimension_group_report(two, 4);
    CHECK(doubling.verdict == "consistent with ℤ[1/2]");

    IntMatrix odd = from_rows({{3, 0}, {0, 3}});
    CHECK(dimension_group_report(odd, 4).verdict == "inconclusive");

    CHECK_THROWS(dimension_group_report(m, 1));
}
