#include <adicamata/dimension_group.hpp>

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace adicamata {

IntMatrix IntMatrix::identity(int size) {
    IntMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("size mismatch");
    IntMatrix r(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            long long x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < a.n; ++j) r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

IntMatrix mat_pow(const IntMatrix& m, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    IntMatrix r = IntMatrix::identity(m.n);
    for (int i = 0; i < k; ++i) r = mat_mul(r, m);
    return r;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

namespace {

// Bareiss fraction-free elimination; divisions are exact
void bareiss(IntMatrix& m, int& rank, long long& det) {
    int n = m.n;
    long long prev = 1;
    int sign = 1;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pivot = -1;
        for (int i = row; i < n; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(row, j));
            sign = -sign;
        }
        for (int i = row + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j)
                m.at(i, j) = (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++row;
    }
    rank = row;
    det = (rank == n) ? sign * prev : 0;
}

}

long long determinant(const IntMatrix& m) {
    IntMatrix w = m;
    int rank = 0;
    long long det = 0;
    bareiss(w, rank, det);
    return det;
}

int matrix_rank(const IntMatrix& m) {
    IntMatrix w = m;
    int rank = 0;
    long long det = 0;
    bareiss(w, rank, det);
    return rank;
}

IntMatrix adjacency_matrix(const SafetyAutomaton& a) {
    int n = (int)a.states.size();
    IntMatrix m(n);
    for (const auto& t : a.transitions) ++m.at(t.src, t.dst);
    return m;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    for (int j = 0; j < m.n; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.n; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a -= q * row b
void row_sub(IntMatrix& m, int a, int b, long long q) {
    for (int j = 0; j < m.n; ++j) m.at(a, j) -= q * m.at(b, j);
}

// col a -= q * col b
void col_sub(IntMatrix& m, int a, int b, long long q) {
    for (int i = 0; i < m.n; ++i) m.at(i, a) -= q * m.at(i, b);
}

void negate_row(IntMatrix& m, int a) {
    for (int j = 0; j < m.n; ++j) m.at(a, j) = -m.at(a, j);
}

}

SmithResult smith_normal_form(const IntMatrix& m) {
    int n = m.n;
    SmithResult r{IntMatrix::identity(n), m, IntMatrix::identity(n)};
    IntMatrix& s = r.s;
    for (int t = 0; t < n; ++t) {
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j)
                if (s.at(i, j) != 0 &&
                    (pi < 0 || std::llabs(s.at(i, j)) < std::llabs(s.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) { swap_rows(s, t, pi); swap_rows(r.u, t, pi); }
        if (pj != t) { swap_cols(s, t, pj); swap_cols(r.v, t, pj); }
        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = 0; i < n; ++i) {
                if (i == t || s.at(i, t) == 0) continue;
                long long q = s.at(i, t) / s.at(t, t);
                row_sub(s, i, t, q);
                row_sub(r.u, i, t, q);
                if (s.at(i, t) != 0) {
                    swap_rows(s, t, i);
                    swap_rows(r.u, t, i);
                    settled = false;
                }
            }
            for (int j = 0; j < n; ++j) {
                if (j == t || s.at(t, j) == 0) continue;
                long long q = s.at(t, j) / s.at(t, t);
                col_sub(s, j, t, q);
                col_sub(r.v, j, t, q);
                if (s.at(t, j) != 0) {
                    swap_cols(s, t, j);
                    swap_cols(r.v, t, j);
                    settled = false;
                }
            }
            if (settled) {
                for (int i = t + 1; i < n && settled; ++i)
                    for (int j = t + 1; j < n && settled; ++j)
                        if (s.at(i, j) % s.at(t, t) != 0) {
                            row_sub(s, t, i, -1);
                            row_sub(r.u, t, i, -1);
                            settled = false;
                        }
            }
        }
        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(r.u, t);
        }
    }
    return r;
}

std::vector<long long> invariant_factors(const IntMatrix& m) {
    IntMatrix s = smith_normal_form(m).s;
    std::vector<long long> f(m.n);
    for (int i = 0; i < m.n; ++i) f[i] = s.at(i, i);
    return f;
}

namespace {

std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(k)) out += digits[c - '0'];
    return out;
}

}

DimensionGroupReport dimension_group_report(const IntMatrix& m, int iterations) {
    if (iterations < 2) throw std::invalid_argument("need at least two iterations");
    DimensionGroupReport rep;
    std::vector<long long> two_parts;
    IntMatrix p = IntMatrix::identity(m.n);
    for (int k = 1; k <= iterations; ++k) {
        p = mat_mul(p, m);
        auto f = invariant_factors(p);
        int rank = 0;
        long long two_part = 1;
        for (long long d : f) {
            if (d == 0) continue;
            ++rank;
            while (d % 2 == 0) {
                two_part *= 2;
                d /= 2;
            }
        }
        rep.rank_sequence.push_back(rank);
        rep.invariant_factors_sequence.push_back(f);
        two_parts.push_back(two_part);
    }
    bool stable_rank = true;
    for (int r : rep.rank_sequence)
        if (r != rep.rank_sequence.back()) stable_rank = false;
    bool doubling = true;
    for (size_t i = 0; i + 1 < two_parts.size(); ++i)
        if (two_parts[i + 1] != 2 * two_parts[i]) doubling = false;
    int rank = rep.rank_sequence.back();
    if (stable_rank && doubling && rank >= 1) {
        int free_rank = rank - 1;
        std::string group = "ℤ[1/2]";
        if (free_rank == 1) group = "ℤ×" + group;
        else if (free_rank > 1) group = "ℤ" + superscript(free_rank) + "×" + group;
        rep.verdict = "consistent with " + group;
        if (free_rank == 4)
            rep.positive_cone =
                "K₀⁺ = {0}∪(ℤ⁴×ℤ₊[1/2])";
    } else {
        rep.verdict = "inconclusive";
    }
    return rep;
}

}
