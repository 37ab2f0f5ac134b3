#pragma once

#include <adicamata/safety_automaton.hpp>

#include <string>
#include <vector>

namespace adicamata {

// square integer matrix, row-major, exact arithmetic only
struct IntMatrix {
    int n = 0;
    std::vector<long long> entries;

    IntMatrix() = default;
    explicit IntMatrix(int size) : n(size), entries((size_t)size * size, 0) {}

    long long& at(int i, int j) { return entries[(size_t)i * n + j]; }
    long long at(int i, int j) const { return entries[(size_t)i * n + j]; }

    static IntMatrix identity(int size);

    bool operator==(const IntMatrix& other) const = default;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_pow(const IntMatrix& m, int k);
IntMatrix transpose(const IntMatrix& m);

// fraction-free elimination; exact for the matrix sizes used here
long long determinant(const IntMatrix& m);
int matrix_rank(const IntMatrix& m);

// entry (i, j) counts transitions i -> j, any symbol
IntMatrix adjacency_matrix(const SafetyAutomaton& a);

// u * m * v = s with u, v unimodular and s diagonal, each nonzero diagonal
// entry dividing the next
struct SmithResult {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
};
SmithResult smith_normal_form(const IntMatrix& m);

// diagonal of the Smith form, zeros included
std::vector<long long> invariant_factors(const IntMatrix& m);

struct DimensionGroupReport {
    std::vector<int> rank_sequence;
    std::vector<std::vector<long long>> invariant_factors_sequence;
    std::string verdict;
    std::string positive_cone;
};

// ranks and invariant factors of m^1 .. m^iterations; the verdict names the
// direct-limit group these invariants are consistent with
DimensionGroupReport dimension_group_report(const IntMatrix& m, int iterations);

}
