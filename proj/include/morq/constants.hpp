#pragma once

#include <map>
#include <optional>

#include "morq/subspaces.hpp"
#include "morq/forms.hpp"

namespace morq {

// Shape data for the linear-algebra constants: subspaces U of M (x) S^{d2}
// paired against M* (x) S^{a_deg} by multiplication into S^{d2+a_deg}.
struct ConstantShape {
    int m2;    // dim M
    int d2;    // degree of the H-side forms
    int a_deg; // degree of the pairing partners
    int r;     // ambient projective dimension
};

struct ConstantQuery {
    ConstantShape shape;
    int i = 1;              // support threshold
    std::optional<int> j;   // orthogonality threshold; absent = the k(i) reading
                            // (ambient M of dimension i, full support, orth >= 1)
    uint32_t p = 2;
    std::optional<int> cap; // search ceiling; defaults to the source dimension
};

struct ConstantValue {
    long long value = 0;
    bool exhaustive = true; // false: certified lower bound only (budget truncation)
    std::optional<Matrix<PrimeField>> witness;
    std::vector<int> skipped_dims;
};

// Single-sweep table over one ambient dimension: g[u][i] = the maximal
// orthogonal-complement dimension over all u-dimensional subspaces whose
// support projection has dimension > i (-1 when no such subspace exists).
// Every k(i,j) with this ambient reads off as max{u : g[u][i] >= j}.
struct KTable {
    ConstantShape shape;
    uint32_t p = 2;
    int source_dim = 0;
    int orth_dim = 0;
    std::vector<std::vector<int>> g;
    std::vector<int> skipped_dims; // dimensions whose count exceeded the budget
};

KTable sweep_table(const ConstantShape& shape, PrimeField f,
                   unsigned long long budget, int jobs);

// k(i,j) from a table with ambient m2: support > i and orth >= j.
ConstantValue kij_from_table(const KTable& table, int i, int j);
// k(i) from a table with ambient i: full support and orth >= 1.
ConstantValue ki_from_table(const KTable& table);

// Direct search honoring the query (descends from the cap, first witness
// wins); shares the sweep machinery.
ConstantValue compute_k(const ConstantQuery& q, unsigned long long budget, int jobs);

// The constants needed by the P^2 type (d+2,1)+(d,3): k(1,11), k(2,5), k(2),
// k(3), k(1,7), k(2,1).
struct S7Constants {
    int d = 1;
    uint32_t p = 2;
    std::map<std::string, ConstantValue> values;
};
S7Constants s7_constants(int d, PrimeField f, unsigned long long budget, int jobs);

// ---- fixture matrices -------------------------------------------------

// 3x3 grids over V* (P^2) with vanishing determinant and no removable zero
// entry, and the 2x3 grids with no removable zero entry.
template <class F>
FormMatrix<F> eta1(F field) {
    FormMatrix<F> m(field, 3, 3, 3, 1);
    auto X = HomForm<F>::variable(field, 3, 0);
    auto Y = HomForm<F>::variable(field, 3, 1);
    auto Z = HomForm<F>::variable(field, 3, 2);
    m.at(0, 0) = X; m.at(0, 1) = Y;
    m.at(1, 0) = Z; m.at(1, 2) = Y;
    m.at(2, 1) = -Z; m.at(2, 2) = X;
    return m;
}

template <class F>
FormMatrix<F> eta2(F field, const std::vector<typename F::Elem>& a) {
    assert(a.size() == 10);
    FormMatrix<F> m(field, 3, 3, 3, 1);
    auto X = HomForm<F>::variable(field, 3, 0);
    auto Y = HomForm<F>::variable(field, 3, 1);
    auto Z = HomForm<F>::variable(field, 3, 2);
    m.at(0, 0) = X; m.at(0, 1) = Y; m.at(0, 2) = Z;
    m.at(1, 0) = Y;
    m.at(1, 1) = X.scaled(a[0]) + Y.scaled(a[1]);
    m.at(1, 2) = X.scaled(a[2]) + Y.scaled(a[3]) + Z.scaled(a[4]);
    m.at(2, 0) = Z;
    m.at(2, 1) = X.scaled(a[5]) + Y.scaled(a[6]) + Z.scaled(a[7]);
    m.at(2, 2) = X.scaled(a[8]) + Z.scaled(a[9]);
    return m;
}

template <class F>
FormMatrix<F> eta3(F field, const std::vector<typename F::Elem>& bc) {
    // b1 X + b2 Y + b3 Z and c2 Y + c3 Z rows; b1, c2, c3 nonzero
    assert(bc.size() == 5);
    FormMatrix<F> m(field, 2, 3, 3, 1);
    auto X = HomForm<F>::variable(field, 3, 0);
    auto Y = HomForm<F>::variable(field, 3, 1);
    auto Z = HomForm<F>::variable(field, 3, 2);
    m.at(0, 0) = X; m.at(0, 1) = Y; m.at(0, 2) = Z;
    m.at(1, 0) = Y;
    m.at(1, 1) = X.scaled(bc[0]) + Y.scaled(bc[1]) + Z.scaled(bc[2]);
    m.at(1, 2) = Y.scaled(bc[3]) + Z.scaled(bc[4]);
    return m;
}

template <class F>
FormMatrix<F> eta4(F field, const std::vector<typename F::Elem>& bc) {
    // b2 Y + b3 Z and c1 X + c2 Y + c3 Z rows; b3, c1 nonzero
    assert(bc.size() == 5);
    FormMatrix<F> m(field, 2, 3, 3, 1);
    auto X = HomForm<F>::variable(field, 3, 0);
    auto Y = HomForm<F>::variable(field, 3, 1);
    auto Z = HomForm<F>::variable(field, 3, 2);
    m.at(0, 0) = X; m.at(0, 1) = Y; m.at(0, 2) = Z;
    m.at(1, 0) = Y;
    m.at(1, 1) = Y.scaled(bc[0]) + Z.scaled(bc[1]);
    m.at(1, 2) = X.scaled(bc[2]) + Y.scaled(bc[3]) + Z.scaled(bc[4]);
    return m;
}

// ---- witness certification and kernel-dimension suite ------------------

struct WitnessReport {
    int d = 1;
    long long lower_bound = 0; // rows of alpha0 = dim S^{d-1}V*
    bool product_zero = false;
    bool alpha_rows_independent = false;
    bool alpha_cols_independent = false;
    bool beta_cols_independent = false;
    bool ok = false;
};

// Builds the explicit pair (alpha0, beta0) over Q: alpha0 has rows u_t*(X,Y,Z)
// over the monomial basis of S^{d-1}V*, beta0 is the fixed 3x5 grid of
// quadrics annihilated by every such row. Certifies k(2,5) >= dim S^{d-1}V*.
WitnessReport verify_74_witness(int d);

struct KernelBoundReport {
    int d = 2;
    uint64_t trials = 0, seed = 0;
    int eta2_max = 0, eta2_bound = 0;
    int eta3_max = 0, eta4_max = 0, eta34_bound = 0;
    int psi_max = 0, psi_bound = 0;
    int shape53_min = 0, shape53_max = 0;
    int eta1_transpose_dim = 0, eta1_bound = 0;
    bool pass = false;
};

// Seeded random-constant suite: kernel dimensions of eta2/eta3/eta4 at the
// test degree stay within their exact bounds; l x 3 grids of linear forms
// without two vanishing columns have kernel at degree 1 of dimension <= 4;
// the (0 | u f | v f) shape is measured and recorded.
KernelBoundReport kernel_bound_suite(int d, uint64_t trials, uint64_t seed);

} // namespace morq
