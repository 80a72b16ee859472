#pragma once

#include "morq/king.hpp"

namespace morq {

// Image of a morphism under the embedding into the reductive-group
// representation. For two-block types: (xi, gamma) with
//   xi    p1 x p2 over S^{d1-d2}V*, the fixed block matrix (zero row block of
//         height m1, then one X^T column block per copy of the second source),
//   gamma n x p1 over S^{d1}V*, [phi' | phi''_j * X_t ...].
// For three-block types: (xi2, xi3, gamma) with the monomial-division matrix W
// inside xi2 and xi3 = [0, V_1..V_{a32}]^T.
template <class F>
struct EmbeddedPoint {
    MorphismType type;
    bool three_block = false;
    FormMatrix<F> gamma;
    FormMatrix<F> xi;  // xi2 for three-block types
    FormMatrix<F> xi3; // empty for two-block types
};

// Support pattern of W: entry (k, j) is W_k / V_j when V_j divides W_k.
// Row index runs over the lex monomial basis of S^{d1-d3}, column index over
// the lex basis of S^{d2-d3}; entries live in S^{d1-d2}.
template <class F>
FormMatrix<F> division_matrix(F field, int num_vars, int top, int bottom) {
    const MonomialBasis& rows = MonomialBasis::get(num_vars, top);
    const MonomialBasis& cols = MonomialBasis::get(num_vars, bottom);
    FormMatrix<F> w(field, rows.size(), cols.size(), num_vars, top - bottom);
    for (int k = 0; k < rows.size(); ++k)
        for (int j = 0; j < cols.size(); ++j) {
            Exponents q(num_vars);
            bool divides = true;
            for (int v = 0; v < num_vars; ++v) {
                q[v] = rows.monomial(k)[v] - cols.monomial(j)[v];
                if (q[v] < 0) { divides = false; break; }
            }
            if (divides)
                w.at(k, j) = HomForm<F>::monomial(field, q, field.one());
        }
    return w;
}

template <class F>
EmbeddedPoint<F> build_embedding(const Morphism<F>& phi) {
    const MorphismType& t = phi.type;
    t.validate();
    F field = phi.blocks[0].field;
    int nv = t.num_vars();

    if (t.is_two_block()) {
        int m1 = t.mult(0), m2 = t.mult(1), n = t.n;
        int a = static_cast<int>(t.a21());
        int p1 = m1 + m2 * a, p2 = m2;
        int adeg = t.deg(0) - t.deg(1);
        const MonomialBasis& ab = MonomialBasis::get(nv, adeg);

        FormMatrix<F> xi(field, p1, p2, nv, adeg);
        for (int j = 0; j < m2; ++j)
            for (int s = 0; s < a; ++s)
                xi.at(m1 + j * a + s, j) =
                    HomForm<F>::monomial(field, ab.monomial(s), field.one());

        FormMatrix<F> gamma(field, n, p1, nv, t.deg(0));
        for (int row = 0; row < n; ++row) {
            for (int j = 0; j < m1; ++j) gamma.at(row, j) = phi.blocks[0].at(row, j);
            for (int j = 0; j < m2; ++j)
                for (int s = 0; s < a; ++s)
                    gamma.at(row, m1 + j * a + s) =
                        phi.blocks[1].at(row, j) *
                        HomForm<F>::monomial(field, ab.monomial(s), field.one());
        }
        return EmbeddedPoint<F>{t, false, std::move(gamma), std::move(xi),
                                FormMatrix<F>(field, 0, 0, nv, 0)};
    }

    if (!t.is_three_block())
        throw UnsupportedShape("embedding defined for two- and three-block types");

    int m = t.mult(0), n = t.n;
    int a21 = static_cast<int>(t.a21());
    int a31 = static_cast<int>(t.a31());
    int a32 = static_cast<int>(t.a32());
    int p1 = m + a21 + a31, p2 = 1 + a32;
    int d12 = t.deg(0) - t.deg(1), d23 = t.deg(1) - t.deg(2), d13 = t.deg(0) - t.deg(2);
    const MonomialBasis& ub = MonomialBasis::get(nv, d12);
    const MonomialBasis& vb = MonomialBasis::get(nv, d23);
    const MonomialBasis& wb = MonomialBasis::get(nv, d13);

    FormMatrix<F> xi2(field, p1, p2, nv, d12);
    for (int s = 0; s < a21; ++s)
        xi2.at(m + s, 0) = HomForm<F>::monomial(field, ub.monomial(s), field.one());
    FormMatrix<F> w = division_matrix(field, nv, d13, d23);
    for (int k = 0; k < a31; ++k)
        for (int j = 0; j < a32; ++j)
            xi2.at(m + a21 + k, 1 + j) = w.at(k, j);

    FormMatrix<F> xi3(field, p2, 1, nv, d23);
    for (int j = 0; j < a32; ++j)
        xi3.at(1 + j, 0) = HomForm<F>::monomial(field, vb.monomial(j), field.one());

    FormMatrix<F> gamma(field, n, p1, nv, t.deg(0));
    for (int row = 0; row < n; ++row) {
        for (int j = 0; j < m; ++j) gamma.at(row, j) = phi.blocks[0].at(row, j);
        for (int s = 0; s < a21; ++s)
            gamma.at(row, m + s) =
                phi.blocks[1].at(row, 0) *
                HomForm<F>::monomial(field, ub.monomial(s), field.one());
        for (int k = 0; k < a31; ++k)
            gamma.at(row, m + a21 + k) =
                phi.blocks[2].at(row, 0) *
                HomForm<F>::monomial(field, wb.monomial(k), field.one());
    }
    return EmbeddedPoint<F>{t, true, std::move(gamma), std::move(xi2), std::move(xi3)};
}

// omega = min over column pairs of W of the number of nonzero rows; the
// closed form 2*C(d1-d2+r, r) - C(d1-d2+r-1, r) must match the recount, and
// a21 < omega < 2*a21 always.
struct OmegaReport {
    long long closed_form = 0;
    long long recount = 0;
    long long a21 = 0;
    bool matches = false;
    bool strict_range = false;
};
OmegaReport omega(const MorphismType& t);

// Family on the embedded side; the P3 factor is one-dimensional, so only its
// dimension is tracked.
struct TildeFamily {
    Matrix<PrimeField> p2_basis;
    Matrix<PrimeField> p1_basis;
    int p3_dim = 0;
    int image_dim = 0;
};

struct TildeVerdict {
    Stability status = Stability::Stable;
    uint32_t prime = 2;
    std::optional<TildeFamily> witness;
    std::optional<Rational> witness_margin;
    std::vector<Rational> margins;
};

// Exhaustive King check on the embedded side: every P2' subspace, every P1'
// containing the xi-image of P2' (and for three-block types both choices of
// the P3 factor, gated by xi3-compatibility), with N' minimized to the
// gamma-image.
TildeVerdict tilde_decide(const EmbeddedPoint<PrimeField>& e,
                          const TildePolarization& tp,
                          unsigned long long budget);

// One entry of the reduced block-form condition list.
struct ReducedCondition {
    std::string tag;
    int k = 0;
    int i = 0;
    Rational bound;           // requires l/n > bound
    int l_strict = 0;
    int l_tight = 0;
    bool strict_reachable = false;
    bool tight_reachable = false;
};

struct ReducedReport {
    Stability status = Stability::Stable;
    uint32_t prime = 2;
    std::vector<ReducedCondition> conditions;
    std::optional<std::string> violated_tag;
};

// Reduced condition list: quantifies only the block shapes that the fixed xi
// makes possible (two-block: k in (m1+(i-1)a, m1+ia] per level i; three-block:
// the five ranges cut down by the row-span facts about xi2 and xi3). For each
// (k, l) decides whether some (p1-k)-dimensional subspace of P1 has
// gamma-image of dimension <= n-l, quantifying the cheaper side of the
// duality (subspaces of P1, or l-dimensional row spaces on the target).
// Finding none certifies semistability; strict/tight as in the full check.
ReducedReport check_reduced(const EmbeddedPoint<PrimeField>& e,
                            const TildePolarization& tp,
                            const Polarization& p,
                            unsigned long long budget);

// Zero-block bounds for the monomial-division matrix W under row/column
// operations: seeded randomized GL x GL search plus the exact column-subspace
// scan over F_p. Any excess over a bound is a hard failure.
struct ZeroBlockCheck {
    int columns = 0;            // width of the zero submatrix probed
    int bound = 0;              // maximal allowed row count
    int max_exact = 0;          // complete column-subspace scan
    int max_random = 0;         // randomized GL x GL trials
    bool pass = false;
};
struct ZeroBlockReport {
    std::vector<ZeroBlockCheck> checks;
    bool columns_span = false;  // every column combination spans S^{d1-d2}V*
    bool pass = false;
    uint64_t trials = 0;
    uint64_t seed = 0;
};
ZeroBlockReport verify_zero_block_remarks(const MorphismType& t, PrimeField f,
                                          uint64_t trials, uint64_t seed);

// gamma-image dimension of the subspace of P1 spanned by `rows`.
int gamma_image_dim(const FormMatrix<PrimeField>& gamma,
                    const std::vector<std::vector<uint32_t>>& rows);

} // namespace morq
