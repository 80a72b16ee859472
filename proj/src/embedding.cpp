#include "morq/embedding.hpp"

#include <algorithm>
#include <random>

namespace morq {

OmegaReport omega(const MorphismType& t) {
    t.validate();
    if (!t.is_three_block())
        throw UnsupportedShape("omega is defined for three-block types");
    int nv = t.num_vars();
    int d13 = t.deg(0) - t.deg(2), d23 = t.deg(1) - t.deg(2);
    const MonomialBasis& rows = MonomialBasis::get(nv, d13);
    const MonomialBasis& cols = MonomialBasis::get(nv, d23);
    assert(cols.size() >= 2);

    auto divides = [&](const Exponents& den, const Exponents& num) {
        for (int v = 0; v < nv; ++v)
            if (num[v] < den[v]) return false;
        return true;
    };

    long long best = -1;
    for (int i = 0; i < cols.size(); ++i)
        for (int j = i + 1; j < cols.size(); ++j) {
            long long cnt = 0;
            for (int k = 0; k < rows.size(); ++k)
                if (divides(cols.monomial(i), rows.monomial(k)) ||
                    divides(cols.monomial(j), rows.monomial(k)))
                    ++cnt;
            if (best < 0 || cnt < best) best = cnt;
        }

    OmegaReport rep;
    rep.a21 = t.a21();
    rep.recount = best;
    rep.closed_form = 2 * binom_ll(t.deg(0) - t.deg(1) + t.r, t.r) -
                      binom_ll(t.deg(0) - t.deg(1) + t.r - 1, t.r);
    rep.matches = rep.closed_form == rep.recount;
    rep.strict_range = rep.a21 < rep.recount && rep.recount < 2 * rep.a21;
    return rep;
}

namespace {

// coefficient expansion of the xi-image of a subspace of P2
std::vector<std::vector<uint32_t>> xi_image_rows(const FormMatrix<PrimeField>& xi,
                                                 const Matrix<PrimeField>& p2_basis) {
    PrimeField f = xi.field;
    int p1 = xi.rows;
    int dim_forms = xi.rows > 0 && xi.cols > 0 ? xi.at(0, 0).basis->size()
                                               : sym_dim(xi.nvars - 1, xi.degree);
    RankAccumulator<PrimeField> acc(f, p1);
    std::vector<uint32_t> vec(p1);
    for (int u = 0; u < p2_basis.rows(); ++u) {
        for (int s = 0; s < dim_forms; ++s) {
            for (int row = 0; row < p1; ++row) {
                uint32_t v = 0;
                for (int col = 0; col < xi.cols; ++col) {
                    uint32_t c = p2_basis.at(u, col);
                    if (c == 0) continue;
                    v = f.add(v, f.mul(c, xi.at(row, col).coeffs[s]));
                }
                vec[row] = v;
            }
            acc.insert(vec);
        }
    }
    return acc.rows();
}

} // namespace

int gamma_image_dim(const FormMatrix<PrimeField>& gamma,
                    const std::vector<std::vector<uint32_t>>& rows) {
    PrimeField f = gamma.field;
    int n = gamma.rows;
    int dim_forms = sym_dim(gamma.nvars - 1, gamma.degree);
    RankAccumulator<PrimeField> acc(f, n);
    std::vector<uint32_t> col(n);
    for (const auto& u : rows) {
        for (int s = 0; s < dim_forms; ++s) {
            for (int row = 0; row < n; ++row) {
                uint32_t v = 0;
                for (int c = 0; c < gamma.cols; ++c) {
                    if (u[c] == 0) continue;
                    v = f.add(v, f.mul(u[c], gamma.at(row, c).coeffs[s]));
                }
                col[row] = v;
            }
            if (acc.insert(col) && acc.full()) return n;
        }
    }
    return acc.rank();
}

TildeVerdict tilde_decide(const EmbeddedPoint<PrimeField>& e,
                          const TildePolarization& tp,
                          unsigned long long budget) {
    PrimeField f = e.gamma.field;
    const MorphismType& t = e.type;
    int p1 = static_cast<int>(t.p1());
    int p2 = static_cast<int>(t.p2());
    int n = t.n;

    if (!tp.alpha2_positive())
        throw UnsupportedShape("tilde check requires alpha2 > 0");
    if (e.three_block) {
        if (!tp.alpha3_positive())
            throw UnsupportedShape("tilde check requires alpha3 > 0 for three-block types");
        // lambda1 * p1 < 1 follows from alpha2 > 0 but is gated explicitly
        if (!(tp.alphas[0] * Rational(p1) < Rational(1)))
            throw UnsupportedShape("tilde check requires lambda1 * p1 < 1");
    }

    // xi3-image inside P2 (three-block only)
    std::optional<RankAccumulator<PrimeField>> xi3_span;
    if (e.three_block) {
        xi3_span.emplace(f, p2);
        int dim_forms = sym_dim(e.xi3.nvars - 1, e.xi3.degree);
        std::vector<uint32_t> vec(p2);
        for (int s = 0; s < dim_forms; ++s) {
            for (int row = 0; row < p2; ++row) vec[row] = e.xi3.at(row, 0).coeffs[s];
            xi3_span->insert(vec);
        }
    }

    // budget: count the (P2', P1') pairs first
    std::vector<Matrix<PrimeField>> p2subs = all_subspaces(f, p2, budget);
    Integer pairs(0);
    std::vector<int> image_dims;
    for (const auto& s2 : p2subs) {
        auto img = xi_image_rows(e.xi, s2);
        int q = p1 - static_cast<int>(img.size());
        image_dims.push_back(static_cast<int>(img.size()));
        for (int j = 0; j <= q; ++j) pairs += gaussian_binomial(q, j, f.p);
    }
    if (pairs > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("tilde_decide", pairs.fits_ulong_p() ? pairs.get_ui() : ~0ull,
                             budget);

    TildeVerdict v;
    v.prime = f.p;
    std::set<Rational> margins;
    std::optional<TildeFamily> violator, tight;
    Rational violator_margin;

    for (const auto& s2 : p2subs) {
        auto img = xi_image_rows(e.xi, s2);
        int dim_i = static_cast<int>(img.size());

        // echelonize the image to find its pivot columns
        Matrix<PrimeField> imat(f, dim_i, p1);
        for (int i = 0; i < dim_i; ++i)
            for (int j = 0; j < p1; ++j) imat.at(i, j) = img[i][j];
        auto ech = imat.rref();
        std::vector<bool> is_pivot(p1, false);
        for (int c : ech.pivots) is_pivot[c] = true;
        std::vector<int> free_coords;
        for (int j = 0; j < p1; ++j)
            if (!is_pivot[j]) free_coords.push_back(j);
        int q = static_cast<int>(free_coords.size());

        bool p3_ok = true; // may the P3 factor be full for this P2'?
        if (e.three_block) {
            RankAccumulator<PrimeField> span(f, p2);
            for (int i = 0; i < s2.rows(); ++i) {
                std::vector<uint32_t> row(p2);
                for (int j = 0; j < p2; ++j) row[j] = s2.at(i, j);
                span.insert(row);
            }
            p3_ok = true;
            for (const auto& r : xi3_span->rows())
                if (!span.contains(r)) { p3_ok = false; break; }
        }

        Matrix<PrimeField> sq;
        for (int j = 0; j <= q; ++j) {
            SubspaceIterator it(f, q, j);
            while (it.next(sq)) {
                std::vector<std::vector<uint32_t>> basis;
                for (int i = 0; i < dim_i; ++i) {
                    std::vector<uint32_t> row(p1);
                    for (int c = 0; c < p1; ++c) row[c] = ech.mat.at(i, c);
                    basis.push_back(std::move(row));
                }
                for (int i = 0; i < j; ++i) {
                    std::vector<uint32_t> row(p1, 0);
                    for (int c = 0; c < q; ++c) row[free_coords[c]] = sq.at(i, c);
                    basis.push_back(std::move(row));
                }
                int dp1 = dim_i + j;
                int image = gamma_image_dim(e.gamma, basis);

                int p3_max = e.three_block ? 1 : 0;
                for (int dp3 = 0; dp3 <= p3_max; ++dp3) {
                    if (dp3 == 1 && !p3_ok) continue;
                    bool all_zero = s2.rows() == 0 && dp1 == 0 && dp3 == 0;
                    bool all_full = s2.rows() == p2 && dp1 == p1 &&
                                    (!e.three_block || dp3 == 1) && image == n;
                    if (all_zero || all_full) continue;
                    Rational rhs = tp.alphas[0] * Rational(dp1) +
                                   tp.alphas[1] * Rational(s2.rows());
                    if (e.three_block) rhs += tp.alphas[2] * Rational(dp3);
                    Rational margin = tp.beta1 * Rational(image) - rhs;
                    margins.insert(margin);
                    if (margin < Rational(0)) {
                        if (!violator) {
                            Matrix<PrimeField> p1b(f, dp1, p1);
                            for (int i = 0; i < dp1; ++i)
                                for (int c = 0; c < p1; ++c) p1b.at(i, c) = basis[i][c];
                            violator = TildeFamily{s2, p1b, dp3, image};
                            violator_margin = margin;
                        }
                    } else if (margin.is_zero() && !tight) {
                        Matrix<PrimeField> p1b(f, dp1, p1);
                        for (int i = 0; i < dp1; ++i)
                            for (int c = 0; c < p1; ++c) p1b.at(i, c) = basis[i][c];
                        tight = TildeFamily{s2, p1b, dp3, image};
                    }
                }
            }
        }
    }

    v.margins.assign(margins.begin(), margins.end());
    if (violator) {
        v.status = Stability::Unstable;
        v.witness = violator;
        v.witness_margin = violator_margin;
    } else if (tight) {
        v.status = Stability::ProperlySemistable;
        v.witness = tight;
        v.witness_margin = Rational(0);
    } else {
        v.status = Stability::Stable;
    }
    return v;
}

namespace {

// does some (p1-k)-dimensional subspace of P1 have gamma-image of dim <= n-l?
bool block_reachable(const FormMatrix<PrimeField>& gamma, int k, int l,
                     unsigned long long budget, const char* where) {
    PrimeField f = gamma.field;
    int p1 = gamma.cols, n = gamma.rows;
    if (l > n) return false;
    int j = p1 - k;
    if (j < 0) return false;
    if (j == 0) return true; // empty subspace, image 0 <= n-l since l <= n

    Integer col_count = gaussian_binomial(p1, j, f.p);
    Integer row_count = gaussian_binomial(n, l, f.p);
    Integer cap(static_cast<unsigned long>(budget));
    if (col_count > cap && row_count > cap)
        throw BudgetExceeded(where,
                             (col_count < row_count ? col_count : row_count).fits_ulong_p()
                                 ? (col_count < row_count ? col_count : row_count).get_ui()
                                 : ~0ull,
                             budget);

    int dim_forms = sym_dim(gamma.nvars - 1, gamma.degree);

    if (col_count <= row_count) {
        SubspaceIterator it(f, p1, j);
        Matrix<PrimeField> s;
        while (it.next(s)) {
            std::vector<std::vector<uint32_t>> rows;
            rows.reserve(j);
            for (int i = 0; i < j; ++i) {
                std::vector<uint32_t> r(p1);
                for (int c = 0; c < p1; ++c) r[c] = s.at(i, c);
                rows.push_back(std::move(r));
            }
            if (gamma_image_dim(gamma, rows) <= n - l) return true;
        }
        return false;
    }

    // dual route: an l-dimensional row space annihilating the image of a
    // (p1-k)-dimensional subspace exists iff the stacked functional matrix
    // L * gamma has rank <= k
    SubspaceIterator it(f, n, l);
    Matrix<PrimeField> L;
    while (it.next(L)) {
        RankAccumulator<PrimeField> acc(f, p1);
        std::vector<uint32_t> row(p1);
        bool small = true;
        for (int s = 0; s < L.rows() && small; ++s) {
            for (int tdx = 0; tdx < dim_forms; ++tdx) {
                for (int u = 0; u < p1; ++u) {
                    uint32_t v = 0;
                    for (int r = 0; r < n; ++r) {
                        uint32_t c = L.at(s, r);
                        if (c == 0) continue;
                        v = f.add(v, f.mul(c, gamma.at(r, u).coeffs[tdx]));
                    }
                    row[u] = v;
                }
                if (acc.insert(row) && acc.rank() > k) { small = false; break; }
            }
        }
        if (small && acc.rank() <= k) return true;
    }
    return false;
}

void append_condition(std::vector<ReducedCondition>& out, const std::string& tag,
                      int k, int i, const Rational& bound, int n) {
    ReducedCondition c;
    c.tag = tag;
    c.k = k;
    c.i = i;
    c.bound = bound;
    Rational t = Rational(n) * bound;
    Integer ls = t.floor() + 1, lt = t.ceil();
    Integer cap(n + 1);
    if (ls > cap) ls = cap;
    if (lt > cap) lt = cap;
    if (lt < 0) lt = 0;
    c.l_strict = static_cast<int>(ls.get_si());
    c.l_tight = static_cast<int>(lt.get_si());
    out.push_back(std::move(c));
}

} // namespace

ReducedReport check_reduced(const EmbeddedPoint<PrimeField>& e,
                            const TildePolarization& tp,
                            const Polarization& p,
                            unsigned long long budget) {
    const MorphismType& t = e.type;
    PrimeField f = e.gamma.field;
    int n = t.n;
    int p1 = static_cast<int>(t.p1());

    if (!tp.alpha2_positive())
        throw UnsupportedShape("reduced check requires alpha2 > 0");
    if (e.three_block && !tp.alpha3_positive())
        throw UnsupportedShape("reduced check requires alpha3 > 0 for three-block types");

    const Rational& l1 = p.lambdas[0];
    std::vector<ReducedCondition> conds;

    if (!e.three_block) {
        int m1 = t.mult(0), m2 = t.mult(1);
        int a = static_cast<int>(t.a21());
        const Rational& a2 = tp.alphas[1];
        for (int i = 0; i <= m2; ++i) {
            int klo = i == 0 ? 0 : m1 + (i - 1) * a + 1;
            int khi = std::min(m1 + i * a, p1 - 1);
            for (int k = std::max(klo, 0); k <= khi; ++k)
                append_condition(conds, "level i=" + std::to_string(i), k, i,
                                 Rational(k) * l1 + Rational(i) * a2, n);
        }
    } else {
        int m = t.mult(0);
        int a21 = static_cast<int>(t.a21());
        int a31 = static_cast<int>(t.a31());
        int a32 = static_cast<int>(t.a32());
        OmegaReport om = omega(t);
        assert(om.matches);
        int w = static_cast<int>(om.recount);
        const Rational& a2 = tp.alphas[1];
        const Rational& a3 = tp.alphas[2];

        for (int k = 0; k <= std::min(m, p1 - 1); ++k)
            append_condition(conds, "xi2 rows zero", k, 0, Rational(k) * l1, n);
        for (int k = m + 1; k <= std::min(m + a21, p1 - 1); ++k)
            append_condition(conds, "xi3 level i=1", k, 1, Rational(k) * l1 + a2, n);
        for (int i = 2; i <= a32 - 1; ++i)
            for (int k = m + a21 + 1; k <= std::min(m + a21 + a31 - w, p1 - 1); ++k)
                append_condition(conds, "mid level i=" + std::to_string(i), k, i,
                                 Rational(k) * l1 + Rational(i) * a2 + a3, n);
        for (int k = m + a21 + a31 - w + 1; k <= std::min(m + a31, p1 - 1); ++k)
            append_condition(conds, "level i=a32", k, a32,
                             Rational(k) * l1 + Rational(a32) * a2 + a3, n);
        for (int k = m + a31 + 1; k <= p1 - 1; ++k)
            append_condition(conds, "level i=a32+1", k, a32 + 1,
                             Rational(k) * l1 + Rational(a32 + 1) * a2 + a3, n);
    }

    ReducedReport rep;
    rep.prime = f.p;
    for (auto& c : conds) {
        c.strict_reachable = block_reachable(e.gamma, c.k, c.l_strict, budget,
                                             "check_reduced");
        if (c.strict_reachable)
            c.tight_reachable = true;
        else if (c.l_tight < c.l_strict && c.l_tight >= 1)
            // l_tight = 0 only at (k,i) = (0,0), whose equality family is the
            // inadmissible all-full one
            c.tight_reachable = block_reachable(e.gamma, c.k, c.l_tight, budget,
                                                "check_reduced");
        rep.conditions.push_back(c);
        if (c.strict_reachable && !rep.violated_tag) rep.violated_tag = c.tag;
    }

    bool any_strict = false, any_tight = false;
    for (const auto& c : rep.conditions) {
        any_strict |= c.strict_reachable;
        any_tight |= c.tight_reachable && !c.strict_reachable;
    }
    rep.status = any_strict ? Stability::Unstable
                            : (any_tight ? Stability::ProperlySemistable
                                         : Stability::Stable);
    return rep;
}

namespace {

Matrix<PrimeField> random_invertible(PrimeField f, int n, std::mt19937_64& rng) {
    while (true) {
        Matrix<PrimeField> m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<uint32_t>(rng() % f.p);
        if (m.rank() == n) return m;
    }
}

template <class F>
FormMatrix<F> scalar_mul_left(const Matrix<F>& R, const FormMatrix<F>& W) {
    FormMatrix<F> out(W.field, R.rows(), W.cols, W.nvars, W.degree);
    for (int i = 0; i < R.rows(); ++i)
        for (int j = 0; j < W.cols; ++j) {
            HomForm<F> acc(W.field, W.nvars, W.degree);
            for (int k = 0; k < W.rows; ++k)
                if (!W.field.is_zero(R.at(i, k)))
                    acc += W.at(k, j).scaled(R.at(i, k));
            out.at(i, j) = acc;
        }
    return out;
}

template <class F>
FormMatrix<F> scalar_mul_right(const FormMatrix<F>& W, const Matrix<F>& C) {
    FormMatrix<F> out(W.field, W.rows, C.cols(), W.nvars, W.degree);
    for (int i = 0; i < W.rows; ++i)
        for (int j = 0; j < C.cols(); ++j) {
            HomForm<F> acc(W.field, W.nvars, W.degree);
            for (int k = 0; k < W.cols; ++k)
                if (!W.field.is_zero(C.at(k, j)))
                    acc += W.at(i, k).scaled(C.at(k, j));
            out.at(i, j) = acc;
        }
    return out;
}

} // namespace

ZeroBlockReport verify_zero_block_remarks(const MorphismType& t, PrimeField f,
                                          uint64_t trials, uint64_t seed) {
    t.validate();
    if (!t.is_three_block())
        throw UnsupportedShape("zero-block bounds apply to three-block types");
    trials = std::max<uint64_t>(trials, 10'000); // the search is only evidence
                                                 // below this many samples
    int nv = t.num_vars();
    int d13 = t.deg(0) - t.deg(2), d23 = t.deg(1) - t.deg(2);
    FormMatrix<PrimeField> w = division_matrix(f, nv, d13, d23);
    int a31 = w.rows, a32 = w.cols;
    int a21 = static_cast<int>(t.a21());
    OmegaReport om = omega(t);
    int wmin = static_cast<int>(om.recount);
    int dim_forms = sym_dim(nv - 1, w.degree);

    // exact scan: for each c-dim column subspace, the max zero-row count is
    // a31 - rank of the coefficient expansion of W*U
    auto exact_max = [&](int c) {
        int best = 0;
        SubspaceIterator it(f, a32, c);
        Matrix<PrimeField> u;
        while (it.next(u)) {
            RankAccumulator<PrimeField> acc(f, a31);
            std::vector<uint32_t> col(a31);
            for (int ui = 0; ui < c; ++ui)
                for (int s = 0; s < dim_forms; ++s) {
                    for (int row = 0; row < a31; ++row) {
                        uint32_t v = 0;
                        for (int j = 0; j < a32; ++j) {
                            uint32_t cc = u.at(ui, j);
                            if (cc == 0) continue;
                            v = f.add(v, f.mul(cc, w.at(row, j).coeffs[s]));
                        }
                        col[row] = v;
                    }
                    acc.insert(col);
                }
            best = std::max(best, a31 - acc.rank());
        }
        return best;
    };

    // every single-column combination must span S^{d1-d2}V* entirely
    bool columns_span = true;
    {
        SubspaceIterator it(f, a32, 1);
        Matrix<PrimeField> u;
        while (it.next(u)) {
            RankAccumulator<PrimeField> acc(f, dim_forms);
            for (int row = 0; row < a31; ++row) {
                std::vector<uint32_t> entry(dim_forms, 0);
                for (int j = 0; j < a32; ++j) {
                    uint32_t cc = u.at(0, j);
                    if (cc == 0) continue;
                    for (int s = 0; s < dim_forms; ++s)
                        entry[s] = f.add(entry[s], f.mul(cc, w.at(row, j).coeffs[s]));
                }
                acc.insert(entry);
            }
            if (acc.rank() != a21) { columns_span = false; break; }
        }
    }

    // randomized GL x GL search for zero submatrices
    std::mt19937_64 rng(seed);
    std::vector<int> rand_max(a32 + 1, 0);
    for (uint64_t trial = 0; trial < trials; ++trial) {
        Matrix<PrimeField> R = random_invertible(f, a31, rng);
        Matrix<PrimeField> C = random_invertible(f, a32, rng);
        FormMatrix<PrimeField> wp = scalar_mul_right(scalar_mul_left(R, w), C);
        std::vector<uint32_t> zero_rows_per_col(a32, 0);
        std::vector<bool> row_zero(a31);
        for (int csize = 1; csize <= a32 - 1; ++csize) {
            // scan all column subsets of this size
            std::vector<int> sel(csize);
            for (int i = 0; i < csize; ++i) sel[i] = i;
            while (true) {
                int cnt = 0;
                for (int row = 0; row < a31; ++row) {
                    bool z = true;
                    for (int s = 0; s < csize && z; ++s)
                        z = wp.at(row, sel[s]).is_zero();
                    if (z) ++cnt;
                }
                rand_max[csize] = std::max(rand_max[csize], cnt);
                int i = csize - 1;
                while (i >= 0 && sel[i] == a32 - csize + i) --i;
                if (i < 0) break;
                ++sel[i];
                for (int j2 = i + 1; j2 < csize; ++j2) sel[j2] = sel[j2 - 1] + 1;
            }
        }
    }

    ZeroBlockReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.columns_span = columns_span;
    for (int c = 1; c <= a32 - 1; ++c) {
        ZeroBlockCheck chk;
        chk.columns = c;
        chk.bound = a31 - a21;               // single combination spans
        if (c >= 2) chk.bound = a31 - wmin;  // two columns keep omega nonzero rows
        if (c == a32 - 1) chk.bound = std::min(chk.bound, a21);
        chk.max_exact = exact_max(c);
        chk.max_random = rand_max[c];
        chk.pass = chk.max_exact <= chk.bound && chk.max_random <= chk.bound;
        rep.checks.push_back(chk);
    }
    rep.pass = columns_span;
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

} // namespace morq
