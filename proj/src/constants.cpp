#include "morq/constants.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_map>

namespace morq {

namespace {

// Precomputed monomial-multiplication structure for one ambient block:
// pairs[t] lists (u, s) with  m_t * m_s = M_u  (bases of S^{d2}, S^{a}, and
// S^{d2+a}); for p = 2 the same data is kept as per-u bitmasks over s.
struct SweepContext {
    PrimeField f;
    int amb, H, SA, T, D, A;
    std::vector<std::vector<std::pair<int, int>>> pairs;
    std::vector<std::vector<uint64_t>> masks; // [t][u] bitmask over s (p=2, SA<=64)
    bool bits = false;

    SweepContext(const ConstantShape& shape, int ambient, PrimeField field)
        : f(field), amb(ambient) {
        H = static_cast<int>(sym_dim(shape.r, shape.d2));
        SA = static_cast<int>(sym_dim(shape.r, shape.a_deg));
        T = static_cast<int>(sym_dim(shape.r, shape.d2 + shape.a_deg));
        D = amb * H;
        A = amb * SA;
        const MonomialBasis& hb = MonomialBasis::get(shape.r + 1, shape.d2);
        const MonomialBasis& ab = MonomialBasis::get(shape.r + 1, shape.a_deg);
        const MonomialBasis& tb = MonomialBasis::get(shape.r + 1, shape.d2 + shape.a_deg);
        pairs.resize(H);
        Exponents e(shape.r + 1);
        for (int t = 0; t < H; ++t)
            for (int s = 0; s < SA; ++s) {
                for (int v = 0; v <= shape.r; ++v)
                    e[v] = hb.monomial(t)[v] + ab.monomial(s)[v];
                pairs[t].emplace_back(tb.index_of(e), s);
            }
        bits = f.p == 2 && A <= 64;
        if (bits) {
            masks.assign(H, std::vector<uint64_t>(T, 0));
            for (int t = 0; t < H; ++t)
                for (auto [u, s] : pairs[t]) masks[t][u] |= uint64_t(1) << s;
        }
    }
};

// Per-worker scanner with a cache of reduced pairing row spaces per source
// vector.
struct Scanner {
    const SweepContext& cx;
    std::unordered_map<uint64_t, std::vector<uint64_t>> bit_cache;
    std::unordered_map<uint64_t, std::vector<std::vector<uint32_t>>> gen_cache;
    bool cacheable;

    explicit Scanner(const SweepContext& c) : cx(c) {
        Integer span;
        mpz_ui_pow_ui(span.get_mpz_t(), c.f.p, c.D);
        cacheable = span.fits_ulong_p(); // packed key must fit a machine word
    }

    uint64_t pack(const Matrix<PrimeField>& b, int row) const {
        uint64_t key = 0;
        for (int c = cx.D - 1; c >= 0; --c) key = key * cx.f.p + b.at(row, c);
        return key;
    }

    const std::vector<uint64_t>& bit_rows(const Matrix<PrimeField>& b, int row) {
        uint64_t key = pack(b, row);
        auto it = bit_cache.find(key);
        if (it != bit_cache.end()) return it->second;
        BitRankAcc reduced(cx.A);
        std::vector<uint64_t> rows;
        for (int u = 0; u < cx.T; ++u) {
            uint64_t bitsrow = 0;
            for (int i = 0; i < cx.amb; ++i)
                for (int t = 0; t < cx.H; ++t) {
                    if (b.at(row, i * cx.H + t) == 0) continue;
                    bitsrow ^= cx.masks[t][u] << (i * cx.SA);
                }
            if (reduced.insert(bitsrow)) rows.push_back(bitsrow);
        }
        return bit_cache.emplace(key, std::move(rows)).first->second;
    }

    const std::vector<std::vector<uint32_t>>& gen_rows(const Matrix<PrimeField>& b,
                                                       int row) {
        static thread_local std::vector<std::vector<uint32_t>> scratch;
        uint64_t key = cacheable ? pack(b, row) : 0;
        if (cacheable) {
            auto it = gen_cache.find(key);
            if (it != gen_cache.end()) return it->second;
        }
        RankAccumulator<PrimeField> acc(cx.f, cx.A);
        std::vector<std::vector<uint32_t>> rows;
        for (int u = 0; u < cx.T; ++u) {
            std::vector<uint32_t> r(cx.A, 0);
            for (int i = 0; i < cx.amb; ++i)
                for (int t = 0; t < cx.H; ++t) {
                    uint32_t c = b.at(row, i * cx.H + t);
                    if (c == 0) continue;
                    for (auto [uu, s] : cx.pairs[t])
                        if (uu == u)
                            r[i * cx.SA + s] = cx.f.add(r[i * cx.SA + s], c);
                }
            std::vector<uint32_t> copy = r;
            if (acc.insert(std::move(copy))) rows.push_back(std::move(r));
        }
        if (cacheable) return gen_cache.emplace(key, std::move(rows)).first->second;
        scratch = std::move(rows);
        return scratch;
    }

    int support_dim(const Matrix<PrimeField>& b) {
        RankAccumulator<PrimeField> acc(cx.f, cx.amb);
        std::vector<uint32_t> vec(cx.amb);
        for (int row = 0; row < b.rows(); ++row)
            for (int t = 0; t < cx.H; ++t) {
                for (int i = 0; i < cx.amb; ++i) vec[i] = b.at(row, i * cx.H + t);
                if (acc.insert(vec) && acc.full()) return cx.amb;
            }
        return acc.rank();
    }

    int orth_dim(const Matrix<PrimeField>& b) {
        if (cx.bits) {
            BitRankAcc acc(cx.A);
            for (int row = 0; row < b.rows(); ++row)
                for (uint64_t r : bit_rows(b, row)) acc.insert(r);
            return cx.A - acc.rank();
        }
        RankAccumulator<PrimeField> acc(cx.f, cx.A);
        for (int row = 0; row < b.rows(); ++row)
            for (const auto& r : gen_rows(b, row)) acc.insert(std::vector<uint32_t>(r));
        return cx.A - acc.rank();
    }
};

// scan subspaces [begin, begin+count) of dimension u, updating g_row[i] with
// the best orthogonal dimension seen for support > i
void scan_range(const SweepContext& cx, int u, unsigned long long begin,
                unsigned long long count, std::vector<int>& g_row) {
    Scanner sc(cx);
    SubspaceIterator it(cx.f, cx.D, u);
    if (begin) it.seek(Integer(static_cast<unsigned long>(begin)));
    Matrix<PrimeField> b;
    for (unsigned long long idx = 0; idx < count && it.next(b); ++idx) {
        int s = sc.support_dim(b);
        if (s == 0) continue;
        int o = sc.orth_dim(b);
        for (int i = 0; i < s && i < static_cast<int>(g_row.size()); ++i)
            g_row[i] = std::max(g_row[i], o);
    }
}

} // namespace

KTable sweep_table(const ConstantShape& shape, PrimeField f,
                   unsigned long long budget, int jobs) {
    SweepContext cx(shape, shape.m2, f);
    KTable table;
    table.shape = shape;
    table.p = f.p;
    table.source_dim = cx.D;
    table.orth_dim = cx.A;
    table.g.assign(cx.D + 1, std::vector<int>(shape.m2, -1));

    for (int u = 1; u <= cx.D; ++u) {
        Integer cnt = gaussian_binomial(cx.D, u, f.p);
        if (cnt > Integer(static_cast<unsigned long>(budget))) {
            table.skipped_dims.push_back(u);
            continue;
        }
        unsigned long long total = cnt.get_ui();
        int workers = std::max(1, jobs);
        if (workers == 1 || total < 4096) {
            scan_range(cx, u, 0, total, table.g[u]);
        } else {
            std::vector<std::vector<int>> parts(workers,
                                                std::vector<int>(shape.m2, -1));
            std::vector<std::thread> threads;
            for (int w = 0; w < workers; ++w) {
                unsigned long long b0 = total * w / workers;
                unsigned long long b1 = total * (w + 1) / workers;
                threads.emplace_back([&, w, b0, b1]() {
                    scan_range(cx, u, b0, b1 - b0, parts[w]);
                });
            }
            for (auto& th : threads) th.join();
            for (const auto& part : parts)
                for (int i = 0; i < shape.m2; ++i)
                    table.g[u][i] = std::max(table.g[u][i], part[i]);
        }
    }
    return table;
}

namespace {

std::optional<Matrix<PrimeField>> find_witness(const ConstantShape& shape, int ambient,
                                               PrimeField f, int u, int support_gt,
                                               int orth_min,
                                               unsigned long long budget) {
    SweepContext cx(shape, ambient, f);
    Integer cnt = gaussian_binomial(cx.D, u, f.p);
    if (cnt > Integer(static_cast<unsigned long>(budget))) return std::nullopt;
    Scanner sc(cx);
    SubspaceIterator it(f, cx.D, u);
    Matrix<PrimeField> b;
    while (it.next(b)) {
        if (sc.support_dim(b) <= support_gt) continue;
        if (sc.orth_dim(b) >= orth_min) return b;
    }
    return std::nullopt;
}

} // namespace

ConstantValue kij_from_table(const KTable& table, int i, int j) {
    assert(i >= 1 && i <= table.shape.m2 - 1);
    ConstantValue v;
    for (int u = table.source_dim; u >= 1; --u)
        if (table.g[u][i] >= j) { v.value = u; break; }
    for (int s : table.skipped_dims)
        if (s > v.value) { v.exhaustive = false; v.skipped_dims.push_back(s); }
    if (v.value >= 1) {
        PrimeField f(table.p);
        v.witness = find_witness(table.shape, table.shape.m2, f,
                                 static_cast<int>(v.value), i, j, ~0ull >> 1);
    }
    return v;
}

ConstantValue ki_from_table(const KTable& table) {
    int i = table.shape.m2; // ambient dimension doubles as the support demand
    ConstantValue v;
    for (int u = table.source_dim; u >= 1; --u)
        if (table.g[u][i - 1] >= 1) { v.value = u; break; }
    for (int s : table.skipped_dims)
        if (s > v.value) { v.exhaustive = false; v.skipped_dims.push_back(s); }
    if (v.value >= 1) {
        PrimeField f(table.p);
        v.witness = find_witness(table.shape, i, f, static_cast<int>(v.value), i - 1, 1,
                                 ~0ull >> 1);
    }
    return v;
}

ConstantValue compute_k(const ConstantQuery& q, unsigned long long budget, int jobs) {
    (void)jobs;
    int ambient = q.j ? q.shape.m2 : q.i;
    int support_gt = q.j ? q.i : q.i - 1;
    int orth_min = q.j ? *q.j : 1;
    ConstantShape shape = q.shape;
    shape.m2 = ambient;
    PrimeField f(q.p);
    SweepContext cx(shape, ambient, f);
    int cap = q.cap ? std::min(*q.cap, cx.D) : cx.D;

    ConstantValue v;
    for (int u = cap; u >= 1; --u) {
        Integer cnt = gaussian_binomial(cx.D, u, f.p);
        if (cnt > Integer(static_cast<unsigned long>(budget))) {
            v.exhaustive = false;
            v.skipped_dims.push_back(u);
            continue;
        }
        auto w = find_witness(shape, ambient, f, u, support_gt, orth_min, budget);
        if (w) {
            v.value = u;
            v.witness = w;
            return v;
        }
    }
    v.value = 0;
    return v;
}

S7Constants s7_constants(int d, PrimeField f, unsigned long long budget, int jobs) {
    S7Constants out;
    out.d = d;
    out.p = f.p;
    ConstantShape shape{3, d, 2, 2};
    KTable t3 = sweep_table(shape, f, budget, jobs);
    long long a = 6; // dim S^2 V* on P^2
    out.values["k(1," + std::to_string(3 * a - a - 1) + ")"] =
        kij_from_table(t3, 1, static_cast<int>(3 * a - a - 1));
    out.values["k(2," + std::to_string(3 * a - 2 * a - 1) + ")"] =
        kij_from_table(t3, 2, static_cast<int>(3 * a - 2 * a - 1));
    out.values["k(1," + std::to_string(3 * a - a - a + 1) + ")"] =
        kij_from_table(t3, 1, static_cast<int>(3 * a - a - a + 1));
    out.values["k(2," + std::to_string(3 * a - 2 * a - a + 1) + ")"] =
        kij_from_table(t3, 2, static_cast<int>(3 * a - 2 * a - a + 1));
    out.values["k(3)"] = ki_from_table(t3);
    ConstantShape shape2{2, d, 2, 2};
    KTable t2 = sweep_table(shape2, f, budget, jobs);
    out.values["k(2)"] = ki_from_table(t2);
    return out;
}

// ---- witness certification ---------------------------------------------

WitnessReport verify_74_witness(int d) {
    assert(d >= 1);
    RationalField Q;
    WitnessReport rep;
    rep.d = d;
    const MonomialBasis& ub = MonomialBasis::get(3, d - 1);
    int q = ub.size();
    rep.lower_bound = q;

    auto X = HomForm<RationalField>::variable(Q, 3, 0);
    auto Y = HomForm<RationalField>::variable(Q, 3, 1);
    auto Z = HomForm<RationalField>::variable(Q, 3, 2);

    FormMatrix<RationalField> alpha(Q, q, 3, 3, d);
    for (int t = 0; t < q; ++t) {
        auto u = HomForm<RationalField>::monomial(Q, ub.monomial(t), Rational(1));
        alpha.at(t, 0) = u * X;
        alpha.at(t, 1) = u * Y;
        alpha.at(t, 2) = u * Z;
    }

    FormMatrix<RationalField> beta(Q, 3, 5, 3, 2);
    beta.at(0, 0) = -(X * Y); beta.at(0, 1) = -(X * Z); beta.at(0, 3) = -(Y * Y);
    beta.at(0, 4) = -(Y * Z);
    beta.at(1, 0) = X * X;    beta.at(1, 2) = -(X * Z); beta.at(1, 3) = X * Y;
    beta.at(2, 1) = X * X;    beta.at(2, 2) = X * Y;    beta.at(2, 4) = X * Y;

    rep.product_zero = alpha.multiply(beta).is_zero();

    // rows of alpha independent inside (S^d)^3
    long long sd = sym_dim(2, d);
    {
        RankAccumulator<RationalField> acc(Q, static_cast<int>(3 * sd));
        int rk = 0;
        for (int t = 0; t < q; ++t) {
            std::vector<Rational> row;
            row.reserve(3 * sd);
            for (int c = 0; c < 3; ++c)
                for (const Rational& co : alpha.at(t, c).coeffs) row.push_back(co);
            if (acc.insert(std::move(row))) ++rk;
        }
        rep.alpha_rows_independent = rk == q;
    }
    // the three columns of alpha independent over the ground field
    {
        RankAccumulator<RationalField> acc(Q, static_cast<int>(q * sd));
        int rk = 0;
        for (int c = 0; c < 3; ++c) {
            std::vector<Rational> col;
            col.reserve(q * sd);
            for (int t = 0; t < q; ++t)
                for (const Rational& co : alpha.at(t, c).coeffs) col.push_back(co);
            if (acc.insert(std::move(col))) ++rk;
        }
        rep.alpha_cols_independent = rk == 3;
    }
    // the five columns of beta independent inside (S^2)^3
    {
        long long s2 = sym_dim(2, 2);
        RankAccumulator<RationalField> acc(Q, static_cast<int>(3 * s2));
        int rk = 0;
        for (int c = 0; c < 5; ++c) {
            std::vector<Rational> col;
            col.reserve(3 * s2);
            for (int rrow = 0; rrow < 3; ++rrow)
                for (const Rational& co : beta.at(rrow, c).coeffs) col.push_back(co);
            if (acc.insert(std::move(col))) ++rk;
        }
        rep.beta_cols_independent = rk == 5;
    }
    rep.ok = rep.product_zero && rep.alpha_rows_independent &&
             rep.alpha_cols_independent && rep.beta_cols_independent;
    return rep;
}

// ---- kernel-dimension suite ---------------------------------------------

KernelBoundReport kernel_bound_suite(int d, uint64_t trials, uint64_t seed) {
    RationalField Q;
    KernelBoundReport rep;
    rep.d = d;
    rep.trials = trials;
    rep.seed = seed;
    rep.eta2_bound = (d * d + 3 * d) / 2;
    rep.eta34_bound = d == 2 ? 4 : (d * d + 3 * d) / 2;
    rep.psi_bound = 4;
    rep.eta1_bound = static_cast<int>(sym_dim(2, d - 1));
    std::mt19937_64 rng(seed);
    auto nonzero = [&]() { return Rational(1 + static_cast<long>(rng() % 97)); };

    rep.shape53_min = -1;
    bool ok = true;

    for (uint64_t trial = 0; trial < trials; ++trial) {
        // eta2 with the all-ones-but-one pattern on the first trial, random
        // nonzero constants afterwards
        std::vector<Rational> a(10, Rational(1));
        if (trial == 0) a[0] = Rational(2);
        else for (auto& c : a) c = nonzero();
        int k2 = form_matrix_kernel(eta2(Q, a), d).dim();
        rep.eta2_max = std::max(rep.eta2_max, k2);
        ok = ok && k2 <= rep.eta2_bound;

        std::vector<Rational> bc3 = {nonzero(), nonzero(), nonzero(), nonzero(), nonzero()};
        int k3 = form_matrix_kernel(eta3(Q, bc3), d).dim();
        rep.eta3_max = std::max(rep.eta3_max, k3);
        ok = ok && k3 <= rep.eta34_bound;

        std::vector<Rational> bc4 = {nonzero(), nonzero(), nonzero(), nonzero(), nonzero()};
        if (trial == 0) bc4 = {Rational(0), Rational(1), Rational(1), Rational(0), Rational(0)};
        int k4 = form_matrix_kernel(eta4(Q, bc4), d).dim();
        rep.eta4_max = std::max(rep.eta4_max, k4);
        ok = ok && k4 <= rep.eta34_bound;

        // random l x 3 grid of linear forms without two vanishing columns
        int l = 2 + static_cast<int>(rng() % 3);
        FormMatrix<RationalField> psi(Q, l, 3, 3, 1);
        while (true) {
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < 3; ++j) {
                    HomForm<RationalField> h(Q, 3, 1);
                    for (int v = 0; v < 3; ++v)
                        h.coeffs[v] = Rational(static_cast<long>(rng() % 5)) - Rational(2);
                    psi.at(i, j) = h;
                }
            int zero_cols = 0;
            for (int j = 0; j < 3; ++j) {
                bool z = true;
                for (int i = 0; i < l; ++i) z = z && psi.at(i, j).is_zero();
                if (z) ++zero_cols;
            }
            if (zero_cols < 2) break;
        }
        int kp = form_matrix_kernel(psi, 1).dim();
        rep.psi_max = std::max(rep.psi_max, kp);
        ok = ok && kp <= rep.psi_bound;

        // the (0 | u f_i | v f_i) shape: measured, expected dimension 4
        {
            int rows = 2 + static_cast<int>(rng() % 3);
            FormMatrix<RationalField> s53(Q, rows, 3, 3, d);
            auto u = HomForm<RationalField>::variable(Q, 3, 0);
            auto v = HomForm<RationalField>::variable(Q, 3, 1);
            for (int i = 0; i < rows; ++i) {
                HomForm<RationalField> fi(Q, 3, d - 1);
                bool z = true;
                for (auto& c : fi.coeffs) {
                    c = Rational(static_cast<long>(rng() % 5)) - Rational(2);
                    z = z && c.is_zero();
                }
                if (z) fi.coeffs[0] = Rational(1);
                s53.at(i, 1) = u * fi;
                s53.at(i, 2) = v * fi;
            }
            int ks = form_matrix_kernel(s53, 1).dim();
            rep.shape53_max = std::max(rep.shape53_max, ks);
            rep.shape53_min = rep.shape53_min < 0 ? ks : std::min(rep.shape53_min, ks);
            ok = ok && ks >= 4;
        }
    }

    rep.eta1_transpose_dim = form_matrix_kernel(eta1(Q).transposed(), d).dim();
    ok = ok && rep.eta1_transpose_dim <= rep.eta1_bound;

    rep.pass = ok;
    return rep;
}

} // namespace morq
