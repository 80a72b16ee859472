#include "morq/chambers.hpp"

#include <algorithm>

namespace morq {

namespace {
int clamp_threshold(const Rational& sum, int n, bool strict) {
    Rational t = Rational(n) * sum;
    Integer l = strict ? t.floor() + 1 : t.ceil();
    Integer cap(n + 1);
    if (l > cap) l = cap;
    if (l < 0) l = 0;
    assert(l.fits_sint_p());
    return static_cast<int>(l.get_si());
}
} // namespace

int threshold_l(const Polarization& p, int n, const std::vector<int>& kappas) {
    return clamp_threshold(p.weighted_dim(kappas), n, /*strict=*/true);
}

int threshold_l_tight(const Polarization& p, int n, const std::vector<int>& kappas) {
    return clamp_threshold(p.weighted_dim(kappas), n, /*strict=*/false);
}

DegeneracyInfo is_degenerate(const MorphismType& t) {
    t.validate();
    // A tuple (a_1..a_k, b) with a_i*n == b*m_i for all i forces the King
    // equality b/n = sum a_i*lambda_i on the whole weight hyperplane.
    int k = t.num_blocks();
    for (int b = 0; b <= t.n; ++b) {
        std::vector<int> a(k);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            long num = static_cast<long>(b) * t.mult(i);
            if (num % t.n != 0) { ok = false; break; }
            long ai = num / t.n;
            if (ai < 0 || ai > t.mult(i)) { ok = false; break; }
            a[i] = static_cast<int>(ai);
        }
        if (!ok) continue;
        bool all_zero = b == 0;
        bool all_full = b == t.n;
        for (int i = 0; i < k; ++i) {
            if (a[i] != 0) all_zero = false;
            if (a[i] != t.mult(i)) all_full = false;
        }
        if (all_zero || all_full) continue;
        DegeneracyInfo info;
        info.degenerate = true;
        if (k == 2 && t.mult(1) == 2 && t.mult(0) % 2 == 0 && t.n % 2 == 0)
            info.reason = "m and n both even for a (d1,m)+(d2,2) type: every weight admits an exact equality";
        else if (k == 2 && t.mult(1) == 3 && t.mult(0) % 3 == 0 && t.n % 3 == 0)
            info.reason = "m and n both divisible by 3 for a (d1,m)+(d2,3) type: every weight admits an exact equality";
        else
            info.reason = "integer tuple (" + std::to_string(a[0]) +
                          ",...) proportional to the multiplicities: every weight admits an exact equality";
        return info;
    }
    return {};
}

std::vector<Rational> irregular_candidates(const MorphismType& t) {
    t.validate();
    if (!t.is_two_block())
        throw UnsupportedShape("irregular candidates for lambda1 apply to two-block types; "
                               "three-block types use irregular_lines");
    DegeneracyInfo deg = is_degenerate(t);
    if (deg.degenerate) throw AllIrregular(deg.reason);

    int m1 = t.mult(0), m2 = t.mult(1), n = t.n;
    Rational upper(1, m1);
    std::set<Rational> cand;
    cand.insert(Rational(0));
    cand.insert(upper);

    auto add = [&](const Rational& v) {
        if (v >= Rational(0) && v <= upper) cand.insert(v);
    };

    if (m2 == 1 || m2 == 2) {
        for (int p = 1; p <= m1; ++p)
            for (int k = 0; k <= n; ++k) add(Rational(k, static_cast<long>(p) * n));
    } else if (m2 == 3) {
        for (int p = 1; p <= 2 * m1; ++p)
            for (int k = 0; k <= 2 * n; ++k) add(Rational(k, static_cast<long>(p) * n));
    } else {
        // exact solution set of b/n = a1*l1 + a2*l2 on the weight line
        for (int a1 = 0; a1 <= m1; ++a1)
            for (int a2 = 0; a2 <= m2; ++a2) {
                long den = static_cast<long>(a1) * m2 -
                                static_cast<long>(a2) * m1;
                if (den == 0) continue;
                for (int b = 0; b <= n; ++b) {
                    long num = static_cast<long>(b) * m2 -
                                    static_cast<long>(a2) * n;
                    add(Rational(Integer(num), Integer(den) * n));
                }
            }
    }
    return std::vector<Rational>(cand.begin(), cand.end());
}

IrregularLines irregular_lines(const MorphismType& t) {
    t.validate();
    if (!t.is_three_block())
        throw UnsupportedShape("irregular lines apply to three-block types");
    IrregularLines lines;
    int m = t.mult(0), n = t.n;
    for (int p = 1; p <= m; ++p)
        for (int k = 0; k <= n; ++k) lines.vertical.push_back({k, p});
    for (int p = 0; p <= m; ++p)
        for (int k = 0; k <= n; ++k) lines.slanted.push_back({k, p});
    return lines;
}

bool is_nonsingular_value(const MorphismType& t, const Rational& lambda1) {
    for (const Rational& c : irregular_candidates(t))
        if (c == lambda1) return false;
    return true;
}

bool is_nonsingular_pair(const MorphismType& t, const Rational& lambda1,
                         const Rational& lambda2) {
    IrregularLines lines = irregular_lines(t);
    for (const auto& v : lines.vertical)
        if (lambda1 == Rational(v.kappa, static_cast<long>(v.p) * t.n)) return false;
    for (const auto& s : lines.slanted)
        if (lambda2 == Rational(s.kappa, t.n) - Rational(s.p) * lambda1) return false;
    return true;
}

std::vector<Chamber> chambers(const MorphismType& t) {
    std::vector<Rational> cand = irregular_candidates(t);
    std::vector<Chamber> out;
    for (size_t i = 0; i + 1 < cand.size(); ++i)
        out.push_back(Chamber{cand[i], cand[i + 1]});
    return out;
}

std::set<std::pair<std::vector<int>, int>> inequality_pattern(const MorphismType& t,
                                                              const Polarization& p) {
    std::set<std::pair<std::vector<int>, int>> pat;
    std::vector<int> a(t.num_blocks(), 0);
    Rational mu(1, t.n);
    while (true) {
        for (int b = 0; b <= t.n; ++b)
            if (Rational(b) * mu > p.weighted_dim(a)) pat.insert({a, b});
        int i = t.num_blocks() - 1;
        while (i >= 0 && a[i] == t.mult(i)) a[i--] = 0;
        if (i < 0) break;
        ++a[i];
    }
    return pat;
}

NonemptyReport nonempty_conditions(const MorphismType& t, const Polarization& p) {
    t.validate();
    p.validate(t);
    NonemptyReport rep;
    using Rel = Condition::Rel;
    Rational nn(t.n);

    if (t.is_two_block() && t.mult(0) == 1 && t.mult(1) == 1) {
        rep.shape = "two-block, multiplicities (1,1)";
        long s2 = sym_dim(t.r, t.deg(1) - 1);
        long su = binom_ll(t.r - 1 + t.deg(0), t.r - 1);
        rep.conditions.push_back(Condition::make(
            "n <= dim S^{d2-1}V*", nn, Rel::LE, Rational(Integer(s2))));
        rep.conditions.push_back(Condition::make(
            "n <= dim S^{d1}U", nn, Rel::LE, Rational(Integer(su))));
    } else if (t.is_two_block() && t.mult(0) == 1 && t.mult(1) == 2) {
        rep.shape = "two-block, multiplicities (1,2)";
        long s2 = sym_dim(t.r, t.deg(1) - 1);
        long su = binom_ll(t.r - 1 + t.deg(0), t.r - 1);
        int l1 = threshold_l(p, t.n, {1, 0});
        int l3 = threshold_l(p, t.n, {1, 1});
        rep.conditions.push_back(Condition::make(
            "n <= dim S^{d2-1}V* + l_{11} - 1", nn, Rel::LE,
            Rational(Integer(s2 + l3 - 1))));
        rep.conditions.push_back(Condition::make(
            "n <= 2 dim S^{d2-1}V* + l_{10} - 1", nn, Rel::LE,
            Rational(Integer(2 * s2 + l1 - 1))));
        rep.conditions.push_back(Condition::make(
            "n <= dim S^{d1}U", nn, Rel::LE, Rational(Integer(su))));
    } else if (t.is_two_block() && t.r == 2 && t.mult(0) == 1 && t.mult(1) == 3 &&
               t.deg(0) - t.deg(1) == 2) {
        rep.shape = "P^2 type (d+2,1)+(d,3)";
        int d = t.deg(1);
        Rational b2(binom(d + 2, 2)), b4(binom(d + 4, 2));
        const Rational& l1 = p.lambdas[0];
        const Rational& l2 = p.lambdas[1];
        rep.conditions.push_back(Condition::make(
            "n <= n*l1 + 3 C(d+2,2)", nn, Rel::LE, nn * l1 + Rational(3) * b2));
        rep.conditions.push_back(Condition::make(
            "n <= n*l1 + n*l2 + 2 C(d+2,2)", nn, Rel::LE,
            nn * l1 + nn * l2 + Rational(2) * b2));
        rep.conditions.push_back(Condition::make(
            "n <= n*l1 + 2n*l2 + C(d+2,2)", nn, Rel::LE,
            nn * l1 + Rational(2) * nn * l2 + b2));
        rep.conditions.push_back(Condition::make(
            "n <= n*l2 + C(d+4,2) + 2 C(d+2,2)", nn, Rel::LE,
            nn * l2 + b4 + Rational(2) * b2));
        rep.conditions.push_back(Condition::make(
            "n <= 2n*l2 + C(d+4,2) + C(d+2,2)", nn, Rel::LE,
            Rational(2) * nn * l2 + b4 + b2));
        rep.conditions.push_back(Condition::make(
            "n <= 3n*l2 + C(d+4,2)", nn, Rel::LE, Rational(3) * nn * l2 + b4));
    } else {
        throw UnsupportedShape("no nonemptiness test for this shape: " + t.str());
    }
    rep.all_hold_flag = all_hold(rep.conditions);
    return rep;
}

Morphism<RationalField> construct_semistable(const MorphismType& t,
                                             std::optional<int> kappa) {
    t.validate();
    if (!(t.is_two_block() && t.mult(0) == 1 && t.mult(1) == 1))
        throw UnsupportedShape("explicit construction available for multiplicities (1,1) only");
    int d1 = t.deg(0), d2 = t.deg(1), n = t.n, r = t.r;
    long s2 = sym_dim(r, d2 - 1);
    long su = binom_ll(r - 1 + d1, r - 1);
    if (n > s2 || n > su)
        throw UnsupportedShape("construction requires n <= dim S^{d2-1}V* and n <= dim S^{d1}U");
    if (kappa && (*kappa < 0 || *kappa > n))
        throw UnsupportedShape("kappa out of range");

    RationalField Q;
    Morphism<RationalField> m = zero_morphism(Q, t);

    // first column: lex monomials of degree d1 in X1..Xr (complement of psi=X0)
    const MonomialBasis& ub = MonomialBasis::get(r, d1);
    for (int i = 0; i < n; ++i) {
        if (kappa && i >= *kappa) break;
        Exponents e(r + 1, 0);
        const Exponents& u = ub.monomial(i);
        for (int v = 0; v < r; ++v) e[v + 1] = u[v];
        m.blocks[0].at(i, 0) = HomForm<RationalField>::monomial(Q, e, Rational(1));
    }
    // second column: psi_i2 * X0 with psi_i2 the lex monomials of S^{d2-1}V*
    const MonomialBasis& pb = MonomialBasis::get(r + 1, d2 - 1);
    for (int i = 0; i < n; ++i) {
        Exponents e = pb.monomial(i);
        e[0] += 1;
        m.blocks[1].at(i, 0) = HomForm<RationalField>::monomial(Q, e, Rational(1));
    }
    return m;
}

} // namespace morq
