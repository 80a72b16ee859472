#include "morq/certificates.hpp"

#include <algorithm>

namespace morq {

using Rel = Condition::Rel;

std::string CertificateReport::overall_str() const {
    switch (overall) {
        case Overall::Certified: return "certified";
        case Overall::ConditionallyCertified: return "conditionally-certified";
        case Overall::NotCertified: return "not-certified";
        case Overall::Inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

void finish(CertificateReport& rep) {
    if (rep.overall == CertificateReport::Overall::Inapplicable) return;
    bool ok = all_hold(rep.conditions) && all_hold(rep.gates);
    for (const auto& c : rep.checks) ok = ok && c.pass;
    if (!ok) {
        rep.overall = CertificateReport::Overall::NotCertified;
        return;
    }
    if (rep.overall != CertificateReport::Overall::ConditionallyCertified)
        rep.overall = CertificateReport::Overall::Certified;
}

void common_gates(CertificateReport& rep, const MorphismType& t, const Polarization& p) {
    p.validate(t);
    for (size_t i = 0; i < p.lambdas.size(); ++i)
        rep.gates.push_back(Condition::make("lambda" + std::to_string(i + 1) + " > 0",
                                            p.lambdas[i], Rel::GT, Rational(0)));
    if (t.is_two_block()) {
        DegeneracyInfo deg = is_degenerate(t);
        if (deg.degenerate) throw AllIrregular(deg.reason);
        rep.checks.push_back(BoolCheck{"lambda1 is not an irregular candidate",
                                       is_nonsingular_value(t, p.lambdas[0])});
    } else {
        rep.checks.push_back(
            BoolCheck{"(lambda1, lambda2) avoids the irregular line arrangement",
                      is_nonsingular_pair(t, p.lambdas[0], p.lambdas[1])});
    }
}

} // namespace

CertificateReport certify_33(const MorphismType& t, const Polarization& p,
                             const ConstantsProvider& constants) {
    t.validate();
    CertificateReport rep;
    rep.claim = "type-(2,1) criterion";
    if (!t.is_two_block()) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires a two-block type");
        return rep;
    }
    long a = t.a21();
    int m1 = t.mult(0), m2 = t.mult(1), n = t.n;
    if (m1 >= a) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires m1 < dim S^{d1-d2}V* = " + std::to_string(a));
        return rep;
    }
    common_gates(rep, t, p);
    const Rational &l1 = p.lambdas[0], &l2 = p.lambdas[1];
    Rational nn(n), ra(a), rm1(m1);

    rep.conditions.push_back(
        Condition::make("lambda2 > a*lambda1", l2, Rel::GT, ra * l1));

    bool conditional = false;
    auto use = [&](const std::string& key) {
        const ProvidedConstant& c = constants.require(key);
        if (c.status != "exhaustive") conditional = true;
        rep.notes.push_back(key + " = " + std::to_string(c.value) + " (" + c.status + ")");
        return Rational(c.value);
    };

    for (int i = 1; i <= m2 - 1; ++i) {
        int j = static_cast<int>(m2 * a - i * a - m1);
        Rational k = use(ConstantsProvider::key_ij(i, j));
        rep.conditions.push_back(Condition::make(
            "i*n*lambda2 >= n*m1*lambda1 + k(" + std::to_string(i) + "," +
                std::to_string(j) + ")  [i=" + std::to_string(i) + "]",
            Rational(i) * nn * l2, Rel::GE, nn * rm1 * l1 + k));
    }
    for (int i = 2; i <= m2; ++i) {
        Rational k = use(ConstantsProvider::key_i(i));
        rep.conditions.push_back(Condition::make(
            "i*n*lambda2 >= n*m1*lambda1 + k(" + std::to_string(i) + ")  [i=" +
                std::to_string(i) + "]",
            Rational(i) * nn * l2, Rel::GE, nn * rm1 * l1 + k));
    }
    for (int i = 1; i <= m2 - 1; ++i) {
        int j = static_cast<int>(m2 * a - i * a - a + 1);
        Rational k = use(ConstantsProvider::key_ij(i, j));
        rep.conditions.push_back(Condition::make(
            "n*lambda1 + i*n*lambda2 >= k(" + std::to_string(i) + "," +
                std::to_string(j) + ")  [i=" + std::to_string(i) + "]",
            nn * l1 + Rational(i) * nn * l2, Rel::GE, k));
    }
    if (conditional) rep.overall = CertificateReport::Overall::ConditionallyCertified;
    finish(rep);
    return rep;
}

CertificateReport certify_42_43(const MorphismType& t, const Polarization& p) {
    t.validate();
    CertificateReport rep;
    rep.claim = "two-block criterion, second multiplicity 2";
    if (!t.is_two_block() || t.mult(1) != 2) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires a two-block type with second multiplicity 2");
        return rep;
    }
    int m = t.mult(0), n = t.n, r = t.r;
    int d1 = t.deg(0), d2 = t.deg(1);
    common_gates(rep, t, p); // throws when m and n are both even
    long a = t.a21();
    long s = sym_dim(r, d2 - 1); // dim S^{d2-1}V*
    const Rational& l1 = p.lambdas[0];
    Rational nn(n);

    rep.conditions.push_back(Condition::make("lambda1 > 0", l1, Rel::GT, Rational(0)));
    rep.conditions.push_back(Condition::make("lambda1 < 1/(2a+m)", l1, Rel::LT,
                                             Rational(1, 2 * a + m)));

    Condition i_mbound = Condition::make(
        "(i) m < C(r-1+d1-d2, r-1)", Rational(m), Rel::LT,
        Rational(binom(r - 1 + d1 - d2, r - 1)));
    Condition i_lbound = Condition::make(
        "(i) lambda1 <= (n - dim S^{d2-1}V*)/((a+m-1)n)", l1, Rel::LE,
        Rational(Integer(n - s), Integer(a + m - 1) * n));
    Condition ii_mbound = Condition::make(
        "(ii) m < C(r+d1-d2, r)", Rational(m), Rel::LT,
        Rational(binom(r + d1 - d2, r)));
    Condition ii_lbound = Condition::make(
        "(ii) lambda1 <= (n - 2 dim S^{d2-1}V*)/(3mn)", l1, Rel::LE,
        Rational(Integer(n - 2 * s), Integer(3) * m * n));

    bool branch_i = i_mbound.holds() && i_lbound.holds();
    bool branch_ii = ii_mbound.holds() && ii_lbound.holds();
    if (branch_i || !branch_ii) {
        rep.conditions.push_back(i_mbound);
        rep.conditions.push_back(i_lbound);
        rep.auxiliary.push_back(ii_mbound);
        rep.auxiliary.push_back(ii_lbound);
        rep.notes.push_back(branch_i ? "certifying branch: (i)"
                                     : "neither branch holds; showing (i)");
    } else {
        rep.conditions.push_back(ii_mbound);
        rep.conditions.push_back(ii_lbound);
        rep.auxiliary.push_back(i_mbound);
        rep.auxiliary.push_back(i_lbound);
        rep.notes.push_back("certifying branch: (ii)");
    }
    if (m == 1 && r >= 2)
        rep.notes.push_back("m = 1, r >= 2: both multiplicity bounds hold automatically");

    // reference bound credited to the reductive-embedding constants
    rep.auxiliary.push_back(Condition::make(
        "comparison: lambda2 >= (1/n) C(r+d2, r)", p.lambdas[1], Rel::GE,
        Rational(binom(r + d2, r), n)));

    finish(rep);
    return rep;
}

CertificateReport certify_51(const MorphismType& t, const Polarization& p) {
    t.validate();
    CertificateReport rep;
    rep.claim = "P^2 criterion for (d+1,1)+(d,3)";
    if (!(t.is_two_block() && t.r == 2 && t.mult(0) == 1 && t.mult(1) == 3 &&
          t.deg(0) == t.deg(1) + 1)) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires the P^2 shape (d+1,1)+(d,3)");
        return rep;
    }
    int d = t.deg(1), n = t.n;
    common_gates(rep, t, p);
    const Rational& l1 = p.lambdas[0];
    Rational nn(n);
    Rational q1(static_cast<long>(d) * d + d);      // d^2+d
    Rational q2(static_cast<long>(d) * d + 3 * d);  // d^2+3d
    Rational q3(static_cast<long>(d) * d + 2 * d);  // d^2+2d

    rep.conditions.push_back(Condition::make("lambda1 > 0", l1, Rel::GT, Rational(0)));
    rep.conditions.push_back(Condition::make("lambda1 < 1/10", l1, Rel::LT, Rational(1, 10)));
    rep.conditions.push_back(Condition::make(
        "lambda1 <= 2/5 - 3(d^2+d)/(10n)", l1, Rel::LE,
        Rational(2, 5) - Rational(3) * q1 / (Rational(10) * nn)));
    rep.conditions.push_back(Condition::make(
        "lambda1 <= 1 - 3(d^2+3d)/(4n)", l1, Rel::LE,
        Rational(1) - Rational(3) * q2 / (Rational(4) * nn)));
    rep.conditions.push_back(Condition::make(
        "lambda1 >= -1/2 + 3(d^2+d)/(4n)", l1, Rel::GE,
        Rational(-1, 2) + Rational(3) * q1 / (Rational(4) * nn)));
    rep.conditions.push_back(Condition::make(
        "lambda1 >= -2 + 3(d^2+2d)/n", l1, Rel::GE,
        Rational(-2) + Rational(3) * q3 / nn));

    finish(rep);
    return rep;
}

CertificateReport certify_61(const MorphismType& t, const Polarization& p) {
    t.validate();
    CertificateReport rep;
    rep.claim = "P^2 criterion for (d+1,m)+(1,3)";
    if (!(t.is_two_block() && t.r == 2 && t.mult(1) == 3 && t.deg(1) == 1 &&
          t.deg(0) >= 2)) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires the P^2 shape (d+1,m)+(1,3)");
        return rep;
    }
    int d = t.deg(0) - 1, m = t.mult(0), n = t.n;
    long a = (static_cast<long>(d) + 1) * (d + 2) / 2;
    long b = static_cast<long>(d) * (d + 1) / 2;
    if (m >= a) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires m < (d+1)(d+2)/2 = " + std::to_string(a));
        return rep;
    }
    common_gates(rep, t, p); // throws when 3 | m and 3 | n
    const Rational& l1 = p.lambdas[0];
    Rational nn(n);

    rep.conditions.push_back(Condition::make("lambda1 > 0", l1, Rel::GT, Rational(0)));
    rep.conditions.push_back(Condition::make(
        "lambda1 < 1/(3a+m)", l1, Rel::LT, Rational(1, 3 * a + m)));
    rep.conditions.push_back(Condition::make(
        "lambda1*(4m-3a+3b) <= (n-3)/n",
        l1 * Rational(Integer(4 * m - 3 * a + 3 * b)), Rel::LE,
        Rational(n - 3, n)));
    rep.conditions.push_back(Condition::make(
        "lambda1 <= (n-6)/(mn)", l1, Rel::LE, Rational(n - 6, static_cast<long>(m) * n)));

    // necessary nonemptiness checklist at this weight
    int lm0 = threshold_l(p, n, {m, 0});
    int lm1 = threshold_l(p, n, {m, 1});
    int lm2 = threshold_l(p, n, {m, 2});
    rep.auxiliary.push_back(Condition::make("nonempty: n < l_{m,0} + 9", nn, Rel::LT,
                                            Rational(lm0 + 9)));
    rep.auxiliary.push_back(Condition::make("nonempty: n < l_{m,1} + 6", nn, Rel::LT,
                                            Rational(lm1 + 6)));
    rep.auxiliary.push_back(Condition::make("nonempty: n < l_{m,2} + 3", nn, Rel::LT,
                                            Rational(lm2 + 3)));

    finish(rep);
    return rep;
}

CertificateReport certify_75(const MorphismType& t, const Polarization& p) {
    t.validate();
    CertificateReport rep;
    rep.claim = "P^2 criterion for (d+2,1)+(d,3)";
    if (!(t.is_two_block() && t.r == 2 && t.mult(0) == 1 && t.mult(1) == 3 &&
          t.deg(0) == t.deg(1) + 2)) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires the P^2 shape (d+2,1)+(d,3)");
        return rep;
    }
    int d = t.deg(1), n = t.n;
    common_gates(rep, t, p);
    const Rational& l2 = p.lambdas[1];
    Rational nn(n);
    Rational b1(binom(d + 1, 2)), b2(binom(d + 2, 2));

    rep.conditions.push_back(Condition::make("lambda2 > 6/19", l2, Rel::GT, Rational(6, 19)));
    rep.conditions.push_back(Condition::make("lambda2 < 1/3", l2, Rel::LT, Rational(1, 3)));
    rep.conditions.push_back(Condition::make(
        "lambda2 <= 1/2 - C(d+1,2)/(2n)", l2, Rel::LE,
        Rational(1, 2) - b1 / (Rational(2) * nn)));
    rep.conditions.push_back(Condition::make(
        "lambda2 <= 1 - C(d+2,2)/n - C(d+1,2)/n", l2, Rel::LE,
        Rational(1) - b2 / nn - b1 / nn));
    rep.conditions.push_back(Condition::make(
        "lambda2 <= C(d+2,2)/n", l2, Rel::LE, b2 / nn));

    NWindow w = claim75_n_window(d);
    rep.auxiliary.push_back(Condition::make(
        "forced window: n > 19/13 (C(d+1,2)+C(d+2,2))", nn, Rel::GT, w.lo));
    rep.auxiliary.push_back(Condition::make(
        "forced window: n < 19/6 C(d+2,2)", nn, Rel::LT, w.hi));

    finish(rep);
    return rep;
}

CertificateReport certify_87(const MorphismType& t, const Polarization& p) {
    t.validate();
    CertificateReport rep;
    rep.claim = "three-block criterion";
    if (!t.is_three_block()) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires a three-block type m O(-d1) + O(-d2) + O(-d3)");
        return rep;
    }
    int m = t.mult(0), n = t.n, r = t.r;
    int d1 = t.deg(0), d2 = t.deg(1), d3 = t.deg(2);
    Integer mbound = binom(d1 - d2 + r - 1, r - 1);
    if (Integer(m) >= mbound) {
        rep.overall = CertificateReport::Overall::Inapplicable;
        rep.notes.push_back("requires m < C(d1-d2+r-1, r-1) = " + mbound.get_str());
        return rep;
    }
    common_gates(rep, t, p);
    const Rational &l1 = p.lambdas[0], &l2 = p.lambdas[1];
    Rational a21(Integer(t.a21())), a31(Integer(t.a31())), a32(Integer(t.a32()));
    Rational rm(m), nn(n);

    rep.conditions.push_back(Condition::make("a21*lambda1 < lambda2", a21 * l1, Rel::LT, l2));
    rep.conditions.push_back(Condition::make(
        "lambda2 < (1 - m*lambda1 - a31*lambda1 + a32*a21*lambda1)/(1+a32)", l2, Rel::LT,
        (Rational(1) - rm * l1 - a31 * l1 + a32 * a21 * l1) / (Rational(1) + a32)));
    rep.conditions.push_back(Condition::make(
        "lambda2 < 1 - m*lambda1", l2, Rel::LT, Rational(1) - rm * l1));
    rep.conditions.push_back(Condition::make(
        "lambda1 <= 1/(m+a21) - C(d3+r,r)/((m+a21)n)", l1, Rel::LE,
        Rational(1) / (rm + a21) -
            Rational(binom(d3 + r, r)) / ((rm + a21) * nn)));

    TildePolarization tp = TildePolarization::from(t, p);
    rep.gates.push_back(Condition::make("alpha2 > 0", tp.alphas[1], Rel::GT, Rational(0)));
    rep.gates.push_back(Condition::make("alpha3 > 0", tp.alphas[2], Rel::GT, Rational(0)));
    rep.gates.push_back(Condition::make("lambda1 * p1 < 1",
                                        l1 * Rational(Integer(t.p1())), Rel::LT,
                                        Rational(1)));

    rep.auxiliary.push_back(Condition::make(
        "comparison: lambda2 >= a21 C(r+d3, r)/(n a31)", l2, Rel::GE,
        a21 * Rational(binom(r + d3, r)) / (nn * a31)));

    finish(rep);
    return rep;
}

NWindow claim75_n_window(int d) {
    NWindow w;
    Rational b1(binom(d + 1, 2)), b2(binom(d + 2, 2));
    w.lo = Rational(19, 13) * (b1 + b2);
    w.hi = Rational(19, 6) * b2;
    Integer lo = w.lo.floor() + 1;
    Integer hi = w.hi.ceil() - 1;
    if (Rational(lo) == w.lo) ++lo;     // window is open
    if (Rational(hi) == w.hi) --hi;
    for (Integer n = lo; n <= hi; ++n)
        w.admissible.push_back(static_cast<int>(n.get_si()));
    return w;
}

std::vector<int> claim61_admissible_n(int d, int m, int n_max) {
    long a = (static_cast<long>(d) + 1) * (d + 2) / 2;
    long b = static_cast<long>(d) * (d + 1) / 2;
    std::vector<int> out;
    for (int n = 1; n <= n_max; ++n) {
        // certificate conditions, each at its favorable end of the chamber
        // (1/(2mn), 1/((2m-1)n))
        bool ok = Rational(Integer(3 * a), Integer(2 * m)) + Rational(1, 2) < Rational(n);
        ok = ok && Rational(5) <= Rational(n) + Rational(Integer(3 * (a - b)), Integer(2 * m));
        ok = ok && n >= 7;
        // nonemptiness checklist, closed forms on this chamber
        int lm0 = 1;
        Integer lm1 = (Rational(n + 1, 3).floor() + 1);
        Integer lm2 = (Rational(4 * n + 1, 6).floor() + 1);
        ok = ok && n < lm0 + 9;
        ok = ok && Integer(n) < lm1 + 6;
        ok = ok && Integer(n) < lm2 + 3;
        if (ok) out.push_back(n);
    }
    return out;
}

} // namespace morq
