// Acceptance suite: exact desk-scale checks, one pass/fail line per
// criterion. Every tolerance is zero; all arithmetic is exact.

#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include "support.hpp"

using namespace morq;
using morq::testing::make_type;
using morq::testing::random_morphism;

namespace {

constexpr unsigned long long kBudget = 5'000'000;
constexpr uint64_t kSeed = 20240901;

int failures = 0;

struct Criterion {
    int id;
    std::string summary;
    bool pass = true;
    std::ostringstream detail;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double limit_seconds;

    Criterion(int id, std::string summary, double limit)
        : id(id), summary(std::move(summary)), limit_seconds(limit) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "  FAILED: " << what << "\n";
        }
    }

    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        if (secs > limit_seconds) {
            pass = false;
            detail << "  FAILED: runtime " << secs << "s exceeds " << limit_seconds
                   << "s\n";
        }
        std::cout << "[criterion " << id << "] " << (pass ? "PASS" : "FAIL") << " - "
                  << summary << " (" << secs << "s)\n"
                  << detail.str();
        if (!pass) ++failures;
    }
};

int hw_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(std::min(n, 8u));
}

std::vector<MorphismType> oracle_shapes(int m1, int m2) {
    std::vector<MorphismType> out;
    for (int r : {1, 2})
        for (auto [d1, d2] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}})
            for (int n : {2, 3, 4})
                out.push_back(make_type(r, n, {{d1, m1}, {d2, m2}}));
    return out;
}

// digest of a verdict for the determinism check
std::string verdict_digest(const StabilityVerdict& v) {
    return verdict_to_json(v).dump();
}

} // namespace

static void criterion1() {
    Criterion c(1, "exhaustive King check agrees with the block-form route", 300);
    std::mt19937_64 rng(kSeed);
    for (auto [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        long instances = 0, disagreements = 0;
        for (const MorphismType& t : oracle_shapes(m1, m2)) {
            for (const Chamber& ch : chambers(t)) {
                Polarization p = Polarization::from_lambda1(t, ch.midpoint());
                for (uint32_t pr : {2u, 3u}) {
                    PrimeField f(pr);
                    for (int k = 0; k < 2; ++k) {
                        Morphism<PrimeField> phi = random_morphism(t, f, rng);
                        StabilityVerdict v = decide_semistable(phi, p, kBudget);
                        BlockRouteVerdict b = block_route_status(phi, p, kBudget);
                        ++instances;
                        if (v.status != b.status) ++disagreements;
                    }
                }
            }
        }
        c.detail << "  shape (" << m1 << "," << m2 << "): " << instances
                 << " instances, " << disagreements << " disagreements\n";
        c.require(instances >= 200, "at least 200 instances per shape");
        c.require(disagreements == 0, "zero disagreements");
    }
}

static void criterion2() {
    Criterion c(2, "embedded-side (semi)stability implies source-side (semi)stability",
                300);
    std::mt19937_64 rng(kSeed + 1);
    std::vector<MorphismType> shapes;
    for (int n : {2, 3, 4}) {
        shapes.push_back(make_type(2, n, {{2, 1}, {1, 1}}));  // p1 = 4
        shapes.push_back(make_type(2, n, {{3, 1}, {2, 1}}));  // p1 = 4
        shapes.push_back(make_type(1, n, {{3, 1}, {1, 1}}));  // p1 = 4
        shapes.push_back(make_type(1, n, {{2, 1}, {1, 1}}));  // p1 = 3
        shapes.push_back(make_type(1, n, {{2, 2}, {1, 1}}));  // p1 = 4
    }
    long instances = 0, violations = 0;
    PrimeField f2(2);
    for (const MorphismType& t : shapes) {
        if (t.p1() > 4) continue;
        for (const Chamber& ch : chambers(t)) {
            Rational width = ch.hi - ch.lo;
            for (const Rational& l1 : {ch.midpoint(), ch.lo + width / Rational(4)}) {
                Polarization p = Polarization::from_lambda1(t, l1);
                TildePolarization tp = TildePolarization::from(t, p);
                if (!tp.alpha2_positive()) continue;
                for (int k = 0; k < 6; ++k) {
                    Morphism<PrimeField> phi = random_morphism(t, f2, rng);
                    TildeVerdict tv = tilde_decide(build_embedding(phi), tp, kBudget);
                    StabilityVerdict kv = decide_semistable(phi, p, kBudget);
                    ++instances;
                    if (tv.status != Stability::Unstable &&
                        kv.status == Stability::Unstable)
                        ++violations;
                    if (tv.status == Stability::Stable && kv.status != Stability::Stable)
                        ++violations;
                }
            }
        }
    }
    c.detail << "  " << instances << " embedded instances, " << violations
             << " inclusion violations\n";
    c.require(instances >= 100, "at least 100 instances");
    c.require(violations == 0, "zero counterexamples");
}

static void criterion3() {
    Criterion c(3, "exhaustive constants at d=1 and the witness certificates", 600);
    PrimeField f2(2);
    S7Constants s = s7_constants(1, f2, kBudget, hw_jobs());
    c.require(s.values.at("k(2,5)").value == 1, "k(2,5) = C(2,2) = 1");
    c.require(s.values.at("k(2,5)").exhaustive, "k(2,5) exhaustive");
    c.require(s.values.at("k(1,11)").value == 0, "k(1,11) = 0");
    c.require(s.values.at("k(1,11)").exhaustive, "k(1,11) exhaustive");
    c.detail << "  table:";
    for (const auto& [key, v] : s.values) c.detail << " " << key << "=" << v.value;
    c.detail << "\n";

    auto w0 = std::chrono::steady_clock::now();
    for (int d = 1; d <= 4; ++d) {
        WitnessReport rep = verify_74_witness(d);
        c.require(rep.ok, "witness pair verifies at d=" + std::to_string(d));
        c.require(rep.lower_bound == binom_ll(d + 1, 2), "lower bound value");
    }
    double wsecs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - w0).count();
    c.require(wsecs < 60, "witness verification under a minute");
}

static void criterion4() {
    Criterion c(4, "kernel-dimension bounds on seeded random grids", 120);
    KernelBoundReport rep = kernel_bound_suite(2, 50, kSeed + 2);
    c.require(rep.pass, "suite-internal assertions");
    c.require(rep.eta2_max <= 5, "all 50 random eta2 kernels <= 5 at d=2");
    c.require(rep.eta3_max <= 4, "all 50 random eta3 kernels <= 4 at d=2");
    c.require(rep.eta4_max <= 4, "all 50 random eta4 kernels <= 4 at d=2");
    c.detail << "  eta2 max " << rep.eta2_max << ", eta3 max " << rep.eta3_max
             << ", eta4 max " << rep.eta4_max << "\n";

    RationalField Q;
    FormMatrix<RationalField> psi(Q, 1, 3, 3, 1);
    for (int j = 0; j < 3; ++j) psi.at(0, j) = HomForm<RationalField>::variable(Q, 3, j);
    c.require(form_matrix_kernel(psi, 1).dim() == 3, "koszul kernel dimension 3");
}

static void criterion5() {
    Criterion c(5, "omega closed form equals the recount on all small shapes", 60);
    for (int r = 1; r <= 3; ++r)
        for (int delta1 = 1; delta1 <= 3; ++delta1)
            for (int delta2 = 1; delta2 <= 3; ++delta2) {
                MorphismType t =
                    make_type(r, 2, {{1 + delta2 + delta1, 1}, {1 + delta2, 1}, {1, 1}});
                OmegaReport rep = omega(t);
                std::string tag = " at r=" + std::to_string(r) +
                                  " d1-d2=" + std::to_string(delta1) +
                                  " d2-d3=" + std::to_string(delta2);
                c.require(rep.matches, "closed form equals recount" + tag);
                c.require(rep.strict_range, "a21 < omega < 2 a21" + tag);
            }
}

static void criterion6() {
    Criterion c(6, "thresholds reproduce the four closed forms for n <= 30", 60);
    for (int n = 1; n <= 30; ++n) {
        MorphismType t = make_type(2, n, {{3, 1}, {2, 2}});
        for (int kappa = 0; kappa < n; ++kappa) {
            Polarization p = Polarization::from_lambda1(t, Rational(2 * kappa + 1, 2 * n));
            bool ok = threshold_l(p, n, {1, 0}) == kappa + 1 &&
                      threshold_l(p, n, {0, 1}) == (n - kappa + 1) / 2 &&
                      threshold_l(p, n, {1, 1}) == (n + kappa) / 2 + 1 &&
                      threshold_l(p, n, {0, 2}) == n - kappa;
            if (!ok)
                c.require(false, "closed forms at n=" + std::to_string(n) +
                                     " kappa=" + std::to_string(kappa));
        }
    }
}

static void criterion7() {
    Criterion c(7, "certificates reproduce the derived numeric windows", 60);
    NWindow w = claim75_n_window(4);
    c.require(w.lo == Rational(475, 13), "lower window bound 475/13");
    c.require(w.hi == Rational(95, 2), "upper window bound 95/2");
    std::vector<int> expect;
    for (int n = 37; n <= 47; ++n) expect.push_back(n);
    c.require(w.admissible == expect, "window is {37..47}");

    c.require(claim61_admissible_n(1, 1, 30) == std::vector<int>{7, 8, 9},
              "chamber window {7,8,9} at d=1, m=floor(a/2)");
    c.require(claim61_admissible_n(2, 3, 30) == std::vector<int>{7, 8, 9},
              "chamber window {7,8,9} at d=2, m=floor(a/2)");

    MorphismType t = make_type(2, 13, {{4, 1}, {3, 2}});
    Polarization p = Polarization::from_lambda1(t, Rational(3, 26));
    c.require(certify_42_43(t, p).overall == CertificateReport::Overall::Certified,
              "reference instance certified at lambda1 = 3/26");
}

static void criterion8() {
    Criterion c(8, "explicit construction verdicts across chambers and walls", 120);
    MorphismType t = make_type(2, 3, {{3, 1}, {2, 1}});
    for (uint32_t pr : {2u, 3u}) {
        PrimeField f(pr);
        Morphism<PrimeField> generic = reduce_mod(construct_semistable(t), f);
        for (const Chamber& ch : chambers(t)) {
            Polarization p = Polarization::from_lambda1(t, ch.midpoint());
            StabilityVerdict v = decide_semistable(generic, p, kBudget);
            c.require(v.status == Stability::Stable,
                      "generic construction stable at midpoint " + ch.midpoint().str() +
                          " over F_" + std::to_string(pr));
        }
        for (int kappa = 1; kappa <= t.n - 1; ++kappa) {
            Morphism<PrimeField> ps = reduce_mod(construct_semistable(t, kappa), f);
            Polarization p = Polarization::from_lambda1(t, Rational(kappa, t.n));
            StabilityVerdict v = decide_semistable(ps, p, kBudget);
            c.require(v.status == Stability::ProperlySemistable,
                      "kappa variant properly semistable at kappa/n = " +
                          Rational(kappa, t.n).str() + " over F_" + std::to_string(pr));
        }
    }
}

static void criterion9() {
    Criterion c(9, "identical seeds give byte-identical reports", 300);

    auto digest_run = [&]() {
        std::ostringstream os;
        std::mt19937_64 rng(kSeed + 3);
        MorphismType t = make_type(2, 3, {{2, 1}, {1, 2}});
        PrimeField f2(2);
        for (const Chamber& ch : chambers(t)) {
            Polarization p = Polarization::from_lambda1(t, ch.midpoint());
            for (int k = 0; k < 3; ++k) {
                Morphism<PrimeField> phi = random_morphism(t, f2, rng);
                os << verdict_digest(decide_semistable(phi, p, kBudget));
                os << block_route_to_json(block_route_status(phi, p, kBudget)).dump();
            }
        }
        os << s7_constants_to_json(s7_constants(1, f2, kBudget, hw_jobs())).dump();
        KernelBoundReport kb = kernel_bound_suite(2, 10, kSeed + 4);
        os << kb.eta2_max << kb.eta3_max << kb.eta4_max << kb.psi_max << kb.shape53_max;
        ZeroBlockReport zb = verify_zero_block_remarks(
            make_type(2, 3, {{3, 1}, {2, 1}, {1, 1}}), f2, 100, kSeed + 5);
        os << zero_block_report_to_json(zb).dump();
        return os.str();
    };

    std::string first = digest_run();
    std::string second = digest_run();
    c.require(first == second, "two runs with one seed produce identical bytes");
    c.detail << "  digest length " << first.size() << " bytes\n";
}

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0) {
        std::cout << "acceptance: all 9 criteria PASS\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
