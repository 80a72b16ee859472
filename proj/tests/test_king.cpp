#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace morq;
using morq::testing::make_type;
using morq::testing::random_morphism;

namespace {

constexpr unsigned long long kBudget = 5'000'000;

SubspaceFamily full_family(const MorphismType& t, PrimeField f) {
    SubspaceFamily fam;
    for (int i = 0; i < t.num_blocks(); ++i)
        fam.blocks.push_back(Matrix<PrimeField>::identity(f, t.mult(i)));
    return fam;
}

SubspaceFamily zero_family(const MorphismType& t, PrimeField f) {
    SubspaceFamily fam;
    for (int i = 0; i < t.num_blocks(); ++i)
        fam.blocks.push_back(Matrix<PrimeField>(f, 0, t.mult(i)));
    return fam;
}

Morphism<PrimeField> example31(PrimeField f, std::optional<int> kappa = std::nullopt) {
    return reduce_mod(construct_semistable(morq::testing::example31_type(), kappa), f);
}

} // namespace

TEST_CASE("image dimension of trivial families") {
    PrimeField f2(2);
    MorphismType t = morq::testing::example31_type();
    Morphism<PrimeField> phi = example31(f2);

    CHECK(min_image_dim(phi, zero_family(t, f2)) == 0);
    Morphism<PrimeField> zero = zero_morphism(f2, t);
    CHECK(min_image_dim(zero, full_family(t, f2)) == 0);

    // second column alone spans everything: the psi_i2*X0 entries are
    // distinct monomials
    SubspaceFamily fam;
    fam.blocks.push_back(Matrix<PrimeField>(f2, 0, 1));
    fam.blocks.push_back(Matrix<PrimeField>::identity(f2, 1));
    CHECK(min_image_dim(phi, fam) == 3);
}

TEST_CASE("image dimension is monotone under enlarging a subspace") {
    std::mt19937_64 rng(41);
    PrimeField f2(2);
    MorphismType t = make_type(2, 3, {{2, 1}, {1, 2}});
    for (int trial = 0; trial < 30; ++trial) {
        Morphism<PrimeField> phi = random_morphism(t, f2, rng);
        auto subs0 = all_subspaces(f2, t.mult(0), kBudget);
        auto subs1 = all_subspaces(f2, t.mult(1), kBudget);
        for (const auto& s1 : subs1) {
            int prev = -1;
            // subspaces of F_2^1: dims 0 then 1, so nested
            for (const auto& s0 : subs0) {
                SubspaceFamily fam{{s0, s1}};
                int img = min_image_dim(phi, fam);
                if (s0.rows() == 0) prev = img;
                else CHECK(img >= prev);
            }
        }
    }
}

TEST_CASE("zero morphism is unstable with the full-family witness") {
    PrimeField f2(2);
    MorphismType t = morq::testing::example31_type();
    Polarization p = Polarization::from_lambda1(t, Rational(1, 6));
    StabilityVerdict v = decide_semistable(zero_morphism(f2, t), p, kBudget);
    CHECK(v.status == Stability::Unstable);
    REQUIRE(v.witness);
    CHECK(*v.witness_margin < Rational(0));
}

TEST_CASE("the explicit construction is stable at chamber midpoints") {
    for (uint32_t pr : {2u, 3u}) {
        PrimeField f(pr);
        Morphism<PrimeField> phi = example31(f);
        MorphismType t = phi.type;
        for (const Rational& mid : morq::testing::chamber_midpoints(t)) {
            Polarization p = Polarization::from_lambda1(t, mid);
            StabilityVerdict v = decide_semistable(phi, p, kBudget);
            CHECK(v.status == Stability::Stable);
        }
    }
}

TEST_CASE("the kappa variant is properly semistable at lambda1 = kappa/n") {
    for (uint32_t pr : {2u, 3u}) {
        PrimeField f(pr);
        MorphismType t = morq::testing::example31_type();
        for (int kappa = 1; kappa <= t.n - 1; ++kappa) {
            Morphism<PrimeField> phi = example31(f, kappa);
            Polarization p = Polarization::from_lambda1(t, Rational(kappa, t.n));
            StabilityVerdict v = decide_semistable(phi, p, kBudget);
            CHECK(v.status == Stability::ProperlySemistable);
            REQUIRE(v.witness);
            CHECK(*v.witness_margin == Rational(0));
        }
    }
}

TEST_CASE("block forms: trivial cases") {
    PrimeField f2(2);
    MorphismType t = morq::testing::example31_type();
    Polarization p = Polarization::from_lambda1(t, Rational(1, 6));

    // kappa = 0: reachable iff the full image misses a line
    Morphism<PrimeField> phi = example31(f2);
    CHECK_FALSE(block_form_reachable(phi, p, {0, 0}, kBudget));
    Morphism<PrimeField> zero = zero_morphism(f2, t);
    CHECK(block_form_reachable(zero, p, {0, 0}, kBudget));

    // the zero morphism reaches every block with an admissible threshold
    for (int k1 = 0; k1 <= 1; ++k1)
        for (int k2 = 0; k2 <= 1; ++k2) {
            auto hit = block_form_reachable(zero, p, {k1, k2}, kBudget);
            int l = threshold_l(p, t.n, {k1, k2});
            CHECK(static_cast<bool>(hit) == (l <= t.n));
        }

    // the stable construction reaches no block at all
    for (int k1 = 0; k1 <= 1; ++k1)
        for (int k2 = 0; k2 <= 1; ++k2)
            CHECK_FALSE(block_form_reachable(phi, p, {k1, k2}, kBudget));
}

TEST_CASE("exhaustive check and block-form route agree on random morphisms") {
    std::mt19937_64 rng(101);
    for (auto [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        MorphismType t = make_type(2, 3, {{2, m1}, {1, m2}});
        for (uint32_t pr : {2u, 3u}) {
            PrimeField f(pr);
            for (const Rational& mid : morq::testing::chamber_midpoints(t)) {
                Polarization p = Polarization::from_lambda1(t, mid);
                for (int trial = 0; trial < 8; ++trial) {
                    Morphism<PrimeField> phi = random_morphism(t, f, rng);
                    StabilityVerdict v = decide_semistable(phi, p, kBudget);
                    BlockRouteVerdict b = block_route_status(phi, p, kBudget);
                    CHECK(v.status == b.status);
                }
            }
        }
    }
}

TEST_CASE("three-block types go through the same two routes") {
    std::mt19937_64 rng(303);
    MorphismType t = make_type(1, 3, {{3, 1}, {2, 1}, {1, 1}});
    for (uint32_t pr : {2u, 3u}) {
        PrimeField f(pr);
        for (auto [l1, l2] : std::vector<std::pair<Rational, Rational>>{
                 {Rational(1, 10), Rational(1, 5)},
                 {Rational(1, 7), Rational(2, 7)},
                 {Rational(1, 20), Rational(3, 10)}}) {
            Polarization p = Polarization::from_lambda12(t, l1, l2);
            for (int trial = 0; trial < 10; ++trial) {
                Morphism<PrimeField> phi = random_morphism(t, f, rng);
                StabilityVerdict v = decide_semistable(phi, p, kBudget);
                BlockRouteVerdict b = block_route_status(phi, p, kBudget);
                CHECK(v.status == b.status);
            }
        }
    }
}

TEST_CASE("verdicts are invariant under weight scaling") {
    std::mt19937_64 rng(55);
    PrimeField f2(2);
    MorphismType t = make_type(2, 3, {{2, 1}, {1, 2}});
    Polarization p = Polarization::from_lambda1(t, Rational(1, 5));
    for (int trial = 0; trial < 20; ++trial) {
        Morphism<PrimeField> phi = random_morphism(t, f2, rng);
        StabilityVerdict a = decide_semistable(phi, p.lambdas, p.mu, kBudget);
        std::vector<Rational> scaled = p.lambdas;
        for (auto& l : scaled) l *= Rational(12);
        StabilityVerdict b = decide_semistable(phi, scaled, p.mu * Rational(12), kBudget);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("no properly semistable verdicts at regular weights") {
    std::mt19937_64 rng(77);
    PrimeField f3(3);
    for (auto [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}}) {
        MorphismType t = make_type(1, 3, {{3, m1}, {1, m2}});
        for (const Rational& mid : morq::testing::chamber_midpoints(t)) {
            Polarization p = Polarization::from_lambda1(t, mid);
            for (int trial = 0; trial < 10; ++trial) {
                Morphism<PrimeField> phi = random_morphism(t, f3, rng);
                StabilityVerdict v = decide_semistable(phi, p, kBudget);
                CHECK(v.status != Stability::ProperlySemistable);
            }
        }
    }
}

TEST_CASE("budget gate on the tuple enumeration") {
    PrimeField f2(2);
    MorphismType t = make_type(2, 3, {{2, 3}, {1, 3}});
    Polarization p = Polarization::from_lambda1(t, Rational(1, 12));
    Morphism<PrimeField> phi = zero_morphism(f2, t);
    CHECK_THROWS_AS(decide_semistable(phi, p, 10), BudgetExceeded);
}

TEST_CASE("verdict JSON carries status, prime, witness, margins") {
    PrimeField f2(2);
    MorphismType t = morq::testing::example31_type();
    Polarization p = Polarization::from_lambda1(t, Rational(1, 6));
    StabilityVerdict v = decide_semistable(zero_morphism(f2, t), p, kBudget);
    json j = verdict_to_json(v);
    CHECK(j.at("status") == "unstable");
    CHECK(j.at("prime") == 2);
    CHECK_FALSE(j.at("witness").is_null());
    CHECK(j.at("margins").is_array());
}
