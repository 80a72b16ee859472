#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace morq;
using morq::testing::random_form;

TEST_CASE("monomial bases are lex ordered with the right sizes") {
    const MonomialBasis& b1 = MonomialBasis::get(3, 1);
    REQUIRE(b1.size() == 3);
    CHECK(b1.monomial(0) == Exponents{1, 0, 0});
    CHECK(b1.monomial(1) == Exponents{0, 1, 0});
    CHECK(b1.monomial(2) == Exponents{0, 0, 1});

    const MonomialBasis& b2 = MonomialBasis::get(3, 2);
    CHECK(b2.size() == 6);
    CHECK(b2.monomial(0) == Exponents{2, 0, 0});  // X0^2 first
    CHECK(b2.monomial(5) == Exponents{0, 0, 2});  // X2^2 last
    for (int i = 0; i < b2.size(); ++i) CHECK(b2.index_of(b2.monomial(i)) == i);
    CHECK(b2.index_of(Exponents{1, 0, 0}) == -1);

    // the linear basis on P^2 has length 3 = the a of the (d+1,1)+(d,3) types
    CHECK(b1.size() == morq::testing::make_type(2, 3, {{2, 1}, {1, 3}}).a21());
}

TEST_CASE("form products expand exactly") {
    RationalField Q;
    auto X0 = HomForm<RationalField>::variable(Q, 3, 0);
    auto X1 = HomForm<RationalField>::variable(Q, 3, 1);

    auto p = X0 * X1;
    CHECK(p.degree() == 2);
    CHECK(p.coeffs[p.basis->index_of(Exponents{1, 1, 0})] == Rational(1));

    HomForm<RationalField> zero(Q, 3, 2);
    CHECK((X0 * X1 * zero).is_zero());

    auto diff = (X0 + X1) * (X0 - X1);
    auto expect = X0 * X0 - X1 * X1;
    CHECK(diff == expect);
}

TEST_CASE("multiplication is commutative and bilinear") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_form(3, 1 + static_cast<int>(rng() % 2), rng);
        auto g = random_form(3, 1 + static_cast<int>(rng() % 2), rng);
        auto h = random_form(3, g.degree(), rng);
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("multiplication by a nonzero monomial is injective") {
    RationalField Q;
    for (int d = 0; d <= 3; ++d) {
        auto mono = HomForm<RationalField>::monomial(Q, Exponents{1, 1, 0}, Rational(1));
        Matrix<RationalField> m = multiplication_matrix(mono, d);
        CHECK(m.rank() == m.cols()); // full column rank
    }
}

TEST_CASE("koszul grid has kernel dimension 3 at degree 1") {
    RationalField Q;
    FormMatrix<RationalField> psi(Q, 1, 3, 3, 1);
    for (int j = 0; j < 3; ++j) psi.at(0, j) = HomForm<RationalField>::variable(Q, 3, j);
    FormKernel<RationalField> k = form_matrix_kernel(psi, 1);
    CHECK(k.dim() == 3);
    // each member really annihilates psi
    for (const auto& vec : k.basis) {
        HomForm<RationalField> acc(Q, 3, 2);
        for (int j = 0; j < 3; ++j) acc += psi.at(0, j) * vec[j];
        CHECK(acc.is_zero());
    }
}

TEST_CASE("kernel dimension complements the expanded rank") {
    std::mt19937_64 rng(17);
    RationalField Q;
    for (int trial = 0; trial < 10; ++trial) {
        int l = 1 + static_cast<int>(rng() % 3);
        int c = 1 + static_cast<int>(rng() % 3);
        int e = 1 + static_cast<int>(rng() % 2);
        int d = static_cast<int>(rng() % 3);
        FormMatrix<RationalField> psi(Q, l, c, 3, e);
        for (auto& f : psi.e) f = random_form(3, e, rng);
        Matrix<RationalField> m = expanded_form_matrix(psi, d);
        CHECK(form_matrix_kernel(psi, d).dim() + m.rank() ==
              c * static_cast<int>(sym_dim(2, d)));
    }
}

TEST_CASE("kernel dimension is invariant under row operations") {
    std::mt19937_64 rng(23);
    RationalField Q;
    FormMatrix<RationalField> psi(Q, 2, 3, 3, 1);
    for (auto& f : psi.e) f = random_form(3, 1, rng);
    int before = form_matrix_kernel(psi, 2).dim();
    // add 3 * (row 0) to row 1
    for (int j = 0; j < 3; ++j)
        psi.at(1, j) += psi.at(0, j).scaled(Rational(3));
    CHECK(form_matrix_kernel(psi, 2).dim() == before);
}

TEST_CASE("generic eta grids respect the kernel bounds") {
    RationalField Q;
    std::vector<Rational> ones(10, Rational(1));
    ones[0] = Rational(2);
    CHECK(form_matrix_kernel(eta2(Q, ones), 2).dim() <= 5);

    std::vector<Rational> bc = {Rational(1), Rational(1), Rational(1), Rational(1),
                                Rational(1)};
    CHECK(form_matrix_kernel(eta3(Q, bc), 2).dim() <= 4);
    std::vector<Rational> bc4 = {Rational(0), Rational(1), Rational(1), Rational(0),
                                 Rational(0)};
    CHECK(form_matrix_kernel(eta4(Q, bc4), 2).dim() <= 4);
}

TEST_CASE("pairing orthogonal: trivial and nondegenerate cases") {
    RationalField Q;
    // empty row set: the orthogonal is everything, m * dim S^{a}
    FormKernel<RationalField> full = pairing_orthogonal<RationalField>(Q, 3, 2, 1, 1, {});
    CHECK(full.dim() == 2 * 3);

    // equal degrees make the pairing scalar multiplication: a full row space
    // has zero orthogonal
    std::vector<std::vector<HomForm<RationalField>>> rows;
    const MonomialBasis& b = MonomialBasis::get(3, 1);
    for (int i = 0; i < 2; ++i)
        for (int t = 0; t < b.size(); ++t) {
            std::vector<HomForm<RationalField>> row(2, HomForm<RationalField>(Q, 3, 1));
            row[i] = HomForm<RationalField>::monomial(Q, b.monomial(t), Rational(1));
            rows.push_back(row);
        }
    CHECK(pairing_orthogonal(Q, 3, 2, 1, 0, rows).dim() == 0);
}

TEST_CASE("pairing orthogonal of the (0 | u f | v f) row shape") {
    // rows (0, u*f_i, v*f_i) with d = 2: the orthogonal inside M* (x) V*
    // keeps at least the 4 directions (w, c*v, -c*u)
    RationalField Q;
    std::mt19937_64 rng(29);
    auto u = HomForm<RationalField>::variable(Q, 3, 0);
    auto v = HomForm<RationalField>::variable(Q, 3, 1);
    std::vector<std::vector<HomForm<RationalField>>> rows;
    for (int i = 0; i < 3; ++i) {
        auto f = random_form(3, 1, rng);
        if (f.is_zero()) f = u;
        rows.push_back({HomForm<RationalField>(Q, 3, 2), u * f, v * f});
    }
    FormKernel<RationalField> orth = pairing_orthogonal(Q, 3, 3, 2, 1, rows);
    CHECK(orth.dim() >= 4);
}

TEST_CASE("double orthogonal contains the original rows") {
    std::mt19937_64 rng(31);
    RationalField Q;
    int m = 2, d2 = 1, adeg = 1;
    std::vector<std::vector<HomForm<RationalField>>> rows;
    for (int i = 0; i < 2; ++i) {
        std::vector<HomForm<RationalField>> row;
        for (int j = 0; j < m; ++j) row.push_back(random_form(3, d2, rng));
        rows.push_back(row);
    }
    auto orth = pairing_orthogonal(Q, 3, m, d2, adeg, rows);
    // pair back: orthogonal of the orthogonal, now inside M (x) S^{d2}
    auto dbl = pairing_orthogonal(Q, 3, m, adeg, d2, orth.basis);

    // each original row must lie in the span of dbl.basis
    long dim = sym_dim(2, d2);
    RankAccumulator<RationalField> acc(Q, static_cast<int>(m * dim));
    auto flatten = [&](const std::vector<HomForm<RationalField>>& row) {
        std::vector<Rational> v;
        for (const auto& f : row)
            for (const auto& c : f.coeffs) v.push_back(c);
        return v;
    };
    for (const auto& row : dbl.basis) acc.insert(flatten(row));
    for (const auto& row : rows) CHECK(acc.contains(flatten(row)));
}

TEST_CASE("form grids serialize losslessly") {
    std::mt19937_64 rng(37);
    RationalField Q;
    FormMatrix<RationalField> m(Q, 2, 2, 3, 2);
    for (auto& f : m.e) f = random_form(3, 2, rng);
    json j = form_matrix_to_json(m);
    CHECK(form_matrix_from_json(j) == m);
}
