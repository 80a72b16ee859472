#pragma once

#include <optional>
#include <set>

#include "morq/conditions.hpp"
#include "morq/morphism.hpp"

namespace morq {

// Least integer l with l/n > sum_i kappa_i * lambda_i, capped at n+1 (the cap
// signals that no block with that many zero rows can exist).
int threshold_l(const Polarization& p, int n, const std::vector<int>& kappas);

// Least integer l with l/n >= the sum; used for the stability-side checks.
int threshold_l_tight(const Polarization& p, int n, const std::vector<int>& kappas);

struct DegeneracyInfo {
    bool degenerate = false;
    std::string reason;
};

// Detects shapes for which every weight value admits an exact King equality
// (so no chamber decomposition exists). Exact criterion: a nontrivial integer
// tuple (a_1, a_2, b) proportional to (m_1, m_2, n).
DegeneracyInfo is_degenerate(const MorphismType& t);

// Candidates for irregular values of lambda_1 (two-block types), deduplicated
// and sorted, restricted to [0, 1/m_1], endpoints included. Conservative
// superset of the true irregular set. Throws AllIrregular on degenerate types.
std::vector<Rational> irregular_candidates(const MorphismType& t);

// Line arrangement carrying the irregular pairs (lambda_1, lambda_2) for
// three-block types: vertical lines lambda_1 = kappa/(p n) and slanted lines
// lambda_2 = kappa/n - p*lambda_1.
struct IrregularLines {
    struct Vertical { int kappa; int p; };      // lambda1 = kappa/(p*n)
    struct Slanted  { int kappa; int p; };      // lambda2 = kappa/n - p*lambda1
    std::vector<Vertical> vertical;
    std::vector<Slanted> slanted;
};
IrregularLines irregular_lines(const MorphismType& t);

bool is_nonsingular_value(const MorphismType& t, const Rational& lambda1);
bool is_nonsingular_pair(const MorphismType& t, const Rational& lambda1,
                         const Rational& lambda2);

struct Chamber {
    Rational lo, hi;
    Rational midpoint() const { return (lo + hi) / Rational(2); }
};

// Open intervals between consecutive irregular candidates (two-block types).
std::vector<Chamber> chambers(const MorphismType& t);

// Set of integer tuples (a_1..a_k, b) with b/n > sum a_i*lambda_i; constant on
// chambers.
std::set<std::pair<std::vector<int>, int>> inequality_pattern(const MorphismType& t,
                                                              const Polarization& p);

struct NonemptyReport {
    std::string shape; // which family of tests applied
    std::vector<Condition> conditions;
    bool all_hold_flag = false;
};

// Exact nonemptiness tests for the shapes that admit them:
//  - m1 = m2 = 1 two-block types,
//  - (d1,1),(d2,2) two-block types (checklist depends on the chamber),
//  - (d+2,1),(d,3) types on P^2 (six-condition list).
// Throws UnsupportedShape otherwise.
NonemptyReport nonempty_conditions(const MorphismType& t, const Polarization& p);

// Explicit morphism with no zero-entry degeneration: psi = X0, first column
// drawn from lex monomials in X1..Xr of degree d1, second column psi_i2 * X0
// with psi_i2 the lex monomials of degree d2-1. Requires m1 = m2 = 1 and the
// nonemptiness bounds. When kappa is given, only the first kappa entries of
// the first column are kept (the equality witness family at lambda1 = kappa/n).
Morphism<RationalField> construct_semistable(const MorphismType& t,
                                             std::optional<int> kappa = std::nullopt);

} // namespace morq
