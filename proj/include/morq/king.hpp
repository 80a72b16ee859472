#pragma once

#include <optional>

#include "morq/chambers.hpp"
#include "morq/morphism.hpp"
#include "morq/subspaces.hpp"

namespace morq {

enum class Stability { Stable, ProperlySemistable, Unstable };

std::string stability_str(Stability s);

// One subspace per source block, each as its RREF basis matrix (k_i x m_i).
struct SubspaceFamily {
    std::vector<Matrix<PrimeField>> blocks;
    std::vector<int> dims() const {
        std::vector<int> d;
        d.reserve(blocks.size());
        for (const auto& b : blocks) d.push_back(b.rows());
        return d;
    }
};

// Char-p verdict. The witness is the first family, in the fixed enumeration
// order (per-block subspaces by ascending dimension, then stream order; block
// 0 outermost), that violates (Unstable) or achieves exact equality
// (ProperlySemistable). Margins are the sorted distinct values of
// mu*dim(N'_min) - sum_i lambda_i*dim(M'_i) over admissible families.
struct StabilityVerdict {
    Stability status = Stability::Stable;
    uint32_t prime = 2;
    std::optional<SubspaceFamily> witness;
    std::optional<Rational> witness_margin;
    std::vector<Rational> margins;
};

// Dimension over F_p of the span of phi(v (x) h) for v in the family's
// subspaces and h running over the monomial basis of the matching block.
int min_image_dim(const Morphism<PrimeField>& phi, const SubspaceFamily& family);

// Exhaustive King check over F_p: quantifies all source-subspace tuples, with
// the target subspace minimized to the image span (the binding choice).
// Skips the two inadmissible tuples (all zero; all full with full image).
// Weights need not be normalized; mu > 0 and lambda entries are arbitrary
// exact rationals.
StabilityVerdict decide_semistable(const Morphism<PrimeField>& phi,
                                   const std::vector<Rational>& lambdas,
                                   const Rational& mu,
                                   unsigned long long budget);

StabilityVerdict decide_semistable(const Morphism<PrimeField>& phi,
                                   const Polarization& p,
                                   unsigned long long budget);

struct BlockFormHit {
    std::vector<int> kappas;
    int l = 0;              // zero-block row count required
    SubspaceFamily family;  // sources spanning the zero-block columns
    int image_dim = 0;
};

// Is phi equivalent to the block form with the given kappas? I.e. does a
// family of source subspaces of dimensions (m_i - kappa_i) exist whose image
// span has dimension <= n - l, l the strict threshold for kappas.
std::optional<BlockFormHit> block_form_reachable(const Morphism<PrimeField>& phi,
                                                 const Polarization& p,
                                                 const std::vector<int>& kappas,
                                                 unsigned long long budget);

// Independent three-way verdict through the block-form characterization:
// unstable iff some kappa reaches its strict threshold; stable iff in
// addition no kappa (other than the trivial two) reaches its tight threshold.
struct BlockRouteVerdict {
    Stability status = Stability::Stable;
    std::optional<BlockFormHit> strict_hit;
    std::optional<BlockFormHit> tight_hit;
};
BlockRouteVerdict block_route_status(const Morphism<PrimeField>& phi,
                                     const Polarization& p,
                                     unsigned long long budget);

} // namespace morq
