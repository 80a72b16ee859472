#include "morq/king.hpp"

#include <algorithm>

namespace morq {

std::string stability_str(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::ProperlySemistable: return "properly-semistable";
        case Stability::Unstable: return "unstable";
    }
    return "?";
}

int min_image_dim(const Morphism<PrimeField>& phi, const SubspaceFamily& family) {
    assert(family.blocks.size() == phi.blocks.size());
    PrimeField f = phi.blocks.empty() ? PrimeField(2) : phi.blocks[0].field;
    int n = phi.type.n;
    RankAccumulator<PrimeField> acc(f, n);
    std::vector<uint32_t> col(n);
    for (size_t i = 0; i < phi.blocks.size(); ++i) {
        const FormMatrix<PrimeField>& blk = phi.blocks[i];
        const Matrix<PrimeField>& basis = family.blocks[i];
        assert(basis.cols() == blk.cols);
        int dim_forms = blk.at(0, 0).basis->size();
        for (int u = 0; u < basis.rows(); ++u) {
            for (int s = 0; s < dim_forms; ++s) {
                for (int row = 0; row < n; ++row) {
                    uint32_t acc_v = 0;
                    for (int j = 0; j < blk.cols; ++j) {
                        uint32_t c = basis.at(u, j);
                        if (c == 0) continue;
                        acc_v = f.add(acc_v, f.mul(c, blk.at(row, j).coeffs[s]));
                    }
                    col[row] = acc_v;
                }
                if (acc.insert(col) && acc.full()) return n;
            }
        }
    }
    return acc.rank();
}

namespace {

// product enumeration of per-block subspace lists, block 0 outermost
template <class Fn>
void for_each_tuple(const std::vector<std::vector<Matrix<PrimeField>>>& lists, Fn&& fn) {
    std::vector<size_t> idx(lists.size(), 0);
    SubspaceFamily fam;
    fam.blocks.resize(lists.size(), Matrix<PrimeField>());
    while (true) {
        for (size_t i = 0; i < lists.size(); ++i) fam.blocks[i] = lists[i][idx[i]];
        fn(fam);
        int i = static_cast<int>(lists.size()) - 1;
        while (i >= 0 && idx[i] + 1 == lists[i].size()) idx[i--] = 0;
        if (i < 0) return;
        ++idx[i];
    }
}

} // namespace

StabilityVerdict decide_semistable(const Morphism<PrimeField>& phi,
                                   const std::vector<Rational>& lambdas,
                                   const Rational& mu,
                                   unsigned long long budget) {
    const MorphismType& t = phi.type;
    assert(lambdas.size() == phi.blocks.size());
    PrimeField f = phi.blocks[0].field;

    Integer total(1);
    for (int i = 0; i < t.num_blocks(); ++i) {
        Integer s(0);
        for (int k = 0; k <= t.mult(i); ++k) s += gaussian_binomial(t.mult(i), k, f.p);
        total *= s;
    }
    if (total > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("decide_semistable",
                             total.fits_ulong_p() ? total.get_ui() : ~0ull, budget);

    std::vector<std::vector<Matrix<PrimeField>>> lists;
    for (int i = 0; i < t.num_blocks(); ++i)
        lists.push_back(all_subspaces(f, t.mult(i), budget));

    StabilityVerdict v;
    v.prime = f.p;
    std::set<Rational> margins;
    std::optional<SubspaceFamily> violator, tight;
    Rational violator_margin;

    for_each_tuple(lists, [&](const SubspaceFamily& fam) {
        bool all_zero = true, all_full = true;
        Rational rhs(0);
        for (size_t i = 0; i < fam.blocks.size(); ++i) {
            int d = fam.blocks[i].rows();
            if (d != 0) all_zero = false;
            if (d != t.mult(i)) all_full = false;
            rhs += Rational(d) * lambdas[i];
        }
        if (all_zero) return; // inadmissible: every subspace zero
        int image = min_image_dim(phi, fam);
        if (all_full && image == t.n) return; // inadmissible: every subspace full
        Rational margin = mu * Rational(image) - rhs;
        margins.insert(margin);
        if (margin < Rational(0)) {
            if (!violator) { violator = fam; violator_margin = margin; }
        } else if (margin.is_zero()) {
            if (!tight) tight = fam;
        }
    });

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

StabilityVerdict decide_semistable(const Morphism<PrimeField>& phi,
                                   const Polarization& p,
                                   unsigned long long budget) {
    p.validate(phi.type);
    return decide_semistable(phi, p.lambdas, p.mu, budget);
}

namespace {

// first family with the given dimensions whose image span has dim <= target
std::optional<BlockFormHit> find_small_image_family(const Morphism<PrimeField>& phi,
                                                    const std::vector<int>& dims,
                                                    int target,
                                                    unsigned long long budget) {
    const MorphismType& t = phi.type;
    PrimeField f = phi.blocks[0].field;
    Integer total(1);
    for (int i = 0; i < t.num_blocks(); ++i)
        total *= gaussian_binomial(t.mult(i), dims[i], f.p);
    if (total > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("block_form_reachable",
                             total.fits_ulong_p() ? total.get_ui() : ~0ull, budget);
    if (total == 0) return std::nullopt;

    std::vector<SubspaceIterator> iters;
    for (int i = 0; i < t.num_blocks(); ++i)
        iters.emplace_back(f, t.mult(i), dims[i]);

    SubspaceFamily fam;
    fam.blocks.resize(t.num_blocks(), Matrix<PrimeField>());
    // initialize
    for (int i = 0; i < t.num_blocks(); ++i) {
        bool ok = iters[i].next(fam.blocks[i]);
        if (!ok) return std::nullopt;
    }
    while (true) {
        int image = min_image_dim(phi, fam);
        if (image <= target) {
            BlockFormHit hit;
            hit.family = fam;
            hit.image_dim = image;
            return hit;
        }
        int i = t.num_blocks() - 1;
        while (i >= 0 && !iters[i].next(fam.blocks[i])) {
            iters[i].reset();
            iters[i].next(fam.blocks[i]);
            --i;
        }
        if (i < 0) return std::nullopt;
    }
}

} // namespace

std::optional<BlockFormHit> block_form_reachable(const Morphism<PrimeField>& phi,
                                                 const Polarization& p,
                                                 const std::vector<int>& kappas,
                                                 unsigned long long budget) {
    const MorphismType& t = phi.type;
    p.validate(t);
    assert(static_cast<int>(kappas.size()) == t.num_blocks());
    int l = threshold_l(p, t.n, kappas);
    if (l > t.n) return std::nullopt;
    std::vector<int> dims(t.num_blocks());
    for (int i = 0; i < t.num_blocks(); ++i) {
        assert(kappas[i] >= 0 && kappas[i] <= t.mult(i));
        dims[i] = t.mult(i) - kappas[i];
    }
    auto hit = find_small_image_family(phi, dims, t.n - l, budget);
    if (hit) {
        hit->kappas = kappas;
        hit->l = l;
    }
    return hit;
}

BlockRouteVerdict block_route_status(const Morphism<PrimeField>& phi,
                                     const Polarization& p,
                                     unsigned long long budget) {
    const MorphismType& t = phi.type;
    p.validate(t);
    BlockRouteVerdict v;

    std::vector<int> kappas(t.num_blocks(), 0);
    auto advance = [&]() {
        int i = t.num_blocks() - 1;
        while (i >= 0 && kappas[i] == t.mult(i)) kappas[i--] = 0;
        if (i < 0) return false;
        ++kappas[i];
        return true;
    };

    do {
        bool all_zero = true, all_full = true;
        for (int i = 0; i < t.num_blocks(); ++i) {
            if (kappas[i] != 0) all_zero = false;
            if (kappas[i] != t.mult(i)) all_full = false;
        }
        if (!v.strict_hit) {
            auto hit = block_form_reachable(phi, p, kappas, budget);
            if (hit) v.strict_hit = hit;
        }
        if (!v.tight_hit && !all_zero && !all_full) {
            int lt = threshold_l_tight(p, t.n, kappas);
            if (lt <= t.n) {
                std::vector<int> dims(t.num_blocks());
                for (int i = 0; i < t.num_blocks(); ++i) dims[i] = t.mult(i) - kappas[i];
                auto hit = find_small_image_family(phi, dims, t.n - lt, budget);
                if (hit) {
                    hit->kappas = kappas;
                    hit->l = lt;
                    v.tight_hit = hit;
                }
            }
        }
    } while (advance());

    if (v.strict_hit) v.status = Stability::Unstable;
    else if (v.tight_hit) v.status = Stability::ProperlySemistable;
    else v.status = Stability::Stable;
    return v;
}

} // namespace morq
