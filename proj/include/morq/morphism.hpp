#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morq/forms.hpp"

namespace morq {

struct SourceBlock {
    int degree; // twist d_i, entries of that block live in S^{d_i} V*
    int mult;   // multiplicity m_i
};

// Discrete shape of a morphism space  (+) m_i O(-d_i)  ->  n O  on P^r.
// Derived constants are recomputed on demand, never stored.
struct MorphismType {
    int r = 2;
    std::vector<SourceBlock> blocks; // degrees strictly decreasing, all >= 1
    int n = 1;

    void validate() const;

    int num_vars() const { return r + 1; }
    int num_blocks() const { return static_cast<int>(blocks.size()); }
    int mult(int i) const { return blocks[i].mult; }
    int deg(int i) const { return blocks[i].degree; }
    int total_mult() const;

    bool is_two_block() const { return blocks.size() == 2; }
    // shape m O(-d1) (+) O(-d2) (+) O(-d3) -> n O
    bool is_three_block() const {
        return blocks.size() == 3 && blocks[1].mult == 1 && blocks[2].mult == 1;
    }

    // dim S^{d_i - d_j} V*
    long a(int i, int j) const { return sym_dim(r, deg(j - 1) - deg(i - 1)); }
    long a21() const { return a(2, 1); }
    long a31() const { return a(3, 1); }
    long a32() const { return a(3, 2); }

    long p1() const {
        if (is_two_block()) return mult(0) + mult(1) * a21();
        return mult(0) + a21() + a31();
    }
    long p2() const {
        if (is_two_block()) return mult(1);
        return 1 + a32();
    }

    std::string str() const;
};

// Exact weight tuple (lambda_i; mu = 1/n), normalized so sum m_i lambda_i = 1.
struct Polarization {
    std::vector<Rational> lambdas;
    Rational mu;

    static Polarization from_lambda1(const MorphismType& t, const Rational& l1);
    static Polarization from_lambda12(const MorphismType& t, const Rational& l1,
                                      const Rational& l2);

    // checks the normalization exactly; positivity reported separately
    void validate(const MorphismType& t) const;
    bool all_positive() const;

    Rational weighted_dim(const std::vector<int>& dims) const;
};

// Weights on the embedded (reductive) side.
struct TildePolarization {
    std::vector<Rational> alphas;
    Rational beta1;

    static TildePolarization from(const MorphismType& t, const Polarization& p);

    // necessary positivity gates for a nonempty stable locus
    bool alpha2_positive() const { return alphas.size() >= 2 && alphas[1] > Rational(0); }
    bool alpha3_positive() const { return alphas.size() >= 3 && alphas[2] > Rational(0); }
};

// A morphism: one form grid per source block, sharing n rows.
template <class F>
struct Morphism {
    MorphismType type;
    std::vector<FormMatrix<F>> blocks;

    bool is_zero() const {
        for (const auto& b : blocks)
            if (!b.is_zero()) return false;
        return true;
    }
};

inline Morphism<PrimeField> reduce_mod(const Morphism<RationalField>& m, PrimeField f) {
    Morphism<PrimeField> out{m.type, {}};
    out.blocks.reserve(m.blocks.size());
    for (const auto& b : m.blocks) out.blocks.push_back(reduce_mod(b, f));
    return out;
}

template <class F>
Morphism<F> zero_morphism(F field, const MorphismType& t) {
    Morphism<F> m{t, {}};
    for (int i = 0; i < t.num_blocks(); ++i)
        m.blocks.emplace_back(field, t.n, t.mult(i), t.num_vars(), t.deg(i));
    return m;
}

} // namespace morq
