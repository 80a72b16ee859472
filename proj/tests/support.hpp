#pragma once

#include <random>

#include "morq/certificates.hpp"
#include "morq/constants.hpp"
#include "morq/embedding.hpp"
#include "morq/json_io.hpp"

namespace morq::testing {

inline MorphismType make_type(int r, int n, std::vector<std::pair<int, int>> blocks) {
    MorphismType t;
    t.r = r;
    t.n = n;
    for (auto [d, m] : blocks) t.blocks.push_back(SourceBlock{d, m});
    t.validate();
    return t;
}

// the running example: O(-3) + O(-2) -> 3 O on P^2
inline MorphismType example31_type() { return make_type(2, 3, {{3, 1}, {2, 1}}); }

inline Morphism<PrimeField> random_morphism(const MorphismType& t, PrimeField f,
                                            std::mt19937_64& rng) {
    Morphism<PrimeField> m = zero_morphism(f, t);
    for (auto& blk : m.blocks)
        for (auto& form : blk.e)
            for (auto& c : form.coeffs) c = static_cast<uint32_t>(rng() % f.p);
    return m;
}

inline HomForm<RationalField> random_form(int num_vars, int degree,
                                          std::mt19937_64& rng, long span = 5) {
    RationalField Q;
    HomForm<RationalField> h(Q, num_vars, degree);
    for (auto& c : h.coeffs)
        c = Rational(static_cast<long>(rng() % (2 * span + 1)) - span);
    return h;
}

// midpoints of a type's chambers, optionally filtered by a predicate
inline std::vector<Rational> chamber_midpoints(const MorphismType& t) {
    std::vector<Rational> out;
    for (const auto& ch : chambers(t)) out.push_back(ch.midpoint());
    return out;
}

} // namespace morq::testing
