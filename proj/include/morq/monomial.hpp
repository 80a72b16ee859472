#pragma once

#include <vector>

#include "morq/rational.hpp"

namespace morq {

using Exponents = std::vector<int>;

// Monomial basis of S^d V* for V* of dimension num_vars, ordered by
// descending lexicographic exponent vectors (X0^d first, Xr^d last). This is
// the single monomial order used across the whole project.
class MonomialBasis {
public:
    // Cached, interned instances; references stay valid for the process
    // lifetime.
    static const MonomialBasis& get(int num_vars, int degree);

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    int size() const { return static_cast<int>(monomials_.size()); }
    const Exponents& monomial(int i) const { return monomials_[i]; }
    const std::vector<Exponents>& monomials() const { return monomials_; }

    // Index of an exponent vector; -1 if absent (wrong degree).
    int index_of(const Exponents& e) const;

private:
    MonomialBasis(int num_vars, int degree);

    int num_vars_;
    int degree_;
    std::vector<Exponents> monomials_;
};

std::string monomial_str(const Exponents& e);

} // namespace morq
