#include "morq/morphism.hpp"

#include <sstream>

namespace morq {

void MorphismType::validate() const {
    if (r < 1) throw UnsupportedShape("ambient dimension r must be >= 1");
    if (n < 1) throw UnsupportedShape("target multiplicity n must be >= 1");
    if (blocks.empty()) throw UnsupportedShape("at least one source block required");
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].mult < 1) throw UnsupportedShape("multiplicities must be >= 1");
        if (blocks[i].degree < 1) throw UnsupportedShape("twists must be >= 1");
        if (i > 0 && blocks[i].degree >= blocks[i - 1].degree)
            throw UnsupportedShape("twists must be strictly decreasing");
    }
}

int MorphismType::total_mult() const {
    int s = 0;
    for (const auto& b : blocks) s += b.mult;
    return s;
}

std::string MorphismType::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << " + ";
        if (blocks[i].mult != 1) os << blocks[i].mult << "*";
        os << "O(-" << blocks[i].degree << ")";
    }
    os << " -> " << n << "*O on P^" << r;
    return os.str();
}

Polarization Polarization::from_lambda1(const MorphismType& t, const Rational& l1) {
    if (!t.is_two_block())
        throw UnsupportedShape("lambda1 alone determines the weights only for two source blocks");
    Polarization p;
    p.lambdas.push_back(l1);
    // m1*l1 + m2*l2 = 1
    p.lambdas.push_back((Rational(1) - Rational(t.mult(0)) * l1) / Rational(t.mult(1)));
    p.mu = Rational(1, t.n);
    return p;
}

Polarization Polarization::from_lambda12(const MorphismType& t, const Rational& l1,
                                         const Rational& l2) {
    if (t.num_blocks() != 3)
        throw UnsupportedShape("(lambda1, lambda2) determines the weights only for three source blocks");
    Polarization p;
    p.lambdas.push_back(l1);
    p.lambdas.push_back(l2);
    p.lambdas.push_back(Rational(1) - Rational(t.mult(0)) * l1 - Rational(t.mult(1)) * l2);
    p.mu = Rational(1, t.n);
    return p;
}

void Polarization::validate(const MorphismType& t) const {
    if (static_cast<int>(lambdas.size()) != t.num_blocks())
        throw UnsupportedShape("weight count does not match block count");
    Rational s(0);
    for (int i = 0; i < t.num_blocks(); ++i) s += Rational(t.mult(i)) * lambdas[i];
    if (!(s == Rational(1)))
        throw UnsupportedShape("weights must satisfy sum m_i*lambda_i = 1 exactly");
    if (!(mu == Rational(1, t.n)))
        throw UnsupportedShape("mu must equal 1/n exactly");
}

bool Polarization::all_positive() const {
    for (const auto& l : lambdas)
        if (!(l > Rational(0))) return false;
    return mu > Rational(0);
}

Rational Polarization::weighted_dim(const std::vector<int>& dims) const {
    assert(dims.size() == lambdas.size());
    Rational s(0);
    for (size_t i = 0; i < dims.size(); ++i) s += Rational(dims[i]) * lambdas[i];
    return s;
}

TildePolarization TildePolarization::from(const MorphismType& t, const Polarization& p) {
    TildePolarization tp;
    tp.beta1 = p.mu;
    if (t.is_two_block()) {
        // alpha1 = l1, alpha2 = l2 - a21*l1
        tp.alphas.push_back(p.lambdas[0]);
        tp.alphas.push_back(p.lambdas[1] - Rational(Integer(t.a21())) * p.lambdas[0]);
    } else if (t.is_three_block()) {
        const Rational& l1 = p.lambdas[0];
        const Rational& l2 = p.lambdas[1];
        const Rational& l3 = p.lambdas[2];
        Rational a21(Integer(t.a21())), a31(Integer(t.a31())), a32(Integer(t.a32()));
        tp.alphas.push_back(l1);
        tp.alphas.push_back(l2 - a21 * l1);
        tp.alphas.push_back(l3 - a31 * l1 - a32 * l2 + a32 * a21 * l1);
    } else {
        throw UnsupportedShape("embedding weights defined for two- or three-block types only");
    }
    return tp;
}

} // namespace morq
