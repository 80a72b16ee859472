#include "morq/rational.hpp"

#include <ostream>

namespace morq {

Rational Rational::parse(const std::string& s) {
    auto bad = [&]() { throw ParseError("invalid rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    std::string::size_type slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(s, 10);
            return Rational(n);
        }
        std::string ns = s.substr(0, slash);
        std::string ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) bad();
        Integer n(ns, 10);
        Integer d(ds, 10);
        if (sgn(d) == 0) bad();
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rational(); // unreachable
}

std::string Rational::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Integer binom(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

long binom_ll(unsigned long n, unsigned long k) {
    Integer b = binom(n, k);
    assert(b.fits_slong_p());
    return b.get_si();
}

Integer gaussian_binomial(int d, int k, uint32_t p) {
    if (k < 0 || k > d) return Integer(0);
    Integer num(1), den(1), pw(p);
    Integer pd, pk;
    for (int i = 0; i < k; ++i) {
        mpz_pow_ui(pd.get_mpz_t(), pw.get_mpz_t(), static_cast<unsigned long>(d - i));
        mpz_pow_ui(pk.get_mpz_t(), pw.get_mpz_t(), static_cast<unsigned long>(k - i));
        num *= pd - 1;
        den *= pk - 1;
    }
    return num / den;
}

long sym_dim(int r, int d) {
    if (d < 0) return 0;
    return binom_ll(static_cast<unsigned long>(r + d), static_cast<unsigned long>(r));
}

} // namespace morq
