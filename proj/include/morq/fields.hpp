#pragma once

#include <cassert>
#include <cstdint>

#include "morq/rational.hpp"

namespace morq {

// Field-context objects. A matrix (or form) carries one of these by value and
// performs all scalar arithmetic through it, so prime-field entries can stay
// plain machine words.

struct RationalField {
    using Elem = Rational;
    static constexpr bool is_prime_field = false;

    Elem zero() const { return Rational(); }
    Elem one() const { return Rational(1); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        assert(!a.is_zero());
        return Rational(1) / a;
    }
    Elem from_int(long long v) const { return Rational(v); }
    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
    using Elem = uint32_t;
    static constexpr bool is_prime_field = true;

    uint32_t p;

    explicit PrimeField(uint32_t prime) : p(prime) {
        if (!is_prime(prime))
            throw ParseError("modulus " + std::to_string(prime) + " is not prime");
    }

    static bool is_prime(uint32_t v) {
        if (v < 2) return false;
        for (uint32_t q = 2; q * q <= v; ++q)
            if (v % q == 0) return false;
        return true;
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const {
        uint64_t s = uint64_t(a) + b;
        return s >= p ? Elem(s - p) : Elem(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return Elem((uint64_t(a) * b) % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        assert(a != 0);
        // extended Euclid
        int64_t t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        assert(r == 1);
        if (t < 0) t += p;
        return Elem(t);
    }
    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += p;
        return Elem(m);
    }
    // Reduction of an exact rational; the denominator must be a unit mod p.
    Elem from_rational(const Rational& r) const {
        Integer n = r.num() % p;
        Integer d = r.den() % p;
        Elem dn = Elem(d.get_ui());
        if (dn == 0)
            throw ParseError("denominator of " + r.str() + " vanishes mod " + std::to_string(p));
        Elem nn = from_int(n.get_si());
        return mul(nn, inv(dn));
    }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

} // namespace morq
