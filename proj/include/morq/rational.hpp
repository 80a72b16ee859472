#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "morq/errors.hpp"

namespace morq {

using Integer = mpz_class;

// Exact rational scalar. Always in lowest terms with positive denominator;
// every comparison is exact. No floating point anywhere in this project.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(long num, long den) : q_(num, den) {
        assert(den != 0);
        q_.canonicalize();
    }
    Rational(const Integer& num, const Integer& den) : q_(num, den) {
        assert(den != 0);
        q_.canonicalize();
    }

    // Accepts "a/b" or "a" with optional sign, base 10.
    static Rational parse(const std::string& s);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    // Largest integer <= value.
    Integer floor() const {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return f;
    }
    // Smallest integer >= value.
    Integer ceil() const {
        Integer c;
        mpz_cdiv_q(c.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return c;
    }

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        assert(!o.is_zero());
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// C(n, k); 0 when k > n.
Integer binom(unsigned long n, unsigned long k);

// Same, as a machine integer; asserts the value fits.
long binom_ll(unsigned long n, unsigned long k);

// Number of k-dimensional subspaces of F_p^d.
Integer gaussian_binomial(int d, int k, uint32_t p);

// dim S^d V* for V* of dimension r+1 (number of degree-d monomials in r+1
// variables); 0 for d < 0.
long sym_dim(int r, int d);

} // namespace morq
