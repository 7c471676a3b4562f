#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace lmov::ring {

// Exact rational scalar. Thin wrapper over GMP's mpq_class that pins the
// invariants we rely on everywhere: always canonical (coprime, positive
// denominator) and value-based ordering.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}
    BigRational(long n, long d);
    explicit BigRational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p", "-p", "p/q" with decimal integers.
    static BigRational parse(const std::string& s);

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // p-adic valuation: ord_p(a/b) = ord_p(a) - ord_p(b). Throws on zero.
    long ord_p(unsigned long p) const;

    std::string str() const;   // "p" or "p/q"

    BigRational abs() const { return BigRational(mpq_class(::abs(v_))); }

private:
    mpq_class v_;
};

// gcd of |a|,|b| as nonnegative rational: gcd(nums)/lcm(dens). gcd(0,x)=|x|.
BigRational rat_gcd(const BigRational& a, const BigRational& b);

}  // namespace lmov::ring
