#pragma once

#include "lmov/laurent.hpp"

#include <string>

namespace lmov::ring {

// Ratio of two LaurentQT values, kept in a canonical form:
//  - num = 0 implies den = 1;
//  - num and den share no factor (gcd over q^{1/2} with coefficients in
//    Q(t^{1/2}), plus cancellation of common t-only content);
//  - den has min qh = min th = 0 and its lexicographically-leading
//    coefficient is 1 (so a monomial denominator collapses to 1).
// Equality is decided by cross-multiplication and never relies on the
// canonical form.
class RationalQT {
public:
    RationalQT() : num_(), den_(LaurentQT::one()) {}
    RationalQT(const LaurentQT& n) : num_(n), den_(LaurentQT::one()) {}
    RationalQT(const BigRational& c) : num_(LaurentQT::constant(c)), den_(LaurentQT::one()) {}
    RationalQT(const LaurentQT& n, const LaurentQT& d);

    static RationalQT zero() { return RationalQT(); }
    static RationalQT one() { return RationalQT(LaurentQT::one()); }

    const LaurentQT& num() const { return num_; }
    const LaurentQT& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    // Throws unless den = 1.
    const LaurentQT& as_laurent() const;

    RationalQT operator-() const;
    friend RationalQT operator+(const RationalQT& a, const RationalQT& b);
    friend RationalQT operator-(const RationalQT& a, const RationalQT& b);
    friend RationalQT operator*(const RationalQT& a, const RationalQT& b);
    friend RationalQT operator/(const RationalQT& a, const RationalQT& b);
    RationalQT& operator+=(const RationalQT& o) { *this = *this + o; return *this; }
    RationalQT& operator-=(const RationalQT& o) { *this = *this - o; return *this; }
    RationalQT& operator*=(const RationalQT& o) { *this = *this * o; return *this; }
    RationalQT& operator/=(const RationalQT& o) { *this = *this / o; return *this; }

    friend bool operator==(const RationalQT& a, const RationalQT& b);
    friend bool operator!=(const RationalQT& a, const RationalQT& b) { return !(a == b); }

    RationalQT scaled(const BigRational& c) const;
    RationalQT pow(int k) const;  // any integer power (negative inverts)
    RationalQT adams(int k) const;
    RationalQT invert_q() const;

    // Vanishing order at q^{1/2} = 1; num order minus den order. For the zero
    // function returns a large positive sentinel (every check passes).
    int order_q1() const;
    static constexpr int kZeroOrder = 1 << 20;

    // Exact value at q = 1, a function of t alone; throws on an actual pole.
    RationalQT eval_q1() const;

    // Membership in Q[z^2, t^{1/2}, t^{-1/2}]: Laurent, integral and
    // symmetric in q.
    bool in_z2t_ring() const;

    std::string json() const;
    static RationalQT from_json(const std::string&);
    std::string pretty() const;  // "num / den"

private:
    void canonicalize();
    LaurentQT num_, den_;
};

// Laurent-polynomial gcd of f and g in the variable q^{1/2} over the field
// Q(t^{1/2}), including common t-only content. Result is normalized (min
// exponents zero, leading coefficient 1); gcd(0, g) = normalized g.
LaurentQT laurent_gcd_q(const LaurentQT& f, const LaurentQT& g);

// Exact division of f by (q^{1/2} - 1)^k; throws when not divisible.
LaurentQT div_q1_pow(const LaurentQT& f, int k);

}  // namespace lmov::ring
