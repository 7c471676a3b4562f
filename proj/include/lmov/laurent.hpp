#pragma once

#include "lmov/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace lmov::ring {

// Laurent polynomial in q^{1/2}, t^{1/2} over BigRational. Exponents are
// stored doubled, so the key (qh, th) is the monomial q^{qh/2} t^{th/2};
// every exponent slot is an integer and no fractional bookkeeping leaks out.
// Zero coefficients are never stored.
class LaurentQT {
public:
    using Key = std::pair<int, int>;  // (qh, th), ordered lexicographically
    using Terms = std::map<Key, BigRational>;

    LaurentQT() = default;
    static LaurentQT zero() { return LaurentQT(); }
    static LaurentQT one() { return monomial(0, 0, BigRational(1)); }
    static LaurentQT constant(const BigRational& c) { return monomial(0, 0, c); }
    static LaurentQT monomial(int qh, int th, const BigRational& c);

    // Quantum integer [n]_q = q^{-n/2} - q^{n/2}; [0] = 0.
    static LaurentQT qint(int n);
    // t^{1/2} - t^{-1/2}.
    static LaurentQT tdiff();
    // z^2 = q - 2 + q^{-1} (the squared skein variable).
    static LaurentQT z2();

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const Terms& terms() const { return terms_; }
    BigRational coeff(int qh, int th) const;

    LaurentQT operator-() const;
    LaurentQT& operator+=(const LaurentQT& o);
    LaurentQT& operator-=(const LaurentQT& o);
    friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
    friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
    friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
    LaurentQT& operator*=(const LaurentQT& o) { *this = *this * o; return *this; }
    friend bool operator==(const LaurentQT& a, const LaurentQT& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentQT& a, const LaurentQT& b) { return !(a == b); }

    LaurentQT scaled(const BigRational& c) const;
    LaurentQT pow(int k) const;  // k >= 0

    // q -> q^k, t -> t^k (exponent dilation); k >= 1.
    LaurentQT adams(int k) const;
    // q -> q^{-1}.
    LaurentQT invert_q() const;
    // t -> t^{-1}.
    LaurentQT invert_t() const;

    int min_qh() const;  // throws on zero
    int max_qh() const;
    int min_th() const;
    int max_th() const;

    bool q_symmetric() const { return invert_q() == *this; }
    bool q_integral() const;  // all qh even
    bool t_integral() const;  // all th even
    bool depends_on_t() const;
    bool depends_on_q() const;

    // min ord_p over nonzero coefficients; throws on zero polynomial.
    long coeff_ord_p(unsigned long p) const;
    // gcd of all coefficients (positive); zero polynomial -> 0.
    BigRational content() const;

    void insert_add(int qh, int th, const BigRational& c);

    std::string json() const;                       // stable, sorted by (qh, th)
    static LaurentQT from_json(const std::string&); // inverse of json()
    std::string pretty() const;                     // human-readable, for logs

private:
    Terms terms_;
};

// Exact division; throws std::domain_error if g = 0 or g does not divide f.
LaurentQT exact_div(const LaurentQT& f, const LaurentQT& g);
bool divides(const LaurentQT& g, const LaurentQT& f);

// Multiplicity of the root q^{1/2} = 1 (i.e. the largest k with (q^{1/2}-1)^k
// dividing f). Throws on the zero polynomial.
int order_at_q1(const LaurentQT& f);

// Substitute q^{1/2} = 1. Result is a Laurent polynomial in t^{1/2} only.
LaurentQT collapse_q1(const LaurentQT& f);

// Rewrite of a q-symmetric, q-integral Laurent polynomial in the basis
// z^{2g} t^{th/2} with z^2 = q - 2 + q^{-1}. Key is (g, th). Throws if f is
// not symmetric under q -> q^{-1} or has odd qh.
using Z2Form = std::map<std::pair<int, int>, BigRational>;
Z2Form to_z2_basis(const LaurentQT& f);
LaurentQT z2_to_laurent(const Z2Form& z);

}  // namespace lmov::ring
