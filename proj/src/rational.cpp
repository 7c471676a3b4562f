#include "lmov/rational.hpp"

#include <stdexcept>

namespace lmov::ring {

BigRational::BigRational(long n, long d) {
    if (d == 0) throw std::domain_error("BigRational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigRational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("BigRational::parse: bad rational '" + s + "'");
    q.canonicalize();
    return BigRational(q);
}

long BigRational::ord_p(unsigned long p) const {
    if (is_zero()) throw std::domain_error("BigRational::ord_p: valuation of zero");
    if (p < 2) throw std::invalid_argument("BigRational::ord_p: p must be >= 2");
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), numerator().get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), denominator().get_mpz_t(), pz.get_mpz_t()));
    return vn - vd;
}

std::string BigRational::str() const {
    return v_.get_str();
}

BigRational rat_gcd(const BigRational& a, const BigRational& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return BigRational(mpq_class(gn, ld));
}

}  // namespace lmov::ring
