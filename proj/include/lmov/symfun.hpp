#pragma once

#include <map>
#include <vector>

#include "lmov/partitions.hpp"
#include "lmov/ratfun.hpp"

namespace lmov::sym {

// Truncated series in the power sums of L alphabets. A monomial
// prod_alpha p_{mu^alpha}(x_alpha) is indexed by the vector partition mu.
// Terms whose componentwise degree exceeds the caps are dropped by every
// operation, so arithmetic stays exact below the truncation order.
class PSeries {
public:
    PSeries() = default;
    explicit PSeries(std::vector<int> caps);
    static PSeries unit(std::vector<int> caps);

    int components() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    const std::map<part::VectorPartition, ring::RationalQT>& terms() const {
        return terms_;
    }
    ring::RationalQT coeff(const part::VectorPartition& mu) const;
    bool within_caps(const part::VectorPartition& mu) const;
    void add(const part::VectorPartition& mu, const ring::RationalQT& c);
    bool is_zero() const { return terms_.empty(); }

    PSeries& operator+=(const PSeries& o);
    PSeries operator-() const;
    friend PSeries operator+(PSeries a, const PSeries& b) { return a += b; }
    friend PSeries operator-(const PSeries& a, const PSeries& b) { return a + (-b); }
    friend PSeries operator*(const PSeries& a, const PSeries& b);

    PSeries scaled(const ring::RationalQT& c) const;
    PSeries scaled(const ring::BigRational& c) const;

    // log of a series with constant term 1 / exp of one with constant term 0.
    PSeries plog() const;
    PSeries pexp() const;

    // p_m -> p_{km} on every alphabet, q -> q^k, t -> t^k on coefficients.
    PSeries adams(int k) const;

    // Terms of exact componentwise degree `sizes`.
    PSeries slice(const std::vector<int>& sizes) const;

    // d/dp_m and multiplication by p_m on alphabet `alpha` (0-based).
    PSeries d_p(int alpha, int m) const;
    PSeries mul_p(int alpha, int m) const;

private:
    std::vector<int> caps_;
    std::map<part::VectorPartition, ring::RationalQT> terms_;
};

// prod_alpha s_{A^alpha}(x_alpha) expanded in power sums.
PSeries schur_expand(const part::VectorPartition& A, const std::vector<int>& caps);

// Schur coefficients of the exact-degree slice:
// c_B = sum_{mu of the same sizes} chi_B(mu) f_mu.
std::map<part::VectorPartition, ring::RationalQT> schur_coefficients(
    const PSeries& f, const std::vector<int>& sizes);

// sum_{i,j>=1} [ ij p_{i+j} d2/dp_i dp_j + (i+j) p_i p_j d/dp_{i+j} ] on one
// alphabet; Schur functions are eigenvectors with eigenvalue kappa.
PSeries cutjoin(const PSeries& f, int alpha);

// The bilinear companion sum_{i,j} ij p_{i+j} (df/dp_i)(dg/dp_j), which turns
// cutjoin(exp F) into exp(F) (cutjoin(F) + cutjoin_bilinear(F,F)).
PSeries cutjoin_bilinear(const PSeries& f, const PSeries& g, int alpha);

// Closed form of the colored unknot invariant, the hook-content product
// prod_{cells} (t^{1/2} q^{c/2} - t^{-1/2} q^{-c/2}) / (q^{h/2} - q^{-h/2}).
ring::RationalQT unknot_invariant(const part::Partition& A);

}  // namespace lmov::sym
