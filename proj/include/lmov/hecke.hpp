#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lmov/braid.hpp"
#include "lmov/laurent.hpp"
#include "lmov/partitions.hpp"
#include "lmov/ratfun.hpp"

namespace lmov::hecke {

// Permutations in one-line notation, one nibble per position (n <= 16),
// padded with fixed points so equal permutations pack identically at any
// level.
uint64_t perm_identity();
int perm_at(uint64_t p, int i);
uint64_t perm_swapped(uint64_t p, int i);  // swap entries i, i+1
uint64_t perm_pack(const std::vector<int>& oneline);
std::vector<int> perm_unpack(uint64_t p, int n);

// Element of the Hecke algebra H_n in the T_w basis, with the quadratic
// relation g_i^2 = (q^{1/2} - q^{-1/2}) g_i + 1.
class HeckeElement {
public:
    explicit HeckeElement(int level);
    static HeckeElement one(int level);

    int level() const { return level_; }
    const std::map<uint64_t, ring::LaurentQT>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(uint64_t perm, const ring::LaurentQT& c);

    HeckeElement& operator+=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
    HeckeElement scaled(const ring::LaurentQT& c) const;

    // Right multiplication by g_i^{+-1}, generator index 0-based.
    HeckeElement mul_gen(int i, bool inverse) const;

    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.level_ == b.level_ && a.terms_ == b.terms_;
    }

private:
    int level_;
    std::map<uint64_t, ring::LaurentQT> terms_;
};

// Image of a braid word under sigma_i -> g_i.
HeckeElement represent(const braid::BraidWord& b);

// Same algebra element acting on strands [offset, offset + h.level()) inside
// H_level; offset 0-based.
HeckeElement embed(const HeckeElement& h, int offset, int level);

// Central idempotent of the block labeled by A, as numerator / scalar
// denominator; dim is the block multiplicity chi_A(1).
struct BlockIdempotent {
    HeckeElement num;
    ring::LaurentQT den;
    long long dim;
};

// Lagrange interpolation in the full twist; levels above 7 are refused
// because two full-twist eigenvalues collide there.
const BlockIdempotent& central_idempotent(const part::Partition& A);

// Ocneanu trace normalized by tr(1) = 1; the closure invariants below fix
// its parameter from the unknot value.
ring::RationalQT markov_trace(const HeckeElement& h);

// (t^{1/2} - t^{-1/2}) / (q^{1/2} - q^{-1/2})
ring::RationalQT unknot_value();

// Writhe-corrected HOMFLY of the braid closure.
ring::RationalQT homfly(const braid::BraidWord& b);

// Colored invariant of the closure, one partition per closure component
// (empty partitions delete their component).
ring::RationalQT colored_invariant(const braid::BraidWord& b,
                                   const std::vector<part::Partition>& colors);

// Same evaluation with one extra positive full twist inserted on the cable
// block of component alpha while keeping the original writhe correction;
// equals q^{kappa/2} times the colored invariant when the trace, cabling and
// projectors are consistent.
ring::RationalQT twisted_colored_invariant(const braid::BraidWord& b,
                                           const std::vector<part::Partition>& colors,
                                           int alpha);

// Trace evaluation with the power-sum central element
// sum_A chi_A(mu) z_A / dim_A inserted per component and no framing
// correction; cross-checks the colored table through a single trace.
ring::RationalQT power_insertion_value(const braid::BraidWord& b,
                                       const std::vector<part::Partition>& mu);

}  // namespace lmov::hecke
