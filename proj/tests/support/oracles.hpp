#pragma once

#include <utility>

#include "lmov/braid.hpp"
#include "lmov/partitions.hpp"
#include "lmov/ratfun.hpp"

namespace lmov::oracle {

// HOMFLY of a braid closure by crossing-switch recursion on the skein
// relation
//   t^{1/2} H_+ - t^{-1/2} H_- = (q^{1/2} - q^{-1/2}) H_0,
// normalized so the unknot evaluates to
// (t^{1/2} - t^{-1/2}) / (q^{1/2} - q^{-1/2}).  Completely independent of the
// Hecke-trace route: the only shared code is the exact-arithmetic ring.
//
// Termination: walk the closure from the top of strand 1 onward and find the
// first crossing whose first visit runs under the other strand.  Switching it
// moves that first bad visit strictly later, smoothing shortens the word, and
// a diagram without bad crossings is descending, so its closure is an unlink.
ring::RationalQT skein_homfly(const braid::BraidWord& b);

// Irreducible symmetric-group character chi_lambda(mu) read off the monomial
// expansion of the alternant: chi is the coefficient of x^{lambda + delta} in
// a_delta * p_mu over ell(lambda) variables.  Exponential in n; fine for the
// n <= 5 cross-checks.
long long frobenius_character(const part::Partition& lambda, const part::Partition& mu);

// Both two-box colored invariants of a knot without any projector: cable
// every strand twice, trace the plain cable and the cable with one extra
// crossing inside a block, and split along the two crossing eigenvalues
// q^{1/2}, -q^{-1/2}.  Returns (W_(2), W_(1,1)).
std::pair<ring::RationalQT, ring::RationalQT> split_level2(const braid::BraidWord& b);

}  // namespace lmov::oracle
