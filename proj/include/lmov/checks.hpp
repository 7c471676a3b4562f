#pragma once

#include "lmov/pipeline.hpp"

namespace lmov::checks {

// Conjugation symmetry W_{A^t}(q,t) = (-1)^{|A|} W_A(q^{-1},t).
void check_symmetry(const pipe::PartitionFunction& pf, pipe::Report& rep);

// Vanishing order of F_mu at q=1 is at least l(mu)-2, and F_mu/phi_mu has
// pole order at most 2 there.
void check_degree(const pipe::FreeEnergy& fe, pipe::Report& rep);

// The log form of the cut-and-join equation: the kappa-weighted tau
// derivative of F equals (CJ F + bilinear(F,F))/2. Also re-derives the
// full-twist eigenvalue geometrically per component and compares against the
// stored table, which is what makes corrupted tables detectable.
void check_cutjoin(const pipe::PartitionFunction& pf, const pipe::FreeEnergy& fe,
                   pipe::Report& rep);

// Mobius inversion round trip F_mu = sum_{k|mu} (1/k) G_{mu/k}(q^k,t^k).
void check_roundtrip(const pipe::FreeEnergy& fe, const pipe::MuTable& g, pipe::Report& rep);

// M-block symmetry and exact invertibility for every block size in caps.
void check_m_blocks(const std::vector<int>& caps, pipe::Report& rep);

// f = (tensor M) P reconstruction, and agreement of the solved P with the
// character-sum route P_B = sum chi_B(mu) G_mu / phi_mu.
void check_p(const pipe::WTable& f, const pipe::WTable& p, const pipe::MuTable& g,
             const std::vector<int>& caps, pipe::Report& rep);

// All N integral; reconstruction of P from the N table is exact.
void check_n(const pipe::NTable& n, const pipe::WTable& p, pipe::Report& rep);

// prod [d_a] hatZ_d and [d_a]^2 F_d/phi_d lie in Q[z^2, t^{1/2}, t^{-1/2}];
// after Mobius reduction over proportional colors, dilated lower colors
// cancel every pole of F_mu/phi_mu at primitive roots of unity (the
// principal part there is the multiple-cover image of mu/gcd), leaving only
// the q=1 double pole.
void check_pole_structure(const pipe::PartitionFunction& pf, const pipe::FreeEnergy& fe,
                          pipe::Report& rep);

// W_A(L)/W_A(unknots) at q=1 factors as prod_alpha xi_alpha(t)^{|A^alpha|}.
void check_q1_limit(const pipe::PartitionFunction& pf, pipe::Report& rep);

// Convolution formula for framing change on hatZ equals the framed-W route.
void check_convolution(const pipe::PartitionFunction& pf, const std::vector<int>& framings,
                       pipe::Report& rep);

// Single-trace evaluation with power-sum projector insertions equals the
// character-weighted framed sum over the W table.
void check_power_insertion(const pipe::PartitionFunction& pf, pipe::Report& rep);

// T_d from P equals T_d from the multi-cover formula; membership of T_d in
// the quantum-integer-denominator ring; Ord_p T_d >= 0 for each prime.
void check_t_series(const pipe::PartitionFunction& pf, const pipe::WTable& p,
                    const std::vector<unsigned long>& primes, pipe::Report& rep);

// Sampled multi-cover inequality Ord_p(Phi_{pd} - (1/p) Phi_d(y^p;q^p,t^p)) >= 0
// for every d and p with p*d within caps.
void check_phi_inequality(const pipe::FreeEnergy& fe, const std::vector<unsigned long>& primes,
                          pipe::Report& rep);

void run_all(pipe::Pipeline& pl, const pipe::PipelineOptions& opt);

}  // namespace lmov::checks
