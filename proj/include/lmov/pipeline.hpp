#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lmov/braid.hpp"
#include "lmov/hecke.hpp"
#include "lmov/partitions.hpp"
#include "lmov/ratfun.hpp"
#include "lmov/symfun.hpp"

namespace lmov::pipe {

// One verification outcome; witness carries the offending label and residual.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::vector<CheckResult> checks;
    void add(const std::string& name, bool pass, const std::string& witness = "");
    bool all_pass() const;
    std::string json() const;
};

using WTable = std::map<part::VectorPartition, ring::RationalQT>;
using MuTable = std::map<part::VectorPartition, ring::RationalQT>;

// Bump whenever a trace/idempotent/framing convention changes; stale cached
// invariants would otherwise be silently wrong.
extern const char* kConventionVersion;

struct PartitionFunction {
    braid::BraidWord braid;
    braid::ClosureInfo closure;
    std::vector<int> caps;  // per closure component
    WTable w;               // every vector partition within caps, empty included
    sym::PSeries z;         // sum_A W_A s_A in power-sum coordinates
};

// cache_dir empty disables the disk cache
PartitionFunction build_partition_function(const braid::BraidWord& b, const std::vector<int>& caps,
                                           int jobs = 1, const std::string& cache_dir = "");

// Mutation hook: spec "<colors>:<signed monomial>", e.g. "(2):+q" or
// "[2|1]:-t^2"; adds the monomial to the stored W coefficient and refreshes Z.
void perturb_w(PartitionFunction& pf, const std::string& spec);

ring::LaurentQT parse_monomial(const std::string& text);

struct FreeEnergy {
    std::vector<int> caps;
    sym::PSeries series;  // F = log of the (framed) partition function
    const MuTable& mu() const { return series.terms(); }
};

FreeEnergy free_energy(const PartitionFunction& pf, const std::vector<int>& framing = {});

// prod_alpha prod_j [mu^alpha_j]
ring::LaurentQT phi(const part::VectorPartition& mu);

// Mobius transform G_mu = sum_{k | mu} mobius(k)/k F_{mu/k}(q^k,t^k); G is the
// coefficient of p_mu in the reassembled degree-by-degree amplitude.
MuTable mobius_amplitudes(const FreeEnergy& fe);

// f_A = sum_mu chi_A(mu) G_mu
WTable schur_amplitudes(const MuTable& g, const std::vector<int>& caps);

// M_AB(q) = sum_{mu of d} chi_A(mu) chi_B(mu) / z_mu prod_j [mu_j]
ring::LaurentQT m_entry(const part::Partition& A, const part::Partition& B);
std::vector<std::vector<ring::LaurentQT>> m_block(int d);

// Solve f = (tensor of M blocks) P for every size vector within caps.
WTable solve_p(const WTable& f, const std::vector<int>& caps);

// Independent route: P_B = sum_mu chi_B(mu) G_mu / phi_mu(q).
WTable p_from_characters(const MuTable& g, const std::vector<int>& caps);

// hatZ_mu = sum_A chi_A(mu) W_A, the centralizer-normalized power-sum
// coefficients of Z.
MuTable zhat_table(const WTable& w, const std::vector<int>& caps);

struct NTable {
    // (B, genus g, doubled t-exponent 2Q) -> N, asserted integral by checks
    std::map<std::tuple<part::VectorPartition, int, int>, ring::BigRational> values;
    std::string csv() const;
};

// to_z2_basis of P * z^2; structural violations are reported, not thrown.
NTable extract_n(const WTable& p, Report& rep);

// Normal form in the ring { a(y;q,t) / prod [n_k]^2 }: every coefficient is
// brought over one denominator, the denominator is peeled into quantum
// integer factors (odd multiplicities completed to squares), and the shared
// rational content is split off so Ord_p can be read from it.
struct RingForm {
    bool ok = false;
    std::string why;                                   // set when !ok
    std::map<part::VectorPartition, ring::LaurentQT> num;  // primitive a_B * content
    std::vector<int> den_orders;                       // one n per [n]^2 factor
    ring::BigRational content;                         // 0 when all inputs vanish
};

RingForm ring_normal_form(const std::map<part::VectorPartition, ring::RationalQT>& coeffs);

// T_d in the Schur-label basis, built from P (definition).
WTable t_from_p(const WTable& p, const std::vector<int>& d);

// Same series from the multi-cover sum over multisets of colors:
// sum_{k | d} mobius(k)/k sum_{multisets of norm d/k} theta W(q^k,t^k) with the
// label expansion p_nu(y) / phi_nu weights.
WTable t_from_multicover(const WTable& w, const std::vector<int>& d);

// Degree-d slice of F in the Schur-label basis (the Phi series).
WTable phi_slice(const FreeEnergy& fe, const std::vector<int>& d);

struct Pipeline {
    PartitionFunction pf;
    FreeEnergy fe;  // framing 0
    MuTable g;      // Mobius amplitudes
    WTable f;       // Schur amplitudes of the free energy
    WTable p;       // LMOV P table
    NTable n;
    Report report;
};

struct PipelineOptions {
    std::vector<unsigned long> primes{2, 3, 5};
    int jobs = 1;
    std::string cache_dir;
    std::vector<std::string> perturbations;
    std::vector<int> framing_samples{1, 2};  // framings exercised by checks
    bool run_checks = true;
};

Pipeline run_pipeline(const braid::BraidWord& b, const std::vector<int>& caps,
                      const PipelineOptions& opt = {});

std::string w_table_json(const PartitionFunction& pf);
std::string mu_table_json(const MuTable& table);

}  // namespace lmov::pipe
