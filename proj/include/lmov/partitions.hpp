#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lmov/rational.hpp"

namespace lmov::part {

// Integer partition, parts stored weakly decreasing. The empty partition is
// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Accepts "3+1", "3,1", "3 1", optionally wrapped in parentheses.
    // "0", "-" and the empty string denote the empty partition.
    static Partition parse(const std::string& text);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const;  // 0-based, 0 beyond the last row

    Partition conjugate() const;

    // kappa = sum_i lambda_i (lambda_i - 2i + 1) = twice the sum of contents.
    long kappa() const;

    // Order of the automorphism group of the multiset of parts.
    long long aut() const;

    // (content, hook length) for every cell, row by row.
    std::vector<std::pair<int, int>> content_hook_cells() const;

    Partition times(int d) const;
    Partition divide(int d) const;  // throws unless every part is divisible
    int gcd_parts() const;          // 0 for the empty partition

    std::string str() const;  // "3+1", empty prints "0"

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // Total order: by size, then lexicographically on the part vectors.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::vector<Partition> partitions_of(int n);

long long factorial(int n);

// Order of the centralizer of a permutation with cycle type mu:
// prod_j j^{m_j} m_j!.
long long centralizer_order(const Partition& mu);

// Irreducible S_n character chi_lambda evaluated on cycle type mu
// (|lambda| = |mu|), by rim-hook removal. Memoized internally.
long long character(const Partition& lambda, const Partition& mu);

// chi_lambda(1^n), the number of standard tableaux.
long long dimension(const Partition& lambda);

int mobius(int n);
std::vector<int> divisors(int n);

// One partition per link component; components may be empty and their
// positions matter.
class VectorPartition {
public:
    VectorPartition() = default;
    explicit VectorPartition(std::vector<Partition> comps) : comp_(std::move(comps)) {}

    // "[3+1|2]"; a bare partition string means a single component.
    static VectorPartition parse(const std::string& text);

    int components() const { return static_cast<int>(comp_.size()); }
    const Partition& at(int alpha) const { return comp_.at(alpha); }
    const std::vector<Partition>& comps() const { return comp_; }

    int norm() const;                // total number of boxes
    std::vector<int> sizes() const;  // per-component box counts
    bool empty() const;              // every component empty

    VectorPartition conjugate() const;
    VectorPartition times(int d) const;
    VectorPartition divide(int d) const;
    int gcd_parts() const;  // gcd over all parts of all components, 0 if none

    std::string str() const;  // "[3+1|2]"

    friend bool operator==(const VectorPartition& a, const VectorPartition& b) {
        return a.comp_ == b.comp_;
    }
    friend bool operator!=(const VectorPartition& a, const VectorPartition& b) {
        return !(a == b);
    }
    friend bool operator<(const VectorPartition& a, const VectorPartition& b);

private:
    std::vector<Partition> comp_;
};

// Product over components of chi_{lambda^alpha}(mu^alpha); componentwise
// sizes must agree.
long long character(const VectorPartition& lambdas, const VectorPartition& mus);

long long centralizer_order(const VectorPartition& mu);

// All vector partitions with the given componentwise sizes.
std::vector<VectorPartition> vector_partitions_of(const std::vector<int>& sizes);

// All vector partitions with sizes bounded componentwise (the all-empty one
// included).
std::vector<VectorPartition> vector_partitions_up_to(const std::vector<int>& caps);

// Multiset of nonempty vector partitions, kept sorted.
using PartitionMultiset = std::vector<VectorPartition>;

// All multisets whose componentwise size totals match `total` exactly.
std::vector<PartitionMultiset> multisets_summing_to(const std::vector<int>& total);

long long multiset_aut(const PartitionMultiset& ms);

// (-1)^{l-1} (l-1)! / |Aut|, the coefficient of a multiset in log expansions.
ring::BigRational theta(const PartitionMultiset& ms);

}  // namespace lmov::part
