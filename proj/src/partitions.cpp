#include "lmov/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lmov::part {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (int p : parts_)
        if (p < 0) throw std::invalid_argument("Partition: negative part");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    auto trim = [&s] {
        size_t b = s.find_first_not_of(" \t\r\n");
        size_t e = s.find_last_not_of(" \t\r\n");
        s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    trim();
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
        trim();
    }
    if (s.empty() || s == "0" || s == "-") return Partition();
    std::vector<int> parts;
    std::string cur;
    for (char c : s + "+") {
        if (c == '+' || c == ',' || isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                parts.push_back(std::stoi(cur));
                cur.clear();
            }
        } else if (isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else {
            throw std::invalid_argument("Partition::parse: bad character in '" + text + "'");
        }
    }
    if (parts.empty())
        throw std::invalid_argument("Partition::parse: no parts in '" + text + "'");
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 0) throw std::out_of_range("Partition::part");
    return i < length() ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

long Partition::kappa() const {
    long k = 0;
    for (int i = 0; i < length(); ++i) {
        long p = parts_[i];
        k += p * (p - 2L * (i + 1) + 1);
    }
    return k;
}

long long Partition::aut() const {
    long long a = 1;
    for (int i = 0; i < length();) {
        int j = i;
        while (j < length() && parts_[j] == parts_[i]) ++j;
        a *= factorial(j - i);
        i = j;
    }
    return a;
}

std::vector<std::pair<int, int>> Partition::content_hook_cells() const {
    std::vector<std::pair<int, int>> cells;
    Partition conj = conjugate();
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts_[i]; ++j) {
            int content = j - i;
            int hook = (parts_[i] - j) + (conj.parts_[j] - i) - 1;
            cells.emplace_back(content, hook);
        }
    return cells;
}

Partition Partition::times(int d) const {
    if (d <= 0) throw std::invalid_argument("Partition::times: d must be positive");
    std::vector<int> p = parts_;
    for (int& x : p) x *= d;
    return Partition(std::move(p));
}

Partition Partition::divide(int d) const {
    if (d <= 0) throw std::invalid_argument("Partition::divide: d must be positive");
    std::vector<int> p = parts_;
    for (int& x : p) {
        if (x % d != 0) throw std::domain_error("Partition::divide: part not divisible");
        x /= d;
    }
    return Partition(std::move(p));
}

int Partition::gcd_parts() const {
    int g = 0;
    for (int p : parts_) g = std::gcd(g, p);
    return g;
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (int i = 0; i < length(); ++i) {
        if (i) os << '+';
        os << parts_[i];
    }
    return os.str();
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        stack.push_back(p);
        gen_partitions(n - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(n, n == 0 ? 1 : n, stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long factorial(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial: n out of range");
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long long centralizer_order(const Partition& mu) {
    long long z = 1;
    const auto& p = mu.parts();
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        int m = static_cast<int>(j - i);
        z *= factorial(m);
        for (int k = 0; k < m; ++k) z *= p[i];
        i = j;
    }
    return z;
}

namespace {

// chi_lambda(mu) by peeling the first part of mu as a rim hook, phrased in
// beta numbers: removing an r-hook replaces b with b - r; the sign is the
// parity of the beta numbers jumped over.
long long mn_character(const std::vector<int>& lambda, const std::vector<int>& mu,
                       size_t mu_from,
                       std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
    if (mu_from == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu_from);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    int r = mu[mu_from];
    int l = static_cast<int>(lambda.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);  // descending

    long long total = 0;
    for (int i = 0; i < l; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nl;
        for (int j = 0; j < l; ++j) {
            int p = nb[j] - (l - 1 - j);
            if (p > 0) nl.push_back(p);
        }
        long long sub = mn_character(nl, mu, mu_from + 1, memo);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character: |lambda| != |mu|");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> top;
    auto key = std::make_pair(lambda.parts(), mu.parts());
    auto hit = top.find(key);
    if (hit != top.end()) return hit->second;
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;
    long long v = mn_character(lambda.parts(), mu.parts(), 0, memo);
    top[key] = v;
    return v;
}

long long dimension(const Partition& lambda) {
    return character(lambda, Partition(std::vector<int>(lambda.size(), 1)));
}

int mobius(int n) {
    if (n <= 0) throw std::invalid_argument("mobius: n must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<int> divisors(int n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<int> d;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

VectorPartition VectorPartition::parse(const std::string& text) {
    size_t b = text.find_first_not_of(" \t\r\n");
    size_t e = text.find_last_not_of(" \t\r\n");
    if (b == std::string::npos)
        throw std::invalid_argument("VectorPartition::parse: empty string");
    std::string s = text.substr(b, e - b + 1);
    if (s.front() != '[') return VectorPartition({Partition::parse(s)});
    if (s.back() != ']')
        throw std::invalid_argument("VectorPartition::parse: unbalanced '[' in '" + text + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<Partition> comps;
    std::string cur;
    for (char c : s + "|") {
        if (c == '|') {
            comps.push_back(Partition::parse(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return VectorPartition(std::move(comps));
}

int VectorPartition::norm() const {
    int n = 0;
    for (const auto& p : comp_) n += p.size();
    return n;
}

std::vector<int> VectorPartition::sizes() const {
    std::vector<int> s;
    s.reserve(comp_.size());
    for (const auto& p : comp_) s.push_back(p.size());
    return s;
}

bool VectorPartition::empty() const {
    for (const auto& p : comp_)
        if (!p.empty()) return false;
    return true;
}

VectorPartition VectorPartition::conjugate() const {
    std::vector<Partition> c;
    c.reserve(comp_.size());
    for (const auto& p : comp_) c.push_back(p.conjugate());
    return VectorPartition(std::move(c));
}

VectorPartition VectorPartition::times(int d) const {
    std::vector<Partition> c;
    c.reserve(comp_.size());
    for (const auto& p : comp_) c.push_back(p.times(d));
    return VectorPartition(std::move(c));
}

VectorPartition VectorPartition::divide(int d) const {
    std::vector<Partition> c;
    c.reserve(comp_.size());
    for (const auto& p : comp_) c.push_back(p.divide(d));
    return VectorPartition(std::move(c));
}

int VectorPartition::gcd_parts() const {
    int g = 0;
    for (const auto& p : comp_) g = std::gcd(g, p.gcd_parts());
    return g;
}

std::string VectorPartition::str() const {
    std::string s = "[";
    for (int i = 0; i < components(); ++i) {
        if (i) s += '|';
        s += comp_[i].str();
    }
    return s + "]";
}

bool operator<(const VectorPartition& a, const VectorPartition& b) {
    return a.comp_ < b.comp_;
}

long long character(const VectorPartition& lambdas, const VectorPartition& mus) {
    if (lambdas.components() != mus.components())
        throw std::invalid_argument("character: component count mismatch");
    long long v = 1;
    for (int a = 0; a < lambdas.components(); ++a) v *= character(lambdas.at(a), mus.at(a));
    return v;
}

long long centralizer_order(const VectorPartition& mu) {
    long long z = 1;
    for (const auto& p : mu.comps()) z *= centralizer_order(p);
    return z;
}

std::vector<VectorPartition> vector_partitions_of(const std::vector<int>& sizes) {
    std::vector<VectorPartition> out{VectorPartition(std::vector<Partition>{})};
    for (int n : sizes) {
        std::vector<Partition> choices = partitions_of(n);
        std::vector<VectorPartition> next;
        next.reserve(out.size() * choices.size());
        for (const auto& v : out)
            for (const auto& p : choices) {
                std::vector<Partition> c = v.comps();
                c.push_back(p);
                next.push_back(VectorPartition(std::move(c)));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<VectorPartition> vector_partitions_up_to(const std::vector<int>& caps) {
    std::vector<VectorPartition> out{VectorPartition(std::vector<Partition>{})};
    for (int cap : caps) {
        std::vector<Partition> choices;
        for (int n = 0; n <= cap; ++n)
            for (const auto& p : partitions_of(n)) choices.push_back(p);
        std::vector<VectorPartition> next;
        next.reserve(out.size() * choices.size());
        for (const auto& v : out)
            for (const auto& p : choices) {
                std::vector<Partition> c = v.comps();
                c.push_back(p);
                next.push_back(VectorPartition(std::move(c)));
            }
        out = std::move(next);
    }
    return out;
}

namespace {

void gen_multisets(const std::vector<VectorPartition>& pool, size_t from,
                   std::vector<int>& budget, PartitionMultiset& stack,
                   std::vector<PartitionMultiset>& out) {
    bool spent = true;
    for (int b : budget)
        if (b != 0) spent = false;
    if (spent) {
        out.push_back(stack);
        return;
    }
    if (from == pool.size()) return;
    const auto sz = pool[from].sizes();
    int fits = 0;
    {
        std::vector<int> b = budget;
        while (true) {
            bool ok = true;
            for (size_t i = 0; i < b.size(); ++i) {
                b[i] -= sz[i];
                if (b[i] < 0) ok = false;
            }
            if (!ok) break;
            ++fits;
        }
    }
    for (int copies = 0; copies <= fits; ++copies) {
        gen_multisets(pool, from + 1, budget, stack, out);
        for (size_t i = 0; i < budget.size(); ++i) budget[i] -= sz[i];
        stack.push_back(pool[from]);
    }
    for (int copies = 0; copies <= fits; ++copies) {
        for (size_t i = 0; i < budget.size(); ++i) budget[i] += sz[i];
        stack.pop_back();
    }
}

}  // namespace

std::vector<PartitionMultiset> multisets_summing_to(const std::vector<int>& total) {
    std::vector<VectorPartition> pool;
    for (const auto& v : vector_partitions_up_to(total))
        if (!v.empty()) pool.push_back(v);
    std::sort(pool.begin(), pool.end());
    std::vector<PartitionMultiset> out;
    std::vector<int> budget = total;
    PartitionMultiset stack;
    gen_multisets(pool, 0, budget, stack, out);
    for (auto& ms : out) std::sort(ms.begin(), ms.end());
    std::sort(out.begin(), out.end());
    return out;
}

long long multiset_aut(const PartitionMultiset& ms) {
    long long a = 1;
    for (size_t i = 0; i < ms.size();) {
        size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        a *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return a;
}

ring::BigRational theta(const PartitionMultiset& ms) {
    if (ms.empty()) throw std::invalid_argument("theta: empty multiset");
    int l = static_cast<int>(ms.size());
    ring::BigRational v(factorial(l - 1), multiset_aut(ms));
    return (l % 2 == 0) ? -v : v;
}

}  // namespace lmov::part
