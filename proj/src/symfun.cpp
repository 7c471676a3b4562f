#include "lmov/symfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmov::sym {

using part::Partition;
using part::VectorPartition;
using ring::BigRational;
using ring::RationalQT;

namespace {

VectorPartition empty_index(int components) {
    return VectorPartition(std::vector<Partition>(components));
}

VectorPartition merge(const VectorPartition& a, const VectorPartition& b) {
    std::vector<Partition> c;
    c.reserve(a.components());
    for (int i = 0; i < a.components(); ++i) {
        std::vector<int> parts = a.at(i).parts();
        const auto& more = b.at(i).parts();
        parts.insert(parts.end(), more.begin(), more.end());
        c.push_back(Partition(std::move(parts)));
    }
    return VectorPartition(std::move(c));
}

VectorPartition with_part(const VectorPartition& mu, int alpha, int m) {
    std::vector<Partition> c = mu.comps();
    std::vector<int> parts = c[alpha].parts();
    parts.push_back(m);
    c[alpha] = Partition(std::move(parts));
    return VectorPartition(std::move(c));
}

// Removes one copy of m; returns false if absent.
bool without_part(const VectorPartition& mu, int alpha, int m, VectorPartition& out) {
    std::vector<Partition> c = mu.comps();
    std::vector<int> parts = c[alpha].parts();
    auto it = std::find(parts.begin(), parts.end(), m);
    if (it == parts.end()) return false;
    parts.erase(it);
    c[alpha] = Partition(std::move(parts));
    out = VectorPartition(std::move(c));
    return true;
}

int count_part(const VectorPartition& mu, int alpha, int m) {
    int n = 0;
    for (int p : mu.at(alpha).parts())
        if (p == m) ++n;
    return n;
}

}  // namespace

PSeries::PSeries(std::vector<int> caps) : caps_(std::move(caps)) {
    for (int c : caps_)
        if (c < 0) throw std::invalid_argument("PSeries: negative cap");
}

PSeries PSeries::unit(std::vector<int> caps) {
    PSeries s(std::move(caps));
    s.add(empty_index(s.components()), RationalQT::one());
    return s;
}

RationalQT PSeries::coeff(const VectorPartition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? RationalQT::zero() : it->second;
}

bool PSeries::within_caps(const VectorPartition& mu) const {
    if (mu.components() != components()) return false;
    for (int i = 0; i < components(); ++i)
        if (mu.at(i).size() > caps_[i]) return false;
    return true;
}

void PSeries::add(const VectorPartition& mu, const RationalQT& c) {
    if (mu.components() != components())
        throw std::invalid_argument("PSeries::add: component count mismatch");
    if (c.is_zero() || !within_caps(mu)) return;
    auto [it, fresh] = terms_.emplace(mu, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PSeries& PSeries::operator+=(const PSeries& o) {
    if (o.caps_ != caps_) throw std::invalid_argument("PSeries: cap mismatch");
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
}

PSeries PSeries::operator-() const {
    PSeries r(caps_);
    for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, -c);
    return r;
}

PSeries operator*(const PSeries& a, const PSeries& b) {
    if (a.caps_ != b.caps_) throw std::invalid_argument("PSeries: cap mismatch");
    PSeries r(a.caps_);
    for (const auto& [mu, c] : a.terms_)
        for (const auto& [nu, d] : b.terms_) {
            VectorPartition idx = merge(mu, nu);
            if (r.within_caps(idx)) r.add(idx, c * d);
        }
    return r;
}

PSeries PSeries::scaled(const RationalQT& c) const {
    PSeries r(caps_);
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : terms_) r.terms_.emplace(mu, v * c);
    return r;
}

PSeries PSeries::scaled(const BigRational& c) const {
    PSeries r(caps_);
    if (c.is_zero()) return r;
    for (const auto& [mu, v] : terms_) r.terms_.emplace(mu, v.scaled(c));
    return r;
}

PSeries PSeries::plog() const {
    VectorPartition e = empty_index(components());
    if (!(coeff(e) == RationalQT::one()))
        throw std::domain_error("PSeries::plog: constant term must be 1");
    PSeries u = *this;
    u.add(e, -RationalQT::one());  // u = Z - 1, valuation >= 1
    int maxk = 0;
    for (int c : caps_) maxk += c;
    PSeries out(caps_), power = u;
    for (int k = 1; k <= maxk && !power.is_zero(); ++k) {
        BigRational c(1, k);
        if (k % 2 == 0) c = -c;
        out += power.scaled(c);
        if (k < maxk) power = power * u;
    }
    return out;
}

PSeries PSeries::pexp() const {
    VectorPartition e = empty_index(components());
    if (!coeff(e).is_zero())
        throw std::domain_error("PSeries::pexp: constant term must be 0");
    int maxk = 0;
    for (int c : caps_) maxk += c;
    PSeries out = unit(caps_), power = *this;
    for (int k = 1; k <= maxk && !power.is_zero(); ++k) {
        out += power.scaled(BigRational(1, part::factorial(k)));
        if (k < maxk) power = power * *this;
    }
    return out;
}

PSeries PSeries::adams(int k) const {
    if (k <= 0) throw std::invalid_argument("PSeries::adams: k must be positive");
    PSeries r(caps_);
    for (const auto& [mu, c] : terms_) r.add(mu.times(k), c.adams(k));
    return r;
}

PSeries PSeries::slice(const std::vector<int>& sizes) const {
    PSeries r(caps_);
    for (const auto& [mu, c] : terms_)
        if (mu.sizes() == sizes) r.terms_.emplace(mu, c);
    return r;
}

PSeries PSeries::d_p(int alpha, int m) const {
    PSeries r(caps_);
    for (const auto& [mu, c] : terms_) {
        int mult = count_part(mu, alpha, m);
        if (mult == 0) continue;
        VectorPartition idx;
        without_part(mu, alpha, m, idx);
        r.add(idx, c.scaled(BigRational(mult)));
    }
    return r;
}

PSeries PSeries::mul_p(int alpha, int m) const {
    PSeries r(caps_);
    for (const auto& [mu, c] : terms_) {
        VectorPartition idx = with_part(mu, alpha, m);
        if (r.within_caps(idx)) r.add(idx, c);
    }
    return r;
}

PSeries schur_expand(const VectorPartition& A, const std::vector<int>& caps) {
    PSeries out = PSeries::unit(caps);
    for (int alpha = 0; alpha < A.components(); ++alpha) {
        const Partition& lam = A.at(alpha);
        if (lam.empty()) continue;
        PSeries factor{std::vector<int>(caps)};
        for (const Partition& mu : part::partitions_of(lam.size())) {
            BigRational c(part::character(lam, mu), part::centralizer_order(mu));
            std::vector<Partition> idx(caps.size());
            idx[alpha] = mu;
            factor.add(VectorPartition(std::move(idx)), RationalQT(c));
        }
        out = out * factor;
    }
    return out;
}

std::map<VectorPartition, RationalQT> schur_coefficients(const PSeries& f,
                                                         const std::vector<int>& sizes) {
    std::map<VectorPartition, RationalQT> out;
    PSeries s = f.slice(sizes);
    if (s.is_zero()) return out;
    std::vector<std::vector<Partition>> shapes;
    for (int n : sizes) shapes.push_back(part::partitions_of(n));
    std::vector<VectorPartition> labels;
    std::vector<Partition> stack;
    // cartesian product of shapes
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == shapes.size()) {
            labels.push_back(VectorPartition(stack));
            return;
        }
        for (const auto& p : shapes[i]) {
            stack.push_back(p);
            self(self, i + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    for (const auto& B : labels) {
        RationalQT c = RationalQT::zero();
        for (const auto& [mu, v] : s.terms()) c = c + v.scaled(BigRational(part::character(B, mu)));
        if (!c.is_zero()) out.emplace(B, c);
    }
    return out;
}

PSeries cutjoin(const PSeries& f, int alpha) {
    int cap = f.caps().at(alpha);
    PSeries out(f.caps());
    for (int i = 1; i <= cap; ++i)
        for (int j = 1; j <= cap; ++j) {
            PSeries dd = f.d_p(alpha, i).d_p(alpha, j);
            if (!dd.is_zero() && i + j <= cap)
                out += dd.mul_p(alpha, i + j).scaled(BigRational(i * j));
            if (i + j <= cap) {
                PSeries d1 = f.d_p(alpha, i + j);
                if (!d1.is_zero())
                    out += d1.mul_p(alpha, i).mul_p(alpha, j).scaled(BigRational(i + j));
            }
        }
    return out;
}

PSeries cutjoin_bilinear(const PSeries& f, const PSeries& g, int alpha) {
    int cap = f.caps().at(alpha);
    PSeries out(f.caps());
    for (int i = 1; i <= cap; ++i) {
        PSeries df = f.d_p(alpha, i);
        if (df.is_zero()) continue;
        for (int j = 1; j <= cap; ++j) {
            if (i + j > cap) continue;
            PSeries dg = g.d_p(alpha, j);
            if (dg.is_zero()) continue;
            out += (df * dg).mul_p(alpha, i + j).scaled(BigRational(i * j));
        }
    }
    return out;
}

ring::RationalQT unknot_invariant(const part::Partition& A) {
    ring::RationalQT v = ring::RationalQT::one();
    for (auto [c, h] : A.content_hook_cells()) {
        ring::LaurentQT num = ring::LaurentQT::monomial(c, 1, ring::BigRational(1)) -
                              ring::LaurentQT::monomial(-c, -1, ring::BigRational(1));
        ring::LaurentQT den = ring::LaurentQT::monomial(h, 0, ring::BigRational(1)) -
                              ring::LaurentQT::monomial(-h, 0, ring::BigRational(1));
        v *= ring::RationalQT(num, den);
    }
    return v;
}

}  // namespace lmov::sym
