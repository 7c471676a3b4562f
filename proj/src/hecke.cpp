#include "lmov/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace lmov::hecke {

using part::Partition;
using ring::BigRational;
using ring::LaurentQT;
using ring::RationalQT;

namespace {

constexpr uint64_t kIdentityBits = 0xFEDCBA9876543210ull;

LaurentQT z_poly() {
    return LaurentQT::monomial(1, 0, BigRational(1)) - LaurentQT::monomial(-1, 0, BigRational(1));
}

LaurentQT t_diff() {
    return LaurentQT::monomial(0, 1, BigRational(1)) - LaurentQT::monomial(0, -1, BigRational(1));
}

}  // namespace

uint64_t perm_identity() { return kIdentityBits; }

int perm_at(uint64_t p, int i) { return static_cast<int>((p >> (4 * i)) & 0xF); }

uint64_t perm_swapped(uint64_t p, int i) {
    uint64_t a = (p >> (4 * i)) & 0xF;
    uint64_t b = (p >> (4 * (i + 1))) & 0xF;
    p &= ~(0xFFull << (4 * i));
    p |= (b << (4 * i)) | (a << (4 * (i + 1)));
    return p;
}

uint64_t perm_pack(const std::vector<int>& oneline) {
    if (oneline.size() > 16) throw std::invalid_argument("perm_pack: more than 16 entries");
    uint64_t p = kIdentityBits;
    for (size_t i = 0; i < oneline.size(); ++i) {
        if (oneline[i] < 0 || oneline[i] >= static_cast<int>(oneline.size()))
            throw std::invalid_argument("perm_pack: entry out of range");
        p &= ~(0xFull << (4 * i));
        p |= static_cast<uint64_t>(oneline[i]) << (4 * i);
    }
    return p;
}

std::vector<int> perm_unpack(uint64_t p, int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = perm_at(p, i);
    return v;
}

HeckeElement::HeckeElement(int level) : level_(level) {
    if (level < 1 || level > 16) throw std::invalid_argument("HeckeElement: bad level");
}

HeckeElement HeckeElement::one(int level) {
    HeckeElement e(level);
    e.terms_.emplace(kIdentityBits, LaurentQT::one());
    return e;
}

void HeckeElement::add(uint64_t perm, const LaurentQT& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(perm, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (o.level_ != level_) throw std::invalid_argument("HeckeElement: level mismatch");
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
    if (a.level_ != b.level_) throw std::invalid_argument("HeckeElement: level mismatch");
    HeckeElement r = a;
    for (const auto& [p, c] : b.terms_) r.add(p, -c);
    return r;
}

HeckeElement HeckeElement::scaled(const LaurentQT& c) const {
    HeckeElement r(level_);
    if (c.is_zero()) return r;
    for (const auto& [p, v] : terms_) r.terms_.emplace(p, v * c);
    return r;
}

HeckeElement HeckeElement::mul_gen(int i, bool inverse) const {
    if (i < 0 || i >= level_ - 1) throw std::out_of_range("HeckeElement::mul_gen");
    static const LaurentQT z = z_poly();
    HeckeElement r(level_);
    for (const auto& [p, c] : terms_) {
        bool ascent = perm_at(p, i) < perm_at(p, i + 1);
        uint64_t ps = perm_swapped(p, i);
        if (ascent) {
            // T_p g_i = T_{ps};  T_p g_i^{-1} = T_{ps} - z T_p
            r.add(ps, c);
            if (inverse) r.add(p, -(c * z));
        } else {
            // T_p g_i = z T_p + T_{ps};  T_p g_i^{-1} = T_{ps}
            r.add(ps, c);
            if (!inverse) r.add(p, c * z);
        }
    }
    return r;
}

namespace {

// Length-decreasing generator word: T_v = g_{w_k} ... g_{w_1} with no
// quadratic corrections.
std::vector<int> descent_word(uint64_t p, int n) {
    std::vector<int> word;
    while (true) {
        int i = -1;
        for (int k = 0; k + 1 < n; ++k)
            if (perm_at(p, k) > perm_at(p, k + 1)) {
                i = k;
                break;
            }
        if (i < 0) break;
        p = perm_swapped(p, i);
        word.push_back(i);
    }
    return word;
}

}  // namespace

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    if (a.level_ != b.level_) throw std::invalid_argument("HeckeElement: level mismatch");
    HeckeElement out(a.level_);
    for (const auto& [p, c] : b.terms_) {
        std::vector<int> word = descent_word(p, b.level_);
        HeckeElement cur = a;
        for (auto it = word.rbegin(); it != word.rend(); ++it) cur = cur.mul_gen(*it, false);
        for (const auto& [q, v] : cur.terms_) out.add(q, v * c);
    }
    return out;
}

HeckeElement represent(const braid::BraidWord& b) {
    HeckeElement e = HeckeElement::one(b.strands);
    for (int l : b.letters) e = e.mul_gen(std::abs(l) - 1, l < 0);
    return e;
}

HeckeElement embed(const HeckeElement& h, int offset, int level) {
    if (offset < 0 || offset + h.level() > level)
        throw std::invalid_argument("embed: block does not fit");
    HeckeElement r(level);
    for (const auto& [p, c] : h.terms()) {
        std::vector<int> line = perm_unpack(kIdentityBits, level);
        for (int i = 0; i < h.level(); ++i) line[offset + i] = offset + perm_at(p, i);
        r.add(perm_pack(line), c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Ocneanu trace. Values tr(T_w) are cached per permutation as integer
// polynomials in z and the trace parameter c; c = t^{1/2} z / (t^{1/2} -
// t^{-1/2}) is substituted only when a full element is traced.

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("trace coefficient overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("trace coefficient overflow");
    return r;
}

using ZPoly = std::map<int, long long>;                  // z-degree -> coeff
using ZCPoly = std::map<std::pair<int, int>, long long>;  // (z-deg, c-deg) -> coeff

struct TraceTables {
    std::mutex mutex;
    std::map<uint64_t, ZCPoly> traces;
    // tr(T_w) = subst.first / T^{subst.second} after substituting c
    std::map<uint64_t, std::pair<LaurentQT, int>> subst;
    std::vector<LaurentQT> zpows{LaurentQT::one()};
    std::vector<LaurentQT> tpows{LaurentQT::one()};
};

TraceTables& tables() {
    static TraceTables t;
    return t;
}

const LaurentQT& zpow(TraceTables& t, int k) {
    while (static_cast<int>(t.zpows.size()) <= k) t.zpows.push_back(t.zpows.back() * z_poly());
    return t.zpows[k];
}

const LaurentQT& tpow(TraceTables& t, int k) {
    while (static_cast<int>(t.tpows.size()) <= k) t.tpows.push_back(t.tpows.back() * t_diff());
    return t.tpows[k];
}

// tr(T_w) in Z[z, c]; lock must be held.
const ZCPoly& trace_poly(TraceTables& tbl, uint64_t bits) {
    int n = 16;
    while (n > 1 && perm_at(bits, n - 1) == n - 1) --n;
    static const ZCPoly unit{{{0, 0}, 1}};
    if (n <= 1) return unit;
    auto hit = tbl.traces.find(bits);
    if (hit != tbl.traces.end()) return hit->second;

    int j = 0;
    while (perm_at(bits, j) != n - 1) ++j;
    std::vector<int> line = perm_unpack(bits, n);
    line.erase(line.begin() + j);
    // T_w = T_v g_{n-2} ... g_j, and the trace strips the top generator:
    // tr(T_w) = c tr(T_v g_{n-3} ... g_j).
    std::map<uint64_t, ZPoly> expansion{{perm_pack(line), ZPoly{{0, 1}}}};
    for (int i = n - 3; i >= j; --i) {
        std::map<uint64_t, ZPoly> next;
        for (const auto& [p, poly] : expansion) {
            uint64_t ps = perm_swapped(p, i);
            for (const auto& [d, v] : poly) {
                auto& slot = next[ps][d];
                slot = checked_add(slot, v);
            }
            if (perm_at(p, i) > perm_at(p, i + 1)) {
                for (const auto& [d, v] : poly) {
                    auto& slot = next[p][d + 1];
                    slot = checked_add(slot, v);
                }
            }
        }
        expansion = std::move(next);
    }
    ZCPoly acc;
    for (const auto& [p, poly] : expansion) {
        const ZCPoly& sub = trace_poly(tbl, p);
        for (const auto& [d, v] : poly)
            for (const auto& [zc, w] : sub) {
                auto& slot = acc[{zc.first + d, zc.second + 1}];
                slot = checked_add(slot, checked_mul(v, w));
            }
    }
    return tbl.traces.emplace(bits, std::move(acc)).first->second;
}

// tr(T_w) as numerator / T^k; lock must be held.
const std::pair<LaurentQT, int>& trace_value(TraceTables& tbl, uint64_t bits) {
    auto hit = tbl.subst.find(bits);
    if (hit != tbl.subst.end()) return hit->second;
    const ZCPoly zc = trace_poly(tbl, bits);
    int cmax = 0;
    for (const auto& [key, v] : zc) cmax = std::max(cmax, key.second);
    LaurentQT num = LaurentQT::zero();
    for (const auto& [key, v] : zc) {
        auto [zdeg, cdeg] = key;
        // z^zdeg c^cdeg = z^{zdeg+cdeg} t^{cdeg/2} / T^{cdeg}
        LaurentQT term = zpow(tbl, zdeg + cdeg) * tpow(tbl, cmax - cdeg);
        num += (term * LaurentQT::monomial(0, cdeg, BigRational(v)));
    }
    return tbl.subst.emplace(bits, std::make_pair(std::move(num), cmax)).first->second;
}

}  // namespace

RationalQT markov_trace(const HeckeElement& h) {
    if (h.is_zero()) return RationalQT::zero();
    TraceTables& tbl = tables();
    std::lock_guard<std::mutex> lock(tbl.mutex);
    int cmax = 0;
    for (const auto& [p, c] : h.terms()) cmax = std::max(cmax, trace_value(tbl, p).second);
    LaurentQT num = LaurentQT::zero();
    for (const auto& [p, c] : h.terms()) {
        const auto& [val, k] = trace_value(tbl, p);
        num += c * val * tpow(tbl, cmax - k);
    }
    return RationalQT(num, tpow(tbl, cmax));
}

RationalQT unknot_value() {
    static const RationalQT s0(t_diff(), z_poly());
    return s0;
}

RationalQT homfly(const braid::BraidWord& b) {
    RationalQT tr = markov_trace(represent(b));
    int e = b.exponent_sum();
    LaurentQT writhe = LaurentQT::monomial(0, -e, BigRational(1));
    return unknot_value().pow(b.strands) * tr * RationalQT(writhe);
}

// ---------------------------------------------------------------------------
// Central idempotents via Lagrange interpolation in the full twist.

const BlockIdempotent& central_idempotent(const Partition& A) {
    if (A.empty()) throw std::invalid_argument("central_idempotent: empty partition");
    if (A.size() > 7)
        throw std::domain_error(
            "central_idempotent: level above 7 unsupported (full-twist eigenvalues collide)");
    struct Cache {
        std::mutex mutex;
        std::map<std::vector<int>, BlockIdempotent> entries;
    };
    static Cache cache;
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto hit = cache.entries.find(A.parts());
        if (hit != cache.entries.end()) return hit->second;
    }

    int n = A.size();
    std::vector<Partition> labels = part::partitions_of(n);
    std::vector<LaurentQT> eig;
    eig.reserve(labels.size());
    for (const auto& B : labels)
        eig.push_back(LaurentQT::monomial(static_cast<int>(B.kappa()), 0, BigRational(1)));
    for (size_t i = 0; i < eig.size(); ++i)
        for (size_t k = i + 1; k < eig.size(); ++k)
            if (eig[i] == eig[k])
                throw std::logic_error("central_idempotent: coincident full-twist eigenvalues");

    HeckeElement ft = represent(braid::BraidWord(n, braid::full_twist_word(1, n)));
    HeckeElement num = HeckeElement::one(n);
    LaurentQT den = LaurentQT::one();
    size_t self = std::find(labels.begin(), labels.end(), A) - labels.begin();
    for (size_t k = 0; k < labels.size(); ++k) {
        if (k == self) continue;
        HeckeElement factor = ft;
        factor.add(kIdentityBits, -eig[k]);
        num = num * factor;
        den *= (eig[self] - eig[k]);
    }
    BlockIdempotent idem{std::move(num), std::move(den), part::dimension(A)};

    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.entries.emplace(A.parts(), std::move(idem)).first->second;
}

// ---------------------------------------------------------------------------
// Colored invariants by cabling.

namespace {

struct CableSetup {
    braid::ClosureInfo info;
    std::vector<int> widths;      // per strand
    std::vector<int> offsets;     // 1-based block starts per strand
    std::vector<int> anchor;      // one strand per component, -1 if deleted
    int total = 0;
    braid::BraidWord cabled{1, {}};
};

CableSetup cable_setup(const braid::BraidWord& b, const std::vector<Partition>& colors) {
    CableSetup s;
    s.info = braid::analyze_closure(b);
    if (static_cast<int>(colors.size()) != s.info.components)
        throw std::invalid_argument("colored_invariant: one color per component required");
    s.widths.resize(b.strands);
    for (int i = 0; i < b.strands; ++i) s.widths[i] = colors[s.info.component_of[i]].size();
    for (int w : s.widths) s.total += w;
    s.offsets = braid::cable_offsets(b, s.widths);
    s.anchor.assign(s.info.components, -1);
    for (int i = b.strands - 1; i >= 0; --i)
        if (s.widths[i] > 0) s.anchor[s.info.component_of[i]] = i;
    if (s.total > 0) s.cabled = braid::cable(b, s.widths);
    return s;
}

const HeckeElement& cached_representation(const braid::BraidWord& b) {
    struct Cache {
        std::mutex mutex;
        std::map<std::pair<int, std::string>, HeckeElement> entries;
    };
    static Cache cache;
    auto key = std::make_pair(b.strands, b.str());
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto hit = cache.entries.find(key);
        if (hit != cache.entries.end()) return hit->second;
    }
    HeckeElement rep = represent(b);
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.entries.emplace(std::move(key), std::move(rep)).first->second;
}

// s0^M tr(rep * insertions) / (scalar denominators)
RationalQT traced_cable(const CableSetup& s, const HeckeElement& rep,
                        const std::vector<Partition>& colors) {
    HeckeElement insertions = HeckeElement::one(s.total);
    LaurentQT den = LaurentQT::one();
    BigRational dims(1);
    for (int alpha = 0; alpha < s.info.components; ++alpha) {
        if (s.anchor[alpha] < 0) continue;
        const BlockIdempotent& idem = central_idempotent(colors[alpha]);
        insertions = insertions * embed(idem.num, s.offsets[s.anchor[alpha]] - 1, s.total);
        den *= idem.den;
        dims *= BigRational(idem.dim);
    }
    RationalQT tr = markov_trace(rep * insertions);
    return unknot_value().pow(s.total) * tr / RationalQT(den) / RationalQT(dims);
}

LaurentQT framing_correction(const CableSetup& s, const std::vector<Partition>& colors) {
    LaurentQT f = LaurentQT::one();
    for (int alpha = 0; alpha < s.info.components; ++alpha) {
        if (colors[alpha].empty()) continue;
        int w = s.info.writhe[alpha];
        int kappa = static_cast<int>(colors[alpha].kappa());
        f *= LaurentQT::monomial(-kappa * w, -colors[alpha].size() * w, BigRational(1));
    }
    return f;
}

}  // namespace

RationalQT colored_invariant(const braid::BraidWord& b, const std::vector<Partition>& colors) {
    CableSetup s = cable_setup(b, colors);
    if (s.total == 0) return RationalQT::one();
    const HeckeElement& rep = cached_representation(s.cabled);
    return traced_cable(s, rep, colors) * RationalQT(framing_correction(s, colors));
}

RationalQT twisted_colored_invariant(const braid::BraidWord& b,
                                     const std::vector<Partition>& colors, int alpha) {
    CableSetup s = cable_setup(b, colors);
    if (s.total == 0) return RationalQT::one();
    if (alpha < 0 || alpha >= s.info.components)
        throw std::out_of_range("twisted_colored_invariant: bad component");
    std::vector<int> word;
    if (s.anchor[alpha] >= 0)
        word = braid::full_twist_word(s.offsets[s.anchor[alpha]],
                                      s.widths[s.anchor[alpha]]);
    word.insert(word.end(), s.cabled.letters.begin(), s.cabled.letters.end());
    braid::BraidWord twisted(s.cabled.strands, std::move(word));
    const HeckeElement& rep = cached_representation(twisted);
    return traced_cable(s, rep, colors) * RationalQT(framing_correction(s, colors));
}

RationalQT power_insertion_value(const braid::BraidWord& b, const std::vector<Partition>& mu) {
    braid::ClosureInfo info = braid::analyze_closure(b);
    if (static_cast<int>(mu.size()) != info.components)
        throw std::invalid_argument("power_insertion_value: one cycle type per component");
    std::vector<Partition> sizes;
    sizes.reserve(mu.size());
    for (const auto& m : mu) sizes.push_back(m.empty() ? Partition() : Partition({m.size()}));
    // widths only depend on |mu^alpha|, so reuse the color plumbing
    CableSetup s = cable_setup(b, sizes);
    if (s.total == 0) return RationalQT::one();
    const HeckeElement& rep = cached_representation(s.cabled);

    HeckeElement insertions = HeckeElement::one(s.total);
    LaurentQT den = LaurentQT::one();
    for (int alpha = 0; alpha < info.components; ++alpha) {
        if (s.anchor[alpha] < 0) continue;
        int n = mu[alpha].size();
        HeckeElement power(s.total);
        LaurentQT common = LaurentQT::one();
        std::vector<Partition> labels = part::partitions_of(n);
        for (const auto& A : labels) common *= central_idempotent(A).den;
        for (const auto& A : labels) {
            const BlockIdempotent& idem = central_idempotent(A);
            LaurentQT rest = ring::exact_div(common, idem.den);
            BigRational weight(part::character(A, mu[alpha]), idem.dim);
            power += embed(idem.num, s.offsets[s.anchor[alpha]] - 1, s.total)
                         .scaled(rest.scaled(weight));
        }
        insertions = insertions * power;
        den *= common;
    }
    RationalQT tr = markov_trace(rep * insertions);
    return unknot_value().pow(s.total) * tr / RationalQT(den);
}

}  // namespace lmov::hecke
