#pragma once

// Internal helpers shared by laurent.cpp and ratfun.cpp. A LaurentQT is
// sliced as a polynomial in x = q^{1/2} whose coefficients are Laurent
// polynomials in u = t^{1/2}.

#include "lmov/laurent.hpp"

#include <map>

namespace lmov::ring::detail {

using UPoly = std::map<int, BigRational>;  // u-exponent -> coefficient
using XView = std::map<int, UPoly>;        // x-exponent -> u-polynomial

inline void up_add_scaled(UPoly& a, const UPoly& b, const BigRational& s, int shift) {
    if (s.is_zero()) return;
    for (auto& [e, v] : b) {
        BigRational w = v * s;
        auto [it, fresh] = a.try_emplace(e + shift, w);
        if (!fresh) {
            it->second += w;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

inline UPoly up_mul(const UPoly& a, const UPoly& b) {
    UPoly r;
    for (auto& [ea, va] : a) up_add_scaled(r, b, va, ea);
    return r;
}

inline UPoly up_scale(const UPoly& a, const BigRational& s) {
    UPoly r;
    if (s.is_zero()) return r;
    for (auto& [e, v] : a) r[e] = v * s;
    return r;
}

// Exact division in the Laurent ring Q[u, 1/u]; returns false when g does not
// divide f. Monomials are units, so exponents may shift freely.
inline bool up_div(const UPoly& f, const UPoly& g, UPoly& out) {
    out.clear();
    if (g.empty()) return false;
    if (f.empty()) return true;
    UPoly rem = f;
    const int gdeg = g.rbegin()->first;
    const int glow = g.begin()->first;
    const BigRational glead = g.rbegin()->second;
    while (!rem.empty()) {
        int rdeg = rem.rbegin()->first;
        int rlow = rem.begin()->first;
        int shift = rdeg - gdeg;
        if (shift < rlow - glow) return false;
        BigRational c = rem.rbegin()->second / glead;
        out[shift] = c;
        up_add_scaled(rem, g, -c, shift);
    }
    return true;
}

// Normalize up to a unit: minimum exponent 0, leading coefficient 1.
inline UPoly up_normalize(const UPoly& a) {
    if (a.empty()) return {};
    UPoly r;
    int low = a.begin()->first;
    BigRational lead = a.rbegin()->second;
    for (auto& [e, v] : a) r[e - low] = v / lead;
    return r;
}

// gcd in Q[u, 1/u], normalized; gcd(0, b) = normalize(b).
inline UPoly up_gcd(UPoly a, UPoly b) {
    a = up_normalize(a);
    b = up_normalize(b);
    while (!b.empty()) {
        // a mod b by classical division over Q.
        const int gdeg = b.rbegin()->first;
        const BigRational glead = b.rbegin()->second;
        while (!a.empty() && a.rbegin()->first >= gdeg) {
            BigRational c = a.rbegin()->second / glead;
            up_add_scaled(a, b, -c, a.rbegin()->first - gdeg);
        }
        std::swap(a, b);
        b = up_normalize(b);
    }
    return a.empty() ? UPoly{} : up_normalize(a);
}

inline XView xview(const LaurentQT& f) {
    XView v;
    for (auto& [k, c] : f.terms()) v[k.first][k.second] = c;
    return v;
}

inline LaurentQT from_xview(const XView& v) {
    LaurentQT f;
    for (auto& [qh, up] : v)
        for (auto& [th, c] : up) f.insert_add(qh, th, c);
    return f;
}

// A -= (c u-poly) * x^shift * B
inline void xv_sub_mul(XView& A, const UPoly& c, int shift, const XView& B) {
    for (auto& [e, uc] : B) {
        UPoly prod = up_mul(c, uc);
        UPoly& slot = A[e + shift];
        up_add_scaled(slot, prod, BigRational(-1), 0);
        if (slot.empty()) A.erase(e + shift);
    }
}

inline XView xv_scale_up(const XView& A, const UPoly& c) {
    XView r;
    for (auto& [e, uc] : A) {
        UPoly p = up_mul(uc, c);
        if (!p.empty()) r[e] = std::move(p);
    }
    return r;
}

// Shift x-exponents so the minimum is zero.
inline XView xv_strip(const XView& A) {
    XView r;
    if (A.empty()) return r;
    int low = A.begin()->first;
    for (auto& [e, uc] : A) r[e - low] = uc;
    return r;
}

inline UPoly xv_content(const XView& A) {
    UPoly g;
    for (auto& [e, uc] : A) g = up_gcd(g, uc);
    return g;
}

// Divide every coefficient by the content (exact by construction).
inline XView xv_primitive(const XView& A, UPoly* content_out = nullptr) {
    UPoly c = xv_content(A);
    if (content_out) *content_out = c;
    if (c.empty()) return {};
    XView r;
    for (auto& [e, uc] : A) {
        UPoly q;
        up_div(uc, c, q);
        r[e] = std::move(q);
    }
    return r;
}

}  // namespace lmov::ring::detail
