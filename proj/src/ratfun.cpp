#include "lmov/ratfun.hpp"

#include "poly_detail.hpp"

#include <json.hpp>

#include <stdexcept>

namespace lmov::ring {

using namespace detail;

namespace {

// Pseudo-remainder sequence gcd in x = q^{1/2} over Q[u, 1/u], primitive
// parts taken at every step to keep coefficients in the Laurent ring.
XView gcd_x(XView a, XView b) {
    a = xv_primitive(xv_strip(a));
    b = xv_primitive(xv_strip(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.rbegin()->first < b.rbegin()->first) std::swap(a, b);
    while (!b.empty()) {
        // Pseudo-remainder of a by b.
        XView r = a;
        const int bdeg = b.rbegin()->first;
        const UPoly blead = b.rbegin()->second;
        while (!r.empty() && r.rbegin()->first >= bdeg) {
            UPoly rlead = r.rbegin()->second;
            int shift = r.rbegin()->first - bdeg;
            // r = r*blead - rlead x^shift b ; kills the top term exactly.
            r = xv_scale_up(r, blead);
            xv_sub_mul(r, rlead, shift, b);
        }
        a = std::move(b);
        b = xv_primitive(xv_strip(r));
    }
    return a;
}

LaurentQT normalize_unit(const LaurentQT& g) {
    if (g.is_zero()) return g;
    LaurentQT r = g * LaurentQT::monomial(-g.min_qh(), -g.min_th(), BigRational(1));
    BigRational lead = r.terms().rbegin()->second;
    return r.scaled(BigRational(1) / lead);
}

}  // namespace

LaurentQT laurent_gcd_q(const LaurentQT& f, const LaurentQT& g) {
    if (f.is_zero()) return normalize_unit(g);
    if (g.is_zero()) return normalize_unit(f);
    UPoly cf, cg;
    XView pf = xv_primitive(xv_strip(xview(f)), &cf);
    XView pg = xv_primitive(xv_strip(xview(g)), &cg);
    XView gx = gcd_x(pf, pg);
    UPoly cu = up_gcd(cf, cg);
    XView total = xv_scale_up(gx, cu);
    return normalize_unit(from_xview(total));
}

LaurentQT div_q1_pow(const LaurentQT& f, int k) {
    using detail::XView;
    if (k < 0) throw std::invalid_argument("div_q1_pow: negative power");
    if (f.is_zero()) return f;
    XView v = xview(f);
    for (int step = 0; step < k; ++step) {
        // Synthetic division by (x - 1); exact iff the slice sums vanish.
        std::map<int, std::map<int, BigRational>> slices;  // th -> (qh -> c)
        for (auto& [qh, up] : v)
            for (auto& [th, c] : up) slices[th][qh] = c;
        XView nv;
        for (auto& [th, s] : slices) {
            BigRational total(0);
            for (auto& [qh, c] : s) total += c;
            if (!total.is_zero())
                throw std::domain_error("div_q1_pow: not divisible by q^{1/2} - 1");
            int lo = s.begin()->first, hi = s.rbegin()->first;
            BigRational carry(0);
            for (int j = hi; j > lo; --j) {
                auto it = s.find(j);
                if (it != s.end()) carry += it->second;
                if (!carry.is_zero()) nv[j - 1][th] = carry;
            }
        }
        v = std::move(nv);
        if (v.empty()) break;
    }
    return from_xview(v);
}

// ---------------------------------------------------------------------------

RationalQT::RationalQT(const LaurentQT& n, const LaurentQT& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("RationalQT: zero denominator");
    canonicalize();
}

void RationalQT::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentQT::one();
        return;
    }
    if (den_.is_one()) return;
    // A one-term denominator is a unit; fold it into the numerator.
    if (den_.terms().size() > 1 && num_.terms().size() > 1) {
        LaurentQT g = laurent_gcd_q(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    } else if (den_.terms().size() > 1) {
        // Single-term numerator: only unit content can cancel.
        LaurentQT g = laurent_gcd_q(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    int mq = den_.min_qh(), mt = den_.min_th();
    if (mq != 0 || mt != 0) {
        LaurentQT shift = LaurentQT::monomial(-mq, -mt, BigRational(1));
        num_ *= shift;
        den_ *= shift;
    }
    BigRational lead = den_.terms().rbegin()->second;
    if (!lead.is_one()) {
        BigRational inv = BigRational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

const LaurentQT& RationalQT::as_laurent() const {
    if (!den_.is_one())
        throw std::domain_error("RationalQT::as_laurent: nontrivial denominator " + den_.pretty());
    return num_;
}

RationalQT RationalQT::operator-() const {
    RationalQT r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalQT operator+(const RationalQT& a, const RationalQT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalQT(a.num_ + b.num_, a.den_);
    return RationalQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalQT operator-(const RationalQT& a, const RationalQT& b) { return a + (-b); }

RationalQT operator*(const RationalQT& a, const RationalQT& b) {
    if (a.is_zero() || b.is_zero()) return RationalQT::zero();
    return RationalQT(a.num_ * b.num_, a.den_ * b.den_);
}

RationalQT operator/(const RationalQT& a, const RationalQT& b) {
    if (b.is_zero()) throw std::domain_error("RationalQT: division by zero");
    if (a.is_zero()) return RationalQT::zero();
    return RationalQT(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalQT& a, const RationalQT& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalQT RationalQT::scaled(const BigRational& c) const {
    if (c.is_zero()) return zero();
    RationalQT r;
    r.num_ = num_.scaled(c);
    r.den_ = den_;
    r.canonicalize();  // scaling may disturb the leading-1 convention
    return r;
}

RationalQT RationalQT::pow(int k) const {
    if (k == 0) return one();
    if (is_zero()) {
        if (k < 0) throw std::domain_error("RationalQT::pow: zero to negative power");
        return zero();
    }
    RationalQT base = *this;
    if (k < 0) {
        base = one() / base;
        k = -k;
    }
    RationalQT r = one();
    for (int i = 0; i < k; ++i) r = r * base;
    return r;
}

RationalQT RationalQT::adams(int k) const {
    return RationalQT(num_.adams(k), den_.adams(k));
}

RationalQT RationalQT::invert_q() const {
    return RationalQT(num_.invert_q(), den_.invert_q());
}

int RationalQT::order_q1() const {
    if (num_.is_zero()) return kZeroOrder;
    return order_at_q1(num_) - order_at_q1(den_);
}

RationalQT RationalQT::eval_q1() const {
    if (num_.is_zero()) return zero();
    int od = order_at_q1(den_);
    if (order_at_q1(num_) < od)
        throw std::domain_error("RationalQT::eval_q1: pole at q = 1");
    LaurentQT n1 = collapse_q1(div_q1_pow(num_, od));
    LaurentQT d1 = collapse_q1(div_q1_pow(den_, od));
    return RationalQT(n1, d1);
}

bool RationalQT::in_z2t_ring() const {
    if (num_.is_zero()) return true;
    if (!den_.is_one()) return false;
    return num_.q_integral() && num_.q_symmetric();
}

std::string RationalQT::json() const {
    nlohmann::json j;
    j["num"] = nlohmann::json::parse(num_.json());
    j["den"] = nlohmann::json::parse(den_.json());
    return j.dump();
}

RationalQT RationalQT::from_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    return RationalQT(LaurentQT::from_json(j.at("num").dump()),
                      LaurentQT::from_json(j.at("den").dump()));
}

std::string RationalQT::pretty() const {
    if (den_.is_one()) return num_.pretty();
    return "(" + num_.pretty() + ") / (" + den_.pretty() + ")";
}

}  // namespace lmov::ring
