#include "lmov/laurent.hpp"

#include "poly_detail.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>
#include <vector>

namespace lmov::ring {

LaurentQT LaurentQT::monomial(int qh, int th, const BigRational& c) {
    LaurentQT r;
    if (!c.is_zero()) r.terms_[{qh, th}] = c;
    return r;
}

LaurentQT LaurentQT::qint(int n) {
    LaurentQT r;
    if (n == 0) return r;
    r.insert_add(-n, 0, BigRational(1));
    r.insert_add(n, 0, BigRational(-1));
    return r;
}

LaurentQT LaurentQT::tdiff() {
    LaurentQT r;
    r.insert_add(0, 1, BigRational(1));
    r.insert_add(0, -1, BigRational(-1));
    return r;
}

LaurentQT LaurentQT::z2() {
    LaurentQT r;
    r.insert_add(2, 0, BigRational(1));
    r.insert_add(0, 0, BigRational(-2));
    r.insert_add(-2, 0, BigRational(1));
    return r;
}

bool LaurentQT::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Key{0, 0} &&
           terms_.begin()->second.is_one();
}

BigRational LaurentQT::coeff(int qh, int th) const {
    auto it = terms_.find({qh, th});
    return it == terms_.end() ? BigRational(0) : it->second;
}

void LaurentQT::insert_add(int qh, int th, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({qh, th}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentQT LaurentQT::operator-() const {
    LaurentQT r;
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
    for (auto& [k, c] : o.terms_) insert_add(k.first, k.second, c);
    return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
    for (auto& [k, c] : o.terms_) insert_add(k.first, k.second, -c);
    return *this;
}

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
    LaurentQT r;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_)
            r.insert_add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

LaurentQT LaurentQT::scaled(const BigRational& c) const {
    LaurentQT r;
    if (c.is_zero()) return r;
    for (auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

LaurentQT LaurentQT::pow(int k) const {
    if (k < 0) throw std::invalid_argument("LaurentQT::pow: negative exponent");
    LaurentQT r = one();
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

LaurentQT LaurentQT::adams(int k) const {
    if (k < 1) throw std::invalid_argument("LaurentQT::adams: k must be >= 1");
    LaurentQT r;
    for (auto& [key, c] : terms_) r.terms_[{key.first * k, key.second * k}] = c;
    return r;
}

LaurentQT LaurentQT::invert_q() const {
    LaurentQT r;
    for (auto& [key, c] : terms_) r.terms_[{-key.first, key.second}] = c;
    return r;
}

LaurentQT LaurentQT::invert_t() const {
    LaurentQT r;
    for (auto& [key, c] : terms_) r.terms_[{key.first, -key.second}] = c;
    return r;
}

namespace {
[[noreturn]] void zero_query() { throw std::domain_error("LaurentQT: exponent query on zero"); }
}

int LaurentQT::min_qh() const {
    if (terms_.empty()) zero_query();
    int m = std::numeric_limits<int>::max();
    for (auto& [k, c] : terms_) m = std::min(m, k.first);
    return m;
}
int LaurentQT::max_qh() const {
    if (terms_.empty()) zero_query();
    int m = std::numeric_limits<int>::min();
    for (auto& [k, c] : terms_) m = std::max(m, k.first);
    return m;
}
int LaurentQT::min_th() const {
    if (terms_.empty()) zero_query();
    int m = std::numeric_limits<int>::max();
    for (auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}
int LaurentQT::max_th() const {
    if (terms_.empty()) zero_query();
    int m = std::numeric_limits<int>::min();
    for (auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
}

bool LaurentQT::q_integral() const {
    for (auto& [k, c] : terms_)
        if (k.first % 2 != 0) return false;
    return true;
}

bool LaurentQT::t_integral() const {
    for (auto& [k, c] : terms_)
        if (k.second % 2 != 0) return false;
    return true;
}

bool LaurentQT::depends_on_t() const {
    for (auto& [k, c] : terms_)
        if (k.second != 0) return true;
    return false;
}

bool LaurentQT::depends_on_q() const {
    for (auto& [k, c] : terms_)
        if (k.first != 0) return true;
    return false;
}

long LaurentQT::coeff_ord_p(unsigned long p) const {
    if (terms_.empty()) throw std::domain_error("LaurentQT::coeff_ord_p: zero polynomial");
    long m = std::numeric_limits<long>::max();
    for (auto& [k, c] : terms_) m = std::min(m, c.ord_p(p));
    return m;
}

BigRational LaurentQT::content() const {
    BigRational g(0);
    for (auto& [k, c] : terms_) g = rat_gcd(g, c);
    return g;
}

// ---------------------------------------------------------------------------
// Division. We view f as a polynomial in x = q^{1/2} whose coefficients are
// Laurent polynomials in u = t^{1/2}; both levels divide exactly or fail.
// (Helpers live in poly_detail.hpp; they are shared with the gcd code.)

LaurentQT exact_div(const LaurentQT& f, const LaurentQT& g) {
    using namespace detail;
    if (g.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (f.is_zero()) return LaurentQT::zero();
    XView fv = xview(f), gv = xview(g);
    const int gdeg = gv.rbegin()->first;
    const int glow = gv.begin()->first;
    const UPoly& glead = gv.rbegin()->second;
    XView q;
    while (!fv.empty()) {
        int fdeg = fv.rbegin()->first;
        int flow = fv.begin()->first;
        int shift = fdeg - gdeg;
        // Monomials in x are units, but an exact quotient can never need
        // exponents below flow - glow; past that the division has failed.
        if (shift < flow - glow)
            throw std::domain_error("exact_div: not divisible (degree)");
        UPoly qc;
        if (!up_div(fv.rbegin()->second, glead, qc))
            throw std::domain_error("exact_div: not divisible (coefficient)");
        q[shift] = qc;
        xv_sub_mul(fv, qc, shift, gv);
    }
    return from_xview(q);
}

bool divides(const LaurentQT& g, const LaurentQT& f) {
    try {
        exact_div(f, g);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

LaurentQT collapse_q1(const LaurentQT& f) {
    LaurentQT r;
    for (auto& [k, c] : f.terms()) r.insert_add(0, k.second, c);
    return r;
}

int order_at_q1(const LaurentQT& f) {
    using namespace detail;
    if (f.is_zero()) throw std::domain_error("order_at_q1: zero polynomial");
    XView v = xview(f);
    int order = 0;
    for (;;) {
        // Evaluate at x = 1: sum the x-slices per u-exponent.
        UPoly at1;
        for (auto& [qh, up] : v)
            for (auto& [th, c] : up) {
                auto [it, fresh] = at1.try_emplace(th, c);
                if (!fresh) {
                    it->second += c;
                    if (it->second.is_zero()) at1.erase(it);
                }
            }
        if (!at1.empty()) return order;
        // Divide by (x - 1) with synthetic division per u-exponent.
        // Gather x-coefficient vectors per u-exponent first.
        std::map<int, std::map<int, BigRational>> slices;  // th -> (qh -> c)
        for (auto& [qh, up] : v)
            for (auto& [th, c] : up) slices[th][qh] = c;
        XView nv;
        for (auto& [th, s] : slices) {
            int lo = s.begin()->first, hi = s.rbegin()->first;
            BigRational carry(0);
            for (int j = hi; j > lo; --j) {
                auto it = s.find(j);
                BigRational aj = (it == s.end()) ? BigRational(0) : it->second;
                carry += aj;  // b_{j-1} = a_j + b_j, seeded with b_{hi} = 0 + a_hi
                if (!carry.is_zero()) nv[j - 1][th] = carry;
            }
        }
        v = std::move(nv);
        ++order;
        if (v.empty())
            throw std::logic_error("order_at_q1: internal, nonzero became zero");
    }
}

Z2Form to_z2_basis(const LaurentQT& f) {
    if (!f.q_integral())
        throw std::domain_error("to_z2_basis: fractional q exponent");
    if (!f.q_symmetric())
        throw std::domain_error("to_z2_basis: not symmetric under q -> 1/q");
    // Per t-exponent: a_0 + sum_{n>=1} a_n (q^n + q^{-n}) with
    // q^n + q^{-n} = U_n(z^2), U_0 = 2, U_1 = z^2 + 2,
    // U_{n+1} = (z^2 + 2) U_n - U_{n-1}.
    Z2Form out;
    std::map<int, std::map<int, BigRational>> slices;  // th -> (n -> a_n), n >= 0
    for (auto& [k, c] : f.terms()) {
        int n = k.first / 2;
        if (n >= 0) slices[k.second][n] = c;
    }
    int nmax = 0;
    for (auto& [th, s] : slices)
        if (!s.empty()) nmax = std::max(nmax, s.rbegin()->first);
    // U_n as vectors of z^2-coefficients.
    std::vector<std::vector<BigRational>> U(nmax + 1);
    U[0] = {BigRational(2)};
    if (nmax >= 1) U[1] = {BigRational(2), BigRational(1)};
    for (int n = 2; n <= nmax; ++n) {
        std::vector<BigRational> next(n + 1, BigRational(0));
        for (size_t g = 0; g < U[n - 1].size(); ++g) {
            next[g] += BigRational(2) * U[n - 1][g];
            next[g + 1] += U[n - 1][g];
        }
        for (size_t g = 0; g < U[n - 2].size(); ++g) next[g] -= U[n - 2][g];
        U[n] = std::move(next);
    }
    auto add = [&out](int g, int th, const BigRational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = out.try_emplace({g, th}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (auto& [th, s] : slices)
        for (auto& [n, a] : s) {
            if (n == 0) {
                add(0, th, a);
            } else {
                for (size_t g = 0; g < U[n].size(); ++g) add(static_cast<int>(g), th, a * U[n][g]);
            }
        }
    return out;
}

LaurentQT z2_to_laurent(const Z2Form& z) {
    LaurentQT r;
    for (auto& [k, c] : z)
        r += LaurentQT::z2().pow(k.first).scaled(c) * LaurentQT::monomial(0, k.second, BigRational(1));
    return r;
}

// ---------------------------------------------------------------------------
// Serialization.

std::string LaurentQT::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [k, c] : terms_) {
        arr.push_back({{"qh", k.first}, {"th", k.second}, {"c", c.str()}});
    }
    nlohmann::json j;
    j["terms"] = arr;
    return j.dump();
}

LaurentQT LaurentQT::from_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    LaurentQT r;
    for (auto& e : j.at("terms"))
        r.insert_add(e.at("qh").get<int>(), e.at("th").get<int>(),
                     BigRational::parse(e.at("c").get<std::string>()));
    return r;
}

namespace {
void half_exp(std::string& s, const char* var, int doubled) {
    if (doubled == 0) return;
    s += ' ';
    s += var;
    if (doubled == 2) return;
    s += '^';
    if (doubled % 2 == 0) {
        s += std::to_string(doubled / 2);
    } else {
        s += std::to_string(doubled);
        s += "/2";
    }
}
}

std::string LaurentQT::pretty() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, c] : terms_) {
        BigRational a = c;
        if (first) {
            if (a.sign() < 0) { s += "-"; a = -a; }
        } else {
            s += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        bool unit_coeff = a.is_one() && (k.first != 0 || k.second != 0);
        if (!unit_coeff) s += a.str();
        half_exp(s, "q", k.first);
        half_exp(s, "t", k.second);
        first = false;
    }
    return s;
}

}  // namespace lmov::ring
