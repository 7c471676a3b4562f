#include "doctest.h"

#include <string>
#include <vector>

#include "lmov/symfun.hpp"

using namespace lmov;
using part::Partition;
using part::VectorPartition;
using ring::BigRational;
using ring::LaurentQT;
using ring::RationalQT;
using sym::PSeries;

namespace {

RationalQT frac(long n, long d = 1) {
    return RationalQT(LaurentQT::monomial(0, 0, BigRational(n, d)));
}

VectorPartition vp(const std::string& s) { return VectorPartition::parse(s); }

bool same(const PSeries& a, const PSeries& b) { return (a - b).is_zero(); }

}  // namespace

TEST_CASE("power-sum expansions of the first Schur functions") {
    std::vector<int> caps{3};
    PSeries s1 = sym::schur_expand(vp("1"), caps);
    CHECK(s1.coeff(vp("1")) == frac(1));
    CHECK(s1.terms().size() == 1);

    PSeries s2 = sym::schur_expand(vp("2"), caps);
    CHECK(s2.coeff(vp("1+1")) == frac(1, 2));
    CHECK(s2.coeff(vp("2")) == frac(1, 2));

    PSeries s11 = sym::schur_expand(vp("1+1"), caps);
    CHECK(s11.coeff(vp("1+1")) == frac(1, 2));
    CHECK(s11.coeff(vp("2")) == frac(-1, 2));

    PSeries s3 = sym::schur_expand(vp("3"), caps);
    CHECK(s3.coeff(vp("1+1+1")) == frac(1, 6));
    CHECK(s3.coeff(vp("2+1")) == frac(1, 2));
    CHECK(s3.coeff(vp("3")) == frac(1, 3));

    PSeries s21 = sym::schur_expand(vp("2+1"), caps);
    CHECK(s21.coeff(vp("1+1+1")) == frac(1, 3));
    CHECK(s21.coeff(vp("2+1")) == frac(0));
    CHECK(s21.coeff(vp("3")) == frac(-1, 3));

    // Pieri in power sums: s_1 * s_1 = s_2 + s_{11}.
    CHECK(same(s1 * s1, s2 + s11));
}

TEST_CASE("schur coefficients invert the expansion") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : part::partitions_of(n)) {
            VectorPartition A({lam});
            PSeries f = sym::schur_expand(A, {n});
            auto coeffs = sym::schur_coefficients(f, A.sizes());
            for (const auto& [B, c] : coeffs) CHECK(c == (B == A ? frac(1) : frac(0)));
        }
    // Two alphabets, including an empty component.
    for (const char* name : {"[1|1]", "[2|1]", "[1+1|2]", "[0|2]"}) {
        VectorPartition A = vp(name);
        PSeries f = sym::schur_expand(A, A.sizes());
        auto coeffs = sym::schur_coefficients(f, A.sizes());
        for (const auto& [B, c] : coeffs) CHECK(c == (B == A ? frac(1) : frac(0)));
    }
    // Linearity: coefficients of a combination come out unchanged.
    PSeries mix = sym::schur_expand(vp("2"), {2}) +
                  sym::schur_expand(vp("1+1"), {2}).scaled(frac(-3));
    auto c = sym::schur_coefficients(mix, {2});
    CHECK(c.at(vp("2")) == frac(1));
    CHECK(c.at(vp("1+1")) == frac(-3));
}

TEST_CASE("plog and pexp are mutually inverse") {
    std::vector<int> caps{4};
    PSeries zero(caps);
    CHECK(same(zero.pexp(), PSeries::unit(caps)));
    CHECK(PSeries::unit(caps).plog().is_zero());

    PSeries f(caps);
    f.add(vp("1"), RationalQT(LaurentQT::qint(1)));
    f.add(vp("2"), RationalQT(LaurentQT::monomial(1, -1, 2)));
    f.add(vp("1+1"), frac(1, 3));
    f.add(vp("3"), frac(-2, 5));
    CHECK(same(f.pexp().plog(), f));
    PSeries g = f.pexp();  // constant term 1
    CHECK(same(g.plog().pexp(), g));
}

TEST_CASE("adams operation dilates degrees and truncates against the caps") {
    PSeries f({12});
    f.add(vp("1"), RationalQT(LaurentQT::qint(1)));
    PSeries f6 = f.adams(6);
    CHECK(f6.coeff(vp("6")) == RationalQT(LaurentQT::qint(6)));  // [1](q^6) = [6]
    CHECK(same(f.adams(2).adams(3), f6));

    PSeries low({4});
    low.add(vp("1"), frac(1));
    low.add(vp("2"), frac(1));
    PSeries dil = low.adams(3);  // p3 survives, p6 falls past the cap
    CHECK(dil.coeff(vp("3")) == frac(1));
    CHECK(dil.coeff(vp("6")) == frac(0));
    CHECK(dil.terms().size() == 1);
}

TEST_CASE("slice, derivative and multiplication operators") {
    PSeries f = sym::schur_expand(vp("2"), {4}) + sym::schur_expand(vp("1"), {4});
    CHECK(same(f.slice({2}), sym::schur_expand(vp("2"), {4})));
    CHECK(same(f.slice({1}), sym::schur_expand(vp("1"), {4})));
    CHECK(f.slice({3}).is_zero());

    PSeries p1({4});
    p1.add(vp("1"), frac(1));
    PSeries p1sq = p1 * p1;
    CHECK(p1sq.coeff(vp("1+1")) == frac(1));
    CHECK(same(p1sq.d_p(0, 1), p1.scaled(frac(2))));  // d/dp1 p1^2 = 2 p1
    CHECK(p1sq.d_p(0, 2).is_zero());
    CHECK(same(p1.mul_p(0, 2).d_p(0, 2), p1));  // d/dp2 (p2 p1) = p1

    // Second alphabet acts independently.
    PSeries h({2, 2});
    h.add(vp("[1|2]"), frac(5));
    CHECK(same(h.d_p(1, 2).mul_p(1, 2), h));
    CHECK(h.d_p(0, 2).is_zero());
}

TEST_CASE("schur functions are cut-and-join eigenvectors") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : part::partitions_of(n)) {
            PSeries f = sym::schur_expand(VectorPartition({lam}), {n});
            PSeries want = f.scaled(BigRational(lam.kappa()));
            CHECK(same(sym::cutjoin(f, 0), want));
        }
    // Per-alphabet action on a two-component product.
    PSeries f = sym::schur_expand(vp("[1|2]"), {1, 2});
    CHECK(sym::cutjoin(f, 0).is_zero());  // kappa((1)) = 0
    CHECK(same(sym::cutjoin(f, 1), f.scaled(BigRational(2))));
}

TEST_CASE("cut-and-join of an exponential") {
    std::vector<int> caps{4};
    PSeries f(caps);
    f.add(vp("1"), RationalQT(LaurentQT::qint(1)));
    f.add(vp("2"), frac(1, 2));
    f.add(vp("1+1"), RationalQT(LaurentQT::monomial(0, 1, 1)));
    f.add(vp("3"), frac(-1, 3));
    PSeries lhs = sym::cutjoin(f.pexp(), 0);
    PSeries rhs = f.pexp() * (sym::cutjoin(f, 0) + sym::cutjoin_bilinear(f, f, 0));
    CHECK(same(lhs, rhs));
}

TEST_CASE("closed form of the colored unknot invariant") {
    auto m = [](int qh, int th, long c = 1) { return LaurentQT::monomial(qh, th, c); };
    RationalQT s0 = RationalQT(m(0, 1) + m(0, -1, -1)) / RationalQT(m(1, 0) + m(-1, 0, -1));
    CHECK(sym::unknot_invariant(Partition::parse("1")) == s0);

    // Two-box row: cells have (content, hook) = (0,2) and (1,1).
    RationalQT row2 = RationalQT((m(0, 1) + m(0, -1, -1)) * (m(1, 1) + m(-1, -1, -1))) /
                      RationalQT((m(2, 0) + m(-2, 0, -1)) * (m(1, 0) + m(-1, 0, -1)));
    CHECK(sym::unknot_invariant(Partition::parse("2")) == row2);

    // Transposing the diagram inverts q up to the parity of the box count.
    for (const char* name : {"2", "1+1", "3", "2+1", "2+2"}) {
        Partition A = Partition::parse(name);
        RationalQT w = sym::unknot_invariant(A);
        RationalQT wt = sym::unknot_invariant(A.conjugate());
        RationalQT flipped = w.invert_q();
        if (A.size() % 2 == 1) flipped = flipped.scaled(BigRational(-1));
        CHECK(wt == flipped);
    }
}
