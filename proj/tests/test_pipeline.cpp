#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "lmov/cache.hpp"
#include "lmov/checks.hpp"
#include "lmov/pipeline.hpp"
#include "lmov/symfun.hpp"

using namespace lmov;
using part::Partition;
using part::VectorPartition;
using ring::BigRational;
using ring::LaurentQT;
using ring::RationalQT;

namespace {

LaurentQT m(int qh, int th, long c = 1) { return LaurentQT::monomial(qh, th, c); }

VectorPartition vp(const std::string& s) { return VectorPartition::parse(s); }

BigRational n_at(const pipe::NTable& n, const std::string& b, int g, int twoQ) {
    auto it = n.values.find({vp(b), g, twoQ});
    return it == n.values.end() ? BigRational(0) : it->second;
}

const std::set<std::string> kCheckNames{
    "P-z2-structure",   "conjugation-symmetry", "cut-and-join",
    "framing-convolution", "m-block",           "mobius-roundtrip",
    "multi-cover-inequality", "n-integrality",  "p-solve",
    "pole-structure",   "power-insertion",      "q1-factorization",
    "t-series",         "vanishing-degree"};

void require_full_report(const pipe::Report& rep) {
    std::set<std::string> seen;
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.witness);
        CHECK(c.pass);
        seen.insert(c.name);
    }
    CHECK(seen == kCheckNames);
}

}  // namespace

TEST_CASE("monomial parser") {
    CHECK(pipe::parse_monomial("+q") == m(2, 0));
    CHECK(pipe::parse_monomial("q") == m(2, 0));
    CHECK(pipe::parse_monomial("-t^2") == m(0, 4, -1));
    CHECK(pipe::parse_monomial("3*q^-1*t") == m(-2, 2, 3));
    CHECK(pipe::parse_monomial("3q^-1t") == m(-2, 2, 3));
    CHECK(pipe::parse_monomial("-2/3") == m(0, 0, 0) + LaurentQT::monomial(0, 0, BigRational(-2, 3)));
    CHECK(pipe::parse_monomial("qt^-3") == m(2, -6));
    CHECK_THROWS_AS((void)pipe::parse_monomial(""), std::exception);
    CHECK_THROWS_AS((void)pipe::parse_monomial("x"), std::exception);
    CHECK_THROWS_AS((void)pipe::parse_monomial("q^"), std::exception);
}

TEST_CASE("mixing matrices") {
    CHECK(pipe::m_entry(Partition::parse("1"), Partition::parse("1")) == LaurentQT::qint(1));
    LaurentQT half_sq = LaurentQT::z2().scaled(BigRational(1, 2));
    LaurentQT half_two = LaurentQT::qint(2).scaled(BigRational(1, 2));
    CHECK(pipe::m_entry(Partition::parse("2"), Partition::parse("2")) == half_sq + half_two);
    CHECK(pipe::m_entry(Partition::parse("2"), Partition::parse("1+1")) ==
          half_sq + half_two.scaled(BigRational(-1)));
    for (const auto& a : part::partitions_of(3))
        for (const auto& b : part::partitions_of(3))
            CHECK(pipe::m_entry(a, b) == pipe::m_entry(b, a));
    auto block = pipe::m_block(3);
    auto labels = part::partitions_of(3);
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = 0; j < labels.size(); ++j)
            CHECK(block[i][j] == pipe::m_entry(labels[i], labels[j]));
}

TEST_CASE("unknot pipeline: table, checks and integer invariants") {
    pipe::Pipeline pl = pipe::run_pipeline(braid::lookup_link("unknot").braid, {3});
    require_full_report(pl.report);

    for (const auto& [a, wa] : pl.pf.w) {
        Partition A = a.components() == 1 ? a.at(0) : Partition();
        RationalQT expect = A.empty() ? RationalQT::one() : sym::unknot_invariant(A);
        CHECK(wa == expect);
    }

    // The only integer invariants of the unknot sit at the fundamental color.
    std::map<std::tuple<VectorPartition, int, int>, BigRational> want{
        {{vp("1"), 0, -1}, BigRational(1)},
        {{vp("1"), 0, 1}, BigRational(-1)},
    };
    std::map<std::tuple<VectorPartition, int, int>, BigRational> got;
    for (const auto& [key, val] : pl.n.values)
        if (val != BigRational(0)) got.emplace(key, val);
    CHECK(got == want);

    // CSV rendering of the table.
    std::string csv = pl.n.csv();
    CHECK(csv.rfind("B,g,2Q,N\n", 0) == 0);
    CHECK(csv.find("[1],0,-1,1") != std::string::npos);
}

TEST_CASE("trefoil pipeline: frozen integer invariants") {
    pipe::Pipeline pl = pipe::run_pipeline(braid::lookup_link("trefoil").braid, {2});
    require_full_report(pl.report);

    // Fundamental color, genus 0 and 1.
    CHECK(n_at(pl.n, "1", 0, -1) == BigRational(-2));
    CHECK(n_at(pl.n, "1", 0, -3) == BigRational(3));
    CHECK(n_at(pl.n, "1", 0, -5) == BigRational(-1));
    CHECK(n_at(pl.n, "1", 1, -1) == BigRational(-1));
    CHECK(n_at(pl.n, "1", 1, -3) == BigRational(1));
    CHECK(n_at(pl.n, "1", 2, -1) == BigRational(0));
    CHECK(n_at(pl.n, "1", 0, 1) == BigRational(0));

    // Genus-0 rows of the two-box colors.
    for (auto [twoQ, val] : {std::pair{-10, 4}, {-8, -16}, {-6, 24}, {-4, -16}, {-2, 4}})
        CHECK(n_at(pl.n, "2", 0, twoQ) == BigRational(val));
    for (auto [twoQ, val] : {std::pair{-10, 2}, {-8, -8}, {-6, 12}, {-4, -8}, {-2, 2}})
        CHECK(n_at(pl.n, "1+1", 0, twoQ) == BigRational(val));
    // Top-genus tails.
    CHECK(n_at(pl.n, "2", 3, -6) == BigRational(2));
    CHECK(n_at(pl.n, "1+1", 2, -6) == BigRational(2));

    // Support bounds: finite window, integer values throughout.
    for (const auto& [key, val] : pl.n.values) {
        if (val == BigRational(0)) continue;
        auto [b, g, twoQ] = key;
        CHECK(val.denominator() == 1);
        CHECK(g >= 0);
        CHECK(g <= 3);
        CHECK(twoQ >= -10);
        CHECK(twoQ <= -1);
    }
}

TEST_CASE("hopf pipeline: linked components produce mixed colors") {
    pipe::Pipeline pl = pipe::run_pipeline(braid::lookup_link("hopf").braid, {1, 1});
    require_full_report(pl.report);

    // P at the mixed fundamental color reduces to (t - 1)/[1]^2.
    RationalQT pz2 = pl.p.at(vp("[1|1]")) * RationalQT(LaurentQT::z2());
    CHECK(pz2 == RationalQT(m(0, 2) + m(0, 0, -1)));

    CHECK(n_at(pl.n, "[1|1]", 0, 0) == BigRational(-1));
    CHECK(n_at(pl.n, "[1|1]", 0, 2) == BigRational(1));
    // Each component alone carries the unknot block.
    CHECK(n_at(pl.n, "[1|0]", 0, -1) == BigRational(1));
    CHECK(n_at(pl.n, "[1|0]", 0, 1) == BigRational(-1));
    CHECK(n_at(pl.n, "[0|1]", 0, -1) == BigRational(1));
    CHECK(n_at(pl.n, "[0|1]", 0, 1) == BigRational(-1));
}

TEST_CASE("scripted table corruption never passes the checks") {
    for (const char* spec : {"(2):+q", "(1):-t", "(1+1):+2q^-1t^2", "(2):+1/2"}) {
        pipe::PipelineOptions opt;
        opt.perturbations = {spec};
        pipe::Pipeline pl =
            pipe::run_pipeline(braid::lookup_link("trefoil").braid, {2}, opt);
        INFO("perturbation ", spec, " slipped through");
        CHECK(!pl.report.all_pass());
    }
    pipe::PipelineOptions opt;
    opt.perturbations = {"[1|1]:-t"};
    pipe::Pipeline pl = pipe::run_pipeline(braid::lookup_link("hopf").braid, {1, 1}, opt);
    CHECK(!pl.report.all_pass());
    // Unknown labels are rejected loudly instead of being ignored.
    pipe::PartitionFunction pf =
        pipe::build_partition_function(braid::lookup_link("unknot").braid, {1});
    CHECK_THROWS_AS(pipe::perturb_w(pf, "(5):+q"), std::exception);
}

TEST_CASE("structural violations in a handcrafted P table are reported") {
    pipe::WTable p;
    // P z^2 = [1]: q-antisymmetric, so it has no expansion in z^2.
    p[vp("1")] = RationalQT(LaurentQT::qint(1)) / RationalQT(LaurentQT::z2());
    pipe::Report rep;
    (void)pipe::extract_n(p, rep);
    CHECK(!rep.all_pass());

    pipe::WTable frac;  // integrality failure: z^2 P = 1/2
    frac[vp("1")] = RationalQT(m(0, 0, 0) + LaurentQT::monomial(0, 0, BigRational(1, 2))) /
                    RationalQT(LaurentQT::z2());
    pipe::Report rep2;
    pipe::NTable n = pipe::extract_n(frac, rep2);
    checks::check_n(n, frac, rep2);
    CHECK(!rep2.all_pass());
}

TEST_CASE("denominator normal form") {
    std::map<VectorPartition, RationalQT> coeffs;
    coeffs[vp("1")] = RationalQT(m(0, 2, 6)) / RationalQT(LaurentQT::z2());
    coeffs[vp("2")] =
        RationalQT(m(0, 0, 4)) / RationalQT(LaurentQT::qint(2) * LaurentQT::qint(2));
    pipe::RingForm form = pipe::ring_normal_form(coeffs);
    REQUIRE(form.ok);
    // [1]^2 divides [2]^2, so the common denominator collapses to [2]^2.
    CHECK(form.den_orders == std::vector<int>{2});
    CHECK(form.content == BigRational(2));
    // Reconstruction: num / prod [n]^2 equals content * original coefficient.
    LaurentQT den = LaurentQT::one();
    for (int k : form.den_orders) den *= LaurentQT::qint(k) * LaurentQT::qint(k);
    for (const auto& [b, v] : coeffs)
        CHECK(RationalQT(form.num.at(b)) / RationalQT(den) == v);

    std::map<VectorPartition, RationalQT> bad;
    bad[vp("1")] = RationalQT::one() / RationalQT(m(0, 2) + m(0, 0, -1));
    CHECK(!pipe::ring_normal_form(bad).ok);

    std::map<VectorPartition, RationalQT> zero;
    zero[vp("1")] = RationalQT(LaurentQT::zero());
    pipe::RingForm zf = pipe::ring_normal_form(zero);
    CHECK(zf.ok);
    CHECK(zf.content == BigRational(0));
}

TEST_CASE("multi-cover series routes agree") {
    pipe::Pipeline pl = pipe::run_pipeline(braid::lookup_link("trefoil").braid, {2});
    for (const std::vector<int>& d : {std::vector<int>{1}, std::vector<int>{2}}) {
        pipe::WTable a = pipe::t_from_p(pl.p, d);
        pipe::WTable b = pipe::t_from_multicover(pl.pf.w, d);
        CHECK(a.size() == b.size());
        for (const auto& [label, va] : a) CHECK(va == b.at(label));
    }
}

TEST_CASE("partition function rebuilds are byte-identical") {
    braid::BraidWord b = braid::lookup_link("trefoil").braid;
    pipe::PartitionFunction one = pipe::build_partition_function(b, {2}, 1);
    pipe::PartitionFunction two = pipe::build_partition_function(b, {2}, 2);
    CHECK(pipe::w_table_json(one) == pipe::w_table_json(two));
    pipe::PartitionFunction again = pipe::build_partition_function(b, {2}, 1);
    CHECK(pipe::w_table_json(one) == pipe::w_table_json(again));
}

TEST_CASE("disk cache") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "lmov-cache-test";
    fs::remove_all(dir);
    cache::DiskCache c(dir.string());

    CHECK(!c.get("alpha").has_value());
    c.put("alpha", "payload");
    CHECK(c.get("alpha") == std::string("payload"));
    c.put("alpha", "updated");
    CHECK(c.get("alpha") == std::string("updated"));

    // Distinct keys with equal hashes cannot collide: the key is stored.
    CHECK(cache::fnv1a("") == 14695981039346656037ull);
    CHECK(cache::fnv1a("a") != cache::fnv1a("b"));

    // Corrupt every cached file; reads must degrade to misses.
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ofstream out(entry.path(), std::ios::trunc);
        out << "garbage";
    }
    CHECK(!c.get("alpha").has_value());

    // A cache-backed rebuild returns the same table it stored.
    fs::remove_all(dir);
    braid::BraidWord b = braid::lookup_link("hopf").braid;
    pipe::PartitionFunction cold = pipe::build_partition_function(b, {1, 1}, 1, dir.string());
    CHECK(fs::exists(dir));
    pipe::PartitionFunction warm = pipe::build_partition_function(b, {1, 1}, 1, dir.string());
    CHECK(pipe::w_table_json(cold) == pipe::w_table_json(warm));
    fs::remove_all(dir);
}

TEST_CASE("framed free energies feed the convolution check") {
    pipe::PartitionFunction pf =
        pipe::build_partition_function(braid::lookup_link("trefoil").braid, {2});
    pipe::FreeEnergy plain = pipe::free_energy(pf);
    pipe::FreeEnergy framed = pipe::free_energy(pf, {1});
    CHECK(!(plain.series - framed.series).is_zero());
    // Framing multiplies W_A by q^{kappa_A f/2} before the log. kappa vanishes
    // at the fundamental color, so the p_1 coefficient is untouched, while the
    // p_2 coefficient twists its two colors in opposite directions.
    RationalQT w1 = pf.w.at(vp("1"));
    CHECK(framed.mu().at(vp("1")) == w1);
    CHECK(plain.mu().at(vp("1")) == w1);
    RationalQT w2 = pf.w.at(vp("2"));
    RationalQT w11 = pf.w.at(vp("1+1"));
    CHECK(framed.mu().at(vp("2")) ==
          (w2 * RationalQT(m(2, 0)) - w11 * RationalQT(m(-2, 0))).scaled(BigRational(1, 2)));
    CHECK(plain.mu().at(vp("2")) == (w2 - w11).scaled(BigRational(1, 2)));
}
