// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every comparison is exact; there are no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "lmov/braid.hpp"
#include "lmov/checks.hpp"
#include "lmov/hecke.hpp"
#include "lmov/pipeline.hpp"
#include "lmov/symfun.hpp"
#include "support/oracles.hpp"

using namespace lmov;
using part::VectorPartition;
using ring::BigRational;

namespace {

int g_failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int index, bool pass, const std::string& what, double secs,
            const std::string& detail = "") {
    std::printf("[%d/8] %s %s (%.2f s)%s%s\n", index, pass ? "PASS" : "FAIL", what.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

int jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
}

// Merge failures of selected named checks out of a report.
std::string failed_named(const pipe::Report& rep, const std::set<std::string>& names) {
    std::string out;
    for (const auto& c : rep.checks)
        if (names.count(c.name) && !c.pass) out += c.name + "[" + c.witness + "] ";
    return out;
}

}  // namespace

int main() {
    // 1. Normalization anchor: the unknot evaluates to
    //    (t^{1/2} - t^{-1/2}) / (q^{1/2} - q^{-1/2}).
    {
        Timer t;
        bool ok = hecke::homfly(braid::BraidWord(1, {})) == hecke::unknot_value();
        double s = t.seconds();
        report(1, ok && s < 1.0, "normalization anchor on the unknot", s,
               ok ? "" : "value mismatch");
    }

    // 2. Trace evaluation equals the independent crossing-switch recursion.
    {
        Timer t;
        std::string bad;
        for (const char* spec : {"unknot", "hopf", "trefoil", "t(2,4)", "t(2,5)"}) {
            braid::BraidWord b = braid::lookup_link(spec).braid;
            if (hecke::homfly(b) != oracle::skein_homfly(b)) bad += std::string(spec) + " ";
        }
        double s = t.seconds();
        report(2, bad.empty() && s < 10.0,
               "skein-recursion oracle equivalence on five closures", s, bad);
    }

    // 3 + 4. Conjugation symmetry of the colored tables, then the q = 1
    // vanishing degree / bounded pole form of the free energy built from the
    // same tables. Knots carry every color of size <= 4, two-component links
    // every vector color of total size <= 3. Both sets are closed under
    // componentwise transposition, and the total-degree-d part of log Z only
    // involves W at totals <= d, so the truncated tables stay exact on the
    // colors retained below.
    {
        Timer t;
        std::string sym_bad, deg_bad;
        struct Cfg {
            const char* link;
            std::vector<int> caps;
            int total;  // keep vector colors with norm <= total
        };
        const Cfg cfgs[] = {{"unknot", {4}, 4},
                            {"trefoil", {4}, 4},
                            {"hopf", {3, 3}, 3},
                            {"t(2,4)", {3, 3}, 3}};
        for (const auto& cfg : cfgs) {
            const braid::BraidWord bw = braid::lookup_link(cfg.link).braid;
            pipe::PartitionFunction pf;
            pf.braid = bw;
            pf.closure = braid::analyze_closure(bw);
            pf.caps = cfg.caps;
            pf.z = sym::PSeries(cfg.caps);
            for (const auto& a : part::vector_partitions_up_to(cfg.caps)) {
                if (a.norm() > cfg.total) continue;
                ring::RationalQT wa = a.empty() ? ring::RationalQT::one()
                                                : hecke::colored_invariant(bw, a.comps());
                pf.w.emplace(a, wa);
                pf.z += sym::schur_expand(a, cfg.caps).scaled(wa);
            }
            pipe::Report rep;
            checks::check_symmetry(pf, rep);
            pipe::FreeEnergy full = pipe::free_energy(pf);
            pipe::FreeEnergy fe;
            fe.caps = cfg.caps;
            fe.series = sym::PSeries(cfg.caps);
            for (const auto& [mu, c] : full.mu())
                if (mu.norm() <= cfg.total) fe.series.add(mu, c);
            checks::check_degree(fe, rep);
            for (const auto& c : rep.checks) {
                if (c.pass) continue;
                (c.name == "conjugation-symmetry" ? sym_bad : deg_bad) +=
                    std::string(cfg.link) + "[" + c.witness + "] ";
            }
        }
        double s = t.seconds();
        report(3, sym_bad.empty() && s < 600.0,
               "conjugation symmetry W_{A^t}(q,t) = (-1)^{|A|} W_A(q^{-1},t)", s, sym_bad);
        report(4, deg_bad.empty() && s < 600.0,
               "q=1 vanishing degree >= l(mu)-2 and double-pole bound", s, deg_bad);
    }

    // 5. Cut-and-join equation: residual identically zero.
    {
        Timer t;
        std::string bad;
        struct Cfg {
            const char* link;
            std::vector<int> caps;
        };
        const Cfg cfgs[] = {{"unknot", {3}}, {"trefoil", {3}}, {"hopf", {2, 2}}};
        for (const auto& cfg : cfgs) {
            pipe::PartitionFunction pf = pipe::build_partition_function(
                braid::lookup_link(cfg.link).braid, cfg.caps, jobs());
            pipe::FreeEnergy fe = pipe::free_energy(pf);
            pipe::Report rep;
            checks::check_cutjoin(pf, fe, rep);
            if (!rep.all_pass()) bad += std::string(cfg.link) + " ";
        }
        double s = t.seconds();
        report(5, bad.empty(), "cut-and-join residual is identically zero", s, bad);
    }

    // 6 + 7. Full pipelines; integer invariants with finite support, then the
    // pole-structure and p-adic (p = 2, 3, 5) certificates from the same runs.
    {
        Timer t;
        std::string int_bad, padic_bad;
        struct Cfg {
            const char* link;
            std::vector<int> caps;
        };
        const Cfg cfgs[] = {{"unknot", {4}},
                            {"trefoil", {3}},
                            {"hopf", {2, 2}},
                            {"t(2,4)", {2, 2}},
                            {"t(2,5)", {2}}};
        pipe::PipelineOptions opt;
        opt.jobs = jobs();
        for (const auto& cfg : cfgs) {
            pipe::Pipeline pl =
                pipe::run_pipeline(braid::lookup_link(cfg.link).braid, cfg.caps, opt);
            std::string bad = failed_named(
                pl.report, {"n-integrality", "P-z2-structure", "p-solve", "mobius-roundtrip",
                            "m-block", "cut-and-join", "conjugation-symmetry",
                            "vanishing-degree", "q1-factorization", "framing-convolution",
                            "power-insertion"});
            if (!bad.empty()) int_bad += std::string(cfg.link) + ": " + bad;
            for (const auto& [key, val] : pl.n.values)
                if (val.denominator() != 1)
                    int_bad += std::string(cfg.link) + ": fractional N at " +
                               std::get<0>(key).str() + " ";
            if (std::string(cfg.link) == "unknot") {
                auto at = [&](int twoQ) {
                    auto it = pl.n.values.find({VectorPartition::parse("1"), 0, twoQ});
                    return it == pl.n.values.end() ? BigRational(0) : it->second;
                };
                if (at(-1) != BigRational(1) || at(1) != BigRational(-1))
                    int_bad += "unknot: fundamental spot values differ from +1/-1 ";
            }
            std::string pb = failed_named(
                pl.report, {"pole-structure", "t-series", "multi-cover-inequality"});
            if (!pb.empty()) padic_bad += std::string(cfg.link) + ": " + pb;
        }
        double s = t.seconds();
        report(6, int_bad.empty() && s < 1800.0,
               "integer invariants with finite support on five pipelines", s, int_bad);
        report(7, padic_bad.empty() && s < 1800.0,
               "pole structure and Ord_p bounds for p = 2, 3, 5", s, padic_bad);
    }

    // 8. Mutation sensitivity: every scripted single-coefficient corruption of
    // the trefoil table must trip at least one checker.
    {
        Timer t;
        const char* mutations[] = {
            "(1):+q",      "(1):-q",      "(1):+t",      "(1):-t^-1",  "(1):+1/2",
            "(1):+qt",     "(1):-q^-1",   "(2):+q",      "(2):-t",     "(2):+q^-1t",
            "(2):+2",      "(2):-qt^-1",  "(2):+q^2t^2", "(1+1):+q",   "(1+1):-t^2",
            "(1+1):+q^-1", "(1+1):+3t",   "(1+1):-q^2",  "(1+1):+1/3", "(1+1):-q^-2t"};
        int caught = 0, total = 0;
        std::string missed;
        for (const char* spec : mutations) {
            ++total;
            pipe::PipelineOptions opt;
            opt.jobs = jobs();
            opt.perturbations = {spec};
            pipe::Pipeline pl =
                pipe::run_pipeline(braid::lookup_link("trefoil").braid, {2}, opt);
            if (!pl.report.all_pass())
                ++caught;
            else
                missed += std::string(spec) + " ";
        }
        double s = t.seconds();
        report(8, caught == total,
               "mutation sensitivity " + std::to_string(caught) + "/" + std::to_string(total),
               s, missed);
    }

    return g_failures == 0 ? 0 : 1;
}
