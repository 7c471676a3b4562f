#include "lmov/checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lmov::checks {

using part::Partition;
using part::VectorPartition;
using pipe::MuTable;
using pipe::Report;
using pipe::WTable;
using ring::BigRational;
using ring::LaurentQT;
using ring::RationalQT;

namespace {

int total_length(const VectorPartition& mu) {
    int len = 0;
    for (const auto& c : mu.comps()) len += c.length();
    return len;
}

// One-row vector partitions within caps stand in for the size vectors.
std::vector<std::vector<int>> size_vectors_up_to(const std::vector<int>& caps) {
    std::vector<std::vector<int>> out;
    for (const auto& rep : part::vector_partitions_up_to(caps)) {
        if (rep.empty()) continue;
        bool one_row = true;
        for (const auto& c : rep.comps())
            if (c.length() > 1) one_row = false;
        if (one_row) out.push_back(rep.sizes());
    }
    return out;
}

RationalQT table_at(const WTable& t, const VectorPartition& key) {
    auto it = t.find(key);
    return it == t.end() ? RationalQT::zero() : it->second;
}

}  // namespace

void check_symmetry(const pipe::PartitionFunction& pf, Report& rep) {
    for (const auto& [a, wa] : pf.w) {
        if (a.empty()) continue;
        RationalQT expect = wa.invert_q();
        if (a.norm() % 2) expect = -expect;
        if (table_at(pf.w, a.conjugate()) != expect) {
            rep.add("conjugation-symmetry", false,
                    a.str() + ": transpose value differs from (-1)^{|A|} W_A(q^{-1},t)");
            return;
        }
    }
    rep.add("conjugation-symmetry", true,
            "W_{A^t}(q,t) = (-1)^{|A|} W_A(q^{-1},t) across the table");
}

void check_degree(const pipe::FreeEnergy& fe, Report& rep) {
    for (const auto& [mu, fmu] : fe.mu()) {
        int len = total_length(mu);
        if (fmu.order_q1() < len - 2) {
            rep.add("vanishing-degree", false,
                    mu.str() + ": order at q=1 is " + std::to_string(fmu.order_q1()) +
                        " < " + std::to_string(len - 2));
            return;
        }
        RationalQT ft = fmu / RationalQT(pipe::phi(mu));
        if (ft.order_q1() < -2) {
            rep.add("vanishing-degree", false,
                    mu.str() + ": F/phi has a pole of order " + std::to_string(-ft.order_q1()) +
                        " > 2 at q=1");
            return;
        }
    }
    rep.add("vanishing-degree", true, "ord_{q=1} F_mu >= l(mu)-2 and F_mu/phi_mu >= -2");
}

void check_cutjoin(const pipe::PartitionFunction& pf, const pipe::FreeEnergy& fe, Report& rep) {
    // exp(-F), shared across components
    sym::PSeries zinv = (-fe.series).pexp();
    for (int alpha = 0; alpha < pf.closure.components; ++alpha) {
        sym::PSeries dz(pf.caps);
        for (const auto& [a, wa] : pf.w) {
            long kappa = a.at(alpha).kappa();
            if (kappa == 0) continue;
            dz += sym::schur_expand(a, pf.caps).scaled(wa.scaled(BigRational(kappa, 2)));
        }
        sym::PSeries lhs = dz * zinv;
        sym::PSeries rhs =
            (sym::cutjoin(fe.series, alpha) +
             sym::cutjoin_bilinear(fe.series, fe.series, alpha))
                .scaled(BigRational(1, 2));
        if (!(lhs - rhs).is_zero()) {
            rep.add("cut-and-join", false,
                    "log-form residual nonzero on component " + std::to_string(alpha));
            return;
        }
    }
    // Geometric full-twist eigenvalue: re-derive each table entry through an
    // independent trace evaluation with an inserted twist.
    for (const auto& [a, wa] : pf.w) {
        if (a.empty()) continue;
        for (int alpha = 0; alpha < pf.closure.components; ++alpha) {
            if (a.at(alpha).empty()) continue;
            RationalQT tw = hecke::twisted_colored_invariant(pf.braid, a.comps(), alpha);
            RationalQT expect =
                wa * RationalQT(LaurentQT::monomial(static_cast<int>(a.at(alpha).kappa()), 0,
                                                    BigRational(1)));
            if (tw != expect) {
                rep.add("cut-and-join", false,
                        a.str() + ": twist insertion on component " + std::to_string(alpha) +
                            " disagrees with q^{kappa/2} times the stored value");
                return;
            }
        }
    }
    rep.add("cut-and-join", true,
            "log-form identity holds and twist insertions match q^{kappa/2} W_A");
}

void check_roundtrip(const pipe::FreeEnergy& fe, const MuTable& g, Report& rep) {
    for (const auto& mu : part::vector_partitions_up_to(fe.caps)) {
        if (mu.empty()) continue;
        RationalQT acc;
        for (int k : part::divisors(mu.gcd_parts())) {
            auto it = g.find(mu.divide(k));
            if (it == g.end()) continue;
            acc += it->second.adams(k).scaled(BigRational(1, k));
        }
        auto it = fe.mu().find(mu);
        RationalQT fmu = it == fe.mu().end() ? RationalQT::zero() : it->second;
        if (acc != fmu) {
            rep.add("mobius-roundtrip", false, mu.str() + ": sum_k G_{mu/k}(q^k,t^k)/k != F_mu");
            return;
        }
    }
    rep.add("mobius-roundtrip", true, "F recovered from G on every label");
}

void check_m_blocks(const std::vector<int>& caps, Report& rep) {
    int dmax = 0;
    for (int c : caps) dmax = std::max(dmax, c);
    dmax = std::min(dmax, 5);
    for (int d = 1; d <= dmax; ++d) {
        auto m = pipe::m_block(d);
        size_t n = m.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < i; ++j)
                if (m[i][j] != m[j][i]) {
                    rep.add("m-block", false, "size " + std::to_string(d) + " not symmetric");
                    return;
                }
        // forward elimination over the rational-function field
        std::vector<std::vector<RationalQT>> a(n, std::vector<RationalQT>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a[i][j] = RationalQT(m[i][j]);
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a[piv][col].is_zero()) ++piv;
            if (piv == n) {
                rep.add("m-block", false, "size " + std::to_string(d) + " block is singular");
                return;
            }
            std::swap(a[piv], a[col]);
            for (size_t r = col + 1; r < n; ++r) {
                if (a[r][col].is_zero()) continue;
                RationalQT f = a[r][col] / a[col][col];
                for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            }
        }
    }
    rep.add("m-block", true,
            "character pairing blocks symmetric and invertible through size " +
                std::to_string(dmax));
}

void check_p(const WTable& f, const WTable& p, const MuTable& g, const std::vector<int>& caps,
             Report& rep) {
    for (const auto& sizes : size_vectors_up_to(caps)) {
        std::vector<VectorPartition> labels = part::vector_partitions_of(sizes);
        for (const auto& a : labels) {
            RationalQT acc;
            for (const auto& b : labels) {
                RationalQT pb = table_at(p, b);
                if (pb.is_zero()) continue;
                LaurentQT entry = LaurentQT::one();
                for (int alpha = 0; alpha < a.components(); ++alpha)
                    entry *= pipe::m_entry(a.at(alpha), b.at(alpha));
                acc += RationalQT(entry) * pb;
            }
            if (acc != table_at(f, a)) {
                rep.add("p-solve", false, a.str() + ": (tensor M) P does not reproduce f");
                return;
            }
        }
    }
    WTable alt = pipe::p_from_characters(g, caps);
    if (alt != p) {
        rep.add("p-solve", false, "character-sum route disagrees with the linear solve");
        return;
    }
    rep.add("p-solve", true, "f = (tensor M) P and both P routes agree");
}

void check_n(const pipe::NTable& n, const WTable& p, Report& rep) {
    for (const auto& [key, val] : n.values)
        if (!val.is_integer()) {
            rep.add("n-integrality", false,
                    std::get<0>(key).str() + ": non-integer invariant " + val.str());
            return;
        }
    std::map<VectorPartition, ring::Z2Form> forms;
    for (const auto& [key, val] : n.values)
        forms[std::get<0>(key)].emplace(std::make_pair(std::get<1>(key), std::get<2>(key)), val);
    for (const auto& [b, pb] : p) {
        if (pb.is_zero()) continue;
        RationalQT pz2 = pb * RationalQT(LaurentQT::z2());
        if (!pz2.is_laurent()) continue;  // structure failure already reported
        auto it = forms.find(b);
        LaurentQT rebuilt = it == forms.end() ? LaurentQT::zero() : ring::z2_to_laurent(it->second);
        if (rebuilt != pz2.as_laurent()) {
            rep.add("n-integrality", false, b.str() + ": N table does not rebuild P z^2");
            return;
        }
    }
    rep.add("n-integrality", true, "all N integral and they rebuild every P_B z^2 exactly");
}

void check_pole_structure(const pipe::PartitionFunction& pf, const pipe::FreeEnergy& fe,
                          Report& rep) {
    MuTable zhat = pipe::zhat_table(pf.w, pf.caps);

    for (const auto& sizes : size_vectors_up_to(pf.caps)) {
        std::vector<Partition> comps;
        for (int s : sizes) comps.emplace_back(s ? std::vector<int>{s} : std::vector<int>{});
        VectorPartition d{std::move(comps)};

        LaurentQT prod = LaurentQT::one();
        for (int s : sizes)
            if (s) prod *= LaurentQT::qint(s);
        auto zit = zhat.find(d);
        if (zit != zhat.end() && !(RationalQT(prod) * zit->second).in_z2t_ring()) {
            rep.add("pole-structure", false,
                    d.str() + ": prod [d_a] hatZ escapes Q[z^2, t^{1/2}]");
            return;
        }

        auto fit = fe.mu().find(d);
        if (fit != fe.mu().end()) {
            RationalQT ft = fit->second / RationalQT(pipe::phi(d));
            for (int s : sizes) {
                if (!s) continue;
                RationalQT sq{LaurentQT::qint(s) * LaurentQT::qint(s)};
                if (!(sq * ft).in_z2t_ring()) {
                    rep.add("pole-structure", false,
                            d.str() + ": [d_a]^2 F/phi escapes the ring at component size " +
                                std::to_string(s));
                    return;
                }
            }
        }
    }

    // Multiple-cover structure.  F/phi at color mu has poles wherever some
    // qint(mu_j) vanishes, i.e. at roots of unity of order dividing a part.
    // Subtracting the dilated series of every proportional lower color,
    //   Gt_mu = sum_{k | gcd(mu)} mobius(k)/k * (F/phi)_{mu/k}(q^k, t^k),
    // must cancel every pole away from q = 1 exactly: the principal part of
    // F/phi at each primitive root of unity is the multiple-cover image of
    // the primitive color mu/gcd(mu).  What survives is the universal q = 1
    // double pole, so [1]^2 Gt_mu lies in Q[z^2, t^{1/2}, t^{-1/2}].
    MuTable g = pipe::mobius_amplitudes(fe);
    RationalQT z1sq{LaurentQT::qint(1) * LaurentQT::qint(1)};
    for (const auto& [mu, gmu] : g) {
        if (mu.norm() == 0) continue;
        RationalQT gt = gmu / RationalQT(pipe::phi(mu));
        if (!(z1sq * gt).in_z2t_ring()) {
            rep.add("pole-structure", false,
                    mu.str() + ": Mobius-reduced amplitude keeps a pole away from q=1, or one "
                               "deeper than order two");
            return;
        }
    }
    rep.add("pole-structure", true,
            "hatZ and F/phi pole orders bounded; dilated lower colors cancel every pole of the "
            "Mobius reduction away from q=1");
}

void check_q1_limit(const pipe::PartitionFunction& pf, Report& rep) {
    int comps = pf.closure.components;
    std::vector<RationalQT> xi(comps);
    for (int alpha = 0; alpha < comps; ++alpha) {
        std::vector<Partition> unit(comps);
        unit[alpha] = Partition({1});
        RationalQT ratio =
            table_at(pf.w, VectorPartition{unit}) / sym::unknot_invariant(Partition({1}));
        try {
            xi[alpha] = ratio.eval_q1();
        } catch (const std::exception&) {
            rep.add("q1-factorization", false,
                    "single-box ratio has a pole at q=1 on component " + std::to_string(alpha));
            return;
        }
    }
    for (const auto& [a, wa] : pf.w) {
        if (a.empty()) continue;
        RationalQT ratio = wa;
        RationalQT expect = RationalQT::one();
        for (int alpha = 0; alpha < comps; ++alpha) {
            if (a.at(alpha).empty()) continue;
            ratio /= sym::unknot_invariant(a.at(alpha));
            expect *= xi[alpha].pow(a.at(alpha).size());
        }
        RationalQT lim;
        try {
            lim = ratio.eval_q1();
        } catch (const std::exception&) {
            rep.add("q1-factorization", false, a.str() + ": normalized value has a pole at q=1");
            return;
        }
        if (lim != expect) {
            rep.add("q1-factorization", false,
                    a.str() + ": q=1 limit is not prod_a xi_a^{|A^a|}");
            return;
        }
    }
    rep.add("q1-factorization", true,
            "W_A/W_A(unknots) at q=1 factors through per-component xi(t)");
}

void check_convolution(const pipe::PartitionFunction& pf, const std::vector<int>& framings,
                       Report& rep) {
    MuTable zhat = pipe::zhat_table(pf.w, pf.caps);
    for (int omega : framings) {
        for (const auto& mu : part::vector_partitions_up_to(pf.caps)) {
            if (mu.empty()) continue;
            std::vector<VectorPartition> labels = part::vector_partitions_of(mu.sizes());
            RationalQT direct;
            for (const auto& a : labels) {
                long long chi = part::character(a, mu);
                if (chi == 0) continue;
                long kappa = 0;
                for (const auto& c : a.comps()) kappa += c.kappa();
                direct += table_at(pf.w, a).scaled(BigRational(chi)) *
                          RationalQT(LaurentQT::monomial(static_cast<int>(kappa * omega), 0,
                                                         BigRational(1)));
            }
            RationalQT conv;
            for (const auto& nu : labels) {
                auto zit = zhat.find(nu);
                if (zit == zhat.end() || zit->second.is_zero()) continue;
                RationalQT kernel;
                for (const auto& a : labels) {
                    long long cc = part::character(a, mu) * part::character(a, nu);
                    if (cc == 0) continue;
                    long kappa = 0;
                    for (const auto& c : a.comps()) kappa += c.kappa();
                    kernel += RationalQT(LaurentQT::monomial(static_cast<int>(kappa * omega), 0,
                                                             BigRational(cc)));
                }
                conv += zit->second * kernel.scaled(
                                          BigRational(1, part::centralizer_order(nu)));
            }
            if (direct != conv) {
                rep.add("framing-convolution", false,
                        mu.str() + ": framed hatZ differs from the convolution route at frame " +
                            std::to_string(omega));
                return;
            }
        }
    }
    rep.add("framing-convolution", true,
            "framed hatZ equals its convolution expansion for the sampled frames");
}

void check_power_insertion(const pipe::PartitionFunction& pf, Report& rep) {
    for (const auto& mu : part::vector_partitions_up_to(pf.caps)) {
        if (mu.empty()) continue;
        RationalQT ins = hecke::power_insertion_value(pf.braid, mu.comps());
        RationalQT expect;
        for (const auto& a : part::vector_partitions_of(mu.sizes())) {
            long long chi = part::character(a, mu);
            if (chi == 0) continue;
            LaurentQT unframe = LaurentQT::one();
            for (int alpha = 0; alpha < a.components(); ++alpha) {
                int w = pf.closure.writhe[alpha];
                unframe *= LaurentQT::monomial(static_cast<int>(a.at(alpha).kappa()) * w,
                                               a.at(alpha).size() * w, BigRational(1));
            }
            expect += table_at(pf.w, a).scaled(BigRational(chi)) * RationalQT(unframe);
        }
        if (ins != expect) {
            rep.add("power-insertion", false,
                    mu.str() + ": single-trace projector insertion disagrees with the table");
            return;
        }
    }
    rep.add("power-insertion", true,
            "power-sum projector insertions reproduce the character-weighted table");
}

void check_t_series(const pipe::PartitionFunction& pf, const WTable& p,
                    const std::vector<unsigned long>& primes, Report& rep) {
    for (const auto& d : size_vectors_up_to(pf.caps)) {
        WTable t1 = pipe::t_from_p(p, d);
        WTable t2 = pipe::t_from_multicover(pf.w, d);
        if (t1 != t2) {
            std::ostringstream ss;
            ss << "[";
            for (size_t i = 0; i < d.size(); ++i) ss << (i ? "," : "") << d[i];
            ss << "]";
            rep.add("t-series", false, ss.str() + ": multi-cover route differs from P route");
            return;
        }
        pipe::RingForm nf = pipe::ring_normal_form(t1);
        if (!nf.ok) {
            rep.add("t-series", false, nf.why);
            return;
        }
        for (unsigned long prime : primes) {
            if (!nf.content.is_zero() && nf.content.ord_p(prime) < 0) {
                rep.add("t-series", false,
                        "content " + nf.content.str() + " has negative order at prime " +
                            std::to_string(prime));
                return;
            }
        }
    }
    rep.add("t-series", true,
            "T_d matches its multi-cover form, lies in the quantum-integer ring, and Ord_p >= 0");
}

void check_phi_inequality(const pipe::FreeEnergy& fe, const std::vector<unsigned long>& primes,
                          Report& rep) {
    int checked = 0;
    for (unsigned long prime : primes) {
        int p = static_cast<int>(prime);
        for (const auto& d : size_vectors_up_to(fe.caps)) {
            std::vector<int> pd(d.size());
            bool fits = true;
            for (size_t i = 0; i < d.size(); ++i) {
                pd[i] = p * d[i];
                if (pd[i] > fe.caps[i]) fits = false;
            }
            if (!fits) continue;
            ++checked;
            // Phi_{pd}(y;q,t) - (1/p) Phi_d(y^p;q^p,t^p) in the label variables
            // where p_nu carries a 1/phi_nu factor.
            std::map<VectorPartition, RationalQT> delta;
            sym::PSeries top = fe.series.slice(pd);
            sym::PSeries base = fe.series.slice(d);
            for (const auto& [nu, c] : top.terms()) delta[nu] = c;
            for (const auto& [nu, c] : base.terms())
                delta[nu.times(p)] -= c.adams(p).scaled(BigRational(1, p));
            sym::PSeries series(pd);
            for (const auto& [nu, c] : delta) {
                if (c.is_zero()) continue;
                series.add(nu, c / RationalQT(pipe::phi(nu)));
            }
            std::map<VectorPartition, RationalQT> coeffs;
            for (auto& [b, c] : sym::schur_coefficients(series, pd))
                if (!c.is_zero()) coeffs.emplace(b, std::move(c));
            pipe::RingForm nf = pipe::ring_normal_form(coeffs);
            if (!nf.ok) {
                rep.add("multi-cover-inequality", false, nf.why);
                return;
            }
            if (!nf.content.is_zero() && nf.content.ord_p(prime) < 0) {
                rep.add("multi-cover-inequality", false,
                        "prime " + std::to_string(prime) + ": content " + nf.content.str() +
                            " has negative order");
                return;
            }
        }
    }
    rep.add("multi-cover-inequality", true,
            "Ord_p(Phi_{pd} - Phi_d^{(p)}/p) >= 0 on " + std::to_string(checked) +
                " sampled slices");
}

void run_all(pipe::Pipeline& pl, const pipe::PipelineOptions& opt) {
    check_symmetry(pl.pf, pl.report);
    check_degree(pl.fe, pl.report);
    check_cutjoin(pl.pf, pl.fe, pl.report);
    check_roundtrip(pl.fe, pl.g, pl.report);
    check_m_blocks(pl.pf.caps, pl.report);
    check_p(pl.f, pl.p, pl.g, pl.pf.caps, pl.report);
    check_n(pl.n, pl.p, pl.report);
    check_pole_structure(pl.pf, pl.fe, pl.report);
    check_q1_limit(pl.pf, pl.report);
    check_convolution(pl.pf, opt.framing_samples, pl.report);
    check_power_insertion(pl.pf, pl.report);
    check_t_series(pl.pf, pl.p, opt.primes, pl.report);
    check_phi_inequality(pl.fe, opt.primes, pl.report);
}

}  // namespace lmov::checks
