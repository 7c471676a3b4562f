#include "lmov/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "lmov/cache.hpp"
#include "lmov/checks.hpp"

namespace lmov::pipe {

using part::Partition;
using part::VectorPartition;
using ring::BigRational;
using ring::LaurentQT;
using ring::RationalQT;

const char* kConventionVersion = "hecke-ocneanu-1";

void Report::add(const std::string& name, bool pass, const std::string& witness) {
    checks.push_back({name, pass, witness});
}

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json item;
        item["name"] = c.name;
        item["status"] = c.pass ? "pass" : "fail";
        item["witness"] = c.witness;
        arr.push_back(item);
    }
    nlohmann::json out;
    out["checks"] = arr;
    out["all_pass"] = all_pass();
    return out.dump(2);
}

// ---------------------------------------------------------------------------

PartitionFunction build_partition_function(const braid::BraidWord& b, const std::vector<int>& caps,
                                           int jobs, const std::string& cache_dir) {
    PartitionFunction pf;
    pf.braid = b;
    pf.closure = braid::analyze_closure(b);
    if (static_cast<int>(caps.size()) != pf.closure.components)
        throw std::invalid_argument("build_partition_function: one cap per component required");
    pf.caps = caps;

    std::vector<VectorPartition> labels = part::vector_partitions_up_to(caps);
    std::unique_ptr<cache::DiskCache> disk;
    if (!cache_dir.empty()) disk = std::make_unique<cache::DiskCache>(cache_dir);
    std::string key_prefix = std::string(kConventionVersion) + "|" +
                             std::to_string(b.strands) + ":" + b.free_reduced().str() + "|";

    std::vector<RationalQT> values(labels.size());
    auto compute_range = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const VectorPartition& a = labels[i];
            if (a.empty()) {
                values[i] = RationalQT::one();
                continue;
            }
            std::string key = key_prefix + a.str();
            if (disk) {
                if (auto hit = disk->get(key)) {
                    values[i] = RationalQT::from_json(*hit);
                    continue;
                }
            }
            values[i] = hecke::colored_invariant(b, a.comps());
            if (disk) disk->put(key, values[i].json());
        }
    };

    int width = std::max(1, jobs);
    if (width == 1 || labels.size() < 2) {
        compute_range(0, labels.size());
    } else {
        width = std::min<int>(width, static_cast<int>(labels.size()));
        std::vector<std::thread> pool;
        size_t chunk = (labels.size() + width - 1) / width;
        for (int k = 0; k < width; ++k) {
            size_t lo = k * chunk, hi = std::min(labels.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(compute_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    pf.z = sym::PSeries(caps);
    for (size_t i = 0; i < labels.size(); ++i) {
        pf.w.emplace(labels[i], values[i]);
        pf.z += sym::schur_expand(labels[i], caps).scaled(values[i]);
    }
    return pf;
}

LaurentQT parse_monomial(const std::string& text) {
    // [+-] [rational] factors q|t with optional ^exponent, separated by '*'
    size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("bad monomial: " + text); };
    BigRational coeff(1);
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    int qh = 0, th = 0;
    bool saw_factor = false;
    while (i < text.size()) {
        if (text[i] == '*') {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '/'))
                ++j;
            coeff *= BigRational::parse(text.substr(i, j - i));
            i = j;
            saw_factor = true;
            continue;
        }
        if (text[i] == 'q' || text[i] == 't') {
            char var = text[i++];
            int e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t j = i;
                if (j < text.size() && text[j] == '-') ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) fail();
                e = std::stoi(text.substr(i, j - i));
                i = j;
            }
            (var == 'q' ? qh : th) += 2 * e;
            saw_factor = true;
            continue;
        }
        fail();
    }
    if (!saw_factor) fail();
    return LaurentQT::monomial(qh, th, coeff * BigRational(sign));
}

void perturb_w(PartitionFunction& pf, const std::string& spec) {
    size_t colon = spec.rfind(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("perturbation needs <colors>:<monomial>: " + spec);
    VectorPartition label = VectorPartition::parse(spec.substr(0, colon));
    if (label.components() != pf.closure.components)
        throw std::invalid_argument("perturbation label component count mismatch: " + spec);
    LaurentQT delta = parse_monomial(spec.substr(colon + 1));
    auto it = pf.w.find(label);
    if (it == pf.w.end()) throw std::invalid_argument("perturbation label outside caps: " + spec);
    it->second += RationalQT(delta);
    pf.z += sym::schur_expand(label, pf.caps).scaled(RationalQT(delta));
}

// ---------------------------------------------------------------------------

FreeEnergy free_energy(const PartitionFunction& pf, const std::vector<int>& framing) {
    FreeEnergy fe;
    fe.caps = pf.caps;
    if (framing.empty() || std::all_of(framing.begin(), framing.end(), [](int x) { return !x; })) {
        fe.series = pf.z.plog();
        return fe;
    }
    if (static_cast<int>(framing.size()) != pf.closure.components)
        throw std::invalid_argument("free_energy: one framing per component required");
    sym::PSeries zf(pf.caps);
    for (const auto& [a, wa] : pf.w) {
        long k = 0;
        for (int alpha = 0; alpha < a.components(); ++alpha)
            k += a.at(alpha).kappa() * framing[alpha];
        RationalQT coeff = wa * RationalQT(LaurentQT::monomial(static_cast<int>(k), 0,
                                                               BigRational(1)));
        zf += sym::schur_expand(a, pf.caps).scaled(coeff);
    }
    fe.series = zf.plog();
    return fe;
}

LaurentQT phi(const VectorPartition& mu) {
    LaurentQT out = LaurentQT::one();
    for (const auto& comp : mu.comps())
        for (int part : comp.parts()) out *= LaurentQT::qint(part);
    return out;
}

MuTable mobius_amplitudes(const FreeEnergy& fe) {
    MuTable g;
    for (const auto& mu : part::vector_partitions_up_to(fe.caps)) {
        if (mu.empty()) continue;
        RationalQT acc;
        for (int k : part::divisors(mu.gcd_parts())) {
            int mob = part::mobius(k);
            if (mob == 0) continue;
            auto it = fe.mu().find(mu.divide(k));
            if (it == fe.mu().end()) continue;
            acc += it->second.adams(k).scaled(BigRational(mob, k));
        }
        if (!acc.is_zero()) g.emplace(mu, acc);
    }
    return g;
}

WTable schur_amplitudes(const MuTable& g, const std::vector<int>& caps) {
    WTable f;
    for (const auto& a : part::vector_partitions_up_to(caps)) {
        if (a.empty()) continue;
        RationalQT acc;
        for (const auto& mu : part::vector_partitions_of(a.sizes())) {
            auto it = g.find(mu);
            if (it == g.end()) continue;
            acc += it->second.scaled(BigRational(part::character(a, mu)));
        }
        if (!acc.is_zero()) f.emplace(a, acc);
    }
    return f;
}

LaurentQT m_entry(const Partition& A, const Partition& B) {
    if (A.size() != B.size()) throw std::invalid_argument("m_entry: size mismatch");
    LaurentQT out = LaurentQT::zero();
    for (const auto& mu : part::partitions_of(A.size())) {
        long long chi = part::character(A, mu) * part::character(B, mu);
        if (chi == 0) continue;
        LaurentQT prod = LaurentQT::one();
        for (int p : mu.parts()) prod *= LaurentQT::qint(p);
        out += prod.scaled(BigRational(chi, part::centralizer_order(mu)));
    }
    return out;
}

std::vector<std::vector<LaurentQT>> m_block(int d) {
    std::vector<Partition> labels = part::partitions_of(d);
    std::vector<std::vector<LaurentQT>> m(labels.size(), std::vector<LaurentQT>(labels.size()));
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i; j < labels.size(); ++j) {
            m[i][j] = m_entry(labels[i], labels[j]);
            if (j != i) m[j][i] = m[i][j];
        }
    return m;
}

namespace {

// Gaussian elimination over the rational-function field; rows/cols indexed by
// the vector partitions of one size vector.
std::vector<RationalQT> solve_dense(std::vector<std::vector<RationalQT>> m,
                                    std::vector<RationalQT> rhs) {
    size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular M block");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            RationalQT factor = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    std::vector<RationalQT> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

}  // namespace

WTable solve_p(const WTable& f, const std::vector<int>& caps) {
    WTable p;
    int comps = static_cast<int>(caps.size());
    for (const auto& sizes_label : part::vector_partitions_up_to(caps)) {
        // iterate over distinct size vectors via their one-row representatives
        bool one_row = true;
        for (const auto& c : sizes_label.comps())
            if (c.length() > 1) one_row = false;
        if (!one_row || sizes_label.empty()) continue;
        std::vector<int> sizes = sizes_label.sizes();

        std::vector<VectorPartition> labels = part::vector_partitions_of(sizes);
        size_t n = labels.size();
        std::vector<std::vector<RationalQT>> m(n, std::vector<RationalQT>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                LaurentQT entry = LaurentQT::one();
                for (int alpha = 0; alpha < comps; ++alpha)
                    entry *= m_entry(labels[i].at(alpha), labels[j].at(alpha));
                m[i][j] = RationalQT(entry);
            }
        std::vector<RationalQT> rhs(n);
        for (size_t i = 0; i < n; ++i) {
            auto it = f.find(labels[i]);
            if (it != f.end()) rhs[i] = it->second;
        }
        std::vector<RationalQT> x = solve_dense(std::move(m), std::move(rhs));
        for (size_t j = 0; j < n; ++j)
            if (!x[j].is_zero()) p.emplace(labels[j], x[j]);
    }
    return p;
}

WTable p_from_characters(const MuTable& g, const std::vector<int>& caps) {
    WTable p;
    for (const auto& b : part::vector_partitions_up_to(caps)) {
        if (b.empty()) continue;
        RationalQT acc;
        for (const auto& mu : part::vector_partitions_of(b.sizes())) {
            auto it = g.find(mu);
            if (it == g.end()) continue;
            acc += it->second.scaled(BigRational(part::character(b, mu))) / RationalQT(phi(mu));
        }
        if (!acc.is_zero()) p.emplace(b, acc);
    }
    return p;
}

MuTable zhat_table(const WTable& w, const std::vector<int>& caps) {
    MuTable zhat;
    for (const auto& mu : part::vector_partitions_up_to(caps)) {
        if (mu.empty()) continue;
        RationalQT acc;
        for (const auto& a : part::vector_partitions_of(mu.sizes())) {
            auto it = w.find(a);
            if (it == w.end()) continue;
            acc += it->second.scaled(BigRational(part::character(a, mu)));
        }
        if (!acc.is_zero()) zhat.emplace(mu, acc);
    }
    return zhat;
}

// ---------------------------------------------------------------------------

std::string NTable::csv() const {
    std::ostringstream out;
    out << "B,g,2Q,N\n";
    for (const auto& [key, val] : values) {
        const auto& [b, g, th] = key;
        out << b.str() << "," << g << "," << th << "," << val.str() << "\n";
    }
    return out.str();
}

NTable extract_n(const WTable& p, Report& rep) {
    NTable n;
    bool structure_ok = true;
    std::string witness;
    for (const auto& [b, pb] : p) {
        RationalQT pz2 = pb * RationalQT(LaurentQT::z2());
        if (!pz2.is_laurent()) {
            structure_ok = false;
            witness = b.str() + ": P*z^2 has residual denominator " + pz2.den().pretty();
            continue;
        }
        const LaurentQT& laur = pz2.as_laurent();
        if (laur.is_zero()) continue;
        if (!laur.q_integral() || !laur.q_symmetric()) {
            structure_ok = false;
            witness = b.str() + ": P*z^2 not symmetric-integral in q: " + laur.pretty();
            continue;
        }
        for (const auto& [key, c] : ring::to_z2_basis(laur))
            n.values.emplace(std::make_tuple(b, key.first, key.second), c);
    }
    rep.add("P-z2-structure", structure_ok,
            structure_ok ? "every P_B * z^2 is a symmetric q-integral Laurent polynomial"
                         : witness);
    return n;
}

// ---------------------------------------------------------------------------

RingForm ring_normal_form(const std::map<VectorPartition, RationalQT>& coeffs) {
    RingForm out;
    // common denominator (an lcm under the q-gcd)
    LaurentQT den = LaurentQT::one();
    bool all_zero = true;
    for (const auto& [b, v] : coeffs) {
        if (v.is_zero()) continue;
        all_zero = false;
        if (v.den().depends_on_t()) {
            out.why = b.str() + ": denominator involves t: " + v.den().pretty();
            return out;
        }
        LaurentQT g = ring::laurent_gcd_q(den, v.den());
        den = ring::exact_div(den, g) * v.den();
    }
    if (all_zero) {
        out.ok = true;
        out.content = BigRational(0);
        return out;
    }

    // peel quantum-integer factors, largest first (the top cyclotomic order
    // forces the factor, so greedy peeling is complete)
    LaurentQT rest = den;
    std::map<int, int> mult;
    int span = (rest.max_qh() - rest.min_qh()) / 2 + 1;
    for (int k = span; k >= 1; --k) {
        LaurentQT qk = LaurentQT::qint(k);
        while (ring::divides(qk, rest)) {
            rest = ring::exact_div(rest, qk);
            ++mult[k];
        }
    }
    if (rest.terms().size() != 1) {
        out.why = "denominator not a product of quantum integers: " + den.pretty();
        return out;
    }
    LaurentQT unit = rest;  // single monomial, divides exactly below

    LaurentQT completion = LaurentQT::one();
    for (auto& [k, m] : mult) {
        if (m % 2) {
            completion *= LaurentQT::qint(k);
            ++m;
        }
        for (int i = 0; i < m / 2; ++i) out.den_orders.push_back(k);
    }
    std::sort(out.den_orders.begin(), out.den_orders.end(), std::greater<int>());

    BigRational content(0);
    for (const auto& [b, v] : coeffs) {
        if (v.is_zero()) continue;
        LaurentQT a = v.num() * ring::exact_div(den, v.den());
        a = ring::exact_div(a, unit) * completion;
        if (!a.q_integral() || !a.q_symmetric()) {
            out.why = b.str() + ": numerator not symmetric-integral in q: " + a.pretty();
            return out;
        }
        content = ring::rat_gcd(content, a.content());
        out.num.emplace(b, std::move(a));
    }
    out.ok = true;
    out.content = content;
    return out;
}

// ---------------------------------------------------------------------------

WTable t_from_p(const WTable& p, const std::vector<int>& d) {
    WTable t;
    for (const auto& b : part::vector_partitions_of(d)) {
        auto it = p.find(b);
        if (it != p.end() && !it->second.is_zero()) t.emplace(b, it->second);
    }
    return t;
}

WTable t_from_multicover(const WTable& w, const std::vector<int>& d) {
    // accumulate in the power-sum basis over the formal labels first
    sym::PSeries acc(d);
    int gcd = 0;
    for (int x : d) gcd = std::gcd(gcd, x);
    for (int k : part::divisors(gcd == 0 ? 1 : gcd)) {
        int mob = part::mobius(k);
        if (mob == 0) continue;
        std::vector<int> dk(d.size());
        for (size_t i = 0; i < d.size(); ++i) dk[i] = d[i] / k;
        for (const auto& multiset : part::multisets_summing_to(dk)) {
            RationalQT weight(part::theta(multiset) * BigRational(mob, k));
            sym::PSeries prod = sym::PSeries::unit(dk);
            for (const auto& a : multiset) {
                auto it = w.find(a);
                RationalQT wa = (it == w.end()) ? RationalQT::zero() : it->second;
                prod = prod * sym::schur_expand(a, dk).scaled(wa);
                if (prod.is_zero()) break;
            }
            if (prod.is_zero()) continue;
            // substitute labels: p_nu(x) -> p_{k nu}(y) / phi_{k nu}(q),
            // scalars q,t -> q^k,t^k
            for (const auto& [nu, c] : prod.terms()) {
                if (nu.norm() != std::accumulate(dk.begin(), dk.end(), 0)) continue;
                VectorPartition knu = nu.times(k);
                RationalQT val = c.adams(k) * weight / RationalQT(phi(knu));
                acc.add(knu, val);
            }
        }
    }
    WTable t;
    for (auto& [b, c] : sym::schur_coefficients(acc, d))
        if (!c.is_zero()) t.emplace(b, std::move(c));
    return t;
}

WTable phi_slice(const FreeEnergy& fe, const std::vector<int>& d) {
    WTable out;
    for (auto& [b, c] : sym::schur_coefficients(fe.series, d))
        if (!c.is_zero()) out.emplace(b, std::move(c));
    return out;
}

// ---------------------------------------------------------------------------

Pipeline run_pipeline(const braid::BraidWord& b, const std::vector<int>& caps,
                      const PipelineOptions& opt) {
    Pipeline pl;
    pl.pf = build_partition_function(b, caps, opt.jobs, opt.cache_dir);
    for (const auto& spec : opt.perturbations) perturb_w(pl.pf, spec);
    pl.fe = free_energy(pl.pf);
    pl.g = mobius_amplitudes(pl.fe);
    pl.f = schur_amplitudes(pl.g, caps);
    pl.p = solve_p(pl.f, caps);
    pl.n = extract_n(pl.p, pl.report);
    if (opt.run_checks) checks::run_all(pl, opt);
    return pl;
}

std::string w_table_json(const PartitionFunction& pf) {
    nlohmann::json out;
    out["strands"] = pf.braid.strands;
    out["braid"] = pf.braid.str();
    out["components"] = pf.closure.components;
    out["caps"] = pf.caps;
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [a, wa] : pf.w) {
        nlohmann::json row;
        row["colors"] = a.str();
        row["value"] = nlohmann::json::parse(wa.json());
        table.push_back(row);
    }
    out["w"] = table;
    return out.dump(2);
}

std::string mu_table_json(const MuTable& table) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [mu, v] : table) {
        nlohmann::json row;
        row["mu"] = mu.str();
        row["value"] = nlohmann::json::parse(v.json());
        arr.push_back(row);
    }
    return arr.dump(2);
}

}  // namespace lmov::pipe
