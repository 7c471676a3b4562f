#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lmov/cache.hpp"
#include "lmov/checks.hpp"
#include "lmov/pipeline.hpp"

namespace fs = std::filesystem;
using namespace lmov;

namespace {

struct JobConfig {
    std::string link;
    std::string braid_word;
    int strands = 0;
    std::string cap = "1";
    std::string primes = "2,3,5";
    std::string framing = "1,2";
    std::vector<std::string> perturb;
    int jobs = 1;
    std::string out = ".";
    bool no_cache = false;
};

std::vector<int> parse_int_csv(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

braid::BraidWord resolve_link(const JobConfig& cfg) {
    if (!cfg.braid_word.empty()) {
        if (cfg.strands < 1)
            throw std::invalid_argument("--braid requires --strands >= 1");
        return braid::BraidWord::parse(cfg.strands, cfg.braid_word);
    }
    if (cfg.link.empty())
        throw std::invalid_argument("provide --link <name> or --braid <word> --strands <m>");
    return braid::lookup_link(cfg.link).braid;
}

std::vector<int> resolve_caps(const JobConfig& cfg, int components) {
    std::vector<int> caps = parse_int_csv(cfg.cap);
    if (caps.empty()) throw std::invalid_argument("--cap must not be empty");
    if (static_cast<int>(caps.size()) == 1 && components > 1)
        caps.assign(components, caps[0]);
    if (static_cast<int>(caps.size()) != components)
        throw std::invalid_argument("--cap needs one value, or one per link component");
    for (int c : caps)
        if (c < 0 || c > 7)
            throw std::invalid_argument("each cap must lie between 0 and 7");
    return caps;
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("short write on " + path.string());
}

std::string describe(const braid::BraidWord& b, const braid::ClosureInfo& info) {
    std::ostringstream ss;
    ss << "closure of \"" << b.str() << "\" on " << b.strands << " strands, "
       << info.components << " component" << (info.components == 1 ? "" : "s");
    return ss.str();
}

int cmd_invariant(const JobConfig& cfg, bool with_free_energy) {
    braid::BraidWord b = resolve_link(cfg);
    braid::ClosureInfo info = braid::analyze_closure(b);
    std::vector<int> caps = resolve_caps(cfg, info.components);
    std::string cache_dir = cfg.no_cache ? "" : cache::default_dir();

    pipe::PartitionFunction pf = pipe::build_partition_function(b, caps, cfg.jobs, cache_dir);
    for (const auto& spec : cfg.perturb) pipe::perturb_w(pf, spec);

    write_file(fs::path(cfg.out) / "w.json", pipe::w_table_json(pf));
    std::cout << describe(b, info) << "\n"
              << "computed " << pf.w.size() << " colored invariants within caps\n";
    if (with_free_energy) {
        pipe::FreeEnergy fe = pipe::free_energy(pf);
        pipe::MuTable zhat = pipe::zhat_table(pf.w, caps);
        write_file(fs::path(cfg.out) / "zhat.json", pipe::mu_table_json(zhat));
        write_file(fs::path(cfg.out) / "f.json", pipe::mu_table_json(fe.mu()));
        std::cout << "wrote w.json, zhat.json, f.json to " << cfg.out << "\n";
    } else {
        std::cout << "wrote w.json to " << cfg.out << "\n";
    }
    return 0;
}

int cmd_lmov(const JobConfig& cfg) {
    braid::BraidWord b = resolve_link(cfg);
    braid::ClosureInfo info = braid::analyze_closure(b);
    std::vector<int> caps = resolve_caps(cfg, info.components);

    pipe::PipelineOptions opt;
    opt.jobs = cfg.jobs;
    opt.cache_dir = cfg.no_cache ? "" : cache::default_dir();
    opt.perturbations = cfg.perturb;
    opt.framing_samples = parse_int_csv(cfg.framing);
    opt.primes.clear();
    for (int p : parse_int_csv(cfg.primes)) {
        if (p < 2) throw std::invalid_argument("--primes entries must be prime numbers");
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) throw std::invalid_argument("--primes entries must be prime numbers");
        opt.primes.push_back(static_cast<unsigned long>(p));
    }

    pipe::Pipeline pl = pipe::run_pipeline(b, caps, opt);

    write_file(fs::path(cfg.out) / "w.json", pipe::w_table_json(pl.pf));
    write_file(fs::path(cfg.out) / "n.csv", pl.n.csv());
    write_file(fs::path(cfg.out) / "report.json", pl.report.json());

    std::cout << describe(b, info) << "\n";
    for (const auto& c : pl.report.checks)
        std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name
                  << (c.pass || c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
    std::cout << pl.n.values.size() << " integer invariants; artifacts in " << cfg.out << "\n";
    return pl.report.all_pass() ? 0 : 2;
}

int cmd_selftest(const JobConfig& cfg) {
    struct Case {
        const char* link;
        const char* cap;
    };
    const Case cases[] = {{"unknot", "2"}, {"hopf", "1,1"}, {"trefoil", "2"}};
    bool ok = true;
    for (const auto& c : cases) {
        JobConfig sub = cfg;
        sub.link = c.link;
        sub.braid_word.clear();
        sub.cap = c.cap;
        sub.perturb.clear();
        braid::BraidWord b = resolve_link(sub);
        std::vector<int> caps = resolve_caps(sub, braid::analyze_closure(b).components);
        pipe::PipelineOptions opt;
        opt.jobs = sub.jobs;
        opt.cache_dir = sub.no_cache ? "" : cache::default_dir();
        pipe::Pipeline pl = pipe::run_pipeline(b, caps, opt);
        bool pass = pl.report.all_pass();
        ok = ok && pass;
        std::cout << (pass ? "pass " : "FAIL ") << c.link << " cap " << c.cap << "\n";
        if (!pass)
            for (const auto& chk : pl.report.checks)
                if (!chk.pass) std::cout << "    " << chk.name << ": " << chk.witness << "\n";
    }
    return ok ? 0 : 2;
}

int cmd_bench(const JobConfig& cfg) {
    struct Case {
        const char* link;
        const char* cap;
    };
    const Case cases[] = {{"unknot", "3"}, {"hopf", "1,1"}, {"trefoil", "2"}};
    for (const auto& c : cases) {
        JobConfig sub = cfg;
        sub.link = c.link;
        sub.braid_word.clear();
        sub.cap = c.cap;
        sub.no_cache = true;  // measure actual computation, not cache hits
        braid::BraidWord b = resolve_link(sub);
        std::vector<int> caps = resolve_caps(sub, braid::analyze_closure(b).components);

        auto t0 = std::chrono::steady_clock::now();
        pipe::PartitionFunction pf = pipe::build_partition_function(b, caps, sub.jobs, "");
        auto t1 = std::chrono::steady_clock::now();
        pipe::PipelineOptions opt;
        opt.jobs = sub.jobs;
        pipe::Pipeline pl = pipe::run_pipeline(b, caps, opt);
        auto t2 = std::chrono::steady_clock::now();

        auto ms = [](auto a, auto b) {
            return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
        };
        std::cout << c.link << " cap " << c.cap << ": table " << ms(t0, t1) << " ms, pipeline+"
                  << "checks " << ms(t1, t2) << " ms, "
                  << (pl.report.all_pass() ? "all checks pass" : "CHECK FAILURE") << "\n";
        (void)pf;
    }
    return 0;
}

void add_common(CLI::App* sub, JobConfig& cfg, bool lmov_flags) {
    sub->add_option("--link", cfg.link,
                    "link name: unknot, unlink2, hopf, trefoil, torus(a,b), braid:<m>:<word>");
    sub->add_option("--braid", cfg.braid_word, "braid word, e.g. \"s1 s1 s1\" or \"1 1 1\"");
    sub->add_option("--strands", cfg.strands, "strand count for --braid");
    sub->add_option("--cap", cfg.cap, "color size cap, one value or comma list per component");
    sub->add_option("--jobs", cfg.jobs, "parallel evaluation width")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output directory");
    sub->add_flag("--no-cache", cfg.no_cache, "disable the on-disk invariant cache");
    sub->set_config("--config", "", "key=value file; command-line flags win");
    if (lmov_flags) {
        sub->add_option("--primes", cfg.primes, "comma list of primes for the Ord_p checks");
        sub->add_option("--framing", cfg.framing, "comma list of frames for the convolution check");
        sub->add_option("--perturb", cfg.perturb,
                        "test hook <colors>:<monomial>, e.g. \"(2):+q\"; may repeat");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact colored HOMFLY invariants and LMOV integer extraction"};
    app.require_subcommand(1);

    JobConfig cfg;
    CLI::App* invariant = app.add_subcommand("invariant", "colored invariant table of a link");
    add_common(invariant, cfg, true);
    CLI::App* partition =
        app.add_subcommand("partition-function", "W, hatZ and free-energy tables");
    add_common(partition, cfg, true);
    CLI::App* lmov_cmd =
        app.add_subcommand("lmov", "full integer-invariant extraction with every check");
    add_common(lmov_cmd, cfg, true);
    CLI::App* selftest = app.add_subcommand("selftest", "built-in verification battery");
    add_common(selftest, cfg, false);
    CLI::App* bench = app.add_subcommand("bench", "timing summary on the registry links");
    add_common(bench, cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        if (invariant->parsed()) return cmd_invariant(cfg, false);
        if (partition->parsed()) return cmd_invariant(cfg, true);
        if (lmov_cmd->parsed()) return cmd_lmov(cfg);
        if (selftest->parsed()) return cmd_selftest(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
