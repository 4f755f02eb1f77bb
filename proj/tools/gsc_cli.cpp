// gsc: generate, analyze and plan step-chirp sequences from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments, 3 I/O or parse error.

#include <gsc/gsc.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_invalid = 2;
constexpr int exit_io = 3;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::int64_t> int_list(const std::string& text, const char* name) {
    std::vector<std::int64_t> out;
    for (const auto& item : split_list(text)) {
        auto r = gsc::Rational::parse(item);
        if (!r.is_integer()) throw gsc::invalid_parameter(std::string(name) + " entries must be integers");
        out.push_back(r.num());
    }
    return out;
}

std::string describe_band(const gsc::PassbandInterval& band) {
    std::string out;
    for (std::size_t i = 0; i < band.segments.size(); ++i) {
        if (i) out += " U ";
        out += "[" + band.segments[i].lo.str() + ", " + band.segments[i].hi.str() + ")";
    }
    return out;
}

void print_resolution(const gsc::RationalPhaseSequence& seq) {
    auto grid = gsc::phase_resolution(seq);
    std::printf("phase resolution: 2*pi/%lld rad (%s turn)\n", static_cast<long long>(grid.levels),
                grid.resolution_turns.str().c_str());
}

struct GenerateArgs {
    std::string family;
    std::int64_t n = 0, m = 1, s = 1;
    std::string gamma = "1", b = "0", u0 = "0";
    std::string alpha, beta, f0;
    std::string out;
    std::string format = "both";
};

int run_generate(const GenerateArgs& a) {
    using namespace gsc;
    RationalPhaseSequence seq;
    const Family family = family_from_string(a.family);
    if (family == Family::gsc) {
        GscParams p{a.n, a.m, Rational::parse(a.gamma), Rational::parse(a.b)};
        seq = gsc_phases(p);
        std::printf("gsc N=%lld m=%lld gamma=%s b=%s\n", static_cast<long long>(p.N), static_cast<long long>(p.m),
                    p.gamma.str().c_str(), p.b.str().c_str());
        std::printf("beam direction u0 = %s\n", beam_direction(p).str().c_str());
        std::printf("passband (u) = %s\n", describe_band(passband(p)).c_str());
    } else if (family == Family::gc) {
        seq = gc_phases(a.n, Rational::parse(a.gamma), Rational::parse(a.b));
        GscParams p{a.n, 1, Rational::parse(a.gamma), Rational::parse(a.b)};
        std::printf("gc N=%lld gamma=%s b=%s\n", static_cast<long long>(a.n), p.gamma.str().c_str(), p.b.str().c_str());
        std::printf("beam direction u0 = %s\n", beam_direction(p).str().c_str());
        std::printf("passband (u) = %s\n", describe_band(passband(p)).c_str());
    } else if (family == Family::dft) {
        Rational u0 = Rational::parse(a.u0);
        seq = dft_codeword(a.n, u0);
        std::printf("dft N=%lld u0=%s\n", static_cast<long long>(a.n), u0.str().c_str());
        std::printf("passband (u) = %s\n",
                    describe_band(wrapped_band(u0 - Rational(1, a.n), Rational(2, a.n))).c_str());
    } else {
        const auto count = static_cast<std::size_t>(a.m);
        auto alpha = a.alpha.empty() ? std::vector<std::int64_t>(count, 1) : int_list(a.alpha, "alpha");
        std::vector<std::int64_t> beta;
        if (a.beta.empty()) {
            for (std::size_t l = 0; l < count; ++l) beta.push_back(static_cast<std::int64_t>(l));
        } else {
            beta = int_list(a.beta, "beta");
        }
        std::vector<Rational> f0(count, Rational(0));
        if (!a.f0.empty()) {
            f0.clear();
            for (const auto& item : split_list(a.f0)) f0.push_back(Rational::parse(item));
        }
        MowParams p(a.s, a.m, alpha, beta, f0);
        seq = mow_phases(p);
        std::printf("mow N=%lld s=%lld m=%lld\n", static_cast<long long>(p.N()), static_cast<long long>(p.s),
                    static_cast<long long>(p.m));
        std::printf("passband (u) = [-1, 1)\n");
    }
    print_resolution(seq);

    const std::string prefix = a.out.empty() ? a.family + "_sequence" : a.out;
    if (a.format == "json" || a.format == "both") {
        io::write_file(prefix + ".json", io::sequence_to_json(seq).dump(2) + "\n");
        std::printf("wrote %s.json\n", prefix.c_str());
    }
    if (a.format == "csv" || a.format == "both") {
        io::write_file(prefix + ".csv", io::sequence_to_csv(seq));
        std::printf("wrote %s.csv\n", prefix.c_str());
    }
    return exit_ok;
}

int run_analyze(const std::string& path, std::size_t dft_len, std::size_t grid, const std::string& out_dir) {
    using namespace gsc;
    auto seq = io::load_sequence(path);
    auto bundle = analyze_sequence(seq, dft_len, grid);
    const auto& s = bundle.summary;
    std::printf("family: %s  N=%zu\n", s["family"].get<std::string>().c_str(), seq.size());
    std::printf("isl: %s\n", io::fmt_double(s["isl"].get<double>()).c_str());
    std::printf("passband nrmse (N'=%zu): %s\n", s["dft_len"].get<std::size_t>(),
                io::fmt_double(s["nrmse"].get<double>()).c_str());
    std::printf("stopband leakage: %s\n", io::fmt_double(s["leakage"].get<double>()).c_str());
    std::printf("max periodic sidelobe: %s\n", io::fmt_double(s["max_periodic_sidelobe"].get<double>()).c_str());
    print_resolution(seq);
    if (!out_dir.empty()) {
        ExperimentConfig cfg{"analyze", {{"file", path}}, 0};
        bundle.provenance = {{"toolkit_version", GSC_VERSION}, {"config_hash", config_hash(cfg)}};
        write_bundle(bundle, out_dir);
        std::printf("wrote bundle to %s\n", out_dir.c_str());
    }
    return exit_ok;
}

int run_plan(std::int64_t n, std::int64_t m, const std::string& gamma, const std::string& out) {
    using namespace gsc;
    auto plan = make_sweep_plan(n, m, Rational::parse(gamma));
    std::printf("plan N=%lld m=%lld gamma=%s: %zu beams\n", static_cast<long long>(n), static_cast<long long>(m),
                plan.gamma.str().c_str(), plan.beams.size());
    for (std::size_t i = 0; i < plan.beams.size(); ++i) {
        const auto& beam = plan.beams[i];
        std::printf("  beam %zu: b=%s u0=%s covers %s\n", i + 1, beam.b.str().c_str(), beam.u0.str().c_str(),
                    describe_band(beam.band).c_str());
    }
    const std::string prefix = out.empty() ? "plan" : out;
    io::write_file(prefix + ".json", io::plan_to_json(plan).dump(2) + "\n");
    io::write_file(prefix + ".csv", io::plan_to_csv(plan));
    std::printf("wrote %s.json and %s.csv\n", prefix.c_str(), prefix.c_str());
    return exit_ok;
}

int run_verify(std::int64_t n_max, bool corrupt, const std::string& out) {
    using namespace gsc;
    auto result = run_verification(n_max, corrupt);
    auto j = verification_to_json(result);
    std::printf("equivalence reports: %zu, failed: %zu\n", j["reports_total"].get<std::size_t>(),
                j["reports_failed"].get<std::size_t>());
    for (const auto& inv : result.invariants) {
        std::printf("invariant %s: %s (worst %s)\n", inv.name.c_str(), inv.passed ? "pass" : "FAIL", inv.detail.c_str());
    }
    if (!out.empty()) {
        io::write_file(out, j.dump(2) + "\n");
        std::printf("wrote %s\n", out.c_str());
    }
    std::printf("%s\n", result.all_passed() ? "all checks passed" : "VERIFICATION FAILED");
    return result.all_passed() ? exit_ok : exit_verify_failed;
}

int run_enum_mow(std::int64_t n, const std::string& policy, bool all_m, const std::string& out) {
    using namespace gsc;
    MowFamilyQuery q{n, !all_m, F0Policy::fixed_zero};
    if (policy == "half-integers") q.f0_policy = F0Policy::half_integers;
    else if (policy != "fixed-zero") throw invalid_parameter("policy must be fixed-zero or half-integers");
    auto entries = enumerate_mow_isl(q);
    auto summary = io::mow_isl_summary(q, entries);
    std::printf("count: %zu (predicted %lld)\n", entries.size(), static_cast<long long>(mow_family_size(q)));
    if (!entries.empty()) {
        std::printf("min isl: %s  alpha=%s beta=%s\n", io::fmt_double(entries.front().isl).c_str(),
                    io::join_ints(entries.front().params.alpha).c_str(), io::join_ints(entries.front().params.beta).c_str());
    }
    const std::string prefix = out.empty() ? "mow_" + std::to_string(n) : out;
    io::write_file(prefix + ".csv", io::mow_isl_to_csv(entries));
    io::write_file(prefix + ".json", summary.dump(2) + "\n");
    std::printf("wrote %s.csv and %s.json\n", prefix.c_str(), prefix.c_str());
    return exit_ok;
}

int run_reproduce(const std::string& id, const std::vector<std::string>& sets, std::uint64_t seed,
                  const std::string& out) {
    using namespace gsc;
    ExperimentConfig cfg{id, {}, seed};
    for (const auto& kv : sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw invalid_parameter("--set expects key=value, got '" + kv + "'");
        cfg.overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    auto bundle = run_experiment(cfg);
    const std::string dir = out.empty() ? "results/" + id : out;
    write_bundle(bundle, dir);
    std::printf("%s\n", bundle.summary.dump(2).substr(0, 4000).c_str());
    std::printf("wrote %zu tables to %s\n", bundle.tables.size(), dir.c_str());
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized step-chirp sequence toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GSC_VERSION);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Construct a sequence and write it as JSON/CSV");
    generate->add_option("family", gen.family, "gsc | gc | dft | mow")->required()->check(CLI::IsMember({"gsc", "gc", "dft", "mow"}));
    generate->add_option("--n", gen.n, "sequence length N (gsc, gc, dft)");
    generate->add_option("--m", gen.m, "step length m (gsc) or square root part (mow)");
    generate->add_option("--gamma", gen.gamma, "normalized bandwidth p/q");
    generate->add_option("--b", gen.b, "frequency offset p/q");
    generate->add_option("--u0", gen.u0, "DFT beam direction p/q in [-1, 1)");
    generate->add_option("--s", gen.s, "square-free part s (mow)");
    generate->add_option("--alpha", gen.alpha, "comma list of alpha(l) (mow)");
    generate->add_option("--beta", gen.beta, "comma list of beta(l) (mow)");
    generate->add_option("--f0", gen.f0, "comma list of f_l(0) as p/q (mow)");
    generate->add_option("--out", gen.out, "output path prefix");
    generate->add_option("--format", gen.format, "json | csv | both")->check(CLI::IsMember({"json", "csv", "both"}));

    std::string analyze_path, analyze_out;
    std::size_t dft_len = 0, grid = 2048;
    auto* analyze = app.add_subcommand("analyze", "Autocorrelation, spectrum and metrics of a sequence file");
    analyze->add_option("file", analyze_path, "sequence file (.json or .csv)")->required();
    analyze->add_option("--dft-len", dft_len, "DFT length for NRMSE/leakage (default 4N)");
    analyze->add_option("--grid", grid, "u-grid size for the spectrum export");
    analyze->add_option("--out", analyze_out, "directory for the result bundle");

    std::int64_t plan_n = 0, plan_m = 1;
    std::string plan_gamma, plan_out;
    auto* plan = app.add_subcommand("plan", "Build a beam sweep plan covering [-1, 1)");
    plan->add_option("--n", plan_n, "sequence length")->required();
    plan->add_option("--m", plan_m, "step length")->required();
    plan->add_option("--gamma", plan_gamma, "bandwidth 1/K")->required();
    plan->add_option("--out", plan_out, "output path prefix");

    std::int64_t n_max = 60;
    bool corrupt = false;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Exact equivalence checks and invariant suite");
    verify->add_option("--n-max", n_max, "largest sequence length checked");
    verify->add_flag("--corrupt", corrupt, "inject a corrupted Mow table (negative control)");
    verify->add_option("--out", verify_out, "JSON report path");

    std::int64_t enum_n = 0;
    std::string policy = "fixed-zero", enum_out;
    bool all_m = false;
    auto* enum_mow = app.add_subcommand("enum-mow", "Enumerate a Mow family and rank it by ISL");
    enum_mow->add_option("--n", enum_n, "sequence length")->required();
    enum_mow->add_option("--policy", policy, "fixed-zero | half-integers");
    enum_mow->add_flag("--all-m", all_m, "use N = s*m^2 with m > 1 (N <= 30)");
    enum_mow->add_option("--out", enum_out, "output path prefix");

    std::string experiment, repro_out;
    std::vector<std::string> sets;
    std::uint64_t seed = 0;
    auto* reproduce = app.add_subcommand("reproduce", "Run a built-in experiment recipe");
    reproduce->add_option("experiment", experiment, "fig1 | fig4 | fig5 | fig6 | custom")->required();
    reproduce->add_option("--set", sets, "override key=value (repeatable)");
    reproduce->add_option("--seed", seed, "seed recorded in provenance");
    reproduce->add_option("--out", repro_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*generate) {
            if (gen.family != "mow" && gen.n < 1) throw gsc::invalid_parameter("--n must be a positive integer");
            return run_generate(gen);
        }
        if (*analyze) return run_analyze(analyze_path, dft_len, grid, analyze_out);
        if (*plan) return run_plan(plan_n, plan_m, plan_gamma, plan_out);
        if (*verify) return run_verify(n_max, corrupt, verify_out);
        if (*enum_mow) return run_enum_mow(enum_n, policy, all_m, enum_out);
        if (*reproduce) return run_reproduce(experiment, sets, seed, repro_out);
    } catch (const gsc::io::parse_error& e) {
        std::fprintf(stderr, "parse error: %s\n", e.what());
        return exit_io;
    } catch (const gsc::io::io_error& e) {
        std::fprintf(stderr, "i/o error: %s\n", e.what());
        return exit_io;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return exit_invalid;
    } catch (const gsc::rational_overflow& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return exit_invalid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io;
    }
    return exit_ok;
}
