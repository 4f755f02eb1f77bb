#pragma once

// Built-in reproduction recipes and the sequence analysis report used by the
// command-line front end. Every recipe is deterministic: the same config yields
// byte-identical tables and summary. Only provenance carries a timestamp.

#include <gsc/analysis.hpp>
#include <gsc/equivalence.hpp>
#include <gsc/io.hpp>
#include <gsc/planner.hpp>
#include <gsc/seqcore.hpp>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#ifndef GSC_VERSION
#define GSC_VERSION "0.0.0"
#endif

namespace gsc {

struct ExperimentConfig {
    std::string experiment_id;                    // fig1 | fig4 | fig5 | fig6 | custom
    std::map<std::string, std::string> overrides;  // grid, dft_len, family, N, m, gamma, b
    std::uint64_t seed = 0;
};

struct ResultBundle {
    std::vector<std::pair<std::string, std::string>> tables;  // file name -> CSV payload
    io::json summary;
    io::json provenance;
};

inline io::json config_json(const ExperimentConfig& c) {
    io::json j;
    j["experiment_id"] = c.experiment_id;
    io::json o = io::json::object();
    for (const auto& [k, v] : c.overrides) o[k] = v;
    j["overrides"] = std::move(o);
    j["seed"] = c.seed;
    return j;
}

/// FNV-1a over the canonical JSON form of the config.
inline std::string config_hash(const ExperimentConfig& c) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : config_json(c).dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace detail {

class Overrides {
public:
    Overrides(const ExperimentConfig& c, std::set<std::string> allowed) : values_(c.overrides) {
        for (const auto& [k, v] : values_) {
            if (!allowed.count(k)) {
                throw invalid_parameter("unknown override '" + k + "' for experiment " + c.experiment_id);
            }
        }
    }

    std::int64_t integer(const std::string& key, std::int64_t fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        Rational r = Rational::parse(it->second);
        if (!r.is_integer() || r.num() < 1) throw invalid_parameter("override " + key + " must be a positive integer");
        return r.num();
    }

    bool flag(const std::string& key, bool fallback) const {
        auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        if (it->second == "1" || it->second == "true") return true;
        if (it->second == "0" || it->second == "false") return false;
        throw invalid_parameter("override " + key + " must be 0/1 or true/false");
    }

    Rational rational(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw invalid_parameter("override " + key + " is required");
        return Rational::parse(it->second);
    }

private:
    std::map<std::string, std::string> values_;
};

inline std::string multi_column_csv(const std::vector<double>& u, const std::vector<std::string>& names,
                                    const std::vector<std::vector<double>>& columns) {
    std::string out = "u";
    for (const auto& n : names) out += "," + n;
    out += "\n";
    for (std::size_t i = 0; i < u.size(); ++i) {
        out += io::fmt_double(u[i]);
        for (const auto& col : columns) out += "," + io::fmt_double(col[i]);
        out += "\n";
    }
    return out;
}

inline std::string phase_listing_csv(const RationalPhaseSequence& seq) {
    std::string out = "n,phase_num,phase_den,phase_rad\n";
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const auto& p = seq.phases[n];
        out += std::to_string(n) + "," + std::to_string(p.num()) + "," + std::to_string(p.den()) + "," +
               io::fmt_double(two_pi * p.to_double()) + "\n";
    }
    return out;
}

inline std::string rational_key(const Rational& r) {
    std::string s = r.str();
    for (auto& c : s)
        if (c == '/') c = '_';
    return s;
}

}  // namespace detail

/// Fig. 1 parameters for the Mow example: N = 50, s = 2, m = 5, alpha = 1,
/// beta(l) = l - 25, f0(l) = -9.5 l.
inline MowParams fig1_mow_params() {
    std::vector<std::int64_t> alpha(5, 1), beta(5);
    std::vector<Rational> f0(5);
    for (std::int64_t l = 0; l < 5; ++l) {
        beta[static_cast<std::size_t>(l)] = l - 25;
        f0[static_cast<std::size_t>(l)] = Rational(-19 * l, 2);
    }
    return MowParams(2, 5, alpha, beta, f0);
}

struct Fig4Config {
    Rational gamma;
    std::int64_t m;
};

inline std::vector<Fig4Config> fig4_configs() {
    return {{Rational(1, 2), 15}, {Rational(1, 5), 24}, {Rational(1, 7), 30}, {Rational(1, 13), 40}};
}

inline constexpr std::int64_t fig4_length = 120;

/// Passband implied by a sequence's recorded parameters, with its gamma.
/// Mow sequences and files without parameters are treated as full-band.
inline std::pair<Rational, PassbandInterval> infer_passband(const RationalPhaseSequence& seq) {
    auto get = [&](const std::string& key) -> std::optional<std::string> {
        for (const auto& [k, v] : seq.params)
            if (k == key) return v;
        return std::nullopt;
    };
    const auto N = static_cast<std::int64_t>(seq.size());
    try {
        if (seq.family == Family::gsc || seq.family == Family::gc) {
            auto g = get("gamma"), b = get("b");
            if (g && b) {
                std::int64_t m = 1;
                if (auto ms = get("m")) m = Rational::parse(*ms).num();
                GscParams p{N, m, Rational::parse(*g), Rational::parse(*b)};
                return {p.gamma, passband(p)};
            }
        } else if (seq.family == Family::dft) {
            if (auto u0 = get("u0")) {
                Rational u = Rational::parse(*u0);
                PassbandInterval band = wrapped_band(u - Rational(1, N), Rational(2, N));
                band.omega0_turns = (u - Rational(1, N)) / Rational(2);
                band.width_turns = Rational(1, N);
                return {Rational(1, N), band};
            }
        }
    } catch (const std::exception&) {
    }
    PassbandInterval full = wrapped_band(u_lo, u_span);
    full.omega0_turns = Rational(-1, 2);
    full.width_turns = Rational(1);
    return {Rational(1), full};
}

/// Autocorrelations, spectrum and scalar metrics of one sequence.
inline ResultBundle analyze_sequence(const RationalPhaseSequence& seq, std::size_t dft_len = 0,
                                     std::size_t grid = 2048) {
    if (seq.size() == 0) throw invalid_parameter("cannot analyze an empty sequence");
    if (dft_len == 0) dft_len = 4 * seq.size();
    auto rendered = render(seq);
    auto aperiodic = aperiodic_autocorr(rendered);
    auto periodic = periodic_autocorr(rendered);
    auto [gamma, band] = infer_passband(seq);
    auto split = classify_bins(band, dft_len);

    MetricBundle metrics;
    metrics.isl = isl(aperiodic);
    metrics.nrmse = split.passband.empty() ? 0.0 : passband_nrmse(rendered, gamma, split.passband, dft_len);
    metrics.leakage = stopband_leakage(rendered, split.stopband, dft_len);
    metrics.resolution_turns = phase_resolution(seq).resolution_turns;

    ResultBundle out;
    out.tables.emplace_back("autocorr.csv", io::profile_to_csv(aperiodic));
    out.tables.emplace_back("periodic_autocorr.csv", io::profile_to_csv(periodic));
    out.tables.emplace_back("spectrum.csv", io::spectrum_to_csv(power_spectrum(rendered, grid)));
    out.summary = io::metrics_to_json(metrics);
    out.summary["family"] = std::string(to_string(seq.family));
    out.summary["N"] = seq.size();
    out.summary["gamma"] = gamma.str();
    out.summary["dft_len"] = dft_len;
    out.summary["max_periodic_sidelobe"] = max_periodic_sidelobe(periodic);
    out.summary["phase_levels"] = phase_resolution(seq).levels;
    return out;
}

inline ResultBundle run_fig1(const ExperimentConfig& c) {
    detail::Overrides o(c, {"grid"});
    const auto grid = static_cast<std::size_t>(o.integer("grid", 2048));
    ResultBundle out;

    const std::int64_t N = 10;
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;
    std::vector<double> u;
    io::json peaks = io::json::array();
    for (std::int64_t i = 0; i < N; ++i) {
        const Rational u0 = Rational(2 * i + 1, N) - Rational(1);
        auto seq = render(dft_codeword(N, u0));
        auto g = power_spectrum(seq, grid);
        u = g.u;
        names.push_back("y_u0_" + detail::rational_key(u0));
        cols.push_back(g.y);
        peaks.push_back({{"u0", u0.str()}, {"gain", spectrum_at(seq, u0.to_double())}});
    }
    out.tables.emplace_back("fig1_dft_spectra.csv", detail::multi_column_csv(u, names, cols));

    auto mow = mow_phases(fig1_mow_params());
    auto mow_seq = render(mow);
    out.tables.emplace_back("fig1_mow_spectrum.csv", io::spectrum_to_csv(power_spectrum(mow_seq, grid)));
    out.tables.emplace_back("fig1_mow_phases.csv", detail::phase_listing_csv(mow));

    out.summary["dft"] = {{"N", N}, {"beams", N}, {"peaks", std::move(peaks)}};
    out.summary["mow"] = {{"N", mow.size()},
                          {"params", io::params_json(mow.params)},
                          {"isl", isl(mow_seq)},
                          {"max_periodic_sidelobe", max_periodic_sidelobe(periodic_autocorr(mow_seq))},
                          {"resolution_turns", phase_resolution(mow).resolution_turns.str()}};
    return out;
}

struct BeamStats {
    std::int64_t beam;
    Rational b;
    Rational u0;
    Flatness flatness;
    double energy_fraction;
};

/// Per-beam flatness (2/N guard on each edge) and 8N-bin passband energy share.
inline std::vector<BeamStats> sweep_beam_stats(const SweepPlan& plan, std::size_t grid) {
    std::vector<BeamStats> out;
    for (std::size_t i = 0; i < plan.beams.size(); ++i) {
        const auto& beam = plan.beams[i];
        auto seq = render(gsc_phases(plan.params_for(beam)));
        out.push_back({static_cast<std::int64_t>(i + 1), beam.b, beam.u0,
                       passband_flatness(seq, beam.band, plan.gamma, grid),
                       passband_energy_fraction(seq, beam.band, static_cast<std::size_t>(8 * plan.N))});
    }
    return out;
}

inline ResultBundle run_fig4(const ExperimentConfig& c) {
    detail::Overrides o(c, {"grid"});
    const auto grid = static_cast<std::size_t>(o.integer("grid", 2048));
    ResultBundle out;
    std::string stats_csv = "gamma,m,beam,b,u0,fluctuation_db,max_deviation_db,energy_fraction\n";
    io::json configs = io::json::array();
    bool all_below = true;
    for (const auto& cfg : fig4_configs()) {
        auto plan = make_sweep_plan(fig4_length, cfg.m, cfg.gamma);
        std::vector<std::string> names;
        std::vector<std::vector<double>> cols;
        std::vector<double> u;
        for (std::size_t i = 0; i < plan.beams.size(); ++i) {
            auto g = power_spectrum(render(gsc_phases(plan.params_for(plan.beams[i]))), grid);
            u = g.u;
            names.push_back("y_beam" + std::to_string(i + 1));
            cols.push_back(g.y);
        }
        out.tables.emplace_back("fig4_gamma_" + detail::rational_key(cfg.gamma) + ".csv",
                                detail::multi_column_csv(u, names, cols));
        double worst_fluct = 0, worst_dev = 0, min_energy = 1;
        for (const auto& s : sweep_beam_stats(plan, grid)) {
            stats_csv += cfg.gamma.str() + "," + std::to_string(cfg.m) + "," + std::to_string(s.beam) + "," + s.b.str() +
                         "," + s.u0.str() + "," + io::fmt_double(s.flatness.fluctuation_db) + "," +
                         io::fmt_double(s.flatness.max_deviation_db) + "," + io::fmt_double(s.energy_fraction) + "\n";
            worst_fluct = std::max(worst_fluct, s.flatness.fluctuation_db);
            worst_dev = std::max(worst_dev, s.flatness.max_deviation_db);
            min_energy = std::min(min_energy, s.energy_fraction);
        }
        all_below = all_below && worst_fluct < 3.0;
        configs.push_back({{"gamma", cfg.gamma.str()},
                           {"m", cfg.m},
                           {"beams", plan.beams.size()},
                           {"tiles", tiles_full_range(plan)},
                           {"max_fluctuation_db", worst_fluct},
                           {"max_deviation_db", worst_dev},
                           {"min_energy_fraction", min_energy}});
    }
    out.tables.emplace_back("fig4_flatness.csv", stats_csv);
    out.summary["N"] = fig4_length;
    out.summary["guard_u"] = "2/N";
    out.summary["configs"] = std::move(configs);
    out.summary["all_below_3db"] = all_below;
    return out;
}

struct Fig5Row {
    std::int64_t m;
    double nrmse;
    double leakage;
    PhaseGrid resolution;
};

inline std::vector<Fig5Row> fig5_rows(std::size_t dft_len = 200) {
    const std::int64_t N = 50;
    const Rational gamma(1, 2), b(1);
    std::vector<Fig5Row> rows;
    for (auto m : divisors(N)) {
        GscParams p{N, m, gamma, b};
        auto seq = gsc_phases(p);
        auto rendered = render(seq);
        auto split = classify_bins(passband(p), dft_len);
        rows.push_back({m, passband_nrmse(rendered, gamma, split.passband, dft_len),
                        stopband_leakage(rendered, split.stopband, dft_len), phase_resolution(seq)});
    }
    return rows;
}

inline ResultBundle run_fig5(const ExperimentConfig& c) {
    detail::Overrides o(c, {"dft_len"});
    const auto dft_len = static_cast<std::size_t>(o.integer("dft_len", 200));
    ResultBundle out;
    auto rows = fig5_rows(dft_len);
    std::string csv = "m,nrmse,leakage,phase_levels\n";
    const Fig5Row* m1 = nullptr;
    const Fig5Row* m10 = nullptr;
    for (const auto& r : rows) {
        csv += std::to_string(r.m) + "," + io::fmt_double(r.nrmse) + "," + io::fmt_double(r.leakage) + "," +
               std::to_string(r.resolution.levels) + "\n";
        if (r.m == 1) m1 = &r;
        if (r.m == 10) m10 = &r;
    }
    out.tables.emplace_back("fig5_metrics.csv", csv);
    out.tables.emplace_back("fig5_phases_m1.csv", detail::phase_listing_csv(gsc_phases({50, 1, Rational(1, 2), Rational(1)})));
    out.tables.emplace_back("fig5_phases_m10.csv",
                            detail::phase_listing_csv(gsc_phases({50, 10, Rational(1, 2), Rational(1)})));
    out.summary["N"] = 50;
    out.summary["gamma"] = "1/2";
    out.summary["b"] = "1";
    out.summary["dft_len"] = dft_len;
    out.summary["nrmse_m1"] = m1->nrmse;
    out.summary["nrmse_m10"] = m10->nrmse;
    out.summary["leakage_m1"] = m1->leakage;
    out.summary["leakage_m10"] = m10->leakage;
    out.summary["nrmse_m10_below_m1"] = m10->nrmse < m1->nrmse;
    out.summary["leakage_m10_below_m1"] = m10->leakage < m1->leakage;
    out.summary["resolution_ratio_m10_over_m1"] = (m10->resolution.resolution_turns / m1->resolution.resolution_turns).str();
    return out;
}

inline ResultBundle run_fig6(const ExperimentConfig& c) {
    detail::Overrides o(c, {"family"});
    const bool with_family = o.flag("family", true);
    ResultBundle out;
    auto sweep = isl_vs_m_sweep(462, Rational(1), Rational(1, 2));
    std::string csv = "m,isl\n";
    for (const auto& [m, v] : sweep) csv += std::to_string(m) + "," + io::fmt_double(v) + "\n";
    out.tables.emplace_back("fig6_isl_vs_m.csv", csv);
    double isl_m1 = 0;
    for (const auto& [m, v] : sweep) {
        if (m == 1) isl_m1 = v;
        if (m == 21) out.summary["isl_m21"] = v;
    }
    out.summary["isl_m1"] = isl_m1;
    out.summary["resolution_m1_turns"] = phase_resolution(gsc_phases({462, 1, Rational(1), Rational(1, 2)})).resolution_turns.str();
    out.summary["resolution_m21_turns"] =
        phase_resolution(gsc_phases({462, 21, Rational(1), Rational(1, 2)})).resolution_turns.str();
    if (with_family) {
        MowFamilyQuery q{462, true, F0Policy::fixed_zero};
        auto family = enumerate_mow_isl(q);
        out.tables.emplace_back("fig6_mow_family.csv", io::mow_isl_to_csv(family));
        out.summary["family"] = io::mow_isl_summary(q, family);
        out.summary["family_min_matches_m1"] = std::abs(family.front().isl - isl_m1) < 1e-9;
    }
    return out;
}

/// Analysis of a single GSC given through overrides N, m, gamma and b.
inline ResultBundle run_custom(const ExperimentConfig& c) {
    detail::Overrides o(c, {"N", "m", "gamma", "b", "dft_len", "grid"});
    GscParams p{o.integer("N", 1), o.integer("m", 1), o.rational("gamma"), o.rational("b")};
    auto out = analyze_sequence(gsc_phases(p), static_cast<std::size_t>(o.integer("dft_len", 4 * p.N)),
                                static_cast<std::size_t>(o.integer("grid", 2048)));
    out.summary["u0"] = beam_direction(p).str();
    return out;
}

inline ResultBundle run_experiment(const ExperimentConfig& c) {
    ResultBundle out;
    if (c.experiment_id == "fig1") out = run_fig1(c);
    else if (c.experiment_id == "fig4") out = run_fig4(c);
    else if (c.experiment_id == "fig5") out = run_fig5(c);
    else if (c.experiment_id == "fig6") out = run_fig6(c);
    else if (c.experiment_id == "custom") out = run_custom(c);
    else throw invalid_parameter("unknown experiment id '" + c.experiment_id + "' (expected fig1, fig4, fig5, fig6 or custom)");
    out.summary["experiment_id"] = c.experiment_id;
    out.summary["config_hash"] = config_hash(c);
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out.provenance = {{"toolkit_version", GSC_VERSION}, {"config_hash", config_hash(c)}, {"timestamp", stamp},
                      {"config", config_json(c)}};
    return out;
}

/// Writes each table, summary.json and provenance.json into dir.
inline void write_bundle(const ResultBundle& bundle, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw io::io_error("cannot create directory '" + dir.string() + "': " + ec.message());
    for (const auto& [name, csv] : bundle.tables) io::write_file((dir / name).string(), csv);
    io::write_file((dir / "summary.json").string(), bundle.summary.dump(2) + "\n");
    io::write_file((dir / "provenance.json").string(), bundle.provenance.dump(2) + "\n");
}

// ------------------------------------------------------------ verification

struct InvariantCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationResult {
    std::vector<EquivalenceReport> reports;
    std::vector<InvariantCheck> invariants;

    bool all_passed() const {
        for (const auto& r : reports)
            if (!r.verdict) return false;
        for (const auto& c : invariants)
            if (!c.passed) return false;
        return true;
    }
};

/// Equivalence sweep up to n_max plus a handful of numeric invariants on the
/// same range. With corrupt set, one Mow embedding gets a perturbed beta table
/// so that the run must fail.
inline VerificationResult run_verification(std::int64_t n_max, bool corrupt = false) {
    if (n_max < 2) throw invalid_parameter("n_max must be at least 2");
    VerificationResult out;
    out.reports = verify_equivalences(n_max);

    if (corrupt) {
        GscParams p{8, 2, Rational(1), Rational(1, 2)};
        auto mp = mow_params_for_gsc(p);
        std::swap(mp.beta[0], mp.beta[1]);
        mp.beta[0] = mod_floor(mp.beta[0] + 2, mp.s * mp.m);
        out.reports.push_back(compare_sequences(EquivalenceKind::gsc_mow_even_s, degenerate_gsc(p), mow_phases(mp)));
    }

    double worst_identity = 0, worst_periodic = 0, worst_unimodular = 0;
    for (std::int64_t N = 1; N <= n_max; ++N) {
        for (auto m : divisors(N)) {
            auto seq = render(gsc_phases({N, m, Rational(1), Rational(1, 2)}));
            worst_identity = std::max(worst_identity, std::abs(spectrum_variance(seq) - isl(seq)));
            for (const auto& a : seq.entries)
                worst_unimodular = std::max(worst_unimodular, std::abs(std::abs(a) - 1.0 / std::sqrt(double(N))));
        }
        const auto [s, root] = square_factorization(N);
        GscParams p{N, root, Rational(1), s % 2 == 0 ? Rational(1, 2) : Rational(1)};
        worst_periodic = std::max(worst_periodic, max_periodic_sidelobe(periodic_autocorr(render(mow_phases(mow_params_for_gsc(p))))));
    }
    out.invariants.push_back({"isl_equals_spectrum_variance", worst_identity < 1e-9, io::fmt_double(worst_identity)});
    out.invariants.push_back({"mow_perfect_periodic_autocorr", worst_periodic < 1e-9, io::fmt_double(worst_periodic)});
    out.invariants.push_back({"unimodular_entries", worst_unimodular < 1e-12, io::fmt_double(worst_unimodular)});
    return out;
}

inline io::json verification_to_json(const VerificationResult& v) {
    io::json j;
    std::size_t failures = 0;
    for (const auto& r : v.reports) failures += !r.verdict;
    j["reports_total"] = v.reports.size();
    j["reports_failed"] = failures;
    io::json inv = io::json::array();
    for (const auto& c : v.invariants) inv.push_back({{"name", c.name}, {"passed", c.passed}, {"worst", c.detail}});
    j["invariants"] = std::move(inv);
    j["passed"] = v.all_passed();
    j["reports"] = io::reports_to_json(v.reports);
    return j;
}

}  // namespace gsc
