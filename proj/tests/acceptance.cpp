// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <gsc/gsc.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

using gsc::Rational;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> body;
};

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v.size()) - 1))];
}

gsc::GscParams random_gsc(std::mt19937_64& rng, std::int64_t n_max) {
    const std::int64_t N = uniform(rng, 1, n_max);
    const std::int64_t m = pick(rng, gsc::divisors(N));
    const std::int64_t q = uniform(rng, 1, 16);
    Rational gamma(uniform(rng, 1, q), q);
    if (gamma < Rational(1, N)) gamma = Rational(1, N);
    return {N, m, gamma, Rational(uniform(rng, -200, 200), uniform(rng, 1, 8))};
}

gsc::MowParams random_mow(std::mt19937_64& rng, std::int64_t n_max) {
    const std::int64_t N = uniform(rng, 1, n_max);
    const auto [s, m] = gsc::square_factorization(N);
    auto units = gsc::detail::units_mod(s);
    std::vector<std::int64_t> alpha, perm(static_cast<std::size_t>(m)), beta;
    std::vector<Rational> f0;
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::int64_t l = 0; l < m; ++l) {
        alpha.push_back(pick(rng, units));
        beta.push_back(perm[static_cast<std::size_t>(l)] + m * uniform(rng, -3, 3));
        f0.emplace_back(uniform(rng, -20, 20), uniform(rng, 1, 6));
    }
    return gsc::MowParams(s, m, alpha, beta, f0);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Outcome isl_reproduction() {
    auto t0 = std::chrono::steady_clock::now();
    const double m1 = gsc::isl(gsc::render(gsc::gsc_phases({462, 1, Rational(1), Rational(1, 2)})));
    const double s1 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    t0 = std::chrono::steady_clock::now();
    const double m21 = gsc::isl(gsc::render(gsc::gsc_phases({462, 21, Rational(1), Rational(1, 2)})));
    const double s21 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = std::abs(m1 - 0.0297) <= 5e-4 && std::abs(m21 - 0.0307) <= 5e-4 && s1 < 1 && s21 < 1;
    return {ok, "m=1 isl=" + fmt("%.6f", m1) + ", m=21 isl=" + fmt("%.6f", m21)};
}

Outcome exhaustive_minimum() {
    const double m1 = gsc::isl(gsc::render(gsc::gsc_phases({462, 1, Rational(1), Rational(1, 2)})));
    auto family = gsc::enumerate_mow_isl({462, true, gsc::F0Policy::fixed_zero});
    const double gap = family.empty() ? 1.0 : std::abs(family.front().isl - m1);
    const bool ok = family.size() == 55440 && gap < 1e-9;
    return {ok, std::to_string(family.size()) + " members, min isl=" + fmt("%.12f", family.front().isl) +
                    ", |min - gsc(m=1)|=" + fmt("%.2e", gap) + ", threads=" + std::to_string(gsc::worker_count())};
}

Outcome isl_variance_identity() {
    std::mt19937_64 rng(2024);
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        gsc::ComplexSequence z;
        switch (i % 3) {
            case 0: z = gsc::render(gsc::gsc_phases(random_gsc(rng, 512))); break;
            case 1: z = gsc::render(gsc::mow_phases(random_mow(rng, 512))); break;
            default: {
                const std::int64_t N = uniform(rng, 1, 512);
                const std::int64_t den = uniform(rng, 1, 64);
                z = gsc::render(gsc::dft_codeword(N, Rational(uniform(rng, -den, den - 1), den)));
            }
        }
        worst = std::max(worst, std::abs(gsc::spectrum_variance(z) - gsc::isl(z)));
    }
    return {worst < 1e-9, "200 sequences, worst |variance - isl|=" + fmt("%.2e", worst)};
}

Outcome half_power_limit() {
    auto z = gsc::render(gsc::dft_codeword(1024, Rational(0)));
    const double ratio = gsc::spectrum_at(z, 1.0 / 1024) / gsc::spectrum_at(z, 0.0);
    const double target = 4.0 / (std::numbers::pi * std::numbers::pi);
    return {std::abs(ratio - target) <= 1e-3, "y(1/N)/y(0)=" + fmt("%.6f", ratio) + ", 4/pi^2=" + fmt("%.6f", target)};
}

Outcome proposition_one() {
    auto reports = gsc::verify_equivalences(60);
    std::size_t bad = 0, even = 0, odd = 0;
    for (const auto& r : reports) {
        bad += !r.verdict;
        even += r.kind == gsc::EquivalenceKind::gsc_mow_even_s;
        odd += r.kind == gsc::EquivalenceKind::gsc_mow_odd_s;
    }
    return {bad == 0 && even > 0 && odd > 0, std::to_string(reports.size()) + " reports (" + std::to_string(even) +
                                                 " even-s, " + std::to_string(odd) + " odd-s), " + std::to_string(bad) +
                                                 " failed"};
}

Outcome degenerate_identities() {
    std::mt19937_64 rng(77);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        auto p = random_gsc(rng, 400);
        if (gsc::gsc_phases({p.N, 1, p.gamma, p.b}).phases != gsc::gc_phases(p.N, p.gamma, p.b).phases) ++bad;
        auto lhs = gsc::gsc_phases({p.N, p.N, Rational(1, p.N), p.b});
        auto rhs = gsc::dft_codeword(p.N, gsc::wrap_u(Rational(2) * p.b / Rational(p.N)));
        if (!gsc::max_phase_gap(lhs, rhs).is_zero()) ++bad;
    }
    return {bad == 0, "500 draws, " + std::to_string(bad) + " mismatches"};
}

Outcome perfect_periodic() {
    std::mt19937_64 rng(99);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        auto z = gsc::render(gsc::mow_phases(random_mow(rng, 200)));
        worst = std::max(worst, gsc::max_periodic_sidelobe(gsc::periodic_autocorr(z)));
    }
    return {worst < 1e-9, "100 sequences, worst sidelobe=" + fmt("%.2e", worst)};
}

Outcome phase_resolution() {
    std::mt19937_64 rng(31);
    int bad = 0, drawn = 0;
    while (drawn < 100) {
        const std::int64_t N = uniform(rng, 2, 300);
        const std::int64_t m = pick(rng, gsc::divisors(N));
        // the closed form needs at least two steps, and N >= 3 for unit steps
        if (N / m < 2 || (m == 1 && N < 3)) continue;
        const std::int64_t q = uniform(rng, 1, 12);
        Rational gamma(uniform(rng, 1, q), q);
        if (gamma < Rational(1, N)) continue;
        Rational b(uniform(rng, -50, 50));
        if (gsc::phase_resolution(gsc::gsc_phases({N, m, gamma, b})) != gsc::gsc_resolution_closed_form(N, m, gamma)) ++bad;
        if (gsc::phase_resolution(gsc::gc_phases(N, gamma, b)) != gsc::gc_resolution_closed_form(N, gamma)) ++bad;
        ++drawn;
    }
    auto stepped = gsc::phase_resolution(gsc::gsc_phases({50, 10, Rational(1, 2), Rational(1)}));
    auto plain = gsc::phase_resolution(gsc::gc_phases(50, Rational(1, 2), Rational(1)));
    const Rational ratio = stepped.resolution_turns / plain.resolution_turns;
    return {bad == 0 && ratio == Rational(10),
            "100 draws, " + std::to_string(bad) + " mismatches, N=50 ratio R_gsc/R_gc=" + ratio.str()};
}

Outcome sweep_coverage() {
    bool tiles = true;
    double worst_fluct = 0, min_energy = 1;
    std::string per_config;
    for (const auto& cfg : gsc::fig4_configs()) {
        auto plan = gsc::make_sweep_plan(gsc::fig4_length, cfg.m, cfg.gamma);
        tiles = tiles && gsc::tiles_full_range(plan);
        double fluct = 0;
        for (const auto& s : gsc::sweep_beam_stats(plan, 2048)) {
            fluct = std::max(fluct, s.flatness.fluctuation_db);
            min_energy = std::min(min_energy, s.energy_fraction);
        }
        worst_fluct = std::max(worst_fluct, fluct);
        per_config += (per_config.empty() ? "" : " ") + cfg.gamma.str() + ":" + fmt("%.2f", fluct) + "dB";
    }
    const bool ok = tiles && worst_fluct < 3.0 && min_energy >= 0.85;
    return {ok, std::string("tiles=") + (tiles ? "yes" : "no") + ", fluctuation " + per_config +
                    ", min energy fraction=" + fmt("%.4f", min_energy)};
}

Outcome fig5_direction() {
    auto rows = gsc::fig5_rows(200);
    const gsc::Fig5Row *m1 = nullptr, *m10 = nullptr;
    for (const auto& r : rows) {
        if (r.m == 1) m1 = &r;
        if (r.m == 10) m10 = &r;
    }
    const bool ok = m1 && m10 && m10->nrmse < m1->nrmse && m10->leakage < m1->leakage;
    return {ok, "nrmse m=1 " + fmt("%.4f", m1->nrmse) + " vs m=10 " + fmt("%.4f", m10->nrmse) + ", leakage m=1 " +
                    fmt("%.4f", m1->leakage) + " vs m=10 " + fmt("%.4f", m10->leakage)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "ISL reproduction", 2.0, isl_reproduction},
        {2, "exhaustive Mow minimum", 600.0, exhaustive_minimum},
        {3, "ISL equals spectrum variance", 30.0, isl_variance_identity},
        {4, "half-power limit", 1.0, half_power_limit},
        {5, "GSC/Mow equivalence", 30.0, proposition_one},
        {6, "degenerate identities", 5.0, degenerate_identities},
        {7, "perfect periodic autocorrelation", 10.0, perfect_periodic},
        {8, "phase resolution", 5.0, phase_resolution},
        {9, "sweep coverage and flatness", 30.0, sweep_coverage},
        {10, "step length ordering at N=50", 5.0, fig5_direction},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.body();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = out.pass && secs < c.budget_s;
        failed += !pass;
        std::printf("[%s] criterion %d %s: %s (%.2fs of %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    out.detail.c_str(), secs, c.budget_s);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
