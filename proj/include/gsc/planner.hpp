#pragma once

// Beam planning for GSC sweeps. All directions are in u-units (u = omega / pi),
// and every interval is half-open [lo, hi).

#include <gsc/analysis.hpp>
#include <gsc/rational.hpp>
#include <gsc/seqcore.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gsc {

inline const Rational u_lo{-1};
inline const Rational u_span{2};

/// Reduce a direction into [-1, 1).
inline Rational wrap_u(const Rational& u) { return u.wrap(u_lo, u_span); }

struct Segment {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& u) const { return lo <= u && u < hi; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct PassbandInterval {
    std::vector<Segment> segments;  // one, or two when the band wraps across +-1
    Rational omega0_turns;          // left edge omega_0 / (2 pi), unwrapped
    Rational width_turns;           // gamma

    bool contains(const Rational& u) const {
        return std::any_of(segments.begin(), segments.end(), [&](const Segment& s) { return s.contains(u); });
    }
    Rational total_width() const {
        Rational w{0};
        for (const auto& s : segments) w += s.width();
        return w;
    }
};

/// Band [left, left + width) wrapped into [-1, 1).
inline PassbandInterval wrapped_band(const Rational& left, const Rational& width) {
    PassbandInterval out;
    if (width >= u_span) {
        out.segments = {{u_lo, Rational(1)}};
        return out;
    }
    Rational lo = wrap_u(left);
    Rational hi = lo + width;
    if (hi <= Rational(1)) {
        out.segments = {{lo, hi}};
    } else {
        out.segments = {{lo, Rational(1)}, {u_lo, hi - u_span}};
    }
    return out;
}

/// u0 = (2/N) m gamma (b - 1/2) + gamma, reduced into [-1, 1).
inline Rational beam_direction(const GscParams& p) {
    p.validate();
    return wrap_u(Rational(2 * p.m, p.N) * p.gamma * (p.b - Rational(1, 2)) + p.gamma);
}

/// Passband [omega_0, omega_0 + 2 pi gamma) in u-units: [u0 - gamma, u0 + gamma).
inline PassbandInterval passband(const GscParams& p) {
    p.validate();
    const Rational omega0_turns = Rational(p.m, p.N) * p.gamma * (p.b - Rational(1, 2));
    PassbandInterval out = wrapped_band(Rational(2) * omega0_turns, Rational(2) * p.gamma);
    out.omega0_turns = omega0_turns;
    out.width_turns = p.gamma;
    return out;
}

/// Smallest-magnitude b with beam_direction(N, m, gamma, b) == target_u0.
/// Ties between equal magnitudes resolve toward positive b.
inline Rational solve_b(std::int64_t N, std::int64_t m, const Rational& gamma, const Rational& target_u0) {
    GscParams{N, m, gamma, Rational(0)}.validate();
    if (target_u0 < u_lo || target_u0 >= Rational(1)) {
        throw invalid_parameter("target u0 must lie in [-1, 1); got " + target_u0.str());
    }
    // b(t) = base + t * step
    const Rational two_m_gamma = Rational(2 * m) * gamma;
    const Rational base = Rational(1, 2) + Rational(N) * (target_u0 - gamma) / two_m_gamma;
    const Rational step = Rational(2 * N) / two_m_gamma;
    const std::int64_t t0 = (-base / step).floor();
    Rational best = base + step * Rational(t0);
    for (std::int64_t t : {t0 - 1, t0 + 1, t0 + 2}) {
        Rational cand = base + step * Rational(t);
        if (cand.abs() < best.abs() || (cand.abs() == best.abs() && cand > best)) best = cand;
    }
    return best;
}

struct Beam {
    Rational b;
    Rational u0;
    PassbandInterval band;
};

struct SweepPlan {
    std::int64_t N = 0;
    std::int64_t m = 0;
    Rational gamma{1};
    std::vector<Beam> beams;

    GscParams params_for(const Beam& beam) const { return GscParams{N, m, gamma, beam.b}; }
};

/// One beam per centre (2i - 1) gamma - 1, i = 1..1/gamma.
inline SweepPlan make_sweep_plan(std::int64_t N, std::int64_t m, const Rational& gamma) {
    if (gamma.num() != 1 || gamma.den() < 1) {
        throw invalid_parameter("sweep plans need gamma = 1/integer; got gamma=" + gamma.str());
    }
    GscParams{N, m, gamma, Rational(0)}.validate();
    SweepPlan plan{N, m, gamma, {}};
    const std::int64_t count = gamma.den();
    plan.beams.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 1; i <= count; ++i) {
        const Rational centre = Rational(2 * i - 1) * gamma - Rational(1);
        const Rational b = solve_b(N, m, gamma, centre);
        GscParams p{N, m, gamma, b};
        plan.beams.push_back(Beam{b, beam_direction(p), passband(p)});
    }
    return plan;
}

/// True when the plan's bands tile [-1, 1) with no gaps and no overlaps.
inline bool tiles_full_range(const SweepPlan& plan) {
    std::vector<Segment> all;
    for (const auto& beam : plan.beams)
        for (const auto& s : beam.band.segments) all.push_back(s);
    std::sort(all.begin(), all.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
    Rational cursor = u_lo;
    for (const auto& s : all) {
        if (s.lo != cursor || s.hi <= s.lo) return false;
        cursor = s.hi;
    }
    return cursor == Rational(1);
}

struct BinSplit {
    std::vector<std::size_t> passband;
    std::vector<std::size_t> stopband;
};

/// Bin i sits at u = 2i/L reduced into [-1, 1).
inline BinSplit classify_bins(const PassbandInterval& band, std::size_t dft_len) {
    if (dft_len == 0) throw std::invalid_argument("dft_len must be positive");
    BinSplit out;
    const auto L = static_cast<std::int64_t>(dft_len);
    for (std::int64_t i = 0; i < L; ++i) {
        Rational u = wrap_u(Rational(2 * i, L));
        (band.contains(u) ? out.passband : out.stopband).push_back(static_cast<std::size_t>(i));
    }
    return out;
}

/// Fraction of DFT_L energy that lands in the passband bins.
inline double passband_energy_fraction(const ComplexSequence& seq, const PassbandInterval& band, std::size_t dft_len) {
    auto power = dft_power(seq, dft_len);
    auto split = classify_bins(band, dft_len);
    double in = 0, total = 0;
    for (auto i : split.passband) in += power[i];
    for (double p : power) total += p;
    return total > 0 ? in / total : 0;
}

struct Flatness {
    double max_power = 0;
    double min_power = 0;
    double fluctuation_db = 0;      // 10 log10(max / min) over the guarded passband
    double max_deviation_db = 0;    // largest |10 log10(gamma * y)|, i.e. distance from the 1/gamma level
    std::size_t samples = 0;
};

/// Passband ripple measured on a uniform u-grid after trimming `guard` from
/// each edge of the band. The default guard is 2/N.
inline Flatness passband_flatness(const ComplexSequence& seq, const PassbandInterval& band, const Rational& gamma,
                                  std::size_t grid_size = 2048, double guard = -1.0) {
    if (guard < 0) guard = 2.0 / static_cast<double>(seq.size());
    auto grid = power_spectrum(seq, grid_size);
    const double left = wrap_u(Rational(2) * band.omega0_turns).to_double();
    const double width = std::min(2.0, 2.0 * gamma.to_double());
    const double inner = width - 2.0 * guard;
    Flatness out;
    out.max_power = 0;
    out.min_power = std::numeric_limits<double>::infinity();
    if (inner <= 0) return out;
    const double g = gamma.to_double();
    for (std::size_t i = 0; i < grid.grid_size; ++i) {
        double offset = std::fmod(grid.u[i] - (left + guard) + 4.0, 2.0);
        if (offset >= inner) continue;
        out.max_power = std::max(out.max_power, grid.y[i]);
        out.min_power = std::min(out.min_power, grid.y[i]);
        out.max_deviation_db = std::max(out.max_deviation_db, std::abs(10.0 * std::log10(g * grid.y[i])));
        ++out.samples;
    }
    if (out.samples) out.fluctuation_db = 10.0 * std::log10(out.max_power / out.min_power);
    return out;
}

}  // namespace gsc
