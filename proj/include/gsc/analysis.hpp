#pragma once

// Correlation, spectrum and phase-grid analysis of unimodular sequences.

#include <gsc/fft.hpp>
#include <gsc/rational.hpp>
#include <gsc/seqcore.hpp>
#include <gsc/sequence.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gsc {

/// Autocorrelation values R(tau) for tau in [min_lag, min_lag + values.size()).
/// Aperiodic profiles use min_lag = 1 - N; periodic profiles use min_lag = 0.
struct AutocorrProfile {
    std::int64_t N = 0;
    std::int64_t min_lag = 0;
    std::vector<Complex> values;

    std::int64_t max_lag() const { return min_lag + static_cast<std::int64_t>(values.size()) - 1; }
    Complex at(std::int64_t tau) const { return values.at(static_cast<std::size_t>(tau - min_lag)); }
};

enum class CorrMethod { direct, fast };

/// R(tau) = sum_n a_n conj(a_{n - tau}), entries outside [0, N) taken as zero.
inline AutocorrProfile aperiodic_autocorr(const ComplexSequence& seq, CorrMethod method = CorrMethod::fast) {
    const auto N = static_cast<std::int64_t>(seq.size());
    AutocorrProfile out;
    out.N = N;
    out.min_lag = 1 - N;
    if (N == 0) return out;
    out.values.assign(static_cast<std::size_t>(2 * N - 1), Complex{});

    if (method == CorrMethod::direct) {
        for (std::int64_t tau = 1 - N; tau < N; ++tau) {
            Complex acc{};
            for (std::int64_t n = std::max<std::int64_t>(0, tau); n < std::min(N, N + tau); ++n) {
                acc += seq.entries[n] * std::conj(seq.entries[n - tau]);
            }
            out.values[static_cast<std::size_t>(tau + N - 1)] = acc;
        }
        return out;
    }

    const auto L = static_cast<std::size_t>(2 * N);
    auto spec = fft::forward(seq.entries, L);
    for (auto& x : spec) x = std::norm(x);
    auto corr = fft::backward(spec, L);
    const double inv_len = 1.0 / static_cast<double>(L);
    for (std::int64_t tau = 1 - N; tau < N; ++tau) {
        auto idx = static_cast<std::size_t>(tau >= 0 ? tau : static_cast<std::int64_t>(L) + tau);
        out.values[static_cast<std::size_t>(tau + N - 1)] = corr[idx] * inv_len;
    }
    return out;
}

/// R_p(tau) = sum_n a_n conj(a_{(n - tau) mod N}) for tau in Z_N.
inline AutocorrProfile periodic_autocorr(const ComplexSequence& seq, CorrMethod method = CorrMethod::fast) {
    const auto N = static_cast<std::int64_t>(seq.size());
    AutocorrProfile out;
    out.N = N;
    out.min_lag = 0;
    if (N == 0) return out;
    out.values.assign(static_cast<std::size_t>(N), Complex{});
    if (method == CorrMethod::direct) {
        for (std::int64_t tau = 0; tau < N; ++tau) {
            Complex acc{};
            for (std::int64_t n = 0; n < N; ++n) acc += seq.entries[n] * std::conj(seq.entries[mod_floor(n - tau, N)]);
            out.values[static_cast<std::size_t>(tau)] = acc;
        }
        return out;
    }
    auto spec = fft::forward(seq.entries, static_cast<std::size_t>(N));
    for (auto& x : spec) x = std::norm(x);
    auto corr = fft::backward(spec, static_cast<std::size_t>(N));
    for (std::int64_t tau = 0; tau < N; ++tau) out.values[tau] = corr[tau] / static_cast<double>(N);
    return out;
}

/// Integrated sidelobe level: sum of |R(tau)|^2 over tau != 0.
inline double isl(const AutocorrProfile& profile) {
    double total = 0;
    for (std::int64_t tau = profile.min_lag; tau <= profile.max_lag(); ++tau) {
        if (tau != 0) total += std::norm(profile.at(tau));
    }
    return total;
}

inline double isl(const ComplexSequence& seq, CorrMethod method = CorrMethod::fast) {
    return isl(aperiodic_autocorr(seq, method));
}

/// Largest |R_p(tau)| over tau != 0.
inline double max_periodic_sidelobe(const AutocorrProfile& periodic) {
    double worst = 0;
    for (std::int64_t tau = 1; tau < periodic.N; ++tau) worst = std::max(worst, std::abs(periodic.at(tau)));
    return worst;
}

/// y(u) = |sum_n a_n exp(-j pi n u)|^2 at a single direction.
inline double spectrum_at(const ComplexSequence& seq, double u) {
    Complex acc{};
    for (std::size_t n = 0; n < seq.size(); ++n) {
        acc += seq.entries[n] * std::polar(1.0, -std::numbers::pi * static_cast<double>(n) * u);
    }
    return std::norm(acc);
}

/// |DFT_L(seq)[i]|^2 for i in Z_L, i.e. y(u) at u = 2i/L.
inline std::vector<double> dft_power(const ComplexSequence& seq, std::size_t dft_len) {
    if (dft_len == 0) throw std::invalid_argument("dft_len must be positive");
    auto X = fft::forward(seq.entries, dft_len);
    std::vector<double> out(dft_len);
    for (std::size_t i = 0; i < dft_len; ++i) out[i] = std::norm(X[i]);
    return out;
}

struct SpectrumGrid {
    std::size_t grid_size = 0;
    std::vector<double> u;
    std::vector<double> y;
    std::vector<std::size_t> passband_idx;
    std::vector<std::size_t> stopband_idx;
};

/// y(u) sampled at u_i = -1 + 2i/grid_size. Band index sets are left empty.
inline SpectrumGrid power_spectrum(const ComplexSequence& seq, std::size_t grid_size) {
    if (grid_size == 0) throw std::invalid_argument("grid_size must be positive");
    // exp(-j pi n (-1 + 2i/M)) = (-1)^n exp(-j 2 pi n i / M)
    std::vector<Complex> shifted(seq.entries);
    for (std::size_t n = 1; n < shifted.size(); n += 2) shifted[n] = -shifted[n];
    auto X = fft::forward(shifted, grid_size);
    SpectrumGrid out;
    out.grid_size = grid_size;
    out.u.resize(grid_size);
    out.y.resize(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        out.u[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(grid_size);
        out.y[i] = std::norm(X[i]);
    }
    return out;
}

/// (1/M) sum_i (y(u_i) - 1)^2 on M = 4N equispaced points. (y - 1)^2 is a
/// trigonometric polynomial of degree at most 2(N - 1), so the grid mean equals
/// the continuous average over [-1, 1).
inline double spectrum_variance(const ComplexSequence& seq) {
    if (seq.size() == 0) return 0;
    const std::size_t M = 4 * seq.size();
    auto grid = power_spectrum(seq, M);
    double acc = 0;
    for (double y : grid.y) acc += (y - 1.0) * (y - 1.0);
    return acc / static_cast<double>(M);
}

/// Passband NRMSE: sqrt(mean over I_p of (gamma |DFT_L[i]|^2 - 1)^2).
inline double passband_nrmse(const ComplexSequence& seq, const Rational& gamma,
                             const std::vector<std::size_t>& passband_idx, std::size_t dft_len) {
    if (passband_idx.empty()) throw std::invalid_argument("passband_nrmse: passband index set is empty");
    auto power = dft_power(seq, dft_len);
    const double g = gamma.to_double();
    double acc = 0;
    for (auto i : passband_idx) {
        double e = g * power.at(i) - 1.0;
        acc += e * e;
    }
    return std::sqrt(acc / static_cast<double>(passband_idx.size()));
}

/// Stopband leakage ratio: (1/L) sum over I_s of |DFT_L[i]|^2.
inline double stopband_leakage(const ComplexSequence& seq, const std::vector<std::size_t>& stopband_idx,
                               std::size_t dft_len) {
    auto power = dft_power(seq, dft_len);
    double acc = 0;
    for (auto i : stopband_idx) acc += power.at(i);
    return acc / static_cast<double>(dft_len);
}

/// Coarsest uniform grid {p / levels} containing every phase.
struct PhaseGrid {
    Rational resolution_turns{1};
    std::int64_t levels = 1;

    double radians() const { return two_pi * resolution_turns.to_double(); }
    friend bool operator==(const PhaseGrid&, const PhaseGrid&) = default;
};

inline PhaseGrid phase_grid_with_levels(std::int64_t levels) { return PhaseGrid{Rational(1, levels), levels}; }

inline PhaseGrid phase_resolution(const RationalPhaseSequence& seq) {
    std::int64_t levels = 1;
    for (const auto& ph : seq.phases) levels = lcm_checked(levels, ph.frac().den());
    return phase_grid_with_levels(levels);
}

/// Closed-form GSC grid for integer b and gamma = p/q: 2*pi / (Nq / gcd(Nq, mp)).
inline PhaseGrid gsc_resolution_closed_form(std::int64_t N, std::int64_t m, const Rational& gamma) {
    const std::int64_t Nq = N * gamma.den();
    return phase_grid_with_levels(Nq / std::gcd(Nq, m * gamma.num()));
}

/// Closed-form GC grid for integer b and gamma = p/q: 2*pi / (Nq / gcd(Nq, p)).
inline PhaseGrid gc_resolution_closed_form(std::int64_t N, const Rational& gamma) {
    return gsc_resolution_closed_form(N, 1, gamma);
}

/// Mow family grid for integer f0: pi/(N/m) when s is even and m odd, else
/// 2*pi/(N/m). A particular member may sit on a coarser sub-grid. Falls back to
/// the member's own grid when some f0 entry is not an integer.
inline PhaseGrid mow_phase_resolution(const MowParams& p) {
    for (const auto& f : p.f0) {
        if (!f.is_integer()) return phase_resolution(mow_phases(p));
    }
    const std::int64_t base = p.N() / p.m;
    const bool half = p.s % 2 == 0 && p.m % 2 == 1;
    return phase_grid_with_levels(half ? 2 * base : base);
}

/// Fourier transform of the step chirp: a weighted sum of T unit-spaced sinc
/// lobes, sinc(x) = sin(pi x) / (pi x).
inline Complex continuous_spectrum_model(const ChirpModel& model, double f) {
    const double a = model.a.to_double();
    const double b = model.b.to_double();
    auto sinc = [](double x) {
        if (x == 0.0) return 1.0;
        const double px = std::numbers::pi * x;
        return std::sin(px) / px;
    };
    Complex acc{};
    for (std::int64_t i = 0; i < model.T; ++i) {
        const double di = static_cast<double>(i);
        const double arg = std::numbers::pi * (a * di * di + 2.0 * (a * b - f) * di + a * b - f);
        acc += std::polar(1.0, arg) * sinc(f - a * (di + b));
    }
    return acc;
}

/// Metric bundle exported alongside analysis tables.
struct MetricBundle {
    double isl = 0;
    double nrmse = 0;
    double leakage = 0;
    Rational resolution_turns{1};
};

}  // namespace gsc
