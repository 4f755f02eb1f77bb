#pragma once

// Exact equivalence checks between GSC and its special cases, plus exhaustive
// Mow family enumeration ranked by ISL.

#include <gsc/analysis.hpp>
#include <gsc/number_theory.hpp>
#include <gsc/parallel.hpp>
#include <gsc/planner.hpp>
#include <gsc/rational.hpp>
#include <gsc/seqcore.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsc {

enum class EquivalenceKind { gsc_dft, gsc_gc, gsc_mow_even_s, gsc_mow_odd_s };

inline std::string_view to_string(EquivalenceKind k) {
    switch (k) {
        case EquivalenceKind::gsc_dft: return "gsc<->dft";
        case EquivalenceKind::gsc_gc: return "gsc<->gc";
        case EquivalenceKind::gsc_mow_even_s: return "gsc<->mow-even-s";
        case EquivalenceKind::gsc_mow_odd_s: return "gsc<->mow-odd-s";
    }
    return "?";
}

struct EquivalenceReport {
    EquivalenceKind kind;
    ParamList lhs_params;
    ParamList rhs_params;
    Rational max_phase_gap;  // turns, after removing the offset at n = 0
    bool verdict = false;
};

/// Largest |(lhs_n - rhs_n) - (lhs_0 - rhs_0)| over n, measured mod 1 in
/// [0, 1/2]. Zero means the sequences agree up to one global phase.
/// Sequences of different length compare as 1/2.
inline Rational max_phase_gap(const RationalPhaseSequence& lhs, const RationalPhaseSequence& rhs) {
    if (lhs.size() != rhs.size()) return Rational(1, 2);
    if (lhs.size() == 0) return Rational(0);
    const Rational offset = (lhs.phases[0] - rhs.phases[0]).frac();
    Rational worst{0};
    for (std::size_t n = 0; n < lhs.size(); ++n) {
        Rational gap = (lhs.phases[n] - rhs.phases[n] - offset).frac();
        if (gap > Rational(1, 2)) gap = Rational(1) - gap;
        worst = std::max(worst, gap);
    }
    return worst;
}

inline EquivalenceReport compare_sequences(EquivalenceKind kind, const RationalPhaseSequence& lhs,
                                           const RationalPhaseSequence& rhs) {
    EquivalenceReport r{kind, lhs.params, rhs.params, max_phase_gap(lhs, rhs), false};
    r.verdict = r.max_phase_gap.is_zero();
    return r;
}

/// GSC at Nyquist sampling (gamma = 1).
inline RationalPhaseSequence degenerate_gsc(const GscParams& p) {
    if (p.gamma != Rational(1)) throw invalid_parameter("degenerate GSC requires gamma = 1; got " + p.gamma.str());
    return gsc_phases(p);
}

/// Explicit Mow parameters reproducing a gamma = 1 GSC sequence.
///
/// Even s (2b odd):  alpha = 1, beta(l) = (2b-1)m/2 + l, f0(l) = b*l.
/// Odd s (b integer): d = (s+1)/2, alpha = d, beta(l) = (2b-1)*d*m + l, f0(l) = b*l.
inline MowParams mow_params_for_gsc(const GscParams& p) {
    if (p.gamma != Rational(1)) throw invalid_parameter("mow_params_for_gsc requires gamma = 1; got " + p.gamma.str());
    p.validate();
    const auto [s, root] = square_factorization(p.N);
    if (p.m != root) {
        throw invalid_parameter("constraint 1 violated: m must be the square part of N (N = s*m^2, s square-free); N=" +
                                std::to_string(p.N) + " has square part " + std::to_string(root) + ", got m=" +
                                std::to_string(p.m));
    }
    const std::int64_t m = p.m;
    const auto count = static_cast<std::size_t>(m);
    std::vector<std::int64_t> alpha(count), beta(count);
    std::vector<Rational> f0(count);
    const Rational two_b_minus_1 = Rational(2) * p.b - Rational(1);
    if (s % 2 == 0) {
        const Rational two_b = Rational(2) * p.b;
        if (!two_b.is_integer() || two_b.num() % 2 == 0) {
            throw invalid_parameter("constraint 2 violated: 2b must be odd when s is even; s=" + std::to_string(s) +
                                    ", b=" + p.b.str());
        }
        const std::int64_t shift = (two_b_minus_1 / Rational(2)).num() * m;
        for (std::size_t l = 0; l < count; ++l) {
            alpha[l] = 1;
            beta[l] = shift + static_cast<std::int64_t>(l);
            f0[l] = p.b * Rational(static_cast<std::int64_t>(l));
        }
    } else {
        if (!p.b.is_integer()) {
            throw invalid_parameter("constraint 2 violated: b must be an integer when s is odd; s=" + std::to_string(s) +
                                    ", b=" + p.b.str());
        }
        const std::int64_t d = (s + 1) / 2;
        const std::int64_t shift = two_b_minus_1.num() * d * m;
        for (std::size_t l = 0; l < count; ++l) {
            alpha[l] = d;
            beta[l] = shift + static_cast<std::int64_t>(l);
            f0[l] = p.b * Rational(static_cast<std::int64_t>(l));
        }
    }
    return MowParams(s, m, std::move(alpha), std::move(beta), std::move(f0));
}

/// gamma values exercised per length by verify_equivalences.
inline std::vector<Rational> equivalence_gamma_grid(std::int64_t N) {
    std::vector<Rational> out;
    auto add = [&](Rational g) {
        if (g >= Rational(1, N) && g <= Rational(1) && std::find(out.begin(), out.end(), g) == out.end())
            out.push_back(g);
    };
    add(Rational(1, N));
    add(Rational(1, 2));
    add(Rational(2, 3));
    add(Rational(N - 1 > 0 ? N - 1 : 1, N));
    add(Rational(1));
    return out;
}

inline std::vector<Rational> equivalence_b_grid() {
    return {Rational(-3, 2), Rational(-1), Rational(0), Rational(1, 3), Rational(1, 2), Rational(1), Rational(5, 2)};
}

/// Admissible b (|b| <= 5) for the Mow embedding: half-odd b for even s,
/// integer b for odd s.
inline std::vector<Rational> mow_admissible_b(std::int64_t s) {
    std::vector<Rational> out;
    if (s % 2 == 0) {
        for (std::int64_t twice = -9; twice <= 9; twice += 2) out.emplace_back(twice, 2);
    } else {
        for (std::int64_t b = -5; b <= 5; ++b) out.emplace_back(b);
    }
    return out;
}

/// Checks, for every N in [1, n_max]:
///   gsc(m=1) against gc over a gamma/b grid,
///   gsc(m=N, gamma=1/N) against dft(2b/N mod [-1, 1)),
///   the gamma = 1 GSC against its Mow embedding for every admissible b.
inline std::vector<EquivalenceReport> verify_equivalences(std::int64_t n_max) {
    std::vector<EquivalenceReport> reports;
    const auto b_grid = equivalence_b_grid();
    for (std::int64_t N = 1; N <= n_max; ++N) {
        for (const auto& g : equivalence_gamma_grid(N)) {
            for (const auto& b : b_grid) {
                reports.push_back(compare_sequences(EquivalenceKind::gsc_gc, gsc_phases({N, 1, g, b}), gc_phases(N, g, b)));
            }
        }
        for (const auto& b : b_grid) {
            reports.push_back(compare_sequences(EquivalenceKind::gsc_dft, gsc_phases({N, N, Rational(1, N), b}),
                                                dft_codeword(N, wrap_u(Rational(2) * b / Rational(N)))));
        }
        const auto [s, root] = square_factorization(N);
        const auto kind = s % 2 == 0 ? EquivalenceKind::gsc_mow_even_s : EquivalenceKind::gsc_mow_odd_s;
        for (const auto& b : mow_admissible_b(s)) {
            GscParams p{N, root, Rational(1), b};
            reports.push_back(compare_sequences(kind, degenerate_gsc(p), mow_phases(mow_params_for_gsc(p))));
        }
    }
    return reports;
}

enum class F0Policy { fixed_zero, half_integers };

struct MowFamilyQuery {
    std::int64_t N = 1;
    bool restrict_m_to_1 = true;
    F0Policy f0_policy = F0Policy::fixed_zero;
};

struct MowIslEntry {
    MowParams params;
    double isl = 0;
};

/// Largest length for which m > 1 families are enumerated.
inline constexpr std::int64_t mow_multi_m_limit = 30;

/// phi(s)^m * m! * s^m * (1 or 2^m): alpha tables, beta tables, f0 tables.
inline std::int64_t mow_family_size(const MowFamilyQuery& q) {
    std::int64_t s = q.N, m = 1;
    if (!q.restrict_m_to_1) {
        auto f = square_factorization(q.N);
        s = f.square_free_part;
        m = f.square_root_part;
    }
    std::int64_t count = 1;
    for (std::int64_t l = 0; l < m; ++l) count *= euler_phi(s) * s * (q.f0_policy == F0Policy::half_integers ? 2 : 1);
    for (std::int64_t i = 2; i <= m; ++i) count *= i;
    return count;
}

namespace detail {

inline std::vector<std::int64_t> units_mod(std::int64_t s) {
    if (s == 1) return {1};
    std::vector<std::int64_t> out;
    for (std::int64_t a = 1; a < s; ++a)
        if (std::gcd(a, s) == 1) out.push_back(a);
    return out;
}

// Cartesian product of `slots` independent choices from `options`.
template <typename T>
std::vector<std::vector<T>> tables(const std::vector<T>& options, std::size_t slots) {
    std::vector<std::vector<T>> out{{}};
    for (std::size_t i = 0; i < slots; ++i) {
        std::vector<std::vector<T>> next;
        next.reserve(out.size() * options.size());
        for (const auto& prefix : out) {
            for (const auto& o : options) {
                next.push_back(prefix);
                next.back().push_back(o);
            }
        }
        out = std::move(next);
    }
    return out;
}

inline bool entry_less(const MowIslEntry& a, const MowIslEntry& b) {
    if (a.isl != b.isl) return a.isl < b.isl;
    if (a.params.alpha != b.params.alpha) return a.params.alpha < b.params.alpha;
    if (a.params.beta != b.params.beta) return a.params.beta < b.params.beta;
    return a.params.f0 < b.params.f0;
}

}  // namespace detail

/// Every admissible MowParams of length q.N under the query's f0 policy.
/// fixed-zero sets every f0(l) = 0; half-integers lets each f0(l) be 0 or 1/2.
inline std::vector<MowParams> mow_family(const MowFamilyQuery& q) {
    std::int64_t s = q.N, m = 1;
    if (q.restrict_m_to_1) {
        if (!is_square_free(q.N)) {
            throw invalid_parameter("N must be square-free when m is restricted to 1; got N=" + std::to_string(q.N));
        }
    } else {
        auto f = square_factorization(q.N);
        s = f.square_free_part;
        m = f.square_root_part;
        if (m > 1 && q.N > mow_multi_m_limit) {
            throw invalid_parameter("families with m > 1 are enumerated only for N <= " +
                                    std::to_string(mow_multi_m_limit) + "; got N=" + std::to_string(q.N));
        }
    }
    const auto slots = static_cast<std::size_t>(m);
    auto alpha_tables = detail::tables(detail::units_mod(s), slots);

    std::vector<std::vector<std::int64_t>> beta_tables;
    std::vector<std::int64_t> perm(slots);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::int64_t> lifts(static_cast<std::size_t>(s));
    std::iota(lifts.begin(), lifts.end(), 0);
    const auto lift_tables = detail::tables(lifts, slots);
    do {
        for (const auto& lift : lift_tables) {
            std::vector<std::int64_t> beta(slots);
            for (std::size_t l = 0; l < slots; ++l) beta[l] = perm[l] + m * lift[l];
            beta_tables.push_back(std::move(beta));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Rational> f0_options{Rational(0)};
    if (q.f0_policy == F0Policy::half_integers) f0_options.push_back(Rational(1, 2));
    auto f0_tables = detail::tables(f0_options, slots);

    std::vector<MowParams> out;
    out.reserve(alpha_tables.size() * beta_tables.size() * f0_tables.size());
    for (const auto& a : alpha_tables)
        for (const auto& b : beta_tables)
            for (const auto& f : f0_tables) out.emplace_back(s, m, a, b, f);
    return out;
}

/// ISL of every family member, sorted by (isl, alpha, beta, f0).
inline std::vector<MowIslEntry> enumerate_mow_isl(const MowFamilyQuery& q, CorrMethod method = CorrMethod::fast) {
    auto family = mow_family(q);
    std::vector<MowIslEntry> out(family.size());
    parallel_for(family.size(), [&](std::size_t i) {
        out[i].isl = isl(render(mow_phases(family[i])), method);
        out[i].params = std::move(family[i]);
    });
    std::sort(out.begin(), out.end(), detail::entry_less);
    return out;
}

/// ISL of the GSC sequence for every divisor m of N, ordered by m.
inline std::vector<std::pair<std::int64_t, double>> isl_vs_m_sweep(std::int64_t N, const Rational& gamma,
                                                                   const Rational& b) {
    auto ms = divisors(N);
    std::vector<std::pair<std::int64_t, double>> out(ms.size());
    parallel_for(ms.size(), [&](std::size_t i) { out[i] = {ms[i], isl(render(gsc_phases({N, ms[i], gamma, b})))}; });
    return out;
}

}  // namespace gsc
