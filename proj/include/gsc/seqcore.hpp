#pragma once

// Sequence constructions: generalized step-chirp (GSC), generalized chirp (GC),
// DFT codewords and Mow sequences, all with exact rational phases.

#include <gsc/number_theory.hpp>
#include <gsc/rational.hpp>
#include <gsc/sequence.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

namespace gsc {

struct GscParams {
    std::int64_t N = 1;
    std::int64_t m = 1;
    Rational gamma{1};
    Rational b{0};

    /// Throws invalid_parameter naming the first violated constraint.
    void validate() const {
        if (N < 1) throw invalid_parameter("N must be a positive integer");
        if (m < 1) throw invalid_parameter("m must be a positive integer");
        if (N % m != 0) {
            throw invalid_parameter("m must divide N (m | N); got N=" + std::to_string(N) + ", m=" + std::to_string(m));
        }
        if (gamma < Rational(1, N) || gamma > Rational(1)) {
            throw invalid_parameter("gamma must satisfy 1/N <= gamma <= 1; got gamma=" + gamma.str());
        }
    }

    ParamList describe() const {
        return {{"N", std::to_string(N)}, {"m", std::to_string(m)}, {"gamma", gamma.str()}, {"b", b.str()}};
    }
};

/// Mow family member of length N = s * m^2.
///
/// beta is reduced mod s*m and f0 mod s*m on construction; both only enter the
/// phase through multiples of m/N, so the reduction does not change the sequence.
struct MowParams {
    std::int64_t s = 1;
    std::int64_t m = 1;
    std::vector<std::int64_t> alpha;
    std::vector<std::int64_t> beta;
    std::vector<Rational> f0;

    MowParams() = default;
    MowParams(std::int64_t s_, std::int64_t m_, std::vector<std::int64_t> alpha_, std::vector<std::int64_t> beta_,
              std::vector<Rational> f0_)
        : s(s_), m(m_), alpha(std::move(alpha_)), beta(std::move(beta_)), f0(std::move(f0_)) {
        validate();
        for (auto& x : beta) x = mod_floor(x, s * m);
        for (auto& x : f0) x = x.mod(Rational(s * m));
    }

    std::int64_t N() const { return s * m * m; }

    /// c(s) = 1/2 for even s, 1 for odd s.
    Rational c() const { return s % 2 == 0 ? Rational(1, 2) : Rational(1); }

    void validate() const {
        if (s < 1 || !is_square_free(s)) {
            throw invalid_parameter("s must be a positive square-free integer; got s=" + std::to_string(s));
        }
        if (m < 1) throw invalid_parameter("m must be a positive integer");
        auto sm = static_cast<std::size_t>(m);
        if (alpha.size() != sm || beta.size() != sm || f0.size() != sm) {
            throw invalid_parameter("alpha, beta and f0 tables must each have m entries");
        }
        // {1..s-1} is empty for s = 1; alpha = 1 is the only sensible unit there.
        const std::int64_t alpha_max = std::max<std::int64_t>(1, s - 1);
        for (std::size_t l = 0; l < sm; ++l) {
            if (alpha[l] < 1 || alpha[l] > alpha_max || std::gcd(alpha[l], s) != 1) {
                throw invalid_parameter("alpha(l) must lie in {1..s-1} with gcd(alpha(l), s) = 1; alpha(" +
                                        std::to_string(l) + ")=" + std::to_string(alpha[l]));
            }
        }
        std::vector<bool> seen(sm, false);
        for (std::size_t l = 0; l < sm; ++l) {
            auto r = static_cast<std::size_t>(mod_floor(beta[l], m));
            if (seen[r]) {
                throw invalid_parameter("beta(l) mod m must be a permutation of Z_m; residue " + std::to_string(r) +
                                        " repeats");
            }
            seen[r] = true;
        }
    }

    ParamList describe() const {
        auto join = [](const auto& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ' ';
                if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, Rational>)
                    out += v[i].str();
                else
                    out += std::to_string(v[i]);
            }
            return out;
        };
        return {{"s", std::to_string(s)}, {"m", std::to_string(m)}, {"alpha", join(alpha)},
                {"beta", join(beta)},     {"f0", join(f0)}};
    }
};

/// Step-frequency chirp c(t) = exp(j*2*pi*int_0^t a*(floor(x) + b) dx), 0 <= t <= T.
struct ChirpModel {
    Rational a{1};
    Rational b{0};
    std::int64_t T = 1;

    void validate() const {
        if (a <= Rational(0)) throw invalid_parameter("chirp slope a must be positive");
        if (T < 1) throw invalid_parameter("chirp duration T must be a positive integer");
        if (a * Rational(T) * Rational(T) < Rational(1)) {
            throw invalid_parameter("Nyquist sampling number a*T^2 must be at least 1");
        }
    }

    /// Lower spectrum edge a(b - 1/2).
    Rational f0() const { return a * (b - Rational(1, 2)); }
    /// Upper spectrum edge a(b - 1/2 + T).
    Rational f1() const { return a * (b - Rational(1, 2) + Rational(T)); }
};

/// GSC phases m*gamma*(k(k-1)m/2 + k*l + b*n)/N mod 1 with n = k*m + l.
inline RationalPhaseSequence gsc_phases(const GscParams& p) {
    p.validate();
    RationalPhaseSequence out;
    out.family = Family::gsc;
    out.params = p.describe();
    out.phases.reserve(static_cast<std::size_t>(p.N));
    const Rational scale = Rational(p.m, p.N) * p.gamma;
    for (std::int64_t n = 0; n < p.N; ++n) {
        const std::int64_t k = n / p.m;
        const std::int64_t l = n - k * p.m;
        Rational inner = Rational(k * (k - 1) / 2 * p.m + k * l) + p.b * Rational(n);
        out.phases.push_back((scale * inner).frac());
    }
    return out;
}

/// GC phases gamma*n(n+2b-1)/(2N) mod 1.
inline RationalPhaseSequence gc_phases(std::int64_t N, const Rational& gamma, const Rational& b) {
    if (N < 1) throw invalid_parameter("N must be a positive integer");
    if (gamma < Rational(1, N) || gamma > Rational(1)) {
        throw invalid_parameter("gamma must satisfy 1/N <= gamma <= 1; got gamma=" + gamma.str());
    }
    RationalPhaseSequence out;
    out.family = Family::gc;
    out.params = {{"N", std::to_string(N)}, {"gamma", gamma.str()}, {"b", b.str()}};
    out.phases.reserve(static_cast<std::size_t>(N));
    const Rational scale = gamma / Rational(2 * N);
    for (std::int64_t n = 0; n < N; ++n) {
        Rational inner = Rational(n) * (Rational(n - 1) + Rational(2) * b);
        out.phases.push_back((scale * inner).frac());
    }
    return out;
}

/// DFT codeword pointing at u0: phases u0*n/2 mod 1.
inline RationalPhaseSequence dft_codeword(std::int64_t N, const Rational& u0) {
    if (N < 1) throw invalid_parameter("N must be a positive integer");
    if (u0 < Rational(-1) || u0 >= Rational(1)) {
        throw invalid_parameter("beam direction u0 must lie in [-1, 1); got u0=" + u0.str());
    }
    RationalPhaseSequence out;
    out.family = Family::dft;
    out.params = {{"N", std::to_string(N)}, {"u0", u0.str()}};
    out.phases.reserve(static_cast<std::size_t>(N));
    const Rational half_u0 = u0 / Rational(2);
    for (std::int64_t n = 0; n < N; ++n) out.phases.push_back((half_u0 * Rational(n)).frac());
    return out;
}

/// Mow phases (m/N)*(m*c(s)*alpha(l)*k^2 + beta(l)*k + f0(l)) mod 1 with n = k*m + l.
inline RationalPhaseSequence mow_phases(const MowParams& p) {
    p.validate();
    const std::int64_t N = p.N();
    RationalPhaseSequence out;
    out.family = Family::mow;
    out.params = p.describe();
    out.phases.reserve(static_cast<std::size_t>(N));
    const Rational scale(p.m, N);
    const Rational mc = Rational(p.m) * p.c();
    for (std::int64_t n = 0; n < N; ++n) {
        const std::int64_t k = n / p.m;
        const auto l = static_cast<std::size_t>(n - k * p.m);
        Rational xi = mc * Rational(p.alpha[l] * k * k) + Rational(p.beta[l] * k) + p.f0[l];
        out.phases.push_back((scale * xi).frac());
    }
    return out;
}

inline ComplexSequence render(const RationalPhaseSequence& seq) {
    ComplexSequence out;
    const double amp = 1.0 / std::sqrt(static_cast<double>(seq.size()));
    out.entries.reserve(seq.size());
    for (const auto& ph : seq.phases) out.entries.push_back(std::polar(amp, two_pi * ph.to_double()));
    return out;
}

/// Floating-point GSC for real-valued gamma and b. The result carries no exact
/// phases, so phase-resolution queries cannot be made on it.
inline ComplexSequence render_gsc_real(std::int64_t N, std::int64_t m, double gamma, double b) {
    if (N < 1 || m < 1 || N % m != 0) throw invalid_parameter("m must divide N (m | N)");
    if (!(gamma >= 1.0 / static_cast<double>(N) && gamma <= 1.0)) {
        throw invalid_parameter("gamma must satisfy 1/N <= gamma <= 1");
    }
    if (!std::isfinite(b)) throw invalid_parameter("b must be finite");
    ComplexSequence out;
    const double amp = 1.0 / std::sqrt(static_cast<double>(N));
    const long double scale = static_cast<long double>(m) * gamma / static_cast<long double>(N);
    for (std::int64_t n = 0; n < N; ++n) {
        const std::int64_t k = n / m;
        const std::int64_t l = n - k * m;
        long double inner = static_cast<long double>(k * (k - 1) / 2 * m + k * l) + static_cast<long double>(b) * n;
        long double turns = scale * inner;
        turns -= std::floor(turns);
        out.entries.push_back(std::polar(amp, two_pi * static_cast<double>(turns)));
    }
    return out;
}

/// Samples the step chirp at rate m = a*T/gamma, evaluating the per-step phase
/// a*k(k-1+2b)/2 + a*(k+b)*l/m directly rather than through the closed form.
inline RationalPhaseSequence sample_step_chirp(const ChirpModel& model, const Rational& gamma) {
    model.validate();
    if (gamma <= Rational(0) || gamma > Rational(1)) throw invalid_parameter("gamma must satisfy 0 < gamma <= 1");
    const Rational rate = model.a * Rational(model.T) / gamma;
    if (!rate.is_integer()) throw invalid_parameter("sampling rate m = a*T/gamma must be an integer; got " + rate.str());
    const std::int64_t m = rate.num();
    const std::int64_t N = m * model.T;

    RationalPhaseSequence out;
    out.family = Family::gsc;
    out.params = GscParams{N, m, gamma, model.b}.describe();
    out.phases.reserve(static_cast<std::size_t>(N));
    for (std::int64_t n = 0; n < N; ++n) {
        const std::int64_t k = n / m;
        const std::int64_t l = n - k * m;
        Rational whole_steps = model.a * Rational(k) * (Rational(k - 1) + Rational(2) * model.b) / Rational(2);
        Rational partial = model.a * (Rational(k) + model.b) * Rational(l, m);
        out.phases.push_back((whole_steps + partial).frac());
    }
    return out;
}

/// Parameters implied by sampling a chirp model at normalized bandwidth gamma.
inline GscParams induced_gsc_params(const ChirpModel& model, const Rational& gamma) {
    const Rational rate = model.a * Rational(model.T) / gamma;
    if (!rate.is_integer()) throw invalid_parameter("sampling rate m = a*T/gamma must be an integer; got " + rate.str());
    return GscParams{rate.num() * model.T, rate.num(), gamma, model.b};
}

}  // namespace gsc
