#pragma once

// Thin FFTW wrapper. Plans are created once per (length, direction) and then
// executed through the new-array interface, which is safe to call from
// several threads at once.

#include <gsc/sequence.hpp>

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gsc::fft {

namespace detail {

struct FftwFree {
    void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

inline Buffer alloc(std::size_t n) {
    Buffer b(fftw_alloc_complex(n));
    if (!b) throw std::bad_alloc();
    return b;
}

class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard lock(mu_);
        auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        auto in = alloc(n);
        auto out = alloc(n);
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), sign, FFTW_ESTIMATE);
        if (!p) throw std::runtime_error("fftw: plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

    PlanCache(const PlanCache&) = delete;
    PlanCache& operator=(const PlanCache&) = delete;

    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

inline std::vector<Complex> transform(std::span<const Complex> x, std::size_t n, int sign) {
    if (n == 0) return {};
    auto in = alloc(n);
    auto out = alloc(n);
    auto* inc = reinterpret_cast<Complex*>(in.get());
    std::fill(inc, inc + n, Complex{});
    // inputs longer than n wrap around, matching a length-n DFT of the folded signal
    for (std::size_t i = 0; i < x.size(); ++i) inc[i % n] += x[i];
    fftw_execute_dft(PlanCache::instance().get(n, sign), in.get(), out.get());
    auto* outc = reinterpret_cast<const Complex*>(out.get());
    return std::vector<Complex>(outc, outc + n);
}

}  // namespace detail

/// X[i] = sum_n x[n] exp(-j 2 pi i n / n_out); x is zero-padded or folded to length n_out.
inline std::vector<Complex> forward(std::span<const Complex> x, std::size_t n_out) {
    return detail::transform(x, n_out, FFTW_FORWARD);
}

/// Unnormalized inverse: x[n] = sum_i X[i] exp(+j 2 pi i n / n_out).
inline std::vector<Complex> backward(std::span<const Complex> x, std::size_t n_out) {
    return detail::transform(x, n_out, FFTW_BACKWARD);
}

}  // namespace gsc::fft
