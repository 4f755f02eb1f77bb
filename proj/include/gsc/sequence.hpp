#pragma once

// Value types shared by every sequence family.

#include <gsc/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsc {

/// Raised when construction parameters violate a family's admissibility rules.
/// The message names the violated constraint.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family { gsc, gc, dft, mow };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::gsc: return "gsc";
        case Family::gc: return "gc";
        case Family::dft: return "dft";
        case Family::mow: return "mow";
    }
    return "?";
}

inline Family family_from_string(std::string_view s) {
    if (s == "gsc") return Family::gsc;
    if (s == "gc") return Family::gc;
    if (s == "dft") return Family::dft;
    if (s == "mow") return Family::mow;
    throw std::invalid_argument("unknown sequence family '" + std::string(s) + "'");
}

using Complex = std::complex<double>;

/// Ordered key/value record of the parameters a sequence was built from.
using ParamList = std::vector<std::pair<std::string, std::string>>;

/// Unimodular sequence with exact phases; entry n is exp(j*2*pi*phases[n]) / sqrt(N).
struct RationalPhaseSequence {
    Family family = Family::gsc;
    ParamList params;
    std::vector<Rational> phases;  // each in [0, 1)

    std::size_t size() const { return phases.size(); }
};

struct ComplexSequence {
    std::vector<Complex> entries;

    std::size_t size() const { return entries.size(); }
    Complex operator[](std::size_t i) const { return entries[i]; }

    double energy() const {
        double e = 0;
        for (auto& a : entries) e += std::norm(a);
        return e;
    }
};

inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace gsc
