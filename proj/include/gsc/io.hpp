#pragma once

// JSON and CSV encodings for sequences, correlation profiles, spectra, plans
// and Mow enumeration results. CSV files use a header row, commas, LF line
// endings and 12 significant digits for floating-point columns.

#include <gsc/analysis.hpp>
#include <gsc/equivalence.hpp>
#include <gsc/planner.hpp>
#include <gsc/rational.hpp>
#include <gsc/sequence.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gsc::io {

using json = nlohmann::ordered_json;

/// Malformed input; the message carries the line and field where parsing stopped.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline json params_json(const ParamList& params) {
    json j = json::object();
    for (const auto& [k, v] : params) j[k] = v;
    return j;
}

// ---------------------------------------------------------------- sequences

inline json sequence_to_json(const RationalPhaseSequence& seq) {
    json j;
    j["family"] = std::string(to_string(seq.family));
    j["params"] = params_json(seq.params);
    j["N"] = seq.size();
    json phases = json::array();
    for (const auto& p : seq.phases) phases.push_back(std::to_string(p.num()) + "/" + std::to_string(p.den()));
    j["phases"] = std::move(phases);
    return j;
}

inline Rational parse_phase(std::string_view text, std::string_view where) {
    Rational r;
    try {
        r = Rational::parse(text);
    } catch (const std::exception& e) {
        throw parse_error(std::string(where) + ": " + e.what());
    }
    if (r < Rational(0) || r >= Rational(1)) {
        throw parse_error(std::string(where) + ": phase " + r.str() + " outside [0, 1)");
    }
    return r;
}

inline RationalPhaseSequence sequence_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("sequence json: expected an object");
    for (const char* key : {"family", "N", "phases"}) {
        if (!j.contains(key)) throw parse_error(std::string("sequence json: missing field '") + key + "'");
    }
    RationalPhaseSequence seq;
    try {
        seq.family = family_from_string(j.at("family").get<std::string>());
    } catch (const std::exception& e) {
        throw parse_error(std::string("sequence json, field family: ") + e.what());
    }
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw parse_error("sequence json, field params: expected an object");
        for (const auto& [k, v] : j["params"].items()) {
            if (!v.is_string()) throw parse_error("sequence json, field params." + k + ": expected a string");
            seq.params.emplace_back(k, v.get<std::string>());
        }
    }
    const auto& phases = j.at("phases");
    if (!phases.is_array()) throw parse_error("sequence json, field phases: expected an array");
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const std::string where = "sequence json, field phases[" + std::to_string(i) + "]";
        if (!phases[i].is_string()) throw parse_error(where + ": expected a \"num/den\" string");
        seq.phases.push_back(parse_phase(phases[i].get<std::string>(), where));
    }
    if (!j.at("N").is_number_integer() || j.at("N").get<std::int64_t>() != static_cast<std::int64_t>(seq.size())) {
        throw parse_error("sequence json, field N: does not match the number of phases");
    }
    return seq;
}

inline std::string sequence_to_csv(const RationalPhaseSequence& seq) {
    std::string out = "n,phase_num,phase_den,re,im\n";
    auto rendered = render(seq);
    for (std::size_t n = 0; n < seq.size(); ++n) {
        out += std::to_string(n) + "," + std::to_string(seq.phases[n].num()) + "," +
               std::to_string(seq.phases[n].den()) + "," + fmt_double(rendered.entries[n].real()) + "," +
               fmt_double(rendered.entries[n].imag()) + "\n";
    }
    return out;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

/// Reads the rational columns back; the float columns are checked for shape only.
inline RationalPhaseSequence sequence_from_csv(std::string_view text, Family family = Family::gsc) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw parse_error("sequence csv, line 1: empty file");
    ++line_no;
    if (split_csv_line(line) != std::vector<std::string>{"n", "phase_num", "phase_den", "re", "im"}) {
        throw parse_error("sequence csv, line 1: expected header n,phase_num,phase_den,re,im");
    }
    RationalPhaseSequence seq;
    seq.family = family;
    static const char* names[] = {"n", "phase_num", "phase_den", "re", "im"};
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        const std::string where = "sequence csv, line " + std::to_string(line_no);
        if (f.size() != 5) throw parse_error(where + ": expected 5 fields, got " + std::to_string(f.size()));
        for (std::size_t i = 0; i < 5; ++i) {
            if (f[i].empty()) throw parse_error(where + ", field " + names[i] + ": empty");
        }
        if (f[0] != std::to_string(seq.size())) throw parse_error(where + ", field n: expected " + std::to_string(seq.size()));
        seq.phases.push_back(parse_phase(f[1] + "/" + f[2], where + ", field phase_num/phase_den"));
        for (std::size_t i = 3; i < 5; ++i) {
            try {
                std::size_t used = 0;
                (void)std::stod(f[i], &used);
                if (used != f[i].size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw parse_error(where + ", field " + names[i] + ": not a number");
            }
        }
    }
    if (seq.size() == 0) throw parse_error("sequence csv: no data rows");
    return seq;
}

// ------------------------------------------------------- analysis products

inline std::string profile_to_csv(const AutocorrProfile& p) {
    std::string out = "tau,re,im\n";
    for (std::int64_t tau = p.min_lag; tau <= p.max_lag(); ++tau) {
        auto v = p.at(tau);
        out += std::to_string(tau) + "," + fmt_double(v.real()) + "," + fmt_double(v.imag()) + "\n";
    }
    return out;
}

inline std::string spectrum_to_csv(const SpectrumGrid& g) {
    std::string out = "u,y\n";
    for (std::size_t i = 0; i < g.grid_size; ++i) out += fmt_double(g.u[i]) + "," + fmt_double(g.y[i]) + "\n";
    return out;
}

inline json metrics_to_json(const MetricBundle& m) {
    json j;
    j["isl"] = m.isl;
    j["nrmse"] = m.nrmse;
    j["leakage"] = m.leakage;
    j["resolution_turns"] = m.resolution_turns.str();
    return j;
}

// -------------------------------------------------------------------- plans

inline json plan_to_json(const SweepPlan& plan) {
    json j;
    j["N"] = plan.N;
    j["m"] = plan.m;
    j["gamma"] = plan.gamma.str();
    json beams = json::array();
    for (const auto& beam : plan.beams) {
        json segs = json::array();
        for (const auto& s : beam.band.segments) segs.push_back(json::array({s.lo.str(), s.hi.str()}));
        beams.push_back({{"b", beam.b.str()}, {"u0", beam.u0.str()}, {"segments", std::move(segs)}});
    }
    j["beams"] = std::move(beams);
    return j;
}

/// Rebuilds a plan from its JSON form. Bands are recomputed from (N, m, gamma, b)
/// and must match the stored u0 and segments.
inline SweepPlan plan_from_json(const json& j) {
    SweepPlan plan;
    try {
        plan.N = j.at("N").get<std::int64_t>();
        plan.m = j.at("m").get<std::int64_t>();
        plan.gamma = Rational::parse(j.at("gamma").get<std::string>());
        const auto& beams = j.at("beams");
        for (std::size_t i = 0; i < beams.size(); ++i) {
            const auto& bj = beams[i];
            GscParams p{plan.N, plan.m, plan.gamma, Rational::parse(bj.at("b").get<std::string>())};
            Beam beam{p.b, beam_direction(p), passband(p)};
            const std::string where = "plan json, beams[" + std::to_string(i) + "]";
            if (Rational::parse(bj.at("u0").get<std::string>()) != beam.u0) throw parse_error(where + ".u0: inconsistent with b");
            const auto& segs = bj.at("segments");
            if (segs.size() != beam.band.segments.size()) throw parse_error(where + ".segments: inconsistent with b");
            for (std::size_t k = 0; k < segs.size(); ++k) {
                Segment s{Rational::parse(segs[k].at(0).get<std::string>()), Rational::parse(segs[k].at(1).get<std::string>())};
                if (!(s == beam.band.segments[k])) throw parse_error(where + ".segments: inconsistent with b");
            }
            plan.beams.push_back(std::move(beam));
        }
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(std::string("plan json: ") + e.what());
    }
    return plan;
}

inline std::string plan_to_csv(const SweepPlan& plan) {
    std::string out = "beam,b,u0,lo1,hi1,lo2,hi2\n";
    for (std::size_t i = 0; i < plan.beams.size(); ++i) {
        const auto& beam = plan.beams[i];
        out += std::to_string(i + 1) + "," + beam.b.str() + "," + beam.u0.str();
        for (std::size_t k = 0; k < 2; ++k) {
            if (k < beam.band.segments.size())
                out += "," + beam.band.segments[k].lo.str() + "," + beam.band.segments[k].hi.str();
            else
                out += ",,";
        }
        out += "\n";
    }
    return out;
}

// ------------------------------------------------------- enumeration / verify

inline std::string join_ints(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

inline std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i].str();
    return out;
}

inline std::string mow_isl_to_csv(const std::vector<MowIslEntry>& entries) {
    std::string out = "alpha,beta,f0,isl\n";
    for (const auto& e : entries) {
        out += join_ints(e.params.alpha) + "," + join_ints(e.params.beta) + "," + join_rationals(e.params.f0) + "," +
               fmt_double(e.isl) + "\n";
    }
    return out;
}

inline json mow_isl_summary(const MowFamilyQuery& q, const std::vector<MowIslEntry>& entries) {
    json j;
    j["N"] = q.N;
    j["restrict_m_to_1"] = q.restrict_m_to_1;
    j["f0_policy"] = q.f0_policy == F0Policy::fixed_zero ? "fixed-zero" : "half-integers";
    j["count"] = entries.size();
    j["predicted_count"] = mow_family_size(q);
    if (!entries.empty()) {
        j["min_isl"] = entries.front().isl;
        j["argmin"] = {{"s", entries.front().params.s},
                       {"m", entries.front().params.m},
                       {"alpha", entries.front().params.alpha},
                       {"beta", entries.front().params.beta},
                       {"f0", join_rationals(entries.front().params.f0)}};
    }
    return j;
}

inline json reports_to_json(const std::vector<EquivalenceReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        arr.push_back({{"kind", std::string(to_string(r.kind))},
                       {"lhs_params", params_json(r.lhs_params)},
                       {"rhs_params", params_json(r.rhs_params)},
                       {"max_phase_gap", r.max_phase_gap.str()},
                       {"verdict", r.verdict}});
    }
    return arr;
}

// -------------------------------------------------------------------- files

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw io_error("write to '" + path + "' failed");
}

/// Loads a sequence file, choosing JSON or CSV from the first non-blank character.
inline RationalPhaseSequence load_sequence(const std::string& path) {
    const std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("'" + path + "', line 1: empty file");
    if (text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw parse_error("'" + path + "': " + e.what());
        }
        return sequence_from_json(j);
    }
    return sequence_from_csv(text);
}

}  // namespace gsc::io
