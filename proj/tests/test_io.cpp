#include <gsc/experiments.hpp>
#include <gsc/io.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using gsc::Rational;
namespace io = gsc::io;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("gsc_io_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(SequenceJson, RoundTripsRandomGsc) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        std::int64_t N = 1 + static_cast<std::int64_t>(rng() % 90);
        auto divs = gsc::divisors(N);
        std::int64_t m = divs[rng() % divs.size()];
        gsc::GscParams p{N, m, Rational(1), Rational(static_cast<std::int64_t>(rng() % 41) - 20, 1 + static_cast<std::int64_t>(rng() % 5))};
        auto seq = gsc::gsc_phases(p);
        auto text = io::sequence_to_json(seq).dump();
        auto back = io::sequence_from_json(io::json::parse(text));
        EXPECT_EQ(back.phases, seq.phases);
        EXPECT_EQ(back.family, seq.family);
        EXPECT_EQ(back.params, seq.params);
    }
}

TEST(SequenceCsv, RoundTripsAndKeepsExactPhases) {
    auto seq = gsc::gsc_phases({60, 6, Rational(1, 3), Rational(5, 2)});
    auto csv = io::sequence_to_csv(seq);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,phase_num,phase_den,re,im");
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    EXPECT_EQ(io::sequence_from_csv(csv).phases, seq.phases);
}

TEST(SequenceCsv, ErrorsNameLineAndField) {
    const std::string header = "n,phase_num,phase_den,re,im\n";
    auto expect_error = [](const std::string& text, const std::string& fragment) {
        try {
            io::sequence_from_csv(text);
            FAIL() << "no error for: " << text;
        } catch (const io::parse_error& e) {
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
        }
    };
    expect_error("", "line 1");
    expect_error("a,b\n", "line 1");
    expect_error(header, "no data rows");
    expect_error(header + "0,1,4,0.5\n", "line 2");
    expect_error(header + "0,1,4,x,0\n", "field re");
    expect_error(header + "0,1,4,0,0\n0,1,4,0,0\n", "line 3, field n");
    expect_error(header + "0,5,4,0,0\n", "outside [0, 1)");
    expect_error(header + "0,1,,0,0\n", "field phase_den");
}

TEST(SequenceJson, RejectsMalformedDocuments) {
    EXPECT_THROW(io::sequence_from_json(io::json::array()), io::parse_error);
    EXPECT_THROW(io::sequence_from_json(io::json::parse(R"({"family":"gsc","N":1})")), io::parse_error);
    EXPECT_THROW(io::sequence_from_json(io::json::parse(R"({"family":"zc","N":1,"phases":["0/1"]})")), io::parse_error);
    EXPECT_THROW(io::sequence_from_json(io::json::parse(R"({"family":"gsc","N":2,"phases":["0/1"]})")), io::parse_error);
    EXPECT_THROW(io::sequence_from_json(io::json::parse(R"({"family":"gsc","N":1,"phases":[0.5]})")), io::parse_error);
    EXPECT_THROW(io::sequence_from_json(io::json::parse(R"({"family":"gsc","N":1,"phases":["0.5"]})")), io::parse_error);
}

TEST(Files, LoadSequenceDetectsFormat) {
    auto dir = scratch_dir("load");
    auto seq = gsc::gsc_phases({12, 3, Rational(1, 2), Rational(1)});
    io::write_file((dir / "a.json").string(), io::sequence_to_json(seq).dump(2));
    io::write_file((dir / "a.csv").string(), io::sequence_to_csv(seq));
    io::write_file((dir / "empty.csv").string(), "");
    io::write_file((dir / "bad.json").string(), "{ not json");
    EXPECT_EQ(io::load_sequence((dir / "a.json").string()).phases, seq.phases);
    EXPECT_EQ(io::load_sequence((dir / "a.csv").string()).phases, seq.phases);
    EXPECT_THROW(io::load_sequence((dir / "empty.csv").string()), io::parse_error);
    EXPECT_THROW(io::load_sequence((dir / "bad.json").string()), io::parse_error);
    EXPECT_THROW(io::load_sequence((dir / "missing.csv").string()), io::io_error);
}

TEST(Plans, JsonRoundTripAndTamperDetection) {
    auto plan = gsc::make_sweep_plan(120, 24, Rational(1, 5));
    auto j = io::plan_to_json(plan);
    auto back = io::plan_from_json(io::json::parse(j.dump()));
    ASSERT_EQ(back.beams.size(), plan.beams.size());
    for (std::size_t i = 0; i < plan.beams.size(); ++i) {
        EXPECT_EQ(back.beams[i].b, plan.beams[i].b);
        EXPECT_EQ(back.beams[i].u0, plan.beams[i].u0);
        EXPECT_EQ(back.beams[i].band.segments, plan.beams[i].band.segments);
    }
    j["beams"][0]["u0"] = "1/3";
    EXPECT_THROW(io::plan_from_json(j), io::parse_error);
    auto csv = io::plan_to_csv(plan);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "beam,b,u0,lo1,hi1,lo2,hi2");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
}

TEST(Formatting, TwelveSignificantDigits) {
    EXPECT_EQ(io::fmt_double(0.1 + 0.2), "0.3");
    EXPECT_EQ(io::fmt_double(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(io::fmt_double(2.0), "2");
}

TEST(MowTables, CsvHasOneRowPerMember) {
    gsc::MowFamilyQuery q{6, true, gsc::F0Policy::half_integers};
    auto entries = gsc::enumerate_mow_isl(q);
    auto csv = io::mow_isl_to_csv(entries);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "alpha,beta,f0,isl");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 25);
    auto summary = io::mow_isl_summary(q, entries);
    EXPECT_EQ(summary["count"].get<std::int64_t>(), 24);
}

TEST(Experiments, BundlesAreWrittenAndDeterministic) {
    auto dir = scratch_dir("bundle");
    gsc::ExperimentConfig cfg{"fig5", {}, 0};
    auto a = gsc::run_experiment(cfg);
    auto b = gsc::run_experiment(cfg);
    ASSERT_EQ(a.tables.size(), b.tables.size());
    for (std::size_t i = 0; i < a.tables.size(); ++i) EXPECT_EQ(a.tables[i], b.tables[i]);
    EXPECT_EQ(a.summary, b.summary);
    gsc::write_bundle(a, dir);
    EXPECT_TRUE(std::filesystem::exists(dir / "summary.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "provenance.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "fig5_metrics.csv"));
    EXPECT_EQ(a.summary["resolution_ratio_m10_over_m1"].get<std::string>(), "10");
}

TEST(Experiments, ConfigHashTracksOverrides) {
    gsc::ExperimentConfig base{"custom", {{"N", "12"}, {"m", "3"}, {"gamma", "1/2"}, {"b", "1"}}, 0};
    auto changed = base;
    changed.overrides["b"] = "2";
    EXPECT_EQ(gsc::config_hash(base), gsc::config_hash(base));
    EXPECT_NE(gsc::config_hash(base), gsc::config_hash(changed));
    auto typo = base;
    typo.overrides["gama"] = "1/2";
    EXPECT_THROW(gsc::run_experiment(typo), std::invalid_argument);
    EXPECT_THROW(gsc::run_experiment({"fig9", {}, 0}), std::invalid_argument);
}
