#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace fs = std::filesystem;
using sensorfft::cli::ExitStatus;

namespace {

struct Outcome {
    ExitStatus status;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const auto status = sensorfft::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("sensorfft_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SynthDefaultDay) {
    const auto r = cli({"synth", "--hours", "24", "--interval-min", "15", "--seed", "1"});
    ASSERT_EQ(r.status, ExitStatus::Success) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 98);  // header + 97 rows
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "timestamp,co2_ppm");
    EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, SynthRejectsZeroInterval) {
    EXPECT_EQ(cli({"synth", "--interval-min", "0"}).status, ExitStatus::Usage);
    EXPECT_EQ(cli({"synth", "--pulse", "1,2"}).status, ExitStatus::Usage);
    EXPECT_EQ(cli({"synth", "--bogus"}).status, ExitStatus::Usage);
    EXPECT_EQ(cli({}).status, ExitStatus::Usage);
}

TEST_F(CliTest, SynthIsRepeatable) {
    ASSERT_EQ(cli({"synth", "--seed", "4", "--out", path("a.csv")}).status, ExitStatus::Success);
    ASSERT_EQ(cli({"synth", "--seed", "4", "--out", path("b.csv")}).status, ExitStatus::Success);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_FALSE(slurp(path("a.csv")).empty());
}

TEST_F(CliTest, SynthCustomPulses) {
    const auto r = cli({"synth", "--noise-std", "0", "--diurnal-amplitude", "0", "--pulse", "10,2,100", "--hours",
                        "1", "--interval-min", "30"});
    ASSERT_EQ(r.status, ExitStatus::Success);
    EXPECT_EQ(r.out, "timestamp,co2_ppm\n0,420\n1800,420\n3600,420\n");
}

TEST_F(CliTest, CompressWritesResult) {
    ASSERT_EQ(cli({"synth", "--out", path("day.csv")}).status, ExitStatus::Success);
    const auto r = cli({"compress", "--input", path("day.csv"), "--threshold", "0.5", "--reconstruction-out",
                        path("rec.csv"), "--spectrum-out", path("spec.json"), "--verify"});
    ASSERT_EQ(r.status, ExitStatus::Success) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_GE(doc["metrics"]["energy_fraction"].get<double>(), 0.5);
    EXPECT_EQ(doc["n"], 97);
    EXPECT_EQ(slurp(path("rec.csv")).substr(0, 33), "timestamp,original,reconstructed\n");
    EXPECT_EQ(nlohmann::json::parse(slurp(path("spec.json")))["n"], 97);
}

TEST_F(CliTest, CompressErrors) {
    ASSERT_EQ(cli({"synth", "--out", path("day.csv")}).status, ExitStatus::Success);
    EXPECT_EQ(cli({"compress", "--input", path("day.csv"), "--threshold", "1.5"}).status, ExitStatus::Usage);
    EXPECT_EQ(cli({"compress", "--input", path("day.csv"), "--channel", "humidity_pct"}).status, ExitStatus::Data);
    EXPECT_EQ(cli({"compress", "--input", path("day.csv"), "--channel", "pressure"}).status, ExitStatus::Data);
    const auto missing = cli({"compress", "--input", path("nope.csv")});
    EXPECT_EQ(missing.status, ExitStatus::Data);
    EXPECT_TRUE(missing.out.empty());
    EXPECT_FALSE(missing.err.empty());
    EXPECT_EQ(cli({"compress"}).status, ExitStatus::Usage);

    write(path("bad.csv"), "timestamp,co2_ppm\n1,2\nxx,3\n");
    EXPECT_EQ(cli({"compress", "--input", path("bad.csv")}).status, ExitStatus::Data);
    write(path("one.csv"), "timestamp,co2_ppm\n1,2\n");
    EXPECT_EQ(cli({"compress", "--input", path("one.csv")}).status, ExitStatus::Data);
}

TEST_F(CliTest, ScheduleConstantSignal) {
    std::string csv = "timestamp,co2_ppm\n";
    for (int i = 0; i < 96; ++i) csv += std::to_string(i * 900) + ",430\n";
    write(path("flat.csv"), csv);
    const auto r = cli({"schedule", "--input", path("flat.csv")});
    ASSERT_EQ(r.status, ExitStatus::Success) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["activations"].size(), 1u);
    EXPECT_EQ(doc["activations"][0]["index"], 0);
    EXPECT_EQ(doc["channel"], "co2_ppm");
    EXPECT_EQ(doc["interval_s"], 900);
}

TEST_F(CliTest, ScheduleFindsPulseOnset) {
    // One pulse at 10:00 on a flat, noise-free day: onset sample 40.
    ASSERT_EQ(cli({"synth", "--noise-std", "0", "--diurnal-amplitude", "0", "--pulse", "10,2,300", "--out",
                   path("pulse.csv")})
                  .status,
              ExitStatus::Success);
    const auto r = cli({"schedule", "--input", path("pulse.csv"), "--threshold", "1.0"});
    ASSERT_EQ(r.status, ExitStatus::Success) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    bool near_onset = false;
    for (const auto& a : doc["activations"]) {
        const int idx = a["index"];
        near_onset |= idx >= 39 && idx <= 41;
    }
    EXPECT_TRUE(near_onset) << r.out;
}

TEST_F(CliTest, ScheduleRejectsNegativeKSigma) {
    ASSERT_EQ(cli({"synth", "--out", path("day.csv")}).status, ExitStatus::Success);
    EXPECT_EQ(cli({"schedule", "--input", path("day.csv"), "--k-sigma", "-1"}).status, ExitStatus::Usage);
}

TEST_F(CliTest, VerifyPassesOnDay) {
    ASSERT_EQ(cli({"synth", "--hours", "23.75", "--out", path("d96.csv")}).status, ExitStatus::Success);
    const auto r = cli({"verify", "--input", path("d96.csv")});
    EXPECT_EQ(r.status, ExitStatus::Success) << r.out << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(r.out.rfind("PASS oracle", 0), 0u);
}

TEST_F(CliTest, VerifyFailsOnCorruptedSpectrumFixture) {
    const std::string fixtures = SENSORFFT_FIXTURE_DIR;
    const auto ok = cli({"verify", "--input", fixtures + "/ramp.csv", "--spectrum", fixtures + "/ramp_spectrum.json"});
    EXPECT_EQ(ok.status, ExitStatus::Success) << ok.out << ok.err;
    const auto bad = cli({"verify", "--input", fixtures + "/ramp.csv", "--spectrum",
                          fixtures + "/ramp_spectrum_corrupted.json"});
    EXPECT_EQ(bad.status, ExitStatus::Verification) << bad.out;
    EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, HelpExitsCleanly) {
    const auto r = cli({"--help"});
    EXPECT_EQ(r.status, ExitStatus::Success);
    EXPECT_NE(r.out.find("compress"), std::string::npos);
}
