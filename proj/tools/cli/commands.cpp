#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sensorfft/error.hpp"
#include "sensorfft/json_io.hpp"
#include "sensorfft/pipeline.hpp"
#include "sensorfft/synth.hpp"

namespace sensorfft::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
}

ExitStatus status_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parameter: return ExitStatus::Usage;
        case ErrorKind::Verification: return ExitStatus::Verification;
        default: return ExitStatus::Data;
    }
}

struct InputFlags {
    std::string input;
    std::string channel = "co2_ppm";
    std::int64_t interval_s = 900;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--input", input, "Sensor log CSV")->required();
        cmd.add_option("--channel", channel, "Channel column (co2_ppm, humidity_pct, temperature_c)")
            ->capture_default_str();
        cmd.add_option("--interval-s", interval_s, "Resampling interval in seconds")->capture_default_str();
    }

    Channel resolve_channel() const {
        auto c = parse_channel(channel);
        if (!c) throw FormatError("unknown channel '" + channel + "'");
        return *c;
    }

    UniformSeries load_series() const {
        const auto log = parse_records(read_file(input));
        const Channel c = resolve_channel();
        if (!log.has_channel(c)) throw FormatError("channel '" + channel + "' not in CSV header");
        const auto cleaned = clean_sort(log.records, c);
        return resample_uniform(cleaned, interval_s, c);
    }
};

struct SynthFlags {
    SynthConfig config;
    std::vector<std::string> pulses;
    bool no_pulses = false;
    std::string out;
};

struct CompressFlags {
    InputFlags in;
    PipelineConfig pipeline;
    std::string out;
    std::string reconstruction_out;
    std::string spectrum_out;
};

struct ScheduleFlags {
    InputFlags in;
    PipelineConfig pipeline;
    std::string out;
};

struct VerifyFlags {
    InputFlags in;
    std::string spectrum;
};

OccupancyPulse parse_pulse(const std::string& text) {
    OccupancyPulse p;
    char c1 = 0, c2 = 0;
    std::istringstream s(text);
    if (!(s >> p.start_hour >> c1 >> p.duration_hours >> c2 >> p.magnitude) || c1 != ',' || c2 != ',' ||
        !(s >> std::ws).eof()) {
        throw ParameterError("--pulse expects START_H,DURATION_H,MAGNITUDE, got '" + text + "'");
    }
    return p;
}

void check_pipeline_flags(const PipelineConfig& cfg, std::int64_t interval_s) {
    if (interval_s <= 0) throw ParameterError("--interval-s must be positive");
    if (!(cfg.threshold > 0.0 && cfg.threshold <= 1.0)) throw ParameterError("--threshold must lie in (0, 1]");
    if (!(cfg.k_sigma >= 0.0)) throw ParameterError("--k-sigma must be >= 0");
}

void cmd_synth(SynthFlags& f, std::ostream& out) {
    if (f.no_pulses) f.config.pulses.clear();
    if (!f.pulses.empty()) {
        f.config.pulses.clear();
        for (const auto& p : f.pulses) f.config.pulses.push_back(parse_pulse(p));
    }
    emit(f.out, to_csv(generate(f.config)), out);
}

PipelineResult run_pipeline(const InputFlags& in, PipelineConfig cfg) {
    check_pipeline_flags(cfg, in.interval_s);
    cfg.channel = in.resolve_channel();
    cfg.interval = in.interval_s;
    return run(in.load_series(), cfg);
}

void cmd_compress(const CompressFlags& f, std::ostream& out) {
    const auto result = run_pipeline(f.in, f.pipeline);
    if (!f.reconstruction_out.empty()) emit(f.reconstruction_out, reconstruction_csv(result), out);
    if (!f.spectrum_out.empty()) emit(f.spectrum_out, spectrum_to_json(result.spectrum), out);
    emit(f.out, result_to_json(result, f.pipeline), out);
}

void cmd_schedule(const ScheduleFlags& f, std::ostream& out) {
    const auto result = run_pipeline(f.in, f.pipeline);
    emit(f.out, schedule_to_json(result.schedule), out);
}

ExitStatus cmd_verify(const VerifyFlags& f, std::ostream& out) {
    f.in.resolve_channel();
    if (f.in.interval_s <= 0) throw ParameterError("--interval-s must be positive");
    const auto series = f.in.load_series();
    const auto spectrum = f.spectrum.empty() ? forward_dft(series) : spectrum_from_json(read_file(f.spectrum));
    const auto report = verify_transform(series, spectrum);

    char line[160];
    for (const auto& check : {report.oracle, report.parseval, report.roundtrip}) {
        std::snprintf(line, sizeof line, "%s %-9s deviation=%.3e tolerance=%.3e\n", check.passed() ? "PASS" : "FAIL",
                      check.name, check.deviation, check.tolerance);
        out << line;
    }
    return report.passed() ? ExitStatus::Success : ExitStatus::Verification;
}

}  // namespace

ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral data reduction and activation scheduling for sensor logs", "sensorfft"};
    app.require_subcommand(1);

    SynthFlags synth;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic CO2 day as ingest CSV");
    synth_cmd->add_option("--hours", synth.config.duration_hours, "Duration in hours")->capture_default_str();
    synth_cmd->add_option("--interval-min", synth.config.interval_minutes, "Sampling interval in minutes")
        ->capture_default_str();
    synth_cmd->add_option("--baseline", synth.config.baseline, "Baseline ppm")->capture_default_str();
    synth_cmd->add_option("--diurnal-amplitude", synth.config.diurnal_amplitude, "Diurnal swing ppm")
        ->capture_default_str();
    synth_cmd->add_option("--noise-std", synth.config.noise_std, "Gaussian noise stddev ppm")->capture_default_str();
    synth_cmd->add_option("--seed", synth.config.seed, "Noise seed")->capture_default_str();
    synth_cmd->add_option("--start", synth.config.start, "First timestamp (epoch seconds)")->capture_default_str();
    synth_cmd->add_option("--pulse", synth.pulses, "Occupancy pulse START_H,DURATION_H,MAGNITUDE (repeatable)");
    synth_cmd->add_flag("--no-pulses", synth.no_pulses, "Disable the default occupancy pulses");
    synth_cmd->add_option("--out", synth.out, "Output file (default stdout)");

    CompressFlags compress;
    auto* compress_cmd = app.add_subcommand("compress", "Select harmonics and write the pipeline result JSON");
    compress.in.add_to(*compress_cmd);
    compress_cmd->add_option("--threshold", compress.pipeline.threshold, "Retained energy fraction")
        ->capture_default_str();
    compress_cmd->add_option("--k-sigma", compress.pipeline.k_sigma, "Activation sensitivity")->capture_default_str();
    compress_cmd->add_flag("--verify", compress.pipeline.verify, "Cross-check the FFT against a naive DFT");
    compress_cmd->add_option("--out", compress.out, "Result JSON (default stdout)");
    compress_cmd->add_option("--reconstruction-out", compress.reconstruction_out,
                             "Write timestamp,original,reconstructed CSV");
    compress_cmd->add_option("--spectrum-out", compress.spectrum_out, "Write the full spectrum JSON");

    ScheduleFlags schedule;
    auto* schedule_cmd = app.add_subcommand("schedule", "Write the activation schedule JSON");
    schedule.in.add_to(*schedule_cmd);
    schedule_cmd->add_option("--threshold", schedule.pipeline.threshold, "Retained energy fraction")
        ->capture_default_str();
    schedule_cmd->add_option("--k-sigma", schedule.pipeline.k_sigma, "Activation sensitivity")->capture_default_str();
    schedule_cmd->add_option("--out", schedule.out, "Schedule JSON (default stdout)");

    VerifyFlags verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check oracle agreement, Parseval and round trip on a log");
    verify.in.add_to(*verify_cmd);
    verify_cmd->add_option("--spectrum", verify.spectrum, "Check this spectrum JSON instead of a fresh transform");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitStatus::Success : ExitStatus::Usage;
    }

    try {
        if (*synth_cmd) {
            cmd_synth(synth, out);
        } else if (*compress_cmd) {
            cmd_compress(compress, out);
        } else if (*schedule_cmd) {
            cmd_schedule(schedule, out);
        } else if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        return ExitStatus::Success;
    } catch (const Error& e) {
        err << "sensorfft: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return status_for(e.kind());
    } catch (const IoError& e) {
        err << "sensorfft: " << e.what() << '\n';
        return ExitStatus::Data;
    }
}

}  // namespace sensorfft::cli
