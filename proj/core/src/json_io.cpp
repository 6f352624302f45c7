#include "sensorfft/json_io.hpp"

#include <json.hpp>

#include "format.hpp"
#include "sensorfft/error.hpp"

namespace sensorfft {

namespace {

// Minimal pretty-printing writer; containers opened with `inline_items`
// keep their elements on one line.
class Writer {
public:
    void begin_object(bool inline_items = false) { open('{', inline_items); }
    void end_object() { close('}'); }
    void begin_array(bool inline_items = false) { open('[', inline_items); }
    void end_array() { close(']'); }

    Writer& key(std::string_view k) {
        separator();
        out_ += '"';
        out_ += k;
        out_ += "\": ";
        pending_key_ = true;
        return *this;
    }

    void value(double v) { scalar(detail::format_real(v)); }
    void value(std::int64_t v) { scalar(std::to_string(v)); }
    void value(std::size_t v) { scalar(std::to_string(v)); }
    void value(std::string_view s) { scalar(nlohmann::json(std::string(s)).dump()); }

    std::string finish() && {
        out_ += '\n';
        return std::move(out_);
    }

private:
    struct Frame {
        bool inline_items;
        bool empty = true;
    };

    void separator() {
        if (pending_key_) {
            pending_key_ = false;
            return;
        }
        if (frames_.empty()) return;
        auto& f = frames_.back();
        if (!f.empty) out_ += f.inline_items ? ", " : ",";
        if (!f.inline_items) newline(frames_.size());
        f.empty = false;
    }

    void scalar(const std::string& text) {
        separator();
        out_ += text;
    }

    void open(char c, bool inline_items) {
        separator();
        out_ += c;
        // Nested containers inside an inline one stay inline.
        const bool parent_inline = !frames_.empty() && frames_.back().inline_items;
        frames_.push_back({inline_items || parent_inline});
    }

    void close(char c) {
        const Frame f = frames_.back();
        frames_.pop_back();
        if (!f.inline_items && !f.empty) newline(frames_.size());
        out_ += c;
    }

    void newline(std::size_t depth) {
        out_ += '\n';
        out_.append(2 * depth, ' ');
    }

    std::string out_;
    std::vector<Frame> frames_;
    bool pending_key_ = false;
};

void write_selection_fields(Writer& w, const HarmonicSelection& selection, const Metrics& metrics) {
    w.key("threshold").value(selection.threshold);
    w.key("retained_bins").begin_array(true);
    for (auto b : selection.retained) w.value(b);
    w.end_array();
    w.key("retained_units").value(selection.units.size());
    w.key("energy_fraction").value(selection.energy_fraction);
    w.key("rmse").value(metrics.rmse);
    w.key("compression_ratio").value(metrics.compression_ratio);
}

void write_schedule_fields(Writer& w, const ActivationSchedule& schedule) {
    w.key("channel").value(schedule.channel);
    w.key("k_sigma").value(schedule.k_sigma);
    w.key("interval_s").value(schedule.interval);
    w.key("activations").begin_array();
    for (std::size_t i = 0; i < schedule.indices.size(); ++i) {
        w.begin_object(true);
        w.key("index").value(schedule.indices[i]);
        w.key("timestamp").value(schedule.timestamps[i]);
        w.end_object();
    }
    w.end_array();
}

}  // namespace

std::string spectrum_to_json(const Spectrum& spectrum) {
    Writer w;
    w.begin_object();
    w.key("n").value(spectrum.size());
    w.key("start").value(spectrum.start);
    w.key("interval_s").value(spectrum.interval);
    w.key("coefficients").begin_array();
    for (const auto& z : spectrum.coefficients) {
        w.begin_array(true);
        w.value(z.real());
        w.value(z.imag());
        w.end_array();
    }
    w.end_array();
    w.end_object();
    return std::move(w).finish();
}

Spectrum spectrum_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("spectrum JSON: ") + e.what());
    }
    try {
        Spectrum s;
        const auto n = doc.at("n").get<std::size_t>();
        s.start = doc.at("start").get<EpochSeconds>();
        s.interval = doc.at("interval_s").get<std::int64_t>();
        const auto& coeffs = doc.at("coefficients");
        if (!coeffs.is_array() || coeffs.size() != n) {
            throw FormatError("spectrum JSON: 'coefficients' must be an array of n entries");
        }
        s.coefficients.reserve(n);
        for (const auto& pair : coeffs) {
            if (!pair.is_array() || pair.size() != 2) throw FormatError("spectrum JSON: coefficient must be [re, im]");
            s.coefficients.emplace_back(pair[0].get<double>(), pair[1].get<double>());
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("spectrum JSON: ") + e.what());
    }
}

std::string selection_to_json(const HarmonicSelection& selection, const Metrics& metrics) {
    Writer w;
    w.begin_object();
    write_selection_fields(w, selection, metrics);
    w.end_object();
    return std::move(w).finish();
}

std::string schedule_to_json(const ActivationSchedule& schedule) {
    Writer w;
    w.begin_object();
    write_schedule_fields(w, schedule);
    w.end_object();
    return std::move(w).finish();
}

std::string result_to_json(const PipelineResult& result, const PipelineConfig& config) {
    Writer w;
    w.begin_object();
    w.key("channel").value(result.original.channel);
    w.key("n").value(result.original.size());
    w.key("start").value(result.original.start);
    w.key("interval_s").value(result.original.interval);
    w.key("threshold").value(config.threshold);
    w.key("k_sigma").value(config.k_sigma);

    w.key("selection").begin_object();
    write_selection_fields(w, result.selection, result.metrics);
    w.end_object();

    const auto& m = result.metrics;
    w.key("metrics").begin_object();
    w.key("rmse").value(m.rmse);
    w.key("energy_fraction").value(m.energy_fraction);
    w.key("compression_ratio").value(m.compression_ratio);
    w.key("stored_reals").value(m.stored_reals);
    w.key("retained_bin_count").value(m.retained_bins);
    w.key("retained_unit_count").value(m.retained_units);
    w.end_object();

    w.key("schedule").begin_object();
    write_schedule_fields(w, result.schedule);
    w.end_object();

    w.end_object();
    return std::move(w).finish();
}

std::string reconstruction_csv(const PipelineResult& result) {
    std::string out = "timestamp,original,reconstructed\n";
    for (std::size_t i = 0; i < result.original.size(); ++i) {
        out += std::to_string(result.original.time_at(i));
        out += ',';
        out += detail::format_real(result.original.values[i]);
        out += ',';
        out += detail::format_real(result.reconstructed.values[i]);
        out += '\n';
    }
    return out;
}

}  // namespace sensorfft
