#include "sensorfft/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "sensorfft/error.hpp"
#include "format.hpp"

namespace sensorfft {

namespace {

constexpr std::string_view kTimestampColumn = "timestamp";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(pos)));
            break;
        }
        fields.push_back(trim(line.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return fields;
}

std::optional<double> parse_value(std::string_view field) {
    if (field.empty()) return std::nullopt;
    if (field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

// Splits on '\n'; the caller trims a trailing '\r'.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        fn(line_no, text.substr(pos, end - pos));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace

std::string_view channel_label(Channel channel) noexcept {
    switch (channel) {
        case Channel::Co2: return "co2_ppm";
        case Channel::Humidity: return "humidity_pct";
        case Channel::Temperature: return "temperature_c";
    }
    return "unknown";
}

std::optional<Channel> parse_channel(std::string_view label) noexcept {
    for (auto c : {Channel::Co2, Channel::Humidity, Channel::Temperature}) {
        if (channel_label(c) == label) return c;
    }
    return std::nullopt;
}

std::optional<double> SampleRecord::value(Channel channel) const noexcept {
    switch (channel) {
        case Channel::Co2: return co2;
        case Channel::Humidity: return humidity;
        case Channel::Temperature: return temperature;
    }
    return std::nullopt;
}

void SampleRecord::set(Channel channel, std::optional<double> v) noexcept {
    switch (channel) {
        case Channel::Co2: co2 = v; break;
        case Channel::Humidity: humidity = v; break;
        case Channel::Temperature: temperature = v; break;
    }
}

bool SampleLog::has_channel(Channel channel) const noexcept {
    return std::find(channels.begin(), channels.end(), channel) != channels.end();
}

void validate(const UniformSeries& series) {
    if (series.interval <= 0) throw ParameterError("series interval must be positive");
    if (series.values.size() < 2) throw ParameterError("series needs at least 2 samples");
    for (double v : series.values) {
        if (!std::isfinite(v)) throw ParameterError("series contains a non-finite value");
    }
}

SampleLog parse_records(std::string_view text) {
    SampleLog log;
    std::optional<std::size_t> ts_col;
    std::vector<std::pair<std::size_t, Channel>> channel_cols;
    bool have_header = false;

    for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
        const auto line = trim(raw);
        if (line.empty()) return;
        const auto fields = split_fields(line);

        if (!have_header) {
            have_header = true;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (fields[i] == kTimestampColumn) {
                    ts_col = i;
                } else if (auto c = parse_channel(fields[i]); c && !log.has_channel(*c)) {
                    channel_cols.emplace_back(i, *c);
                    log.channels.push_back(*c);
                }
            }
            if (!ts_col) throw FormatError("header has no 'timestamp' column");
            if (channel_cols.empty()) throw FormatError("header names no known channel column");
            return;
        }

        if (*ts_col >= fields.size() || fields[*ts_col].empty()) {
            throw RowError(line_no, "missing timestamp");
        }
        const auto ts_field = fields[*ts_col];
        EpochSeconds ts = 0;
        const auto [ptr, ec] = std::from_chars(ts_field.data(), ts_field.data() + ts_field.size(), ts);
        if (ec != std::errc{} || ptr != ts_field.data() + ts_field.size()) {
            throw RowError(line_no, "unparseable timestamp '" + std::string(ts_field) + "'");
        }
        if (ts < 0) throw RowError(line_no, "negative timestamp");

        SampleRecord rec;
        rec.timestamp = ts;
        for (const auto& [col, channel] : channel_cols) {
            if (col < fields.size()) rec.set(channel, parse_value(fields[col]));
        }
        log.records.push_back(rec);
    });

    if (!have_header) throw FormatError("empty document: no header row");
    return log;
}

std::vector<SampleRecord> clean_sort(std::span<const SampleRecord> records, Channel channel) {
    // Map insertion in file order makes the last duplicate win.
    std::map<EpochSeconds, SampleRecord> by_time;
    for (const auto& r : records) {
        if (r.value(channel)) by_time.insert_or_assign(r.timestamp, r);
    }
    if (by_time.size() < 2) {
        throw InsufficientDataError("fewer than 2 records with a '" + std::string(channel_label(channel)) +
                                    "' value");
    }
    std::vector<SampleRecord> out;
    out.reserve(by_time.size());
    for (auto& [t, r] : by_time) out.push_back(std::move(r));
    return out;
}

UniformSeries resample_uniform(std::span<const SampleRecord> records, std::int64_t interval,
                               Channel channel) {
    if (interval <= 0) throw ParameterError("resampling interval must be positive");
    if (records.size() < 2) throw InsufficientDataError("resampling needs at least 2 records");
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].value(channel)) throw ParameterError("record without channel value; run clean_sort first");
        if (i > 0 && records[i].timestamp <= records[i - 1].timestamp) {
            throw ParameterError("records must have strictly increasing timestamps");
        }
    }

    const EpochSeconds first = records.front().timestamp;
    const EpochSeconds last = records.back().timestamp;
    const auto points = static_cast<std::size_t>((last - first) / interval) + 1;
    if (points < 2) throw InsufficientDataError("resampling grid would have fewer than 2 points");

    UniformSeries out;
    out.start = first;
    out.interval = interval;
    out.channel = std::string(channel_label(channel));
    out.values.reserve(points);

    std::size_t hi = 0;  // first record with timestamp >= t
    for (std::size_t g = 0; g < points; ++g) {
        const EpochSeconds t = first + static_cast<EpochSeconds>(g) * interval;
        while (records[hi].timestamp < t) ++hi;
        const auto& right = records[hi];
        if (right.timestamp == t) {
            out.values.push_back(*right.value(channel));
            continue;
        }
        const auto& left = records[hi - 1];
        const double v0 = *left.value(channel);
        const double v1 = *right.value(channel);
        const double frac = static_cast<double>(t - left.timestamp) /
                            static_cast<double>(right.timestamp - left.timestamp);
        out.values.push_back(v0 + frac * (v1 - v0));
    }
    return out;
}

std::string to_csv(const UniformSeries& series) {
    std::string out = "timestamp," + series.channel + "\n";
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        out += std::to_string(series.time_at(i));
        out += ',';
        out += detail::format_real(series.values[i]);
        out += '\n';
    }
    return out;
}

}  // namespace sensorfft
