#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sensorfft {

/// Seconds since the Unix epoch.
using EpochSeconds = std::int64_t;

enum class Channel { Co2, Humidity, Temperature };

/// CSV column label for a channel: co2_ppm, humidity_pct, temperature_c.
std::string_view channel_label(Channel channel) noexcept;

/// Inverse of channel_label. Unknown labels yield nullopt.
std::optional<Channel> parse_channel(std::string_view label) noexcept;

/// One raw sensor reading. Absent channel values are nullopt; present values are finite.
struct SampleRecord {
    EpochSeconds timestamp = 0;
    std::optional<double> co2;
    std::optional<double> humidity;
    std::optional<double> temperature;

    std::optional<double> value(Channel channel) const noexcept;
    void set(Channel channel, std::optional<double> v) noexcept;

    friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

/// Parsed CSV log: the channel columns named by the header, and the rows in file order.
struct SampleLog {
    std::vector<Channel> channels;
    std::vector<SampleRecord> records;

    bool has_channel(Channel channel) const noexcept;
};

/// A uniformly sampled real signal: values[i] was taken at start + i * interval.
struct UniformSeries {
    EpochSeconds start = 0;
    std::int64_t interval = 1;  // seconds
    std::vector<double> values;
    std::string channel;

    std::size_t size() const noexcept { return values.size(); }
    EpochSeconds time_at(std::size_t i) const noexcept {
        return start + static_cast<EpochSeconds>(i) * interval;
    }

    friend bool operator==(const UniformSeries&, const UniformSeries&) = default;
};

/// Throws ParameterError unless interval > 0, N >= 2 and every value is finite.
void validate(const UniformSeries& series);

/// Parses a CSV log with a `timestamp` column and one or more channel columns.
///
/// Columns may appear in any order; unknown columns are ignored. Empty or
/// unparseable channel fields (including nan/inf) become absent values.
/// Blank lines are skipped and both "\n" and "\r\n" line endings are accepted.
///
/// Throws FormatError when the header lacks `timestamp` or any known channel,
/// and RowError when a row's timestamp is missing, non-integer or negative.
SampleLog parse_records(std::string_view text);

/// Drops records without a value for `channel`, sorts the rest by timestamp and
/// collapses duplicate timestamps to the last-seen record.
/// Throws InsufficientDataError if fewer than two records survive.
std::vector<SampleRecord> clean_sort(std::span<const SampleRecord> records, Channel channel);

/// Linearly interpolates cleaned records onto the grid first, first + interval, ...
/// up to the last timestamp. Records that fall on a grid point are used verbatim.
///
/// Throws ParameterError for interval <= 0 or records that are not strictly
/// increasing or lack the channel; InsufficientDataError if the grid has fewer than two points.
UniformSeries resample_uniform(std::span<const SampleRecord> records, std::int64_t interval,
                               Channel channel);

/// Serializes a series in the ingest CSV format (`timestamp,<channel label>`).
std::string to_csv(const UniformSeries& series);

}  // namespace sensorfft
