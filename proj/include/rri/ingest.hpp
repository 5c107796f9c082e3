#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "rri/types.hpp"

namespace rri {

struct AccelLog {
  std::vector<AccelSample> samples;
  StreamMeta meta;
};

struct IriLog {
  std::vector<IriRecord> records;
  StreamMeta meta;
};

struct AccelParseOptions {
  /// When true, out-of-order rows are sorted by t_ms instead of rejected.
  /// Duplicate timestamps are an error either way.
  bool sort_recovery{false};
};

struct IriSpacingCheck {
  double nominal_m{5.0};
  double tolerance_m{0.5};
};

/// Accel log CSV: header `t_ms,ax,ay,az`. Samples come back strictly
/// t_ms-sorted; per-axis values beyond the sanity bound are rejected.
AccelLog parse_accel_log(std::istream& in, std::string_view source_path = "<stream>",
                         const AccelParseOptions& opts = {});

/// Profiler log CSV: header `t_ms,chainage_m,iri`. Records must be strictly
/// chainage-sorted with consecutive spacing inside the nominal band.
IriLog parse_iri_log(std::istream& in, std::string_view source_path = "<stream>",
                     const IriSpacingCheck& spacing = {});

AccelLog load_accel_csv(const std::filesystem::path& path, const AccelParseOptions& opts = {});
IriLog load_iri_csv(const std::filesystem::path& path, const IriSpacingCheck& spacing = {});

void write_accel_csv(std::ostream& out, std::span<const AccelSample> samples);
void write_iri_csv(std::ostream& out, std::span<const IriRecord> records);
void save_accel_csv(const std::filesystem::path& path, std::span<const AccelSample> samples);
void save_iri_csv(const std::filesystem::path& path, std::span<const IriRecord> records);

struct ResampleResult {
  std::vector<AccelSample> samples;
  /// Indices into `samples` where a new segment begins after a gap too long
  /// to interpolate. The leading segment at index 0 is implicit.
  std::vector<std::size_t> segment_starts;
  std::size_t inserted{};
};

/// Fills gaps shorter than 5 nominal periods by linear interpolation on the
/// even time grid between the two real samples; longer gaps become segment
/// boundaries. Existing samples are never modified.
ResampleResult resample_gaps(std::span<const AccelSample> samples, double nominal_hz);

}  // namespace rri
