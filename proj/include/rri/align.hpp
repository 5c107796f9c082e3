#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "rri/types.hpp"

namespace rri {

struct PairingResult {
  std::vector<PairedSample> pairs;
  std::size_t dropped_seconds_no_iri{};
  std::size_t dropped_seconds_no_accel{};
};

/// Joins feature seconds with the profiler records whose (offset-corrected)
/// timestamps fall in the same [origin + k*1000, origin + (k+1)*1000)
/// window. iri_mean is the arithmetic mean of that second's records;
/// chainage_start_m is the smallest chainage among them. Seconds present on
/// only one side are dropped and counted. Throws DataError when nothing
/// overlaps.
PairingResult pair_by_time(std::span<const SecondFeature> features,
                           std::span<const IriRecord> iri, std::int64_t epoch_origin_ms,
                           std::int64_t offset_ms = 0);

/// Timestamp-free fallback: second k covers chainage [k*speed, (k+1)*speed)
/// under the constant-speed survey geometry. Records are matched by
/// chainage instead of time; empty windows are dropped and counted.
PairingResult pair_by_chainage(std::span<const SecondFeature> features,
                               std::span<const IriRecord> iri, const SurveyGeometry& geom);

struct DistanceSplit {
  std::vector<PairedSample> train;
  std::vector<PairedSample> test;
};

/// train = first floor(train_km * 1000 / speed) pairs, test = remainder.
/// train_km spanning the whole route yields test == train (the full-route
/// training regime); train_km beyond the route is an error.
DistanceSplit split_by_distance(std::span<const PairedSample> pairs, const SurveyGeometry& geom,
                                double train_km);

void write_pairs_csv(std::ostream& out, std::span<const PairedSample> pairs);
void save_pairs_csv(const std::filesystem::path& path, std::span<const PairedSample> pairs);
std::vector<PairedSample> parse_pairs_csv(std::istream& in,
                                          std::string_view source_path = "<stream>");
std::vector<PairedSample> load_pairs_csv(const std::filesystem::path& path);

}  // namespace rri
