#include "rri/align.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "rri/csv.hpp"

namespace rri {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && (num < 0) != (den < 0)) --q;
  return q;
}

PairedSample build_pair(std::int64_t second_index, const SecondFeature& feat,
                       std::span<const IriRecord> records) {
  double sum = 0.0;
  double chainage_start = records.front().chainage_m;
  for (const auto& r : records) {
    sum += r.iri;
    chainage_start = std::min(chainage_start, r.chainage_m);
  }
  return {second_index, feat.mean_magnitude, sum / static_cast<double>(records.size()),
          static_cast<int>(records.size()), chainage_start};
}

}  // namespace

PairingResult pair_by_time(std::span<const SecondFeature> features,
                           std::span<const IriRecord> iri, std::int64_t epoch_origin_ms,
                           std::int64_t offset_ms) {
  // Bucket profiler records by feature second index. Records keep their
  // chainage order inside a bucket, so means are reproducible bit for bit.
  std::vector<std::pair<std::int64_t, IriRecord>> bucketed;
  bucketed.reserve(iri.size());
  for (const auto& r : iri) {
    bucketed.emplace_back(floor_div(r.t_ms + offset_ms - epoch_origin_ms, 1000), r);
  }
  std::stable_sort(bucketed.begin(), bucketed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  PairingResult result;
  std::size_t j = 0;
  std::size_t matched_iri_seconds = 0;
  std::size_t total_iri_seconds = 0;
  for (std::size_t k = 0; k < bucketed.size();) {
    std::size_t end = k + 1;
    while (end < bucketed.size() && bucketed[end].first == bucketed[k].first) ++end;
    ++total_iri_seconds;
    k = end;
  }
  for (const auto& feat : features) {
    while (j < bucketed.size() && bucketed[j].first < feat.second_index) ++j;
    std::size_t end = j;
    while (end < bucketed.size() && bucketed[end].first == feat.second_index) ++end;
    if (end == j) {
      ++result.dropped_seconds_no_iri;
      continue;
    }
    std::vector<IriRecord> records;
    records.reserve(end - j);
    for (std::size_t i = j; i < end; ++i) records.push_back(bucketed[i].second);
    result.pairs.push_back(build_pair(feat.second_index, feat, records));
    ++matched_iri_seconds;
    j = end;
  }
  result.dropped_seconds_no_accel = total_iri_seconds - matched_iri_seconds;
  if (result.pairs.empty()) {
    throw DataError("no overlap between acceleration and profiler streams");
  }
  return result;
}

PairingResult pair_by_chainage(std::span<const SecondFeature> features,
                               std::span<const IriRecord> iri, const SurveyGeometry& geom) {
  PairingResult result;
  std::vector<bool> used(iri.size(), false);
  for (const auto& feat : features) {
    const double lo = static_cast<double>(feat.second_index) * geom.speed_mps;
    const double hi = lo + geom.speed_mps;
    const auto first = std::lower_bound(
        iri.begin(), iri.end(), lo,
        [](const IriRecord& r, double v) { return r.chainage_m < v; });
    auto last = first;
    while (last != iri.end() && last->chainage_m < hi) ++last;
    if (first == last) {
      ++result.dropped_seconds_no_iri;
      continue;
    }
    for (auto it = first; it != last; ++it) used[static_cast<std::size_t>(it - iri.begin())] = true;
    result.pairs.push_back(build_pair(feat.second_index, feat,
                                     {&*first, static_cast<std::size_t>(last - first)}));
  }
  // Seconds of profiler coverage that no feature second claimed.
  std::size_t unused_seconds = 0;
  std::int64_t prev_second = -1;
  for (std::size_t i = 0; i < iri.size(); ++i) {
    if (used[i]) continue;
    const auto second = static_cast<std::int64_t>(std::floor(iri[i].chainage_m / geom.speed_mps));
    if (second != prev_second) {
      ++unused_seconds;
      prev_second = second;
    }
  }
  result.dropped_seconds_no_accel = unused_seconds;
  if (result.pairs.empty()) {
    throw DataError("no overlap between acceleration features and profiler chainage");
  }
  return result;
}

DistanceSplit split_by_distance(std::span<const PairedSample> pairs, const SurveyGeometry& geom,
                                double train_km) {
  if (!(train_km > 0.0)) throw DataError("train_km must be positive");
  const auto want = static_cast<std::size_t>(std::floor(train_km * 1000.0 / geom.speed_mps));
  if (want > pairs.size()) {
    throw DataError("train_km " + csv::format_double(train_km) + " exceeds the " +
                    std::to_string(pairs.size()) + " paired seconds available");
  }
  if (want == 0) throw DataError("train_km shorter than one survey second");
  DistanceSplit split;
  split.train.assign(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(want));
  if (want == pairs.size()) {
    split.test = split.train;  // full-route regime: evaluate on the training span
  } else {
    split.test.assign(pairs.begin() + static_cast<std::ptrdiff_t>(want), pairs.end());
  }
  return split;
}

void write_pairs_csv(std::ostream& out, std::span<const PairedSample> pairs) {
  out << "second_index,accel_feature,iri_mean,n_iri,chainage_start_m\n";
  for (const auto& p : pairs) {
    out << p.second_index << ',' << csv::format_double(p.accel_feature) << ','
        << csv::format_double(p.iri_mean) << ',' << p.n_iri << ','
        << csv::format_double(p.chainage_start_m) << '\n';
  }
}

void save_pairs_csv(const std::filesystem::path& path, std::span<const PairedSample> pairs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  write_pairs_csv(out, pairs);
}

std::vector<PairedSample> parse_pairs_csv(std::istream& in, std::string_view source_path) {
  constexpr std::string_view header[] = {"second_index", "accel_feature", "iri_mean", "n_iri",
                                         "chainage_start_m"};
  csv::Reader reader(in, header, source_path);
  std::vector<PairedSample> pairs;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    const std::size_t line = reader.line();
    PairedSample p;
    p.second_index = csv::parse_int64(fields[0], "second_index", line);
    p.accel_feature = csv::parse_double(fields[1], "accel_feature", line);
    p.iri_mean = csv::parse_double(fields[2], "iri_mean", line);
    p.n_iri = static_cast<int>(csv::parse_int64(fields[3], "n_iri", line));
    p.chainage_start_m = csv::parse_double(fields[4], "chainage_start_m", line);
    if (p.n_iri < 1) throw ParseError("n_iri must be >= 1", line);
    if (!pairs.empty() && p.second_index <= pairs.back().second_index) {
      throw ParseError("non-monotonic second_index " + std::to_string(p.second_index), line);
    }
    pairs.push_back(p);
  }
  if (pairs.empty()) throw ParseError("no data rows in " + std::string(source_path));
  return pairs;
}

std::vector<PairedSample> load_pairs_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_pairs_csv(in, path.string());
}

}  // namespace rri
