#include "rri/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "rri/csv.hpp"

namespace rri {

namespace {

constexpr std::string_view kAccelHeader[] = {"t_ms", "ax", "ay", "az"};
constexpr std::string_view kIriHeader[] = {"t_ms", "chainage_m", "iri"};

std::string label_from_path(std::string_view source_path) {
  const auto stem = std::filesystem::path(source_path).stem().string();
  return stem.empty() ? std::string(source_path) : stem;
}

StreamMeta make_meta(std::string_view source_path, std::size_t count, std::int64_t t_start,
                     std::int64_t t_end) {
  return {label_from_path(source_path), std::string(source_path), count, t_start, t_end};
}

void check_axis(double v, std::string_view column, std::size_t line) {
  if (!std::isfinite(v) || std::abs(v) > kAccelSanityLimitMps2) {
    throw ParseError("acceleration " + csv::format_double(v) + " in column " +
                         std::string(column) + " exceeds sanity bound of " +
                         csv::format_double(kAccelSanityLimitMps2) + " m/s^2",
                     line);
  }
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

AccelLog parse_accel_log(std::istream& in, std::string_view source_path,
                         const AccelParseOptions& opts) {
  csv::Reader reader(in, kAccelHeader, source_path);
  std::vector<AccelSample> samples;
  std::vector<std::string> fields;
  bool sorted = true;
  while (reader.next(fields)) {
    const std::size_t line = reader.line();
    AccelSample s;
    s.t_ms = csv::parse_int64(fields[0], "t_ms", line);
    s.ax = csv::parse_double(fields[1], "ax", line);
    s.ay = csv::parse_double(fields[2], "ay", line);
    s.az = csv::parse_double(fields[3], "az", line);
    check_axis(s.ax, "ax", line);
    check_axis(s.ay, "ay", line);
    check_axis(s.az, "az", line);
    if (!samples.empty() && s.t_ms <= samples.back().t_ms) {
      if (s.t_ms == samples.back().t_ms) {
        throw ParseError("duplicate timestamp " + std::to_string(s.t_ms), line);
      }
      if (!opts.sort_recovery) {
        throw ParseError("non-monotonic timestamp " + std::to_string(s.t_ms) + " after " +
                             std::to_string(samples.back().t_ms) +
                             " (pass --sort to recover)",
                         line);
      }
      sorted = false;
    }
    samples.push_back(s);
  }
  if (samples.empty()) {
    throw ParseError("no data rows in " + std::string(source_path));
  }
  if (!sorted) {
    std::stable_sort(samples.begin(), samples.end(),
                     [](const AccelSample& a, const AccelSample& b) { return a.t_ms < b.t_ms; });
    for (std::size_t i = 1; i < samples.size(); ++i) {
      if (samples[i].t_ms == samples[i - 1].t_ms) {
        throw ParseError("duplicate timestamp " + std::to_string(samples[i].t_ms) +
                         " in " + std::string(source_path));
      }
    }
  }
  AccelLog log;
  log.meta = make_meta(source_path, samples.size(), samples.front().t_ms, samples.back().t_ms);
  log.samples = std::move(samples);
  return log;
}

IriLog parse_iri_log(std::istream& in, std::string_view source_path,
                     const IriSpacingCheck& spacing) {
  csv::Reader reader(in, kIriHeader, source_path);
  std::vector<IriRecord> records;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    const std::size_t line = reader.line();
    IriRecord r;
    r.t_ms = csv::parse_int64(fields[0], "t_ms", line);
    r.chainage_m = csv::parse_double(fields[1], "chainage_m", line);
    r.iri = csv::parse_double(fields[2], "iri", line);
    if (!std::isfinite(r.chainage_m) || r.chainage_m < 0.0) {
      throw ParseError("negative or non-finite chainage " + csv::format_double(r.chainage_m),
                       line);
    }
    if (!std::isfinite(r.iri) || r.iri < 0.0) {
      throw ParseError("negative or non-finite IRI " + csv::format_double(r.iri), line);
    }
    if (!records.empty()) {
      const double step = r.chainage_m - records.back().chainage_m;
      if (step <= 0.0) {
        throw ParseError("non-monotonic chainage " + csv::format_double(r.chainage_m) +
                             " after " + csv::format_double(records.back().chainage_m),
                         line);
      }
      if (std::abs(step - spacing.nominal_m) > spacing.tolerance_m) {
        throw ParseError("profiler spacing " + csv::format_double(step) + " m outside " +
                             csv::format_double(spacing.nominal_m) + " +/- " +
                             csv::format_double(spacing.tolerance_m) + " m",
                         line);
      }
    }
    records.push_back(r);
  }
  if (records.empty()) {
    throw ParseError("no data rows in " + std::string(source_path));
  }
  IriLog log;
  log.meta = make_meta(source_path, records.size(), records.front().t_ms, records.back().t_ms);
  log.records = std::move(records);
  return log;
}

AccelLog load_accel_csv(const std::filesystem::path& path, const AccelParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_accel_log(in, path.string(), opts);
}

IriLog load_iri_csv(const std::filesystem::path& path, const IriSpacingCheck& spacing) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_iri_log(in, path.string(), spacing);
}

void write_accel_csv(std::ostream& out, std::span<const AccelSample> samples) {
  out << "t_ms,ax,ay,az\n";
  for (const auto& s : samples) {
    out << s.t_ms << ',' << csv::format_double(s.ax) << ',' << csv::format_double(s.ay) << ','
        << csv::format_double(s.az) << '\n';
  }
}

void write_iri_csv(std::ostream& out, std::span<const IriRecord> records) {
  out << "t_ms,chainage_m,iri\n";
  for (const auto& r : records) {
    out << r.t_ms << ',' << csv::format_double(r.chainage_m) << ','
        << csv::format_double(r.iri) << '\n';
  }
}

void save_accel_csv(const std::filesystem::path& path, std::span<const AccelSample> samples) {
  auto out = open_for_write(path);
  write_accel_csv(out, samples);
}

void save_iri_csv(const std::filesystem::path& path, std::span<const IriRecord> records) {
  auto out = open_for_write(path);
  write_iri_csv(out, records);
}

ResampleResult resample_gaps(std::span<const AccelSample> samples, double nominal_hz) {
  ResampleResult result;
  if (samples.empty()) return result;
  const double period_ms = 1000.0 / nominal_hz;
  result.samples.push_back(samples[0]);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const AccelSample& prev = samples[i - 1];
    const AccelSample& cur = samples[i];
    const double dt = static_cast<double>(cur.t_ms - prev.t_ms);
    const auto missing = static_cast<std::int64_t>(std::llround(dt / period_ms)) - 1;
    if (missing >= 1) {
      if (dt < 5.0 * period_ms) {
        for (std::int64_t j = 1; j <= missing; ++j) {
          const double frac = static_cast<double>(j) / static_cast<double>(missing + 1);
          AccelSample filled;
          filled.t_ms = prev.t_ms + std::llround(frac * dt);
          filled.ax = prev.ax + frac * (cur.ax - prev.ax);
          filled.ay = prev.ay + frac * (cur.ay - prev.ay);
          filled.az = prev.az + frac * (cur.az - prev.az);
          result.samples.push_back(filled);
          ++result.inserted;
        }
      } else {
        result.segment_starts.push_back(result.samples.size());
      }
    }
    result.samples.push_back(cur);
  }
  return result;
}

}  // namespace rri
