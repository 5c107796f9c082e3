#include "rri/signal.hpp"

#include <algorithm>
#include <limits>

namespace rri {

namespace {

std::int64_t floor_div_1000(std::int64_t v) {
  std::int64_t q = v / 1000;
  if (v % 1000 != 0 && v < 0) --q;
  return q;
}

ValidationVerdict check_band(ValidationKind kind, std::span<const SecondFeature> features,
                             MagnitudeBand band) {
  if (features.size() < 5) {
    throw DataError("validation needs at least 5 per-second features, got " +
                    std::to_string(features.size()));
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& f : features) {
    lo = std::min(lo, f.mean_magnitude);
    hi = std::max(hi, f.mean_magnitude);
  }
  const bool passed = lo >= band.lo && hi <= band.hi;
  return {kind, lo, hi, passed};
}

}  // namespace

std::vector<SecondFeature> per_second_features(std::span<const AccelSample> samples,
                                               std::int64_t epoch_origin_ms) {
  std::vector<SecondFeature> out;
  std::size_t i = 0;
  while (i < samples.size()) {
    const std::int64_t k = floor_div_1000(samples[i].t_ms - epoch_origin_ms);
    const std::int64_t bucket_end = epoch_origin_ms + (k + 1) * 1000;
    double sum_mag = 0.0, sum_ax = 0.0, sum_ay = 0.0, sum_az = 0.0;
    std::size_t n = 0;
    for (; i < samples.size() && samples[i].t_ms < bucket_end; ++i, ++n) {
      const auto& s = samples[i];
      sum_mag += rms_magnitude(s.ax, s.ay, s.az);
      sum_ax += s.ax;
      sum_ay += s.ay;
      sum_az += s.az;
    }
    const double dn = static_cast<double>(n);
    out.push_back({k, sum_mag / dn, sum_ax / dn, sum_ay / dn, sum_az / dn, n});
  }
  return out;
}

ValidationVerdict validate_standstill(std::span<const SecondFeature> features,
                                      MagnitudeBand band) {
  return check_band(ValidationKind::standstill, features, band);
}

ValidationVerdict validate_shake(std::span<const SecondFeature> features, MagnitudeBand band) {
  return check_band(ValidationKind::shake, features, band);
}

}  // namespace rri
