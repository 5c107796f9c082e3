#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "rri/types.hpp"

namespace rri {

/// 3-axis vector magnitude of one sample, sqrt(ax^2 + ay^2 + az^2).
/// This is the instantaneous vibration magnitude, not a temporal RMS.
template <class Scalar>
Scalar rms_magnitude(Scalar ax, Scalar ay, Scalar az) {
  return std::sqrt(ax * ax + ay * ay + az * az);
}

/// Buckets samples into [origin + k*1000, origin + (k+1)*1000) windows and
/// averages them. Empty buckets are omitted; `samples` must be t_ms-sorted.
std::vector<SecondFeature> per_second_features(std::span<const AccelSample> samples,
                                               std::int64_t epoch_origin_ms);

struct MagnitudeBand {
  double lo{};
  double hi{};
};

// Inclusive acceptance bands for the two pre-survey stream checks.
inline constexpr MagnitudeBand kStandstillBand{9.4, 10.0};  // around gravity
inline constexpr MagnitudeBand kShakeBand{4.0, 6.5};

/// Passes iff every per-second mean magnitude sits inside `band`.
/// Requires at least 5 features; throws DataError otherwise.
ValidationVerdict validate_standstill(std::span<const SecondFeature> features,
                                      MagnitudeBand band = kStandstillBand);
ValidationVerdict validate_shake(std::span<const SecondFeature> features,
                                 MagnitudeBand band = kShakeBand);

}  // namespace rri
