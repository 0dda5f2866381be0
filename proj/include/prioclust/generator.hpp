#pragma once

#include <cstdint>
#include <vector>

#include "prioclust/instance.hpp"

namespace prioclust {

enum class MetricShape { kLine, kGrid };

/// Configuration for random instances. Points live on an integer line or
/// grid with L1 distance, so the metric holds by construction.
struct GeneratorConfig {
  int clients = 10;
  int facilities = 3;
  int colors = 1;
  std::int64_t k = 2;
  MetricShape shape = MetricShape::kLine;
  int coordinate_range = 20;  // coordinates drawn from [0, coordinate_range]
  std::vector<Rational> radius_set{Rational(1)};
  /// Color i (1-based) gets radius_set[(i-1) % size] for all its clients
  /// instead of a per-client draw.
  bool radius_per_color = false;
  /// Fraction of each color class that must be covered; one entry is
  /// broadcast to all colors. m_i = floor(fraction * |C_i|).
  std::vector<Rational> requirement_fractions{Rational(1, 2)};
  std::int64_t min_weight = 1;
  std::int64_t max_weight = 1;
};

/// Deterministic per (config, seed). Throws PreconditionError for
/// unusable configurations (no clients, empty radius set, ...).
Instance generate_random(const GeneratorConfig& config, std::uint64_t seed);

}  // namespace prioclust
