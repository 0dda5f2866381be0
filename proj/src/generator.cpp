#include "prioclust/generator.hpp"

#include <cstdio>
#include <random>
#include <string>

#include "prioclust/errors.hpp"

namespace prioclust {
namespace {

// Platform-independent draws; std::uniform_int_distribution is not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

std::string padded(char prefix, int index, int count) {
  const int width = static_cast<int>(std::to_string(count > 0 ? count - 1 : 0).size());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%0*d", prefix, width, index);
  return buf;
}

}  // namespace

Instance generate_random(const GeneratorConfig& config, std::uint64_t seed) {
  if (config.clients <= 0) throw PreconditionError("generator needs at least one client");
  if (config.facilities <= 0) throw PreconditionError("generator needs at least one facility");
  if (config.colors <= 0) throw PreconditionError("generator needs at least one color");
  if (config.k < 0) throw PreconditionError("k must be nonnegative");
  if (config.coordinate_range < 0) throw PreconditionError("coordinate range must be >= 0");
  if (config.radius_set.empty()) throw PreconditionError("radius set is empty");
  for (const auto& r : config.radius_set) {
    if (r <= 0) throw PreconditionError("radii must be positive");
  }
  if (config.requirement_fractions.empty() ||
      (config.requirement_fractions.size() != 1 &&
       static_cast<int>(config.requirement_fractions.size()) != config.colors)) {
    throw PreconditionError("need one requirement fraction or one per color");
  }
  for (const auto& q : config.requirement_fractions) {
    if (q < 0 || q > 1) throw PreconditionError("requirement fractions must lie in [0,1]");
  }
  if (config.min_weight < 0 || config.max_weight < config.min_weight) {
    throw PreconditionError("weight range must satisfy 0 <= min <= max");
  }

  Draw draw(seed);
  const int n = config.clients + config.facilities;
  const int dims = config.shape == MetricShape::kGrid ? 2 : 1;
  std::vector<std::vector<std::int64_t>> coords(n, std::vector<std::int64_t>(dims));
  for (auto& p : coords) {
    for (auto& x : p) x = draw.uniform(0, config.coordinate_range);
  }

  std::vector<Client> clients;
  for (int i = 0; i < config.clients; ++i) {
    Client c;
    c.id = padded('c', i, config.clients);
    c.color = static_cast<int>(draw.uniform(1, config.colors));
    const auto pick = config.radius_per_color
                          ? static_cast<std::size_t>(c.color - 1) % config.radius_set.size()
                          : static_cast<std::size_t>(draw.uniform(
                                0, static_cast<std::int64_t>(config.radius_set.size()) - 1));
    c.radius = config.radius_set[pick];
    clients.push_back(std::move(c));
  }
  std::vector<Facility> facilities;
  for (int i = 0; i < config.facilities; ++i) {
    facilities.push_back({padded('f', i, config.facilities),
                          draw.uniform(config.min_weight, config.max_weight)});
  }

  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::int64_t total = 0;
      for (int d = 0; d < dims; ++d) {
        total += coords[a][d] > coords[b][d] ? coords[a][d] - coords[b][d]
                                             : coords[b][d] - coords[a][d];
      }
      matrix[a][b] = Rational(static_cast<long>(total));
    }
  }

  std::vector<std::int64_t> requirements(config.colors);
  for (int color = 1; color <= config.colors; ++color) {
    std::int64_t size = 0;
    for (const auto& c : clients) size += c.color == color ? 1 : 0;
    const Rational& fraction = config.requirement_fractions.size() == 1
                                   ? config.requirement_fractions.front()
                                   : config.requirement_fractions[color - 1];
    const mpz_class floor_value = mpz_class(fraction.get_num() * size) / fraction.get_den();
    requirements[color - 1] = floor_value.get_si();
  }
  return Instance::create(std::move(clients), std::move(facilities), std::move(matrix), config.k,
                          std::move(requirements));
}

}  // namespace prioclust
