#include "prioclust/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "prioclust/errors.hpp"

namespace prioclust {
namespace {

void validate_id(const std::string& id) {
  if (id.empty()) throw ValidationError("empty point id");
  if (id.find('|') != std::string::npos) {
    throw ValidationError("point id '" + id + "' contains '|'");
  }
}

}  // namespace

Instance Instance::create(std::vector<Client> clients, std::vector<Facility> facilities,
                          std::vector<std::vector<Rational>> distances, std::int64_t k,
                          std::vector<std::int64_t> requirements) {
  const std::size_t n = clients.size() + facilities.size();
  if (clients.empty()) throw ValidationError("instance has no clients");
  if (facilities.empty()) throw ValidationError("instance has no facilities");
  if (requirements.empty()) throw ValidationError("instance declares zero colors");
  if (k < 0) throw ValidationError("k must be nonnegative");

  std::set<std::string> seen;
  for (const auto& c : clients) {
    validate_id(c.id);
    if (!seen.insert(c.id).second) throw ValidationError("duplicate point id '" + c.id + "'");
    if (c.radius <= 0) throw ValidationError("client '" + c.id + "' has nonpositive radius");
    if (c.color < 1 || c.color > static_cast<int>(requirements.size())) {
      throw ValidationError("client '" + c.id + "' has color " + std::to_string(c.color) +
                            " outside [1," + std::to_string(requirements.size()) + "]");
    }
  }
  for (const auto& f : facilities) {
    validate_id(f.id);
    if (!seen.insert(f.id).second) throw ValidationError("duplicate point id '" + f.id + "'");
    if (f.weight < 0) throw ValidationError("facility '" + f.id + "' has negative weight");
  }
  if (distances.size() != n) throw ValidationError("distance matrix has wrong dimension");
  for (const auto& row : distances) {
    if (row.size() != n) throw ValidationError("distance matrix has wrong dimension");
  }

  // Sort points by id, permuting the matrix accordingly.
  std::vector<int> client_order(clients.size());
  std::iota(client_order.begin(), client_order.end(), 0);
  std::sort(client_order.begin(), client_order.end(),
            [&](int a, int b) { return clients[a].id < clients[b].id; });
  std::vector<int> facility_order(facilities.size());
  std::iota(facility_order.begin(), facility_order.end(), 0);
  std::sort(facility_order.begin(), facility_order.end(),
            [&](int a, int b) { return facilities[a].id < facilities[b].id; });

  std::vector<int> old_of_new;
  old_of_new.reserve(n);
  for (int c : client_order) old_of_new.push_back(c);
  for (int f : facility_order) old_of_new.push_back(static_cast<int>(clients.size()) + f);

  Instance inst;
  for (int c : client_order) inst.clients_.push_back(std::move(clients[c]));
  for (int f : facility_order) inst.facilities_.push_back(std::move(facilities[f]));
  inst.distances_.assign(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      inst.distances_[a][b] = distances[old_of_new[a]][old_of_new[b]];
    }
  }
  inst.k_ = k;
  inst.requirements_ = std::move(requirements);

  const auto& d = inst.distances_;
  for (std::size_t a = 0; a < n; ++a) {
    if (d[a][a] != 0) {
      throw ValidationError("nonzero self-distance at '" + inst.point_id(a) + "'");
    }
    for (std::size_t b = a + 1; b < n; ++b) {
      if (d[a][b] != d[b][a]) {
        throw ValidationError("asymmetric distance between '" + inst.point_id(a) + "' and '" +
                              inst.point_id(b) + "'");
      }
      if (d[a][b] < 0) {
        throw ValidationError("negative distance between '" + inst.point_id(a) + "' and '" +
                              inst.point_id(b) + "'");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = a + 1; c < n; ++c) {
      for (std::size_t b = 0; b < n; ++b) {
        if (b == a || b == c) continue;
        if (d[a][c] > d[a][b] + d[b][c]) {
          throw ValidationError("triangle inequality violated for (" + inst.point_id(a) + "," +
                                inst.point_id(b) + "," + inst.point_id(c) + "): d(" +
                                inst.point_id(a) + "," + inst.point_id(c) + ")=" +
                                to_string(d[a][c]) + " > " + to_string(d[a][b] + d[b][c]));
        }
      }
    }
  }

  for (int color = 1; color <= inst.colors(); ++color) {
    const std::int64_t m = inst.requirements_[color - 1];
    if (m < 0 || m > inst.color_size(color)) {
      throw ValidationError("requirement m_" + std::to_string(color) + "=" + std::to_string(m) +
                            " outside [0," + std::to_string(inst.color_size(color)) + "]");
    }
  }
  return inst;
}

std::int64_t Instance::color_size(int color) const {
  return std::count_if(clients_.begin(), clients_.end(),
                       [color](const Client& c) { return c.color == color; });
}

std::vector<int> Instance::coverable_clients() const {
  std::vector<int> result;
  for (int v = 0; v < num_clients(); ++v) {
    for (int f = 0; f < num_facilities(); ++f) {
      if (covers(f, v)) {
        result.push_back(v);
        break;
      }
    }
  }
  return result;
}

Instance Instance::with_scaled_radii(const Rational& alpha) const {
  Instance copy = *this;
  for (auto& c : copy.clients_) c.radius *= alpha;
  return copy;
}

Instance scale_radii(const Instance& inst, const Rational& alpha) {
  if (alpha <= 0) throw PreconditionError("radius scale must be positive");
  return inst.with_scaled_radii(alpha);
}

std::vector<Rational> candidate_alphas(const Instance& inst) {
  std::vector<Rational> result;
  result.reserve(static_cast<std::size_t>(inst.num_clients()) * inst.num_facilities());
  for (int v = 0; v < inst.num_clients(); ++v) {
    for (int f = 0; f < inst.num_facilities(); ++f) {
      result.push_back(inst.client_facility_distance(v, f) / inst.radius(v));
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool coverable(const Instance& inst) {
  return static_cast<int>(inst.coverable_clients().size()) == inst.num_clients();
}

}  // namespace prioclust
