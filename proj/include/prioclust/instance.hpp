#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prioclust/rational.hpp"

namespace prioclust {

struct Client {
  std::string id;
  int color = 1;  // 1-based, within [1, colors]
  Rational radius;
  friend bool operator==(const Client&, const Client&) = default;
};

struct Facility {
  std::string id;
  std::int64_t weight = 1;  // only read by the knapsack solver
  friend bool operator==(const Facility&, const Facility&) = default;
};

/// A validated clustering instance over the point set clients ∪ facilities.
///
/// Clients and facilities are kept sorted by id, so "smallest id" tie-breaks
/// throughout the library reduce to "smallest index". Points are numbered
/// clients first (0..|C|-1), then facilities (|C|..|C|+|F|-1).
///
/// Instances are immutable once built.
class Instance {
 public:
  /// Builds and validates an instance. `distances` is a full symmetric
  /// matrix over the points in the order given (clients, then facilities);
  /// it is permuted together with the id sort.
  ///
  /// Throws ValidationError naming the offending entry.
  static Instance create(std::vector<Client> clients, std::vector<Facility> facilities,
                         std::vector<std::vector<Rational>> distances, std::int64_t k,
                         std::vector<std::int64_t> requirements);

  const std::vector<Client>& clients() const { return clients_; }
  const std::vector<Facility>& facilities() const { return facilities_; }
  int num_clients() const { return static_cast<int>(clients_.size()); }
  int num_facilities() const { return static_cast<int>(facilities_.size()); }
  int num_points() const { return num_clients() + num_facilities(); }
  int colors() const { return static_cast<int>(requirements_.size()); }
  std::int64_t k() const { return k_; }
  const std::vector<std::int64_t>& requirements() const { return requirements_; }

  const Rational& radius(int client) const { return clients_[client].radius; }
  int color(int client) const { return clients_[client].color; }

  const Rational& point_distance(int a, int b) const { return distances_[a][b]; }
  const Rational& client_distance(int u, int v) const { return distances_[u][v]; }
  const Rational& client_facility_distance(int v, int f) const {
    return distances_[v][num_clients() + f];
  }

  /// d(v, f) <= r_v.
  bool covers(int facility, int client) const {
    return client_facility_distance(client, facility) <= clients_[client].radius;
  }

  const std::string& point_id(int point) const {
    return point < num_clients() ? clients_[point].id
                                 : facilities_[point - num_clients()].id;
  }

  /// Number of clients of the given 1-based color.
  std::int64_t color_size(int color) const;

  /// Client indices whose radius admits at least one facility.
  std::vector<int> coverable_clients() const;

  /// Copy with every radius multiplied by `alpha` (>= 0). Zero radii are
  /// allowed here: a zero threshold means "covered only at distance 0".
  Instance with_scaled_radii(const Rational& alpha) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;

  std::vector<Client> clients_;
  std::vector<Facility> facilities_;
  std::vector<std::vector<Rational>> distances_;
  std::int64_t k_ = 0;
  std::vector<std::int64_t> requirements_;
};

/// Multiplies every client radius by `alpha`. Throws PreconditionError for alpha <= 0.
Instance scale_radii(const Instance& inst, const Rational& alpha);

/// Sorted, deduplicated { d(v,f) / r_v : v in C, f in F }.
std::vector<Rational> candidate_alphas(const Instance& inst);

/// True iff every client has a facility within its radius.
bool coverable(const Instance& inst);

}  // namespace prioclust
