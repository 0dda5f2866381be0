#include "prioclust/instance_io.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "prioclust/errors.hpp"

namespace prioclust {
namespace {

using nlohmann::json;

const json& require_field(const json& obj, const char* name, std::string_view where) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ParseError(std::string(where) + ": missing field '" + name + "'");
  }
  return obj.at(name);
}

std::int64_t require_int(const json& value, std::string_view what) {
  if (!value.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

std::string pair_key(const std::string& a, const std::string& b) {
  return a < b ? a + "|" + b : b + "|" + a;
}

}  // namespace

json rational_to_json(const Rational& value) {
  if (is_integer(value) && value.get_num().fits_slong_p()) return json(value.get_num().get_si());
  return json(to_string(value));
}

Rational rational_from_json(const json& value, std::string_view what) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(std::string(what) + ": " + e.what());
    }
  }
  throw ParseError(std::string(what) + " must be a rational string or integer");
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  const std::int64_t colors = require_int(require_field(doc, "colors", "instance"), "colors");
  const std::int64_t k = require_int(require_field(doc, "k", "instance"), "k");
  const json& req = require_field(doc, "requirements", "instance");
  if (!req.is_array()) throw ParseError("requirements must be an array");
  std::vector<std::int64_t> requirements;
  for (const auto& m : req) requirements.push_back(require_int(m, "requirement"));
  if (colors < 1 || static_cast<std::int64_t>(requirements.size()) != colors) {
    throw ValidationError("requirements has " + std::to_string(requirements.size()) +
                          " entries but colors = " + std::to_string(colors));
  }

  std::vector<Client> clients;
  const json& cl = require_field(doc, "clients", "instance");
  if (!cl.is_array()) throw ParseError("clients must be an array");
  for (const auto& entry : cl) {
    const json& id = require_field(entry, "id", "client");
    if (!id.is_string()) throw ParseError("client id must be a string");
    Client c;
    c.id = id.get<std::string>();
    c.color = static_cast<int>(require_int(require_field(entry, "color", "client " + c.id),
                                           "client color"));
    c.radius = rational_from_json(require_field(entry, "radius", "client " + c.id),
                                  "radius of client " + c.id);
    clients.push_back(std::move(c));
  }

  std::vector<Facility> facilities;
  const json& fl = require_field(doc, "facilities", "instance");
  if (!fl.is_array()) throw ParseError("facilities must be an array");
  for (const auto& entry : fl) {
    const json& id = require_field(entry, "id", "facility");
    if (!id.is_string()) throw ParseError("facility id must be a string");
    Facility f;
    f.id = id.get<std::string>();
    if (entry.contains("weight")) f.weight = require_int(entry.at("weight"), "facility weight");
    facilities.push_back(std::move(f));
  }

  std::vector<std::string> ids;
  for (const auto& c : clients) ids.push_back(c.id);
  for (const auto& f : facilities) ids.push_back(f.id);
  std::map<std::string, int> index_of;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!index_of.emplace(ids[i], static_cast<int>(i)).second) {
      throw ValidationError("duplicate point id '" + ids[i] + "'");
    }
  }

  const std::size_t n = ids.size();
  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
  std::vector<std::vector<bool>> known(n, std::vector<bool>(n, false));
  const json& dist = require_field(doc, "distances", "instance");
  if (!dist.is_object()) throw ParseError("distances must be an object");
  for (auto it = dist.begin(); it != dist.end(); ++it) {
    const std::string& key = it.key();
    const auto bar = key.find('|');
    if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos) {
      throw ParseError("distance key '" + key + "' is not of the form idA|idB");
    }
    const std::string a = key.substr(0, bar);
    const std::string b = key.substr(bar + 1);
    const auto ia = index_of.find(a);
    const auto ib = index_of.find(b);
    if (ia == index_of.end() || ib == index_of.end()) {
      throw ValidationError("distance key '" + key + "' names an unknown point");
    }
    const Rational value = rational_from_json(it.value(), "distance " + key);
    const int x = ia->second;
    const int y = ib->second;
    if (known[x][y] && matrix[x][y] != value) {
      throw ValidationError("asymmetric distance between '" + a + "' and '" + b + "'");
    }
    matrix[x][y] = value;
    matrix[y][x] = value;
    known[x][y] = known[y][x] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!known[x][y]) {
        throw ValidationError("missing distance '" + pair_key(ids[x], ids[y]) + "'");
      }
    }
  }
  return Instance::create(std::move(clients), std::move(facilities), std::move(matrix), k,
                          std::move(requirements));
}

Instance load_instance(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed instance JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

Instance load_instance_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_instance(in);
}

json instance_to_json(const Instance& inst) {
  json doc;
  doc["colors"] = inst.colors();
  doc["k"] = inst.k();
  doc["requirements"] = inst.requirements();
  json clients = json::array();
  for (const auto& c : inst.clients()) {
    clients.push_back({{"id", c.id}, {"color", c.color}, {"radius", to_string(c.radius)}});
  }
  doc["clients"] = std::move(clients);
  json facilities = json::array();
  for (const auto& f : inst.facilities()) {
    facilities.push_back({{"id", f.id}, {"weight", f.weight}});
  }
  doc["facilities"] = std::move(facilities);
  json distances = json::object();
  for (int a = 0; a < inst.num_points(); ++a) {
    for (int b = a + 1; b < inst.num_points(); ++b) {
      distances[pair_key(inst.point_id(a), inst.point_id(b))] =
          to_string(inst.point_distance(a, b));
    }
  }
  doc["distances"] = std::move(distances);
  return doc;
}

std::string dump_instance(const Instance& inst) { return instance_to_json(inst).dump(1) + "\n"; }

std::string instance_digest(const Instance& inst) {
  const std::string canonical = instance_to_json(inst).dump();
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char ch : canonical) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace prioclust
