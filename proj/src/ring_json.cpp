#include "ringlab/ring_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ringlab {

using nlohmann::json;

std::string ring_to_json(const FiniteRing& r) {
  const int n = r.size();
  json j;
  j["name"] = r.name();
  j["size"] = n;
  auto rows = [&](const std::vector<Elem>& t) {
    json out = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int k = 0; k < n; ++k)
        row.push_back(t[static_cast<std::size_t>(i) * n + k]);
      out.push_back(std::move(row));
    }
    return out;
  };
  j["add"] = rows(r.add_table());
  j["mul"] = rows(r.mul_table());
  j["zero"] = r.zero();
  j["one"] = r.one().has_value() ? json(*r.one()) : json(nullptr);
  j["star"] = r.has_star() ? json(*r.star_perm()) : json(nullptr);
  j["labels"] = r.labels();
  return j.dump();
}

FiniteRing ring_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("ring JSON parse error: ") + e.what());
  }

  FiniteRing ring = [&] {
    try {
      const int n = j.at("size").get<int>();
      auto flat = [&](const json& rows) {
        std::vector<Elem> t;
        t.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (const auto& row : rows)
          for (const auto& v : row) t.push_back(v.get<Elem>());
        return t;
      };
      std::optional<Elem> one;
      if (!j.at("one").is_null()) one = j.at("one").get<Elem>();
      std::optional<std::vector<Elem>> star;
      if (!j.at("star").is_null()) star = j.at("star").get<std::vector<Elem>>();
      return FiniteRing(j.at("name").get<std::string>(), n, flat(j.at("add")),
                        flat(j.at("mul")), j.at("zero").get<Elem>(), one,
                        std::move(star), j.at("labels").get<std::vector<std::string>>());
    } catch (const json::exception& e) {
      throw std::runtime_error(std::string("ring JSON shape error: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("ring JSON rejected: ") + e.what());
    }
  }();

  // Full re-validation on load: a corrupted table must not get through.
  const AxiomReport rep = validate_axioms(ring);
  if (!rep.all_passed()) {
    const AxiomCheck* f = rep.first_failure();
    throw std::runtime_error("ring JSON rejected: axiom '" + f->axiom +
                             "' fails at " + f->witness);
  }
  return ring;
}

void save_ring(const FiniteRing& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << ring_to_json(r);
  if (!out) throw std::runtime_error("write failed: " + path);
}

FiniteRing load_ring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ring_from_json(ss.str());
}

}  // namespace ringlab
