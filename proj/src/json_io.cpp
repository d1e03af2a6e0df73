#include "fanaut/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fanaut/errors.hpp"

namespace fanaut {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw ParseError(msg);
}

std::size_t rank_from_json(const Json& j, const std::string& where) {
  Integer r = integer_from_json(j, where);
  require(r >= 0 && r <= 64, where + ": rank out of range");
  return r.get_ui();
}

NamedVectors named_vectors(const Json& j, std::size_t rank, const std::string& where) {
  require(j.is_object(), where + " must be an object");
  NamedVectors out;
  for (const auto& [name, v] : j.items()) {
    require(!name.empty(), where + ": empty name");
    out[name] = vector_from_json(v, where + "." + name);
    require(out[name].size() == rank, where + "." + name + ": expected " + std::to_string(rank) + " entries");
  }
  return out;
}

Json named_to_json(const NamedVectors& m) {
  Json j = Json::object();
  for (const auto& [name, v] : m) j[name] = to_json(v);
  return j;
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json to_json(const std::vector<IntVector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    return Integer(j.get<long>());
  }
  if (j.is_string()) {
    Integer x;
    const auto& s = j.get_ref<const std::string&>();
    require(!s.empty() && x.set_str(s, 10) == 0, where + ": not an integer");
    return x;
  }
  throw ParseError(where + ": expected an integer");
}

IntVector vector_from_json(const Json& j, const std::string& where) {
  require(j.is_array(), where + ": expected an array of integers");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(integer_from_json(j[i], where));
  return v;
}

Fan fan_from_json(const Json& j) {
  require(j.is_object(), "fan must be an object");
  require(j.contains("rank") && j.contains("rays") && j.contains("cones"), "fan needs rank, rays and cones");
  Fan f;
  f.rank = rank_from_json(j["rank"], "rank");
  f.rays = named_vectors(j["rays"], f.rank, "rays");
  require(j["cones"].is_array(), "cones must be an array");
  for (const auto& c : j["cones"]) {
    require(c.is_array(), "each cone must be an array of ray names");
    RaySet s;
    for (const auto& n : c) {
      require(n.is_string(), "ray names must be strings");
      s.push_back(n.get<std::string>());
    }
    std::sort(s.begin(), s.end());
    f.cones.push_back(std::move(s));
  }
  if (j.contains("support") && !j["support"].is_null()) {
    const auto& s = j["support"];
    require(s.is_object() && s.contains("inequalities") && s["inequalities"].is_array(),
            "support must be {\"inequalities\": [...]}");
    std::vector<IntVector> ineqs;
    for (const auto& q : s["inequalities"]) {
      ineqs.push_back(vector_from_json(q, "support.inequalities"));
      require(ineqs.back().size() == f.rank, "support inequality has wrong length");
    }
    f.support = HalfspaceCone(f.rank, std::move(ineqs));
  }
  return f;
}

Json fan_to_json(const Fan& f) {
  Json j;
  j["rank"] = f.rank;
  j["rays"] = named_to_json(f.rays);
  Json cones = Json::array();
  for (const auto& c : f.cones) cones.push_back(c);
  j["cones"] = cones;
  if (f.support) j["support"] = {{"inequalities", to_json(f.support->inequalities())}};
  return j;
}

bool is_spherical_json(const Json& j) { return j.is_object() && j.contains("fan"); }

SphericalData spherical_from_json(const Json& j) {
  require(j.is_object(), "spherical data must be an object");
  require(j.contains("rank") && j.contains("fan"), "spherical data needs rank and fan");
  SphericalData sd;
  sd.rank = rank_from_json(j["rank"], "rank");
  if (j.contains("sigma") && !j["sigma"].is_null()) sd.sigma = named_vectors(j["sigma"], sd.rank, "sigma");
  if (!j.contains("sigma")) sd.sigma = NamedVectors{};
  if (j.contains("colors")) sd.colors = named_vectors(j["colors"], sd.rank, "colors");
  if (j.contains("sp")) {
    require(j["sp"].is_array(), "sp must be an array of labels");
    for (const auto& s : j["sp"]) {
      require(s.is_string(), "sp labels must be strings");
      sd.sp.push_back(s.get<std::string>());
    }
  }
  sd.fan = fan_from_json(j["fan"]);
  require(sd.fan.rank == sd.rank, "fan rank differs from lattice rank");
  if (!sd.fan.support && sd.sigma) sd.fan.support = valuation_cone(sd.rank, *sd.sigma);
  return sd;
}

Json spherical_to_json(const SphericalData& sd) {
  Json j;
  j["rank"] = sd.rank;
  j["sigma"] = sd.sigma ? named_to_json(*sd.sigma) : Json(nullptr);
  j["colors"] = named_to_json(sd.colors);
  j["sp"] = sd.sp;
  j["fan"] = fan_to_json(sd.fan);
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e{{"kind", x.kind}, {"message", x.message}};
    if (x.witness) e["witness"] = to_json(*x.witness);
    v.push_back(e);
  }
  return {{"valid", r.valid}, {"violations", v}};
}

Json to_json(const std::vector<DemazureRoot>& roots) {
  Json j = Json::array();
  for (const auto& r : roots) j.push_back({{"alpha", to_json(r.alpha)}, {"moved", r.moved}});
  return j;
}

Json to_json(const RootData& rd) {
  return {{"stable", rd.stable},
          {"phi", to_json(rd.phi)},
          {"phi_plus", to_json(rd.phi_plus)},
          {"psi", to_json(rd.psi)},
          {"positivity", rd.positivity.to_string()}};
}

Json to_json(const Cone& c) { return {{"rays", to_json(c.rays())}, {"dim", c.dim()}}; }

Json to_json(const ColoredFan& cf) {
  Json cones = Json::array();
  for (const auto& c : cf.cones) cones.push_back({{"rays", to_json(c.cone.rays())}, {"colors", c.colors}});
  Json colors = Json::object();
  for (const auto& [d, v] : cf.color_functionals) colors[d] = to_json(v);
  return {{"rank", cf.rank}, {"cones", cones}, {"color_functionals", colors}};
}

Json to_json(const HasseDiagram& h) {
  Json covers = Json::array();
  for (const auto& [i, j] : h.covers) covers.push_back({i, j});
  return {{"nodes", h.labels}, {"covers", covers}};
}

Json to_json(const Sublattice& s) { return to_json(s.basis()); }

Json to_json(const LeviInvariants& inv) {
  Json colors = Json::object();
  for (const auto& [d, v] : inv.colors) colors[d] = to_json(v);
  return {{"lambda_A", to_json(inv.lambda_A)},
          {"nA_basis", to_json(inv.n_A)},
          {"colors_A", colors},
          {"boundary_A", inv.boundary},
          {"pa_simple_roots", to_json(inv.pa_simple_roots)}};
}

}  // namespace fanaut
