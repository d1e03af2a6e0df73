// fan-aut: command line front end for the fanaut library.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fanaut/corpus.hpp"
#include "fanaut/errors.hpp"
#include "fanaut/json_io.hpp"
#include "fanaut/linear_case.hpp"
#include "fanaut/spherical_nonlinear.hpp"
#include "fanaut/toric_levi.hpp"

using namespace fanaut;

namespace {

constexpr int kInvalid = 1;
constexpr int kParse = 2;
constexpr int kModuleError = 3;

struct Options {
  std::string file;
  std::string stable;
  std::string moved;
  std::string positivity = "lex";
  std::string outdir;
};

RaySet split_names(const std::string& s) {
  RaySet out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  std::sort(out.begin(), out.end());
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Fan load_fan(const std::string& path) {
  Json j = read_json_file(path);
  return is_spherical_json(j) ? spherical_from_json(j).fan : fan_from_json(j);
}

SphericalData load_spherical(const std::string& path) {
  Json j = read_json_file(path);
  if (!is_spherical_json(j)) return toric_as_spherical(fan_from_json(j));
  return spherical_from_json(j);
}

RaySet stable_set(const Fan& f, const Options& o, const CLI::App& cmd) {
  bool has_stable = cmd.count("--stable") > 0, has_moved = cmd.count("--moved") > 0;
  if (!has_stable && !has_moved) throw ParseError("one of --stable or --moved is required");
  if (has_stable) {
    RaySet s = split_names(o.stable);
    for (const auto& n : s)
      if (!f.rays.count(n)) throw InvalidData("unknown ray " + n);
    return s;
  }
  RaySet m = split_names(o.moved);
  for (const auto& n : m)
    if (!f.rays.count(n)) throw InvalidData("unknown ray " + n);
  RaySet s;
  for (const auto& [n, v] : f.rays)
    if (!std::binary_search(m.begin(), m.end(), n)) s.push_back(n);
  return s;
}

RootData root_data(const Fan& f, const RaySet& stable, const Positivity& pos) {
  RootData rd = phi(demazure_roots(f), stable);
  positive_system(rd, pos);
  return rd;
}

Json levi_json(const Fan& f, const RootData& rd) {
  auto inv = levi_invariants(f, rd);
  auto cf = colored_fan(f, rd, inv);
  Json out;
  out["roots"] = to_json(rd);
  out["invariants"] = to_json(inv);
  out["colored_fan"] = to_json(cf);
  out["horospherical"] = check_horospherical(cf);
  return out;
}

Json orbit_json(const Fan& f, const RaySet* stable, const Positivity& pos) {
  Json out;
  if (!stable) {
    auto p = orbit_closure_poset(f);
    out["orbit_count"] = p.cones.size();
    out["hasse"] = to_json(p.hasse);
    return out;
  }
  RootData rd = root_data(f, *stable, pos);
  auto inv = levi_invariants(f, rd);
  auto p = a_orbit_poset(colored_fan(f, rd, inv));
  out["orbit_count"] = p.colored.cones.size();
  out["hasse"] = to_json(p.hasse);
  Json collapse = Json::object();
  for (const auto& [cone, idx] : p.colored.source) collapse[label_of(cone)] = idx;
  out["collapse"] = collapse;
  return out;
}

Json nonlinear_json(const SphericalData& sd, const RaySet& stable) {
  auto r = nonlinear_restrict(sd, stable);
  Json out;
  out["lambda_A"] = to_json(r.lambda_A);
  out["nA_basis"] = to_json(r.n_A);
  out["sigma_of"] = r.sigma_of;
  out["sigma_A"] = "unknown";
  out["restricted"] = spherical_to_json(r.restricted);
  out["checks"] = {{"faces", r.faces_ok},      {"joins", r.joins_ok},     {"smooth", r.smooth},
                   {"complete", r.complete},   {"injective", r.injective}, {"l_set_preserved", r.l_set_preserved}};
  return out;
}

Json linear_json(const SphericalData& sd, const RaySet& stable, const Positivity& pos) {
  auto rr = restricted_roots(sd, stable);
  auto ll = linear_levi_invariants(sd, stable, pos);
  auto cf = linear_colored_fan(sd, ll);
  auto cont = phi_containment_check(sd, stable);
  auto cover = sigma_preservation_check(sd, ll, cf);
  Json gammas = Json::array();
  for (const auto& g : rr.gammas)
    gammas.push_back({{"gamma", to_json(g.gamma)}, {"moved", g.moved}, {"restriction", to_json(g.restriction)}});
  Json colors = Json::object();
  for (const auto& [d, v] : ll.colors) colors[d] = to_json(v);
  Json out;
  out["fiber"] = fan_to_json(ll.fiber.fan);
  out["fiber_basis"] = to_json(ll.fiber.lattice);
  out["restricted_roots"] = gammas;
  out["roots"] = to_json(ll.fiber_roots);
  out["lambda_A"] = to_json(ll.lambda_A);
  out["colors_A"] = colors;
  out["pa"] = {{"sp", ll.sp}, {"simple_roots", to_json(ll.pa_simple_roots)}};
  out["colored_fan"] = to_json(cf);
  out["checks"] = {{"opposite_characters", rr.opposite.ok},
                   {"phi_containment", cont.ok},
                   {"phi_containment_strict", cont.strict},
                   {"valuation_cone_covered", cover.is_fan && cover.inside && cover.covers}};
  return out;
}

int write_corpus(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : corpus_entries()) {
    std::ofstream(std::filesystem::path(dir) / (e.name + ".json")) << e.input.dump(2) << '\n';
    std::ofstream(std::filesystem::path(dir) / (e.name + ".expected.json")) << e.expected.dump(2) << '\n';
  }
  emit({{"written", corpus_entries().size()}, {"directory", dir}});
  return 0;
}

int error_exit(const Error& e) {
  int code = kModuleError;
  if (e.name() == "ParseError") code = kParse;
  if (e.name() == "InvalidData") code = kInvalid;
  emit({{"error", e.name()}, {"message", e.what()}});
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups of toric and spherical varieties from fans"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* c) { c->add_option("file", o.file, "input JSON")->required(); };
  auto add_selection = [&](CLI::App* c) {
    auto s = c->add_option("--stable", o.stable, "comma separated stable rays");
    auto m = c->add_option("--moved", o.moved, "comma separated moved rays");
    s->excludes(m);
    m->excludes(s);
  };
  auto add_positivity = [&](CLI::App* c) {
    c->add_option("--positivity", o.positivity, "lex or vector:<comma separated ints>");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check fan or spherical data");
  add_file(validate_cmd);
  auto* roots_cmd = app.add_subcommand("demazure-roots", "list Demazure roots of a smooth complete fan");
  add_file(roots_cmd);
  auto* phi_cmd = app.add_subcommand("phi", "root system of the automorphisms preserving the stable rays");
  add_file(phi_cmd);
  add_selection(phi_cmd);
  add_positivity(phi_cmd);
  auto* levi_cmd = app.add_subcommand("levi", "Levi invariants and colored fan");
  add_file(levi_cmd);
  add_selection(levi_cmd);
  add_positivity(levi_cmd);
  auto* cf_cmd = app.add_subcommand("colored-fan", "colored fan of the Levi action");
  add_file(cf_cmd);
  add_selection(cf_cmd);
  add_positivity(cf_cmd);
  auto* orbits_cmd = app.add_subcommand("orbits", "orbit closure poset");
  add_file(orbits_cmd);
  add_selection(orbits_cmd);
  add_positivity(orbits_cmd);
  auto* nl_cmd = app.add_subcommand("nonlinear", "restriction when every moved ray is outside the linear part");
  add_file(nl_cmd);
  add_selection(nl_cmd);
  auto* lin_cmd = app.add_subcommand("linear", "restriction when every moved ray is in the linear part");
  add_file(lin_cmd);
  add_selection(lin_cmd);
  add_positivity(lin_cmd);
  auto* corpus_cmd = app.add_subcommand("corpus", "write the bundled examples and expected facts");
  corpus_cmd->add_option("directory", o.outdir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  try {
    if (*corpus_cmd) return write_corpus(o.outdir);
    Positivity pos = Positivity::parse(o.positivity);
    if (*validate_cmd) {
      Json j = read_json_file(o.file);
      if (is_spherical_json(j)) {
        auto rep = validate(spherical_from_json(j));
        Json out = to_json(rep);
        if (rep.valid) out["boundary"] = {{"linear", classify_boundary(spherical_from_json(j)).linear},
                                          {"nonlinear", classify_boundary(spherical_from_json(j)).nonlinear}};
        emit(out);
        return rep.valid ? 0 : kInvalid;
      }
      Fan f = fan_from_json(j);
      auto rep = validate(f);
      Json out = to_json(rep);
      if (rep.valid) {
        out["smooth"] = is_smooth(f);
        out["complete"] = is_complete(f);
      }
      emit(out);
      return rep.valid ? 0 : kInvalid;
    }
    if (*roots_cmd) {
      auto roots = demazure_roots(load_fan(o.file));
      emit({{"roots", to_json(roots)}, {"count", roots.size()}});
      return 0;
    }
    if (*phi_cmd) {
      Fan f = load_fan(o.file);
      emit(to_json(root_data(f, stable_set(f, o, *phi_cmd), pos)));
      return 0;
    }
    if (*levi_cmd) {
      Fan f = load_fan(o.file);
      emit(levi_json(f, root_data(f, stable_set(f, o, *levi_cmd), pos)));
      return 0;
    }
    if (*cf_cmd) {
      Fan f = load_fan(o.file);
      RootData rd = root_data(f, stable_set(f, o, *cf_cmd), pos);
      emit(to_json(colored_fan(f, rd, levi_invariants(f, rd))));
      return 0;
    }
    if (*orbits_cmd) {
      Fan f = load_fan(o.file);
      bool selected = orbits_cmd->count("--stable") + orbits_cmd->count("--moved") > 0;
      RaySet stable = selected ? stable_set(f, o, *orbits_cmd) : RaySet{};
      emit(orbit_json(f, selected ? &stable : nullptr, pos));
      return 0;
    }
    if (*nl_cmd) {
      SphericalData sd = load_spherical(o.file);
      emit(nonlinear_json(sd, stable_set(sd.fan, o, *nl_cmd)));
      return 0;
    }
    if (*lin_cmd) {
      SphericalData sd = load_spherical(o.file);
      emit(linear_json(sd, stable_set(sd.fan, o, *lin_cmd), pos));
      return 0;
    }
  } catch (const Error& e) {
    return error_exit(e);
  }
  return 0;
}
