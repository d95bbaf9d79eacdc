#include "problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace radix::cli {

namespace {

std::string json_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + json_scalar(v[i]);
    return s;
  }
  return v.dump();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path, std::string("invalid JSON: ") + e.what());
  }
}

bool is_unit_record(const Json& j) { return j.is_object() && j.contains("U0"); }
bool is_pic_record(const Json& j) { return j.is_object() && j.contains("P0"); }

bool is_unit_spec(const std::string& s) {
  return s.rfind("sphere:", 0) == 0 || s.rfind("discrete:", 0) == 0;
}

}  // namespace

GroupElement parse_element(const FgAbGroup& g, const std::string& text, const std::string& where) {
  std::string s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw SchemaError(where, "unbalanced brackets in \"" + text + "\"");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Integer> coords;
  if (!trim(s).empty())
    for (const auto& part : split(s, ',')) {
      try {
        coords.push_back(parse_integer(trim(part)));
      } catch (const std::invalid_argument&) {
        throw SchemaError(where, "\"" + text + "\" is not a coordinate list");
      }
    }
  if (coords.size() != g.num_generators())
    throw SchemaError(where, "\"" + text + "\" has " + std::to_string(coords.size()) +
                                 " coordinates, " + g.to_string() + " has " +
                                 std::to_string(g.num_generators()) + " generators");
  return g.element(std::move(coords));
}

GroupElement parse_unit(const UnitModel& m, const std::string& text) {
  const std::string s = trim(text);
  const bool coordinate_syntax = !s.empty() && (s.front() == '[' || s.find(',') != std::string::npos);
  if (m.name.rfind("sphere:", 0) == 0 && !coordinate_syntax) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw SchemaError("alpha", "\"" + text + "\" is not a rational number");
    q.canonicalize();
    try {
      return sphere_unit(m, q);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("alpha", e.what());
    }
  }
  return parse_element(m.units, s, "alpha");
}

namespace {

UnitModel unit_from_spec(const std::string& spec) {
  if (spec.rfind("sphere:", 0) == 0) {
    std::set<long> primes;
    const std::string rest = spec.substr(7);
    if (!trim(rest).empty())
      for (const auto& p : split(rest, ',')) {
        try {
          const Integer v = parse_integer(trim(p));
          if (!v.fits_slong_p()) throw std::invalid_argument("too large");
          primes.insert(v.get_si());
        } catch (const std::invalid_argument&) {
          throw SchemaError("model", "bad prime \"" + p + "\" in \"" + spec + "\"");
        }
      }
    try {
      return local_truncated_sphere_model(primes);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("model", e.what());
    }
  }
  if (spec.rfind("discrete:", 0) == 0) {
    try {
      return discrete_unit_model(parse_group(spec.substr(9)));
    } catch (const std::invalid_argument& e) {
      throw SchemaError("model", e.what());
    }
  }
  throw SchemaError("model", "\"" + spec + "\" is not a unit model");
}

PicModel pic_from_spec(const std::string& spec) {
  if (spec.rfind("local-ring:", 0) != 0) throw SchemaError("model", "\"" + spec + "\" is not a Picard model");
  const auto parts = split(spec.substr(11), ':');
  if (parts.size() != 2) throw SchemaError("model", "expected local-ring:<units>:<minus one>, got \"" + spec + "\"");
  FgAbGroup units;
  try {
    units = parse_group(parts[0]);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("model", e.what());
  }
  const bool char2 = trim(parts[1]) == "char2";
  const GroupElement m1 = char2 ? units.zero() : parse_element(units, parts[1], "model");
  try {
    return local_ring_pic_model(units, m1, char2);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("model", e.what());
  }
}

}  // namespace

Problem Problem::load(const std::string& path) { return from_json(read_json_file(path)); }

Problem Problem::from_json(const Json& j) {
  Problem p;
  if (!j.is_object()) throw SchemaError("/", "problem file must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "version" && key != "groups" && key != "homs" && key != "cocycles" && key != "models" &&
        key != "modules" && key != "args")
      throw SchemaError("/" + key, "unknown section");
  if (j.contains("version") && json_scalar(j["version"]) != "1")
    throw SchemaError("/version", "unsupported version " + j["version"].dump());

  auto section = [&](const char* name) -> const Json* {
    if (!j.contains(name)) return nullptr;
    if (!j[name].is_object()) throw SchemaError(std::string("/") + name, "expected an object");
    return &j[name];
  };

  if (const Json* gs = section("groups"))
    for (const auto& [name, g] : gs->items()) {
      // Groups may refer to earlier groups by name.
      p.groups_[name] = p.resolve_group(g, "/groups/" + name);
    }

  if (const Json* hs = section("homs"))
    for (const auto& [name, h] : hs->items()) {
      const std::string w = "/homs/" + name;
      if (!h.is_object()) throw SchemaError(w, "expected {source, target, matrix}");
      const FgAbGroup src = p.resolve_group(h.value("source", Json()), w + "/source");
      const FgAbGroup tgt = p.resolve_group(h.value("target", Json()), w + "/target");
      if (!h.contains("matrix")) throw SchemaError(w, "missing field \"matrix\"");
      p.homs_.emplace(name, hom_from_json(src, tgt, h["matrix"], w + "/matrix"));
    }

  if (const Json* cs = section("cocycles"))
    for (const auto& [name, c] : cs->items()) {
      const std::string w = "/cocycles/" + name;
      if (!c.is_object()) throw SchemaError(w, "expected {base, fiber, table}");
      Json resolved = c;
      resolved["base"] = to_json(p.resolve_group(c.value("base", Json()), w + "/base"));
      resolved["fiber"] = to_json(p.resolve_group(c.value("fiber", Json()), w + "/fiber"));
      SymmetricCocycle cocycle = cocycle_from_json(resolved, w);
      for (const auto& v : cocycle.violations()) p.violations_.push_back(w + ": " + v);
      p.cocycles_.emplace(name, std::move(cocycle));
    }

  if (const Json* ms = section("models"))
    for (const auto& [name, m] : ms->items()) {
      const std::string w = "/models/" + name;
      Json resolved = m;
      ValidationReport report;
      if (m.is_string()) {
        const std::string spec = m.get<std::string>();
        report = is_unit_spec(spec) ? validate_model(unit_from_spec(spec)) : validate_model(pic_from_spec(spec));
      } else if (is_unit_record(m) || is_pic_record(m)) {
        const bool unit = is_unit_record(m);
        const char* g0 = unit ? "U0" : "P0";
        const char* g1 = unit ? "K1" : "P1";
        resolved[g0] = to_json(p.resolve_group(m[g0], w + "/" + g0));
        resolved[g1] = to_json(p.resolve_group(m.value(g1, Json()), w + "/" + g1));
        if (!resolved.contains("name")) resolved["name"] = name;
        const std::string where = w;
        // Build without the well-definedness check so violations are reported, not thrown.
        const FgAbGroup a = group_from_json(resolved[g0], where);
        const FgAbGroup b = group_from_json(resolved[g1], where);
        if (!resolved.contains("connecting")) throw SchemaError(w, "missing field \"connecting\"");
        IntMatrix mat = matrix_from_json(resolved["connecting"], w + "/connecting");
        if (mat.rows() != b.num_generators() || mat.cols() != a.num_generators())
          throw SchemaError(w + "/connecting", "matrix shape does not match the groups");
        GroupHom h = GroupHom::unchecked(a, b, std::move(mat));
        report = unit ? validate_model(UnitModel{name, a, b, h}) : validate_model(PicModel{name, a, b, h});
      } else {
        throw SchemaError(w, "expected a model spec string or a record with U0/K1 or P0/P1");
      }
      for (const auto& v : report.violations) p.violations_.push_back(w + ": " + v);
      p.models_.emplace(name, std::move(resolved));
    }

  if (const Json* ms = section("modules"))
    for (const auto& [name, m] : ms->items()) {
      const std::string w = "/modules/" + name;
      if (!m.is_object()) throw SchemaError(w, "expected {grading_group, components}");
      Json resolved = m;
      resolved["grading_group"] = to_json(p.resolve_group(m.value("grading_group", Json()), w + "/grading_group"));
      p.modules_.emplace(name, graded_module_from_json(resolved, w));
    }

  if (const Json* as = section("args"))
    for (const auto& [name, v] : as->items()) p.args_[name] = json_scalar(v);
  return p;
}

FgAbGroup Problem::resolve_group(const Json& j, const std::string& where) const {
  if (j.is_null()) throw SchemaError(where, "missing group");
  if (j.is_string()) {
    const std::string ref = j.get<std::string>();
    auto it = groups_.find(ref);
    if (it != groups_.end()) return it->second;
    try {
      return parse_group(ref);
    } catch (const std::invalid_argument&) {
      throw SchemaError(where, "dangling group reference \"" + ref + "\"");
    }
  }
  return group_from_json(j, where);
}

std::optional<std::string> Problem::arg(const std::string& name) const {
  auto it = args_.find(name);
  if (it == args_.end()) return std::nullopt;
  return it->second;
}

FgAbGroup Problem::group(const std::string& ref) const { return resolve_group(Json(ref), ref); }

const SymmetricCocycle& Problem::cocycle(const std::string& name) const {
  auto it = cocycles_.find(name);
  if (it == cocycles_.end()) throw SchemaError(name, "dangling cocycle reference");
  return it->second;
}

const GroupHom& Problem::hom(const std::string& name) const {
  auto it = homs_.find(name);
  if (it == homs_.end()) throw SchemaError(name, "dangling hom reference");
  return it->second;
}

const Json& Problem::model(const std::string& name) const {
  auto it = models_.find(name);
  if (it == models_.end()) throw SchemaError(name, "dangling model reference");
  return it->second;
}

const GradedModule& Problem::module(const std::string& name) const {
  auto it = modules_.find(name);
  if (it == modules_.end()) throw SchemaError(name, "dangling module reference");
  return it->second;
}

std::string Problem::summary() const {
  return std::to_string(groups_.size()) + " groups, " + std::to_string(homs_.size()) + " homs, " +
         std::to_string(cocycles_.size()) + " cocycles, " + std::to_string(models_.size()) +
         " models, " + std::to_string(modules_.size()) + " modules";
}

namespace {

Json model_record(const std::string& spec, const Problem* problem) {
  if (problem && problem->has_model(spec)) return problem->model(spec);
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") return read_json_file(spec);
  return Json(spec);
}

}  // namespace

UnitModel resolve_unit_model(const std::string& spec, const Problem* problem) {
  const Json j = model_record(spec, problem);
  if (j.is_string()) return unit_from_spec(j.get<std::string>());
  if (!is_unit_record(j)) throw SchemaError(spec, "not a unit model (needs U0, K1, connecting)");
  return unit_model_from_json(j, spec);
}

PicModel resolve_pic_model(const std::string& spec, const Problem* problem) {
  const Json j = model_record(spec, problem);
  if (j.is_string()) return pic_from_spec(j.get<std::string>());
  if (!is_pic_record(j)) throw SchemaError(spec, "not a Picard model (needs P0, P1, connecting)");
  return pic_model_from_json(j, spec);
}

}  // namespace radix::cli
