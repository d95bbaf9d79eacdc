#include "radix/serialize.hpp"

#include <cctype>
#include <utility>

namespace radix {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::size_t>(j.get<long long>());
  if (j.is_string()) {
    Integer x = integer_from_json(j, where);
    if (x >= 0 && x.fits_ulong_p()) return x.get_ui();
  }
  throw SchemaError(where, "expected a nonnegative count");
}

std::vector<Integer> integers_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of integers");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

// A base element, either a coordinate array or a bare integer for a
// one-generator group.
GroupElement base_element(const FgAbGroup& g, const Json& j, const std::string& where) {
  if (!j.is_array() && g.num_generators() == 1)
    return g.element(std::vector<Integer>{integer_from_json(j, where)});
  return element_from_json(g, j, where);
}

template <class F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(where, e.what());
  }
}

}  // namespace

Json integer_to_json(const Integer& x) { return x.get_str(); }

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw SchemaError(where, "\"" + j.get<std::string>() + "\" is not a decimal integer");
    }
  }
  throw SchemaError(where, "expected an integer");
}

Json to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) entries.push_back(integer_to_json(m(i, k)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  const std::size_t rows = count_from_json(field(j, "rows", where), where + "/rows");
  const std::size_t cols = count_from_json(field(j, "cols", where), where + "/cols");
  const std::vector<Integer> entries = integers_from_json(field(j, "entries", where), where + "/entries");
  if (entries.size() != rows * cols)
    throw SchemaError(where, "matrix has " + std::to_string(entries.size()) + " entries, expected " +
                                 std::to_string(rows * cols));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entries[i * cols + k];
  return m;
}

Json to_json(const FgAbGroup& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(integer_to_json(d));
  Json labels = Json::array();
  for (std::size_t i = 0; i < g.num_generators(); ++i) labels.push_back(g.label(i));
  return Json{{"free_rank", g.free_rank()}, {"invariant_factors", factors}, {"labels", labels}};
}

FgAbGroup parse_group(const std::string& spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty group description");
  if (s == "0") return FgAbGroup::trivial();
  std::vector<Integer> moduli;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(start, end - start);
    if (term == "Z") {
      moduli.emplace_back(0);
    } else if (term.rfind("Z^", 0) == 0) {
      const Integer k = parse_integer(term.substr(2));
      if (k < 0 || k > 4096) throw std::invalid_argument("bad free rank in \"" + term + "\"");
      for (unsigned long i = 0; i < k.get_ui(); ++i) moduli.emplace_back(0);
    } else if (term.rfind("Z/", 0) == 0) {
      const Integer n = parse_integer(term.substr(2));
      if (n < 1) throw std::invalid_argument("bad modulus in \"" + term + "\"");
      moduli.push_back(n);
    } else if (term == "0") {
    } else {
      throw std::invalid_argument("cannot parse group term \"" + term + "\" in \"" + spec + "\"");
    }
    start = end + 1;
  }
  return cyclic_sum(moduli).group;
}

FgAbGroup group_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return wrap(where, [&] { return parse_group(j.get<std::string>()); });
  const std::size_t rank = count_from_json(field(j, "free_rank", where), where + "/free_rank");
  std::vector<Integer> factors;
  if (j.contains("invariant_factors"))
    factors = integers_from_json(j["invariant_factors"], where + "/invariant_factors");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw SchemaError(where + "/labels", "expected an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw SchemaError(where + "/labels", "expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return wrap(where, [&] { return FgAbGroup(rank, std::move(factors), std::move(labels)); });
}

Json element_to_json(const GroupElement& x) {
  Json a = Json::array();
  for (const auto& c : x.coords) a.push_back(integer_to_json(c));
  return a;
}

GroupElement element_from_json(const FgAbGroup& g, const Json& j, const std::string& where) {
  std::vector<Integer> coords = integers_from_json(j, where);
  if (coords.size() != g.num_generators())
    throw SchemaError(where, "element has " + std::to_string(coords.size()) +
                                 " coordinates, group " + g.to_string() + " has " +
                                 std::to_string(g.num_generators()) + " generators");
  return g.element(std::move(coords));
}

Json to_json(const GroupHom& h) {
  return Json{{"source", to_json(h.source())}, {"target", to_json(h.target())}, {"matrix", to_json(h.matrix())}};
}

GroupHom hom_from_json(const FgAbGroup& source, const FgAbGroup& target, const Json& matrix,
                       const std::string& where) {
  IntMatrix m = matrix_from_json(matrix, where);
  if (m.rows() != target.num_generators() || m.cols() != source.num_generators())
    throw SchemaError(where, "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                 ", expected " + std::to_string(target.num_generators()) + "x" +
                                 std::to_string(source.num_generators()));
  return wrap(where, [&] { return GroupHom(source, target, std::move(m)); });
}

Json to_json(const SymmetricCocycle& c) {
  Json table = Json::array();
  if (c.has_table()) {
    const auto elems = c.base().elements();
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = 0; b < elems.size(); ++b) {
        const GroupElement v = c.value(a, b);
        if (c.fiber().is_zero(v)) continue;
        table.push_back(Json::array({element_to_json(elems[a]), element_to_json(elems[b]), element_to_json(v)}));
      }
  }
  return Json{{"base", to_json(c.base())}, {"fiber", to_json(c.fiber())}, {"table", table}};
}

SymmetricCocycle cocycle_from_json(const Json& j, const std::string& where) {
  const FgAbGroup base = group_from_json(field(j, "base", where), where + "/base");
  const FgAbGroup fiber = group_from_json(field(j, "fiber", where), where + "/fiber");
  SymmetricCocycle c = wrap(where, [&] { return SymmetricCocycle::zero(base, fiber); });
  if (!j.contains("table")) return c;
  const Json& t = j["table"];
  if (!t.is_array()) throw SchemaError(where + "/table", "expected an array of [a, b, value]");
  if (!c.has_table() && !t.empty())
    throw SchemaError(where + "/table", "a cocycle over " + base.to_string() + " carries no table");
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string w = where + "/table/" + std::to_string(i);
    if (!t[i].is_array() || t[i].size() != 3) throw SchemaError(w, "expected [a, b, value]");
    const GroupElement a = base_element(base, t[i][0], w + "/0");
    const GroupElement b = base_element(base, t[i][1], w + "/1");
    const GroupElement v = base_element(fiber, t[i][2], w + "/2");
    c = c.with_entry(a, b, v, false);
  }
  return c;
}

namespace {

Json model_json(const char* kind, const std::string& name, const char* g0, const FgAbGroup& a,
                const char* g1, const FgAbGroup& b, const GroupHom& h) {
  Json labels = Json::array();
  for (std::size_t i = 0; i < a.num_generators(); ++i) labels.push_back(a.label(i));
  return Json{{"kind", kind}, {"name", name},      {g0, to_json(a)},
              {g1, to_json(b)},  {"connecting", to_json(h.matrix())}, {"labels", labels}};
}

struct RawModel {
  std::string name;
  FgAbGroup zero;
  FgAbGroup one;
  GroupHom connecting;
};

RawModel raw_model(const Json& j, const char* g0, const char* g1, const std::string& where) {
  RawModel m;
  m.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  m.zero = group_from_json(field(j, g0, where), where + "/" + g0);
  m.one = group_from_json(field(j, g1, where), where + "/" + g1);
  if (j.contains("labels")) {
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw SchemaError(where + "/labels", "expected strings");
      labels.push_back(l.get<std::string>());
    }
    m.zero = wrap(where + "/labels", [&] { return m.zero.with_labels(std::move(labels)); });
  }
  m.connecting = hom_from_json(m.zero, m.one, field(j, "connecting", where), where + "/connecting");
  return m;
}

}  // namespace

Json to_json(const UnitModel& m) { return model_json("unit", m.name, "U0", m.units, "K1", m.k1, m.kappa); }

Json to_json(const PicModel& m) { return model_json("pic", m.name, "P0", m.p0, "P1", m.p1, m.tau); }

UnitModel unit_model_from_json(const Json& j, const std::string& where) {
  RawModel r = raw_model(j, "U0", "K1", where);
  return UnitModel{r.name, r.zero, r.one, r.connecting};
}

PicModel pic_model_from_json(const Json& j, const std::string& where) {
  RawModel r = raw_model(j, "P0", "P1", where);
  return PicModel{r.name, r.zero, r.one, r.connecting};
}

Json to_json(const ObstructionReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json values = Json::array();
    for (const auto& v : w.generator_values) values.push_back(element_to_json(v));
    witnesses.push_back(Json{{"generator_values", values}, {"extension", to_json(w.extension)}});
  }
  return Json{{"kind", r.kind},
              {"ambient", to_json(r.ambient)},
              {"obstruction", element_to_json(r.obstruction)},
              {"obstruction_text", r.ambient.format(r.obstruction)},
              {"vanishes", r.vanishes},
              {"torsor_name", r.torsor_name},
              {"torsor", to_json(r.torsor)},
              {"lift_count", r.lift_count ? Json(integer_to_json(*r.lift_count)) : Json(nullptr)},
              {"witnesses", witnesses}};
}

Json to_json(const TwistedGroupAlgebra& t) {
  Json basis = Json::array();
  for (std::size_t a = 0; a < t.dimension(); ++a) basis.push_back(t.basis_label(a));
  Json entries = Json::array();
  for (const auto& sc : t.table())
    entries.push_back(Json::array({t.basis_label(sc.left), t.basis_label(sc.right),
                                   t.unit_label(sc.unit), t.basis_label(sc.product)}));
  return Json{{"ring", t.ring_symbol()},
              {"grading", to_json(t.grading())},
              {"units", to_json(t.units())},
              {"basis", basis},
              {"entries", entries}};
}

Json to_json(const GradedModule& m) {
  Json comps = Json::array();
  for (std::size_t d = 0; d < m.components().size(); ++d)
    comps.push_back(Json::array({element_to_json(m.grading().element_at(d)), m.at(d).rank, m.at(d).label}));
  return Json{{"grading_group", to_json(m.grading())}, {"components", comps}};
}

GradedModule graded_module_from_json(const Json& j, const std::string& where) {
  const FgAbGroup g = group_from_json(field(j, "grading_group", where), where + "/grading_group");
  if (!g.is_finite()) throw SchemaError(where, "grading group must be finite");
  std::vector<GradedModule::Component> comps(g.size());
  for (std::size_t i = 0; i < comps.size(); ++i) comps[i].label = "0";
  std::vector<bool> seen(comps.size(), false);
  const Json& cs = field(j, "components", where);
  if (!cs.is_array()) throw SchemaError(where + "/components", "expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string w = where + "/components/" + std::to_string(i);
    if (!cs[i].is_array() || cs[i].size() != 3 || !cs[i][2].is_string())
      throw SchemaError(w, "expected [degree, rank, label]");
    const std::size_t d = g.index_of(base_element(g, cs[i][0], w + "/0"));
    if (seen[d]) throw SchemaError(w, "degree listed twice");
    seen[d] = true;
    comps[d] = {count_from_json(cs[i][1], w + "/1"), cs[i][2].get<std::string>()};
  }
  return GradedModule(g, std::move(comps));
}

Json to_json(const FgAbGroup& grading, const TensorSummand& s) {
  return Json::array({element_to_json(grading.element_at(s.left)), element_to_json(grading.element_at(s.right)),
                      s.twist_label, s.sign_label});
}

Json to_json(const CoherenceReport& r) {
  return Json{{"passed", r.passed}, {"violations", r.violations}};
}

}  // namespace radix
