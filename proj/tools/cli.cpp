#include "cli.hpp"

#include "problem.hpp"

#include "radix/gradings.hpp"
#include "radix/radicals.hpp"
#include "radix/twisted_tensor.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

namespace radix::cli {

namespace {

struct Context {
  std::ostream& out;
  const Problem* problem = nullptr;
  Json result = Json::object();
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  std::map<std::string, std::unique_ptr<std::string>> values;
  std::map<std::string, CLI::Option*> options;
  std::function<int(Command&, Context&)> handler;
  const Problem* problem = nullptr;

  void option(const std::string& name, const std::string& help) {
    auto slot = std::make_unique<std::string>();
    options[name] = app->add_option("--" + name, *slot, help);
    values[name] = std::move(slot);
  }

  /// Command-line value, else the problem file's "args" entry.
  std::optional<std::string> find(const std::string& name) const {
    auto it = options.find(name);
    if (it != options.end() && it->second->count() > 0) return *values.at(name);
    if (problem) return problem->arg(name);
    return std::nullopt;
  }

  std::string get(const std::string& name) const {
    auto v = find(name);
    if (!v) throw SchemaError("--" + name, "required");
    return *v;
  }
};

FgAbGroup group_arg(const Command& c, const std::string& name) {
  const std::string ref = c.get(name);
  if (c.problem) return c.problem->group(ref);
  try {
    return parse_group(ref);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("--" + name, e.what());
  }
}

Integer positive_arg(const Command& c, const std::string& name) {
  const std::string s = c.get(name);
  Integer n;
  try {
    n = parse_integer(s);
  } catch (const std::invalid_argument&) {
    throw SchemaError("--" + name, "\"" + s + "\" is not an integer");
  }
  if (n < 1) throw SchemaError("--" + name, "must be positive");
  return n;
}

std::vector<GroupElement> parse_images(const FgAbGroup& source, const FgAbGroup& target,
                                       const std::string& text, const std::string& where) {
  std::vector<GroupElement> images;
  if (source.num_generators() == 0) return images;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ';')) images.push_back(parse_element(target, cur, where));
  if (images.size() != source.num_generators())
    throw SchemaError(where, "expected " + std::to_string(source.num_generators()) +
                                 " images separated by ';', got " + std::to_string(images.size()));
  return images;
}

GroupHom hom_arg(const Command& c, const FgAbGroup& source, const FgAbGroup& target,
                 const std::string& name) {
  const std::string text = c.get(name);
  if (c.problem && c.problem->has_hom(text)) {
    const GroupHom& h = c.problem->hom(text);
    if (!(h.source() == source) || !(h.target() == target))
      throw SchemaError("--" + name, "hom \"" + text + "\" does not go from " + source.to_string() +
                                         " to " + target.to_string());
    return h;
  }
  const auto images = parse_images(source, target, text, "--" + name);
  try {
    return GroupHom::from_images(source, target, images);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("--" + name, e.what());
  }
}

std::string describe_hom(const GroupHom& h) {
  std::string s;
  for (std::size_t j = 0; j < h.source().num_generators(); ++j)
    s += (j ? ", " : "") + h.source().label(j) + " -> " + h.target().format(h.image_of_generator(j));
  return s.empty() ? "(zero source)" : s;
}

void require_valid(const UnitModel& m) {
  const auto r = validate_model(m);
  if (!r.ok()) throw SchemaError("model " + m.name, r.violations.front());
}

void require_valid(const PicModel& m) {
  const auto r = validate_model(m);
  if (!r.ok()) throw SchemaError("model " + m.name, r.violations.front());
}

void require_valid(const SymmetricCocycle& c, const std::string& where) {
  const auto v = c.violations();
  if (!v.empty()) throw SchemaError(where, v.front());
}

std::string count_text(const ObstructionReport& r) {
  return r.lift_count ? r.lift_count->get_str() : "infinite";
}

void print_report(std::ostream& out, const ObstructionReport& r) {
  out << r.kind << " obstruction: " << r.ambient.format(r.obstruction) << " in "
      << r.ambient.to_string() << (r.vanishes ? "  (vanishes)" : "  (nonzero)") << "\n";
  out << "lifts: " << count_text(r) << ", torsor " << r.torsor_name << " = " << r.torsor.to_string()
      << "\n";
}

void print_witnesses(std::ostream& out, const ObstructionReport& r, const FgAbGroup& base,
                     const std::string& value_name) {
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const auto& w = r.witnesses[i];
    out << "  lift " << i << ":";
    for (std::size_t j = 0; j < w.generator_values.size(); ++j)
      out << (j ? "," : "") << " " << value_name << "(lift of " << base.label(j)
          << ") = " << w.extension.target().format(w.generator_values[j]);
    out << "\n";
  }
}

SymmetricCocycle cocycle_arg(const Command& c, const FgAbGroup& radical_fiber, bool fiber_fixed) {
  if (auto name = c.find("cocycle")) {
    if (!c.problem) throw SchemaError("--cocycle", "named cocycles need --input");
    const SymmetricCocycle& s = c.problem->cocycle(*name);
    if (fiber_fixed && !(s.fiber() == radical_fiber))
      throw SchemaError("--cocycle", "cocycle fiber " + s.fiber().to_string() + " is not " +
                                         radical_fiber.to_string());
    require_valid(s, "cocycle " + *name);
    return s;
  }
  const Integer n = positive_arg(c, "n");
  const GroupElement alpha = parse_element(radical_fiber, c.get("alpha"), "--alpha");
  try {
    return radical_cocycle(radical_fiber, alpha, n);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("--n", e.what());
  }
}

// ---------------------------------------------------------------------------
// Commands

int cmd_hom(Command& c, Context& ctx) {
  const FgAbGroup a = group_arg(c, "source");
  const FgAbGroup b = group_arg(c, "target");
  const HomGroup h = hom_group(a, b);
  ctx.out << "Hom(" << a.to_string() << ", " << b.to_string() << ") = " << h.group().to_string() << "\n";
  Json basis = Json::array();
  for (std::size_t k = 0; k < h.basis().size(); ++k) {
    ctx.out << "  generator " << k << " (order "
            << (h.group().generator_order(k) == 0 ? std::string("inf") : h.group().generator_order(k).get_str())
            << "): " << describe_hom(h.basis()[k]) << "\n";
    basis.push_back(to_json(h.basis()[k]));
  }
  ctx.result = Json{{"source", to_json(a)}, {"target", to_json(b)}, {"group", to_json(h.group())}, {"basis", basis}};
  return kExitOk;
}

int cmd_ext(Command& c, Context& ctx) {
  const FgAbGroup a = group_arg(c, "source");
  const FgAbGroup b = group_arg(c, "target");
  const FgAbGroup e = ext_group(a, b).group();
  ctx.out << "Ext(" << a.to_string() << ", " << b.to_string() << ") = " << e.to_string() << "\n";
  ctx.result = Json{{"source", to_json(a)}, {"target", to_json(b)}, {"group", to_json(e)}};
  return kExitOk;
}

int cmd_em_maps(Command& c, Context& ctx) {
  const FgAbGroup a = group_arg(c, "source");
  const FgAbGroup b = group_arg(c, "target");
  std::vector<int> ks{0, 1, 2, 3};
  if (auto k = c.find("k")) {
    if (*k != "0" && *k != "1" && *k != "2" && *k != "3") throw SchemaError("--k", "must be 0, 1, 2 or 3");
    ks = {std::stoi(*k)};
  }
  Json rows = Json::array();
  for (int k : ks) {
    const MappingGroupReport r = em_maps(a, b, k);
    ctx.out << "[A, Sigma^" << k << " B] = "
            << (r.group ? r.group->to_string() : std::string("undetermined")) << "\n";
    Json terms = Json::object();
    for (const auto& [name, g] : r.terms) {
      ctx.out << "  " << name << " = " << g.to_string() << "\n";
      terms[name] = to_json(g);
    }
    rows.push_back(Json{{"k", k}, {"terms", terms}, {"group", r.group ? to_json(*r.group) : Json(nullptr)}});
  }
  ctx.result = Json{{"source", to_json(a)}, {"target", to_json(b)}, {"groups", rows}};
  return kExitOk;
}

int cmd_classify_ext(Command& c, Context& ctx) {
  FgAbGroup fiber;
  if (!c.find("cocycle")) fiber = group_arg(c, "fiber");
  const SymmetricCocycle s = cocycle_arg(c, fiber, false);
  require_valid(s, "cocycle");
  const ExtClass e = cocycle_to_class(s);
  const SplitResult split = is_split(s);
  const TotalGroup total = total_group(s);
  const FgAbGroup ambient = e.ambient();
  ctx.out << "extension of " << s.base().to_string() << " by " << s.fiber().to_string() << "\n";
  ctx.out << "class: " << ambient.format(e.coords) << " in Ext = " << ambient.to_string() << "\n";
  ctx.out << "split: " << (split.split ? "yes" : "no") << "\n";
  ctx.out << "total group: " << total.group.to_string() << "\n";
  ctx.out << "  inclusion: " << describe_hom(total.inclusion) << "\n";
  for (std::size_t j = 0; j < total.generator_lifts.size(); ++j)
    ctx.out << "  lift of " << s.base().label(j) << " = " << total.group.format(total.generator_lifts[j]) << "\n";
  Json section = nullptr;
  if (split.section) {
    section = Json::array();
    for (const auto& v : *split.section) section.push_back(element_to_json(v));
  }
  Json lifts = Json::array();
  for (const auto& x : total.generator_lifts) lifts.push_back(element_to_json(x));
  ctx.result = Json{{"cocycle", to_json(s)},
                    {"ext_group", to_json(ambient)},
                    {"class", element_to_json(e.coords)},
                    {"split", split.split},
                    {"section", section},
                    {"total_group", to_json(total.group)},
                    {"inclusion", to_json(total.inclusion)},
                    {"projection", to_json(total.projection)},
                    {"generator_lifts", lifts}};
  return kExitOk;
}

int cmd_adjoin_root(Command& c, Context& ctx) {
  const UnitModel m = resolve_unit_model(c.get("model"), c.problem);
  require_valid(m);
  const GroupElement alpha = parse_unit(m, c.get("alpha"));
  const Integer n = positive_arg(c, "n");
  if (n > 512) throw SchemaError("--n", "at most 512 is supported");
  const std::string ring = c.find("ring").value_or("R");
  const std::string alpha_text = render_unit(m.units, alpha);

  ctx.out << "model: " << m.name << "\n";
  ctx.out << "adjoin x with x^" << n.get_str() << " = " << alpha_text << "\n";
  const ObstructionReport r = formal_root_obstruction(m, alpha, n);
  print_report(ctx.out, r);
  ctx.result = Json{{"model", to_json(m)}, {"alpha", element_to_json(alpha)}, {"alpha_text", alpha_text},
                    {"n", integer_to_json(n)}, {"obstruction", to_json(r)}};
  if (!r.vanishes) {
    ctx.out << "no formal root: " << ring << "[x]/(x^" << n.get_str() << " - " << alpha_text
            << ") does not lift\n";
    return kExitObstructed;
  }
  print_witnesses(ctx.out, r, FgAbGroup::cyclic(n).with_labels({"1"}), "kappa'");
  const TwistedGroupAlgebra t = adjoin_root(ring, m, alpha, n);
  ctx.out << "pi_* " << ring << "[x]/(x^" << n.get_str() << " - " << alpha_text << "), basis";
  for (std::size_t i = 0; i < t.dimension(); ++i) ctx.out << " " << t.basis_label(i);
  ctx.out << "\n";
  for (std::size_t i = 0; i < t.dimension(); ++i)
    for (std::size_t j = 0; j < t.dimension(); ++j) ctx.out << "  " << t.format_product(i, j) << "\n";
  ctx.result["table"] = to_json(t);
  return kExitOk;
}

int cmd_strict_unit(Command& c, Context& ctx) {
  const UnitModel m = resolve_unit_model(c.get("model"), c.problem);
  require_valid(m);
  const GroupElement alpha = parse_unit(m, c.get("alpha"));
  const ObstructionReport r = strict_unit_obstruction(m, alpha);
  ctx.out << "model: " << m.name << "\n";
  ctx.out << "alpha = " << render_unit(m.units, alpha) << "\n";
  print_report(ctx.out, r);
  ctx.result = Json{{"model", to_json(m)}, {"alpha", element_to_json(alpha)}, {"obstruction", to_json(r)}};
  return r.vanishes ? kExitOk : kExitObstructed;
}

int cmd_symmetric(Command& c, Context& ctx) {
  const PicModel p = resolve_pic_model(c.get("model"), c.problem);
  require_valid(p);
  const GroupElement gamma = parse_element(p.p0, c.get("gamma"), "--gamma");
  const bool sym = is_symmetric(p, gamma);
  const GroupElement twist = p.tau(gamma);
  ctx.out << "tau(" << p.p0.format(gamma) << ") = " << p.p1.format(twist) << "\n";
  ctx.out << (sym ? "symmetric" : "not symmetric") << "\n";
  ctx.result = Json{{"model", to_json(p)}, {"gamma", element_to_json(gamma)},
                    {"twist", element_to_json(twist)}, {"symmetric", sym}};
  return sym ? kExitOk : kExitObstructed;
}

int cmd_lift_grading(Command& c, Context& ctx) {
  const PicModel p = resolve_pic_model(c.get("model"), c.problem);
  require_valid(p);
  const FgAbGroup a = group_arg(c, "source");
  const GroupHom rho = hom_arg(c, a, p.p0, "rho");
  const ObstructionReport r = strict_grading_obstruction(p, rho);
  ctx.out << "rho_bar: " << describe_hom(rho) << "\n";
  for (std::size_t j = 0; j < a.num_generators(); ++j) {
    const GroupElement y = rho.image_of_generator(j);
    ctx.out << "  " << p.p0.format(y) << (is_symmetric(p, y) ? " symmetric" : " not symmetric") << "\n";
  }
  print_report(ctx.out, r);
  ctx.result = Json{{"model", to_json(p)}, {"rho_bar", to_json(rho)}, {"obstruction", to_json(r)}};
  return r.vanishes ? kExitOk : kExitObstructed;
}

int cmd_extend_grading(Command& c, Context& ctx) {
  const PicModel p = resolve_pic_model(c.get("model"), c.problem);
  require_valid(p);
  const SymmetricCocycle gamma = cocycle_arg(c, p.p0, true);
  if (!gamma.base().is_finite()) throw SchemaError("--cocycle", "base must be finite");
  const ObstructionReport r = grading_extension_obstruction(p, gamma);
  const TotalGroup g = extended_pic(p, gamma);
  ctx.out << "extension of " << gamma.base().to_string() << " by P0 = " << p.p0.to_string()
          << ": Gamma = " << g.group.to_string() << "\n";
  ctx.out << "  P0 -> Gamma: " << describe_hom(g.inclusion) << "\n";
  print_report(ctx.out, r);
  print_witnesses(ctx.out, r, gamma.base(), "tau'");
  ctx.result = Json{{"model", to_json(p)}, {"cocycle", to_json(gamma)}, {"gamma_group", to_json(g.group)},
                    {"inclusion", to_json(g.inclusion)}, {"obstruction", to_json(r)}};
  return r.vanishes ? kExitOk : kExitObstructed;
}

int cmd_tensor_check(Command& c, Context& ctx) {
  std::optional<PicModel> p;
  FgAbGroup fiber;
  if (auto spec = c.find("model")) {
    p = resolve_pic_model(*spec, c.problem);
    require_valid(*p);
    fiber = p->p0;
  } else if (!c.find("cocycle")) {
    fiber = c.find("fiber") ? group_arg(c, "fiber") : FgAbGroup::free(1);
    if (auto labels = c.find("labels")) {
      std::vector<std::string> ls;
      std::string cur;
      std::istringstream in(*labels);
      while (std::getline(in, cur, ',')) ls.push_back(cur);
      try {
        fiber = fiber.with_labels(ls);
      } catch (const std::invalid_argument& e) {
        throw SchemaError("--labels", e.what());
      }
    } else if (!c.find("fiber")) {
      fiber = fiber.with_labels({"omega"});
    }
  }
  const SymmetricCocycle gamma = cocycle_arg(c, fiber, p.has_value());
  const FgAbGroup& b = gamma.base();
  if (!b.is_finite()) throw SchemaError("--cocycle", "grading must be finite");

  const FgAbGroup z2 = FgAbGroup::cyclic(2);
  const GroupHom chi = hom_arg(c, b, z2, "chi");
  const SignForm eps = sign_form_from_parity(chi);

  auto module_arg = [&](const char* name, const char* prefix) {
    if (auto ref = c.find(name)) {
      if (!c.problem) throw SchemaError(std::string("--") + name, "named modules need --input");
      const GradedModule& m = c.problem->module(*ref);
      if (!(m.grading() == b)) throw SchemaError(std::string("--") + name, "grading mismatch");
      return m;
    }
    std::vector<GradedModule::Component> comps;
    for (std::size_t i = 0; i < b.size(); ++i) comps.push_back({1, prefix + std::to_string(i)});
    return GradedModule(b, std::move(comps));
  };
  const GradedModule left = module_arg("left", "A");
  const GradedModule right = module_arg("right", "B");

  const TwistedTensorResult t = twisted_tensor(left, right, gamma, eps);
  ctx.out << "grading " << b.to_string() << ", twist values in " << gamma.fiber().to_string() << "\n";
  Json summands = Json::array();
  for (std::size_t d = 0; d < b.size(); ++d)
    ctx.out << "  degree " << b.format(b.element_at(d)) << ": rank " << t.module.at(d).rank << " = "
            << t.module.at(d).label << "\n";
  for (const auto& s : t.summands) {
    ctx.out << "  (" << b.format(b.element_at(s.left)) << ", " << b.format(b.element_at(s.right))
            << ") twist " << s.twist_label << ", sign " << s.sign_label << "\n";
    summands.push_back(to_json(b, s));
  }

  const CoherenceReport assoc = check_associativity(gamma, eps, b);
  const CoherenceReport sym = check_symmetry(gamma, eps, b);
  ctx.out << "associativity: " << (assoc.passed ? "pass" : "FAIL") << "\n";
  for (const auto& v : assoc.violations) ctx.out << "  " << v << "\n";
  ctx.out << "symmetry: " << (sym.passed ? "pass" : "FAIL") << "\n";
  for (const auto& v : sym.violations) ctx.out << "  " << v << "\n";

  bool ok = assoc.passed && sym.passed;
  ctx.result = Json{{"product", to_json(t.module)}, {"structure_constants", summands},
                    {"associativity", to_json(assoc)}, {"symmetry", to_json(sym)}};

  if (p) {
    // The diagonal signs must define an extension of tau over Gamma.
    const GroupHom tau2 = into_torsion(p->tau, 2);
    CoherenceReport ext;
    if (!(tau2.target() == z2) && !tau2.target().is_trivial()) {
      ext.passed = false;
      ext.violations.push_back("P1[2] = " + tau2.target().to_string() + " is not Z/2; signs cannot be compared");
    } else {
      std::vector<GroupElement> values;
      for (std::size_t j = 0; j < b.num_generators(); ++j) {
        const GroupElement s = chi.image_of_generator(j);
        values.push_back(tau2.target().is_trivial() ? tau2.target().zero() : tau2.target().element(s.coords));
        if (tau2.target().is_trivial() && !z2.is_zero(s)) {
          ext.passed = false;
          ext.violations.push_back("nontrivial sign on " + b.label(j) + " but P1[2] = 0");
        }
      }
      if (ext.passed && !extend_with_values(tau2, gamma, total_group(gamma), values)) {
        ext.passed = false;
        ext.violations.push_back("diagonal signs do not extend tau over Gamma");
      }
    }
    ctx.out << "tau-extension: " << (ext.passed ? "pass" : "FAIL") << "\n";
    for (const auto& v : ext.violations) ctx.out << "  " << v << "\n";
    ctx.result["tau_extension"] = to_json(ext);
    ok = ok && ext.passed;
  }
  return ok ? kExitOk : kExitObstructed;
}

int cmd_pushout(Command& c, Context& ctx) {
  const FgAbGroup src = group_arg(c, "source");
  const FgAbGroup a = group_arg(c, "left");
  const FgAbGroup b = group_arg(c, "right");
  const GroupHom f = hom_arg(c, src, a, "f");
  const GroupHom g = hom_arg(c, src, b, "g");
  const PushoutResult r = pushout(f, g);
  ctx.out << "pushout = " << r.group.to_string() << "\n";
  ctx.out << "  from left: " << describe_hom(r.from_left) << "\n";
  ctx.out << "  from right: " << describe_hom(r.from_right) << "\n";
  ctx.result = Json{{"group", to_json(r.group)}, {"from_left", to_json(r.from_left)},
                    {"from_right", to_json(r.from_right)}};
  return kExitOk;
}

int cmd_model_sphere(Command& c, Context& ctx) {
  const UnitModel m = resolve_unit_model("sphere:" + c.get("primes"), nullptr);
  require_valid(m);
  ctx.out << "unit model " << m.name << "\n";
  ctx.out << "  U0 = " << m.units.to_string() << ", K1 = " << m.k1.to_string() << "\n";
  ctx.out << "  kappa: " << describe_hom(m.kappa) << "\n";
  ctx.result = to_json(m);
  return kExitOk;
}

int cmd_model_local_ring(Command& c, Context& ctx) {
  const std::string units = c.get("units");
  const bool char2 = c.app->get_option("--char2")->count() > 0 || c.find("char2").value_or("") == "true";
  const std::string m1 = char2 ? "char2" : c.get("minus-one");
  const PicModel p = resolve_pic_model("local-ring:" + units + ":" + m1, nullptr);
  require_valid(p);
  ctx.out << "Picard model " << p.name << "\n";
  ctx.out << "  P0 = " << p.p0.to_string() << ", P1 = " << p.p1.to_string() << "\n";
  ctx.out << "  tau: " << describe_hom(p.tau) << "\n";
  ctx.result = to_json(p);
  return kExitOk;
}

int cmd_validate(Command& c, Context& ctx) {
  if (!c.problem) throw SchemaError("--input", "required");
  if (!c.problem->violations().empty()) {
    for (const auto& v : c.problem->violations()) ctx.out << "violation: " << v << "\n";
    ctx.result = Json{{"ok", false}, {"violations", c.problem->violations()}};
    return kExitMalformed;
  }
  ctx.out << "ok (" << c.problem->summary() << ")\n";
  ctx.result = Json{{"ok", true}, {"violations", Json::array()}};
  return kExitOk;
}

struct Options {
  std::string input;
  std::string json;
};

Command& add_command(std::vector<std::unique_ptr<Command>>& cmds, CLI::App& parent, const std::string& name,
                     const std::string& help, std::function<int(Command&, Context&)> handler,
                     Options& opts) {
  auto cmd = std::make_unique<Command>();
  cmd->name = name;
  cmd->app = parent.add_subcommand(name, help);
  cmd->handler = std::move(handler);
  cmd->app->add_option("--input", opts.input, "problem file (JSON)");
  cmd->app->add_option("--json", opts.json, "write a JSON report to this path");
  cmds.push_back(std::move(cmd));
  return *cmds.back();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Obstruction calculus for formal roots and grading extensions", "radix"};
  app.require_subcommand(1);
  Options opts;
  std::vector<std::unique_ptr<Command>> cmds;

  auto& hom = add_command(cmds, app, "hom", "Hom(A, B) with explicit generators", cmd_hom, opts);
  hom.option("source", "group A");
  hom.option("target", "group B");
  auto& ext = add_command(cmds, app, "ext", "Ext(A, B)", cmd_ext, opts);
  ext.option("source", "group A");
  ext.option("target", "group B");
  auto& em = add_command(cmds, app, "em-maps", "[HA, Sigma^k HB] for k = 0..3", cmd_em_maps, opts);
  em.option("source", "group A");
  em.option("target", "group B");
  em.option("k", "suspension degree 0..3 (default: all)");
  auto& cls = add_command(cmds, app, "classify-ext", "class, splitting and total group of a cocycle",
                          cmd_classify_ext, opts);
  cls.option("cocycle", "cocycle name in the problem file");
  cls.option("fiber", "fiber group for a radical cocycle");
  cls.option("alpha", "element of the fiber");
  cls.option("n", "order of the cyclic base");
  auto& adj = add_command(cmds, app, "adjoin-root", "formal n'th root of a unit", cmd_adjoin_root, opts);
  adj.option("model", "unit model (sphere:3,5, discrete:<group>, name, or file)");
  adj.option("alpha", "unit (rational for sphere models, else coordinates)");
  adj.option("n", "root degree");
  adj.option("ring", "display symbol for the base ring");
  auto& su = add_command(cmds, app, "strict-unit", "strict unit obstruction", cmd_strict_unit, opts);
  su.option("model", "unit model");
  su.option("alpha", "unit");
  auto& sym = add_command(cmds, app, "symmetric", "is tau(gamma) trivial", cmd_symmetric, opts);
  sym.option("model", "Picard model (local-ring:<units>:<minus one>, name, or file)");
  sym.option("gamma", "element of P0");
  auto& lg = add_command(cmds, app, "lift-grading", "strict grading obstruction", cmd_lift_grading, opts);
  lg.option("model", "Picard model");
  lg.option("source", "grading group A");
  lg.option("rho", "images of the generators of A in P0, ';'-separated, or a hom name");
  auto& eg = add_command(cmds, app, "extend-grading", "grading extension obstruction", cmd_extend_grading, opts);
  eg.option("model", "Picard model");
  eg.option("cocycle", "cocycle name with fiber P0");
  eg.option("alpha", "element of P0 (radical cocycle)");
  eg.option("n", "order of the cyclic base (radical cocycle)");
  auto& tc = add_command(cmds, app, "tensor-check", "twisted tensor product and coherence checks",
                         cmd_tensor_check, opts);
  tc.option("model", "Picard model supplying the fiber and tau");
  tc.option("fiber", "fiber group when no model is given (default Z)");
  tc.option("labels", "comma-separated fiber generator labels (default omega)");
  tc.option("cocycle", "cocycle name");
  tc.option("alpha", "element of the fiber (radical cocycle)");
  tc.option("n", "order of the cyclic grading (radical cocycle)");
  tc.option("chi", "parity character: Z/2 images of the grading generators");
  tc.option("left", "left module name");
  tc.option("right", "right module name");
  auto& po = add_command(cmds, app, "pushout", "pushout of C -> A and C -> B", cmd_pushout, opts);
  po.option("source", "group C");
  po.option("left", "group A");
  po.option("right", "group B");
  po.option("f", "images of the generators of C in A, or a hom name");
  po.option("g", "images of the generators of C in B, or a hom name");

  CLI::App* model = app.add_subcommand("model", "build a model");
  model->require_subcommand(1);
  auto& ms = add_command(cmds, *model, "sphere", "localized truncated sphere unit model", cmd_model_sphere, opts);
  ms.option("primes", "comma-separated odd primes");
  auto& ml = add_command(cmds, *model, "local-ring", "Picard model of a local ring", cmd_model_local_ring, opts);
  ml.option("units", "unit group");
  ml.option("minus-one", "coordinates of -1");
  ml.app->add_flag("--char2", "-1 = 1 (characteristic 2)");
  auto& val = add_command(cmds, app, "validate", "validate a problem file", cmd_validate, opts);
  (void)val;

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    const int code = app.exit(e, sink, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  Command* active = nullptr;
  for (auto& c : cmds)
    if (c->app->parsed()) active = c.get();
  if (!active) {
    err << "no command given\n";
    return kExitMalformed;
  }

  Context ctx{out};
  int code = kExitOk;
  std::optional<Problem> problem;
  Json report;
  try {
    if (!opts.input.empty()) {
      problem = Problem::load(opts.input);
      ctx.problem = &*problem;
      active->problem = &*problem;
      if (active->name != "validate" && !problem->violations().empty())
        throw SchemaError(opts.input, problem->violations().front());
    }
    code = active->handler(*active, ctx);
    report = Json{{"command", active->name},
                  {"status", code == kExitOk ? "ok" : code == kExitObstructed ? "obstructed" : "malformed"},
                  {"exit_code", code},
                  {"result", ctx.result}};
  } catch (const ObstructionError& e) {
    out << e.what() << "\n";
    code = kExitObstructed;
    report = Json{{"command", active->name}, {"status", "obstructed"}, {"exit_code", code},
                  {"result", to_json(e.report())}};
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    code = kExitMalformed;
    report = Json{{"command", active->name}, {"status", "malformed"}, {"exit_code", code}, {"error", e.what()}};
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    code = kExitMalformed;
    report = Json{{"command", active->name}, {"status", "malformed"}, {"exit_code", code}, {"error", e.what()}};
  }

  if (!opts.json.empty()) {
    std::ofstream f(opts.json);
    if (!f) {
      err << "error: cannot write " << opts.json << "\n";
      return kExitMalformed;
    }
    f << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace radix::cli
