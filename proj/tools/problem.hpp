#pragma once

#include "radix/serialize.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace radix::cli {

/// A declarative problem file:
///
///   { "version": 1,
///     "groups":    { name: group },
///     "homs":      { name: {source, target, matrix} },
///     "cocycles":  { name: {base, fiber, table} },
///     "models":    { name: model record or spec string },
///     "modules":   { name: graded module },
///     "args":      { flag: value } }
///
/// Group fields anywhere may name an entry of "groups" or be a spec string.
class Problem {
 public:
  Problem() = default;
  /// Parses and resolves everything; throws SchemaError on the first
  /// structural problem. Cocycle-identity and model violations are collected
  /// in violations() instead.
  static Problem load(const std::string& path);
  static Problem from_json(const Json& j);

  const std::vector<std::string>& violations() const { return violations_; }
  std::optional<std::string> arg(const std::string& name) const;

  FgAbGroup group(const std::string& ref) const;
  bool has_cocycle(const std::string& name) const { return cocycles_.count(name) != 0; }
  const SymmetricCocycle& cocycle(const std::string& name) const;
  bool has_hom(const std::string& name) const { return homs_.count(name) != 0; }
  const GroupHom& hom(const std::string& name) const;
  bool has_model(const std::string& name) const { return models_.count(name) != 0; }
  const Json& model(const std::string& name) const;
  bool has_module(const std::string& name) const { return modules_.count(name) != 0; }
  const GradedModule& module(const std::string& name) const;

  /// Counts per section, for the validate summary.
  std::string summary() const;

 private:
  FgAbGroup resolve_group(const Json& j, const std::string& where) const;

  std::map<std::string, FgAbGroup> groups_;
  std::map<std::string, GroupHom> homs_;
  std::map<std::string, SymmetricCocycle> cocycles_;
  std::map<std::string, Json> models_;
  std::map<std::string, GradedModule> modules_;
  std::map<std::string, std::string> args_;
  std::vector<std::string> violations_;
};

/// Model from a spec: "sphere:3,5", "local-ring:<units>:<minus one>",
/// "local-ring:<units>:char2", "discrete:<units>", a name from the problem
/// file, or a path to a JSON model file.
UnitModel resolve_unit_model(const std::string& spec, const Problem* problem);
PicModel resolve_pic_model(const std::string& spec, const Problem* problem);

/// Element syntax: "1,0,2", "[1,0,2]", or a bare integer for one generator.
GroupElement parse_element(const FgAbGroup& g, const std::string& text, const std::string& where);

/// Unit of a unit model: a rational value ("-3", "5/3") for sphere models,
/// otherwise element syntax.
GroupElement parse_unit(const UnitModel& m, const std::string& text);

}  // namespace radix::cli
