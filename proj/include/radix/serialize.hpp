#pragma once

#include "radix/abelian.hpp"
#include "radix/extensions.hpp"
#include "radix/models.hpp"
#include "radix/obstruction.hpp"
#include "radix/radicals.hpp"
#include "radix/twisted_tensor.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace radix {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent serialized input. `where` is a JSON-pointer-like path.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(const std::string& where, const std::string& what)
      : std::invalid_argument(where + ": " + what) {}
};

// Integers are written as decimal strings; readers also accept JSON numbers.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& where);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& where);

/// {free_rank, invariant_factors[], labels[]}
Json to_json(const FgAbGroup& g);
/// Accepts the record form or a spec string such as "Z^2+Z/4" (see parse_group).
FgAbGroup group_from_json(const Json& j, const std::string& where);

/// "0", "Z", "Z^2 + Z/2 + Z/3", "Z/6"; summands need not be canonical.
FgAbGroup parse_group(const std::string& spec);

Json element_to_json(const GroupElement& x);
GroupElement element_from_json(const FgAbGroup& g, const Json& j, const std::string& where);

/// {source, target, matrix}
Json to_json(const GroupHom& h);
GroupHom hom_from_json(const FgAbGroup& source, const FgAbGroup& target, const Json& matrix,
                       const std::string& where);

/// {base, fiber, table: [[a, b, coords]...]} listing the nonzero entries.
Json to_json(const SymmetricCocycle& c);
/// Missing entries are zero. Does not validate the cocycle conditions.
SymmetricCocycle cocycle_from_json(const Json& j, const std::string& where);

/// {kind: "unit", name, U0, K1, connecting, labels}
Json to_json(const UnitModel& m);
/// {kind: "pic", name, P0, P1, connecting, labels}
Json to_json(const PicModel& m);
UnitModel unit_model_from_json(const Json& j, const std::string& where);
PicModel pic_model_from_json(const Json& j, const std::string& where);

Json to_json(const ObstructionReport& r);

/// {ring, grading, units, basis, entries: [[a, b, unit_label, a+b]...]}
Json to_json(const TwistedGroupAlgebra& t);

/// {grading_group, components: [[degree, rank, label]...]}
Json to_json(const GradedModule& m);
GradedModule graded_module_from_json(const Json& j, const std::string& where);

/// [p, q, twist_label, sign]
Json to_json(const FgAbGroup& grading, const TensorSummand& s);

Json to_json(const CoherenceReport& r);

}  // namespace radix
