#pragma once

#include "radix/abelian.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radix {

/// One lift: a homomorphism out of the relevant total group, plus its values
/// on the chosen lifts of the base generators (e.g. kappa'(x), tau(sqrt w)).
struct LiftWitness {
  GroupHom extension;
  std::vector<GroupElement> generator_values;
};

/// Outcome of a lifting problem. `vanishes` iff `lift_count` is positive; the
/// lifts form a torsor over `torsor`, so a finite nonzero count equals its order.
struct ObstructionReport {
  std::string kind;
  FgAbGroup ambient;
  GroupElement obstruction;
  bool vanishes = false;
  FgAbGroup torsor;
  std::string torsor_name;
  /// std::nullopt when the torsor is infinite.
  std::optional<Integer> lift_count;
  std::vector<LiftWitness> witnesses;
};

/// Raised by constructions that only exist when an obstruction vanishes.
class ObstructionError : public std::runtime_error {
 public:
  explicit ObstructionError(ObstructionReport report)
      : std::runtime_error("obstructed: " + report.kind + " is " +
                           report.ambient.format(report.obstruction) + " in " +
                           report.ambient.to_string()),
        report_(std::move(report)) {}

  const ObstructionReport& report() const { return report_; }

 private:
  ObstructionReport report_;
};

}  // namespace radix
