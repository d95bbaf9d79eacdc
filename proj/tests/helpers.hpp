#pragma once

#include "radix/serialize.hpp"

#include <string>

namespace testing {

inline radix::FgAbGroup G(const std::string& spec) { return radix::parse_group(spec); }

inline radix::GroupElement E(const radix::FgAbGroup& g, std::initializer_list<long> coords) {
  return g.element(coords);
}

inline radix::GroupHom hom(const radix::FgAbGroup& a, const radix::FgAbGroup& b,
                           std::initializer_list<std::initializer_list<long>> images) {
  std::vector<radix::GroupElement> ims;
  for (auto im : images) ims.push_back(b.element(im));
  return radix::GroupHom::from_images(a, b, ims);
}

}  // namespace testing
