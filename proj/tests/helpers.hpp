#pragma once

#include <string>
#include <vector>

#include "finring/ring.hpp"
#include "finring/ring_spec.hpp"

namespace testing_helpers {

inline std::vector<finring::RingPtr> registry_rings() {
  std::vector<finring::RingPtr> out;
  for (const auto& spec : finring::default_registry()) out.push_back(finring::parse_ring_spec(spec));
  return out;
}

inline finring::Index el(const finring::RingPtr& r, const std::string& literal) {
  return finring::parse_element(*r, literal);
}

inline std::vector<finring::Index> idx(std::initializer_list<finring::Index> xs) { return xs; }

}  // namespace testing_helpers
