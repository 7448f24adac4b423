#pragma once

#include "vpg/geometry.hpp"

namespace vpg {

struct InstanceSpec {
  enum class Kind { B1, B2, B2OneString, SingleVertical };
  Kind kind = Kind::B2;
  std::size_t n = 1;
  Coord grid = 0;  // 0 means: pick the smallest comfortable grid
  int max_horizontals = 3;
  long long weight_min = 1;
  long long weight_max = 100;
  unsigned long long seed = 0;
};

InstanceSpec::Kind instance_kind_from_name(const std::string& s);
const char* instance_kind_name(InstanceSpec::Kind k);

/// Seed-deterministic pseudorandom representation in general position: all
/// vertical x's and all y-values in use are globally distinct. 1-string
/// instances reject offending objects one at a time.
Representation generate_instance(const InstanceSpec& spec);

}  // namespace vpg
