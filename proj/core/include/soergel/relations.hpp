#pragma once

#include <string>
#include <vector>

#include "soergel/bsmod.hpp"
#include "soergel/exprgraph.hpp"

namespace soergel {

// crossings for distant edges, six-valent vertices for adjacent edges; the empty path is the identity
BSMorphism path_morphism(const Path& p);

struct CheckResult {
  std::string name;
  std::string params;
  bool pass;
};

// every relation instantiated over all applicable colors in 1..n
std::vector<CheckResult> relation_suite(int n);
// the two unoriented paths 212321 -> 321232 and whether their morphisms differ
struct OrientationWitness {
  Path left, right;
  bool unequal;
  bool aborted_left_zero, aborted_right_zero;
};
OrientationWitness orientation_witness();

}  // namespace soergel
