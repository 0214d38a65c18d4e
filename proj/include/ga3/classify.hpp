#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ga3/action.hpp"
#include "ga3/bundle.hpp"
#include "ga3/links.hpp"

namespace ga3 {

// Exclusion rules for low degrees. Every degree <= 8 is ruled out: the degree
// of a del Pezzo fibration carrying a Ga^3-structure is at least eight, and
// eight itself is excluded, leaving exactly the P^2-bundle case of degree 9.
struct Rule {
  std::string id;
  std::string statement;
};

inline const Rule kRuleDegreeLowerBound{
    "degree-lower-bound",
    "a del Pezzo fibration admitting a Ga^3-structure has degree at least 8"};
inline const Rule kRuleDegreeEightExcluded{
    "degree-eight-excluded",
    "a del Pezzo fibration admitting a Ga^3-structure cannot have degree 8"};
inline const Rule kRuleEffectiveCone{
    "effective-cone-not-generated",
    "the boundary components must generate the cone of effective divisors, "
    "i.e. have classes {xi, F}"};
inline const Rule kRuleFiberComponent{
    "no-fiber-component",
    "one boundary component must be a fiber of the del Pezzo fibration"};

// Query: either a bare degree 1..9, or a concrete bundle with a boundary pair
// given as divisor classes or as defining polynomials.
struct FibrationDescriptor {
  std::optional<int> degree;
  std::optional<BundleType> bundle;
  std::optional<std::pair<DivisorClass, DivisorClass>> boundary_classes;
  std::optional<std::pair<Polynomial, Polynomial>> boundary_polys;
};

struct Decision {
  bool yes = false;
  std::optional<Rule> rule;            // the rejecting rule when no
  std::optional<SynthesisResult> synthesis;  // attached certificate when yes
  std::string note;
};

// Executable form of the classification: degree <= 8 is excluded by the two
// rules, degree 9 bundles get a synthesized, certified structure exactly when
// the boundary pair generates the effective cone with a fiber component.
inline Decision classify(const FibrationDescriptor& desc,
                         const GroebnerLimits& limits = {}) {
  Decision d;
  if (desc.degree) {
    int deg = *desc.degree;
    if (deg < 1 || deg > 9)
      throw std::invalid_argument("degree must be in 1..9");
    if (deg <= 7) {
      d.rule = kRuleDegreeLowerBound;
      return d;
    }
    if (deg == 8) {
      d.rule = kRuleDegreeEightExcluded;
      return d;
    }
    if (!desc.bundle) {
      d.yes = true;
      d.note =
          "degree 9 forces a P^2-bundle over P^1; a certificate requires "
          "bundle and boundary data";
      return d;
    }
  }
  if (!desc.bundle)
    throw std::invalid_argument("descriptor needs a degree or a bundle");
  BundleType B = *desc.bundle;

  DivisorClass c1, c2;
  if (desc.boundary_polys) {
    c1 = class_of_divisor(B, desc.boundary_polys->first);
    c2 = class_of_divisor(B, desc.boundary_polys->second);
  } else if (desc.boundary_classes) {
    c1 = desc.boundary_classes->first;
    c2 = desc.boundary_classes->second;
  } else {
    throw std::invalid_argument("bundle descriptor needs a boundary pair");
  }

  if (c1 != kFiberClass && c2 != kFiberClass) {
    d.rule = kRuleFiberComponent;
    return d;
  }
  if (!generates_effective_cone(B, c1, c2)) {
    d.rule = kRuleEffectiveCone;
    return d;
  }

  if (desc.boundary_polys) {
    // reduce the concrete boundary pair to the standard one; an automorphism
    // realizing the reduction must exist by the effectivity check above
    const Polynomial& e_poly = c1 == kXiClass ? desc.boundary_polys->first
                                              : desc.boundary_polys->second;
    const Polynomial& f_poly = c1 == kXiClass ? desc.boundary_polys->second
                                              : desc.boundary_polys->first;
    normalize_boundary(B, e_poly, f_poly);
  }

  d.synthesis = synthesize(B, limits);
  d.yes = true;
  return d;
}

}  // namespace ga3
