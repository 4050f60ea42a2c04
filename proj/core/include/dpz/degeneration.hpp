#pragma once

// Rational double points at the lattice level: a configuration of -2-curve
// classes and the orbits of the subgroup of W generated by reflections in
// those classes.

#include <string>
#include <vector>

#include "dpz/dp_geometry.hpp"
#include "dpz/root_system.hpp"

namespace dpz {

struct RdpConfiguration {
  std::vector<Root> curves;
  DynkinType type;
};

// Validates roots, pairwise intersections in {0, 1}, independence and ADE
// shape. Effectivity of the classes is taken on trust.
RdpConfiguration make_configuration(const std::vector<LatticeVector>& curves,
                                    const MarkedLattice& m);

struct SubOrbit {
  std::vector<LatticeVector> members;  // sorted
  std::size_t size = 0;
  LatticeVector representative;  // least member
};

// Partition of the closure of weights under the configuration's reflection
// group, ordered by representative.
std::vector<SubOrbit> orbit_decomposition(
    const RdpConfiguration& config, const std::vector<LatticeVector>& weights,
    const MarkedLattice& m);

// Lines with <L, C_j> > 0 for some curve C_j.
std::vector<CurveClass> incident_lines(const RdpConfiguration& config,
                                       const MarkedLattice& m);

// Report label: "extension pair" for {lambda, lambda + C} orbits under a
// single A1, "fixed" for singletons, "orbit" otherwise.
std::string orbit_label(const SubOrbit& orbit, const RdpConfiguration& config);

}  // namespace dpz
