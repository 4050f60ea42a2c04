#include "dpz/degeneration.hpp"

#include <algorithm>
#include <unordered_map>

#include "dpz/errors.hpp"
#include "dpz/weyl.hpp"

namespace dpz {

RdpConfiguration make_configuration(const std::vector<LatticeVector>& curves,
                                    const MarkedLattice& m) {
  RdpConfiguration config;
  for (const auto& c : curves) {
    if (!is_root(c, m))
      throw ConfigurationError(to_string(c) + " is not a root");
    config.curves.emplace_back(c, m);
  }
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      if (curves[i] == curves[j])
        throw ConfigurationError("curve " + to_string(curves[i]) +
                                 " listed twice (dependent)");
  config.type = dynkin_type(curves);
  return config;
}

std::vector<SubOrbit> orbit_decomposition(
    const RdpConfiguration& config, const std::vector<LatticeVector>& weights,
    const MarkedLattice& m) {
  // Union-find-free BFS: label every reached vector with its orbit id.
  std::unordered_map<LatticeVector, std::size_t, LatticeVectorHash> orbit_of;
  std::vector<std::vector<LatticeVector>> orbits;
  for (const auto& w : weights) {
    if (w.rank() != m.r()) throw DomainError("rank mismatch in weights");
    if (orbit_of.contains(w)) continue;
    const std::size_t id = orbits.size();
    orbits.push_back({w});
    orbit_of.emplace(w, id);
    auto& members = orbits.back();
    for (std::size_t next = 0; next < members.size(); ++next) {
      for (const auto& c : config.curves) {
        LatticeVector image = reflect(c, members[next]);
        if (orbit_of.emplace(image, id).second)
          members.push_back(std::move(image));
      }
    }
  }
  std::vector<SubOrbit> out;
  out.reserve(orbits.size());
  for (auto& members : orbits) {
    std::sort(members.begin(), members.end());
    SubOrbit o;
    o.size = members.size();
    o.representative = members.front();
    o.members = std::move(members);
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.representative < b.representative;
  });
  return out;
}

std::vector<CurveClass> incident_lines(const RdpConfiguration& config,
                                       const MarkedLattice& m) {
  std::vector<CurveClass> out;
  for (auto& line : lines(m)) {
    const bool meets =
        std::any_of(config.curves.begin(), config.curves.end(),
                    [&](const Root& c) { return inner(line.vector, c.vector()) > 0; });
    if (meets) out.push_back(std::move(line));
  }
  return out;
}

std::string orbit_label(const SubOrbit& orbit,
                        const RdpConfiguration& config) {
  if (orbit.size == 1) return "fixed";
  if (orbit.size == 2 && config.curves.size() == 1) {
    const auto& c = config.curves.front().vector();
    const auto& lo = orbit.members[0];
    const auto& hi = orbit.members[1];
    if (hi - lo == c || lo - hi == c) return "extension pair";
  }
  return "orbit";
}

}  // namespace dpz
