#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitResource = 3;

// Orbit cap override, read by `orbit` and `period --canonical`.
inline constexpr const char* kOrbitCapEnv = "DPZ_ORBIT_CAP";

// args excludes the program name. Writes the report to out and diagnostics to
// err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dpz::cli
