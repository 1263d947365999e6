#ifndef ISODISK_VERSION_HPP
#define ISODISK_VERSION_HPP

namespace isodisk {
inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kScenarioSpecVersion = 1;
}

#endif
