#pragma once

#include <filesystem>

// Locations injected by the build; tests read data files and fixtures from
// the source tree.
#ifndef CLIR_DATA_DIR
#error "CLIR_DATA_DIR must be defined by the build"
#endif
#ifndef CLIR_TEST_DIR
#error "CLIR_TEST_DIR must be defined by the build"
#endif

namespace clir_test {

inline std::filesystem::path data_dir() { return CLIR_DATA_DIR; }
inline std::filesystem::path golden_dir() { return std::filesystem::path(CLIR_TEST_DIR) / "golden"; }
inline std::filesystem::path fixture_dir() {
    return std::filesystem::path(CLIR_TEST_DIR) / "fixtures";
}

}  // namespace clir_test
