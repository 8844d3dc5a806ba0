#pragma once

namespace qhl {

inline constexpr const char* engine_version = "0.1.0";

}  // namespace qhl
