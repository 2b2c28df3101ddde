#pragma once

namespace tautcert {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tautcert
