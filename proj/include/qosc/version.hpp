#pragma once

namespace qosc {

inline constexpr const char* version_string = "qosc 1.0.0";

} // namespace qosc
