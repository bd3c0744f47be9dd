#ifndef SUBCYC_VERSION_HPP
#define SUBCYC_VERSION_HPP

#include <string_view>

namespace subcyc {

inline constexpr std::string_view kProjectName = "subcyc";
inline constexpr std::string_view kVersion = "0.1.0";

} // namespace subcyc

#endif
