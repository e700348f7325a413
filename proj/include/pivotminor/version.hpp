#ifndef PIVOTMINOR_VERSION_HPP
#define PIVOTMINOR_VERSION_HPP

namespace pivotminor {

inline constexpr const char* kToolName = "pivotminor";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace pivotminor

#endif
