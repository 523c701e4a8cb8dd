// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_VERSION_HPP
#define MIRRORLAT_VERSION_HPP

namespace mirrorlat {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace mirrorlat

#endif  // MIRRORLAT_VERSION_HPP
