// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_REPORT_HPP
#define MIRRORLAT_REPORT_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include "json.hpp"
#include "mirrorlat/rational.hpp"
#include "mirrorlat/scalar_poly.hpp"
#include "mirrorlat/version.hpp"

namespace mirrorlat {

// Key order is part of the wire format: documents must be byte-stable
// across runs, so every object is built as ordered_json.
using Json = nlohmann::ordered_json;

// Exact rationals travel as strings ("-1/12"), never as floats.
inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const LinForm& f) {
  Json j;
  j["const"] = f.c0.str();
  j["k"] = f.ck.str();
  j["kp"] = f.ckp.str();
  return j;
}

// Complex numbers as [re, im] pairs of doubles.
inline Json to_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

// Top-level document wrapper shared by every command.
inline Json envelope(const std::string& command, std::uint64_t seed, Json result) {
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["seed"] = seed;
  doc["command"] = command;
  doc["result"] = std::move(result);
  return doc;
}

}  // namespace mirrorlat

#endif  // MIRRORLAT_REPORT_HPP
