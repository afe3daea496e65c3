#ifndef SKEWCAT_TESTS_FIXTURES_HPP
#define SKEWCAT_TESTS_FIXTURES_HPP

#include "skewcat/kernel.hpp"

namespace skewcat::tests {

// one object x with a tight-tight multiplication, a nullary unit and a
// loose-tight unary generator
inline Signature mue_signature() {
  return Signature({"x"}, {
                             {"m", {kTT, {"x", "x"}, "x"}},
                             {"e", {kLL, {}, "x"}},
                             {"u", {kLT, {"x"}, "x"}},
                         });
}

inline Signature me_signature() {
  return Signature({"x"}, {
                             {"m", {kTT, {"x", "x"}, "x"}},
                             {"e", {kLL, {}, "x"}},
                         });
}

}  // namespace skewcat::tests

#endif
