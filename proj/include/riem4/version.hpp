#pragma once

#include <cstdint>
#include <string>

namespace riem4 {

inline constexpr const char* kVersion = "1.0.0";

// One line per normalization choice that the numerical identity checks
// depend on. The FNV-1a hash of this block is stamped into every report so
// results from different builds are only comparable when the conventions
// match.
inline constexpr const char* kNormConventions =
    "two_form_inner=half_contraction;"
    "curvature_op=half_riemann_contraction;"
    "weyl_norm=frobenius_of_traceless_blocks;"
    "ricci_traceless_norm=tensor_norm;"
    "riemann_norm=frobenius_of_operator_matrix;"
    "scalar_block=s_over_12;"
    "ricci_action=half_antisymmetrized;"
    "ricci=contraction_1_3;"
    "orientation=coordinate_order;"
    "kahler_metric=2_re_hessian;";

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string norm_convention_hash() {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(kNormConventions)));
  return buf;
}

}  // namespace riem4
