#ifndef LIEALG_REPORT_HPP
#define LIEALG_REPORT_HPP

#include <string>
#include <vector>

#include "liealg/oracle.hpp"
#include "liealg/series.hpp"

namespace liealg {

/// "x + y", "2*x - 1/2*z", or "0".
std::string format_vector(const Vector& v, const std::vector<std::string>& labels);

std::string render_profile_text(const LieAlgebra& lie, const ProfileReport& report);

/// Stable JSON (sorted keys, rationals as strings) with keys dim, basis,
/// series{derived,lower_central,upper_central}, stabilization_index{...},
/// perfect_radical, near_perfect_radical, radical, center,
/// smallest_upper_bounded and flags.
std::string render_profile_json(const LieAlgebra& lie, const ProfileReport& report);

std::string render_theorems_text(const oracle::TheoremReport& report, const std::vector<std::string>& labels);
std::string render_theorems_json(const oracle::TheoremReport& report, const std::vector<std::string>& labels);

}  // namespace liealg

#endif  // LIEALG_REPORT_HPP
