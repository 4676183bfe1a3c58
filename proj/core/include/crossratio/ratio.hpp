#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "crossratio/exact.hpp"
#include "crossratio/families.hpp"

namespace crossratio {

/// Exact non-negative fraction in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Throws GraphError for a zero denominator.
  [[nodiscard]] static Rational of(std::uint64_t num, std::uint64_t den);
  [[nodiscard]] std::string str() const;
  bool operator==(const Rational&) const = default;
};

/// Witnessed restricted crossing count over the certified crossing number.
struct RatioReport {
  std::string family;
  std::size_t ell = 0;
  std::size_t k = 1;
  DrawingStyle style = DrawingStyle::kSaturated;
  std::size_t vertices = 0;
  /// Crossings of the pattern-restricted drawing built for the family.
  std::size_t witness = 0;
  /// cr = cr_value, closed by the minimum drawing of the family.
  Certificate certificate;
  std::size_t cr = 0;
  Rational ratio;
};

/// Family names accepted by ratio_report and the command-line tool.
inline constexpr std::string_view kFamilyNames[] = {"oneplanar", "oneplanar-multi", "quasi", "kquasi", "fan"};

/// Restricted style: saturated for oneplanar families, quasi-planar for quasi,
/// fan-planar for fan. kquasi has no restricted builder and is refused.
/// Throws GraphError for an unknown family or when the certificate does not
/// settle cr, BudgetExceeded when the search runs past its ceiling.
[[nodiscard]] RatioReport ratio_report(std::string_view family, std::size_t ell, std::size_t k = 1,
                                       const SearchOptions& options = {});

}  // namespace crossratio
