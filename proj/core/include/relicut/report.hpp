#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "relicut/estimators.hpp"

namespace relicut {

/// Ordered key/value record rendered as JSON or as aligned text. Both
/// renderings print every number with the same digits; NaN prints as null.
class Report {
 public:
  using List = std::vector<Report>;
  using Value = std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double, std::string, List>;

  /// Appends, or replaces the value of an existing key.
  Report& set(std::string key, Value value);

  template <class T>
  Report& add(std::string key, T value) {
    if constexpr (std::is_same_v<T, bool> || std::is_same_v<T, std::nullptr_t> || std::is_same_v<T, List> ||
                  std::is_same_v<T, Value>)
      return set(std::move(key), Value(std::move(value)));
    else if constexpr (std::is_floating_point_v<T>)
      return set(std::move(key), Value(static_cast<double>(value)));
    else if constexpr (std::is_integral_v<T> && std::is_signed_v<T>)
      return set(std::move(key), Value(static_cast<std::int64_t>(value)));
    else if constexpr (std::is_integral_v<T>)
      return set(std::move(key), Value(static_cast<std::uint64_t>(value)));
    else
      return set(std::move(key), Value(std::string(value)));
  }

  const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }
  /// Pointer to the value under `key`, or null.
  const Value* find(const std::string& key) const;

  /// One JSON object; `indent` < 0 gives a single line.
  std::string json(int indent = 2) const;
  /// "key  value" lines, keys padded to a common width; lists are printed
  /// one indented record per entry.
  std::string text() const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

/// The number as printed in reports (shortest round-trip form, "null" for
/// NaN or infinities).
std::string format_number(double x);

/// estimate, method, epsilon, eta, seed, n, m, min_cut, weighted_min_cut,
/// p_c, log_p_c, delta, alpha, cuts_enumerated, trials,
/// certified_error_bound (when present) and, with `timing`, wall_ms.
Report estimate_report(const Estimate& e, bool timing = true);

}  // namespace relicut
