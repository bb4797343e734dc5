#pragma once

#include "json.hpp"

#include <string>
#include <string_view>

#include "wpvol/graded_series.hpp"
#include "wpvol/polynomial.hpp"

namespace wpvol {

// Canonical text form, e.g. "2*pi2 + 1/2*L1^2". Length atoms print with the
// exponent of L itself (L1^4 is (L1^2)^2); every other atom prints with its own
// exponent (pi2^2 = pi^4, m0^3, g1^-2 for the inverse atom).
std::string to_text(const Polynomial& p);
std::string to_latex(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

// Minimum widths of the "L" and "m" exponent arrays.
struct JsonLayout {
  int lengths = 0;
  int moments = 0;
};

// List of {"coeff": "p/q", "pi2": a, "L": [...], "m": [...]} in canonical
// order; "r", "u", "t", "g" appear only when those atoms occur.
nlohmann::json to_json(const Polynomial& p, JsonLayout layout = {});
Polynomial polynomial_from_json(const nlohmann::json& j);

// Same term list with an extra "grade" field, wrapped with the cap.
nlohmann::json to_json(const GradedSeries& s, JsonLayout layout = {});

}  // namespace wpvol
