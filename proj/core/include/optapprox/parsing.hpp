#pragma once

#include <string>
#include <string_view>

#include "optapprox/series.hpp"
#include "optapprox/space.hpp"

namespace optapprox {

/// Complex literal: "1", "-2.5", "i", "-i", "2i", "1+2i", "1e-3-0.5i".
Complex parse_complex(std::string_view text);

/// "dirichlet:alpha=<real>" or "table:<path>[,tail=power]".
WeightSequence parse_space_spec(const std::string& text);

/// "coeffs:[c0,c1,...]" with complex literals, or "factors:(1-z)(1+z)(2-z)"
/// restricted to linear factors; complex multipliers go in parentheses, e.g.
/// "factors:(1-(0.6+0.8i)z)".
CoeffSeries parse_function_spec(const std::string& text);

}  // namespace optapprox
