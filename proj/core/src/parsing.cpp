#include "optapprox/parsing.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace optapprox {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t pos, const std::string& what) {
  throw SpecParseError(what + " at position " + std::to_string(pos) + " in '" +
                       std::string(text) + "'");
}

// Parses a float at pos, accepting a leading '+'. Returns false when no
// digits are found; pos is advanced past the number on success.
bool take_float(std::string_view s, std::size_t& pos, double& out) {
  std::size_t p = pos;
  bool negate = false;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
    negate = s[p] == '-';
    ++p;
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data() + p, s.data() + s.size(), v);
  if (ec != std::errc() || ptr == s.data() + p) return false;
  pos = static_cast<std::size_t>(ptr - s.data());
  out = negate ? -v : v;
  return true;
}

// One signed component at pos: a real number, or an imaginary one with an
// 'i' suffix ("2i", "i", "-i").
struct Component {
  double value = 0.0;
  bool imaginary = false;
};

bool take_component(std::string_view s, std::size_t& pos, Component& out) {
  std::size_t p = pos;
  double v = 0.0;
  if (take_float(s, p, v)) {
    if (p < s.size() && s[p] == 'i') {
      out = {v, true};
      pos = p + 1;
    } else {
      out = {v, false};
      pos = p;
    }
    return true;
  }
  // bare "i" with an optional sign
  double sign = 1.0;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
    sign = s[p] == '-' ? -1.0 : 1.0;
    ++p;
  }
  if (p < s.size() && s[p] == 'i') {
    out = {sign, true};
    pos = p + 1;
    return true;
  }
  return false;
}

Complex parse_complex_at(std::string_view s, std::size_t& pos) {
  Component first;
  if (!take_component(s, pos, first)) {
    fail(s, pos, "expected a complex literal");
  }
  double re = first.imaginary ? 0.0 : first.value;
  double im = first.imaginary ? first.value : 0.0;
  if (!first.imaginary && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    Component second;
    const std::size_t mark = pos;
    if (take_component(s, pos, second)) {
      if (!second.imaginary) fail(s, mark, "second component must be imaginary");
      im = second.value;
    }
  }
  return Complex(re, im);
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// One linear factor body, already unwrapped from its parentheses:
// term (sign term)? with term := '(' complex ')' ['z'] | literal ['z'] | 'z'.
std::pair<Complex, Complex> parse_linear_factor(std::string_view body,
                                                std::string_view context,
                                                std::size_t offset) {
  Complex c0(0.0, 0.0), c1(0.0, 0.0);
  bool saw_const = false, saw_linear = false;
  std::size_t pos = 0;
  double sign = 1.0;
  bool first = true;
  while (pos < body.size()) {
    if (!first) {
      if (body[pos] == '+') {
        sign = 1.0;
        ++pos;
      } else if (body[pos] == '-') {
        sign = -1.0;
        ++pos;
      } else {
        fail(context, offset + pos, "expected '+' or '-'");
      }
    } else if (body[pos] == '-') {
      sign = -1.0;
      ++pos;
    } else if (body[pos] == '+') {
      ++pos;
    }
    first = false;

    Complex coef(1.0, 0.0);
    bool have_coef = false;
    if (pos < body.size() && body[pos] == '(') {
      const std::size_t close = body.find(')', pos);
      if (close == std::string_view::npos) {
        fail(context, offset + pos, "unclosed parenthesis");
      }
      std::string_view inner = body.substr(pos + 1, close - pos - 1);
      std::size_t ipos = 0;
      coef = parse_complex_at(inner, ipos);
      if (ipos != inner.size()) {
        fail(context, offset + pos + 1 + ipos, "trailing characters in coefficient");
      }
      pos = close + 1;
      have_coef = true;
    } else if (pos < body.size() && body[pos] == 'i') {
      coef = Complex(0.0, 1.0);
      ++pos;
      have_coef = true;
    } else if (pos < body.size() && body[pos] != 'z') {
      std::size_t p = pos;
      double v = 0.0;
      if (!take_float(body, p, v)) {
        fail(context, offset + pos, "expected a coefficient or 'z'");
      }
      if (p < body.size() && body[p] == 'i') {
        coef = Complex(0.0, v);
        ++p;
      } else {
        coef = Complex(v, 0.0);
      }
      pos = p;
      have_coef = true;
    }

    if (pos < body.size() && body[pos] == 'z') {
      ++pos;
      if (saw_linear) fail(context, offset + pos, "more than one z term");
      saw_linear = true;
      c1 = sign * coef;
    } else {
      if (!have_coef) fail(context, offset + pos, "expected a coefficient or 'z'");
      if (saw_const) fail(context, offset + pos, "more than one constant term");
      saw_const = true;
      c0 = sign * coef;
    }
  }
  if (!saw_const && !saw_linear) {
    fail(context, offset, "empty factor");
  }
  return {c0, c1};
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view s = strip(text);
  std::size_t pos = 0;
  const Complex v = parse_complex_at(s, pos);
  if (pos != s.size()) {
    fail(s, pos, "trailing characters after complex literal");
  }
  return v;
}

WeightSequence parse_space_spec(const std::string& text) {
  const std::string_view s = strip(text);
  constexpr std::string_view kDirichlet = "dirichlet:";
  constexpr std::string_view kTable = "table:";
  if (s.substr(0, kDirichlet.size()) == kDirichlet) {
    std::string_view rest = s.substr(kDirichlet.size());
    constexpr std::string_view kAlpha = "alpha=";
    if (rest.substr(0, kAlpha.size()) != kAlpha) {
      fail(s, kDirichlet.size(), "expected 'alpha='");
    }
    std::size_t pos = kDirichlet.size() + kAlpha.size();
    double alpha = 0.0;
    if (!take_float(s, pos, alpha) || pos != s.size()) {
      fail(s, pos, "expected a real exponent");
    }
    return WeightSequence::dirichlet(alpha);
  }
  if (s.substr(0, kTable.size()) == kTable) {
    std::string_view rest = s.substr(kTable.size());
    WeightSequence::Tail tail = WeightSequence::Tail::Forbidden;
    const std::size_t comma = rest.find(',');
    if (comma != std::string_view::npos) {
      const std::string_view opt = rest.substr(comma + 1);
      if (opt == "tail=power") {
        tail = WeightSequence::Tail::PowerExtrapolate;
      } else {
        fail(s, kTable.size() + comma + 1, "unknown table option (want tail=power)");
      }
      rest = rest.substr(0, comma);
    }
    if (rest.empty()) {
      fail(s, kTable.size(), "missing table path");
    }
    return WeightSequence::table_from_csv(std::string(rest), tail);
  }
  fail(s, 0, "expected 'dirichlet:' or 'table:'");
}

CoeffSeries parse_function_spec(const std::string& text) {
  const std::string_view s = strip(text);
  constexpr std::string_view kCoeffs = "coeffs:";
  constexpr std::string_view kFactors = "factors:";
  if (s.substr(0, kCoeffs.size()) == kCoeffs) {
    std::string_view rest = s.substr(kCoeffs.size());
    if (rest.empty() || rest.front() != '[' || rest.back() != ']') {
      fail(s, kCoeffs.size(), "expected '[c0,c1,...]'");
    }
    const std::string_view body = rest.substr(1, rest.size() - 2);
    std::vector<Complex> coeffs;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find(',', start);
      if (end == std::string_view::npos) end = body.size();
      const std::string_view item = strip(body.substr(start, end - start));
      if (item.empty()) {
        fail(s, kCoeffs.size() + 1 + start, "empty coefficient");
      }
      std::size_t pos = 0;
      const Complex v = parse_complex_at(item, pos);
      if (pos != item.size()) {
        fail(item, pos, "trailing characters in coefficient");
      }
      coeffs.push_back(v);
      if (end == body.size()) break;
      start = end + 1;
    }
    return CoeffSeries(std::move(coeffs));
  }
  if (s.substr(0, kFactors.size()) == kFactors) {
    std::string_view rest = s.substr(kFactors.size());
    if (rest.empty()) fail(s, kFactors.size(), "expected at least one factor");
    CoeffSeries product = CoeffSeries::one();
    std::size_t pos = 0;
    while (pos < rest.size()) {
      if (rest[pos] != '(') {
        fail(s, kFactors.size() + pos, "expected '('");
      }
      // the factor body may itself contain one level of parentheses around a
      // complex multiplier
      std::size_t depth = 1;
      std::size_t close = pos + 1;
      while (close < rest.size() && depth > 0) {
        if (rest[close] == '(') ++depth;
        if (rest[close] == ')') --depth;
        if (depth == 0) break;
        ++close;
      }
      if (depth != 0) {
        fail(s, kFactors.size() + pos, "unclosed factor");
      }
      const std::string_view body = rest.substr(pos + 1, close - pos - 1);
      const auto [c0, c1] = parse_linear_factor(body, s, kFactors.size() + pos + 1);
      product = multiply(product, CoeffSeries({c0, c1}));
      pos = close + 1;
    }
    return product;
  }
  fail(s, 0, "expected 'coeffs:' or 'factors:'");
}

}  // namespace optapprox
