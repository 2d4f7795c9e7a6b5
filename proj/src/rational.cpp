#include "rwdist/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "rwdist/errors.hpp"

namespace rwdist {

namespace {

std::int64_t parse_int(std::string_view s) {
  if (s.empty()) throw Error(Errc::ParseError, "empty number");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error(Errc::ParseError, "bare sign in number");
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(Errc::ParseError, "bad digit in number: " + std::string(s));
    v = v * 10 + (s[i] - '0');
  }
  return s[0] == '-' ? -v : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::ParseError, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return Rational(parse_int(int_part));
    std::int64_t den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) {
      if (den > 100'000'000'000'000'000LL / 10)
        throw Error(Errc::ParseError, "too many decimals: " + std::string(text));
      den *= 10;
    }
    bool neg = !int_part.empty() && int_part[0] == '-';
    std::int64_t whole = int_part.empty() || int_part == "-" || int_part == "+"
                             ? 0
                             : parse_int(int_part);
    std::int64_t frac_v = parse_int(frac);
    if (frac_v < 0) throw Error(Errc::ParseError, "bad decimal: " + std::string(text));
    Rational mag = Rational(std::abs(whole)) + Rational(frac_v, den);
    return neg ? -mag : mag;
  }
  return Rational(parse_int(text));
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_decimal(const Rational& r, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  bool neg = r < Rational(0);
  Rational mag = neg ? -r : r;
  // round half away from zero: floor(mag * scale + 1/2)
  Rational scaled = mag * Rational(scale) + Rational(1, 2);
  std::int64_t units = scaled.numerator() / scaled.denominator();
  std::string digits = std::to_string(units % scale);
  while (static_cast<int>(digits.size()) < places) digits.insert(digits.begin(), '0');
  std::string out = neg && units != 0 ? "-" : "";
  out += std::to_string(units / scale);
  if (places > 0) out += "." + digits;
  return out;
}

}  // namespace rwdist
