#include "cogmine/rational.hpp"

#include <cctype>
#include <charconv>

#include "cogmine/error.hpp"

namespace cogmine {

namespace {

std::int64_t parse_int(std::string_view text, const std::string& whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::FormatError, "not a rational: '" + whole + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(Errc::FormatError, "empty rational");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::int64_t num = parse_int(std::string_view(s).substr(0, slash), text);
    std::int64_t den = parse_int(std::string_view(s).substr(slash + 1), text);
    if (den == 0) throw Error(Errc::FormatError, "zero denominator: '" + text + "'");
    return Rational(num, den);
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_int(s, text));

  std::string_view int_part = std::string_view(s).substr(0, dot);
  std::string_view frac_part = std::string_view(s).substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 9) {
    throw Error(Errc::FormatError, "not a rational: '" + text + "'");
  }
  bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative) int_part.remove_prefix(1);
  std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  std::int64_t frac = parse_int(frac_part, text);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  Rational magnitude = Rational(whole) + Rational(frac, scale);
  return negative ? -magnitude : magnitude;
}

std::string to_decimal6(const Rational& value) {
  bool negative = value < Rational(0);
  Rational v = negative ? -value : value;
  // Round half up in integer arithmetic; denominators stay small here.
  std::int64_t scaled = (v.numerator() * 1000000 + v.denominator() / 2) / v.denominator();
  std::int64_t whole = scaled / 1000000;
  std::int64_t frac = scaled % 1000000;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%s%lld.%06lld", negative ? "-" : "",
                static_cast<long long>(whole), static_cast<long long>(frac));
  return buf;
}

std::string to_fraction_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string to_percent1(std::int64_t count, std::int64_t total) {
  if (total <= 0) return "0.0";
  std::int64_t scaled = (count * 1000 + total / 2) / total;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%lld", static_cast<long long>(scaled / 10),
                static_cast<long long>(scaled % 10));
  return buf;
}

std::int64_t ceil_of(const Rational& value) {
  std::int64_t q = value.numerator() / value.denominator();
  std::int64_t r = value.numerator() % value.denominator();
  return q + (r > 0 ? 1 : 0);
}

}  // namespace cogmine
