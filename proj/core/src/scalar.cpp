#include "tdl/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace tdl {

std::optional<mpq_class> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  if (i == text.size()) return std::nullopt;
  bool seen_slash = false;
  size_t digits_before = 0, digits_after = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash) return std::nullopt;
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    (seen_slash ? digits_after : digits_before)++;
  }
  if (digits_before == 0 || (seen_slash && digits_after == 0)) return std::nullopt;

  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
  if (sgn(mpq_class(q.get_den())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::optional<double> parse_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::string buf(text);
  char* end = nullptr;
  double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_rational(const mpq_class& value) {
  return value.get_str();
}

}  // namespace tdl
