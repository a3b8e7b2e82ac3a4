#include "bandspec/presets.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace bandspec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw std::invalid_argument(std::string(what) + ": '" + std::string(text) + "'");
}

double parse_real(std::string_view s) {
  double v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) bad("bad real literal", s);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  }
  return parts;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad("empty complex literal", text);
  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.remove_suffix(1);

  // The sign splitting real from imaginary part: never the leading sign,
  // never an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const char c = s[k];
    if ((c == '+' || c == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') split = k;
  }
  if (split == std::string_view::npos) {
    if (s.empty() || s == "+") return {0.0, 1.0};
    if (s == "-") return {0.0, -1.0};
    return {0.0, parse_real(s)};
  }
  const double re = parse_real(s.substr(0, split));
  const double sign = s[split] == '-' ? -1.0 : 1.0;
  const std::string_view b = s.substr(split + 1);
  return {re, sign * (b.empty() ? 1.0 : parse_real(b))};
}

std::vector<Complex> parse_complex_list(std::string_view text, std::size_t n) {
  const auto parts = split(text, ',');
  if (parts.size() != n) bad("expected " + std::to_string(n) + " comma-separated values", text);
  std::vector<Complex> out;
  out.reserve(n);
  for (const auto part : parts) out.push_back(parse_complex(part));
  return out;
}

OperatorParams params_from_literal(std::string_view text) {
  const auto v = parse_complex_list(text, 6);
  return validate_params(v[0], v[1], v[2], v[3], v[4], v[5]);
}

OperatorParams preset(std::string_view name) {
  std::string_view s = trim(name);
  std::string_view base = s;
  std::vector<Complex> args;
  if (const std::size_t open = s.find('('); open != std::string_view::npos) {
    if (s.back() != ')') bad("unbalanced parentheses in preset", name);
    base = trim(s.substr(0, open));
    const std::string_view inner = s.substr(open + 1, s.size() - open - 2);
    const auto parts = split(inner, ',');
    for (const auto part : parts) args.push_back(parse_complex(part));
  }

  auto arity = [&](std::size_t n) {
    if (args.size() != n)
      bad("preset takes " + std::to_string(n) + " argument(s)", name);
  };
  const Complex one{1, 0}, zero{0, 0};
  if (base == "paper-ex1") {
    arity(0);
    return validate_params(one, {0, 1}, {2, 0}, one, {0, -1}, one);
  }
  if (base == "paper-ex2") {
    arity(0);
    return validate_params({0, 1}, {2, 0}, {1, 1}, one, zero, zero);
  }
  if (base == "delta") {
    arity(0);
    return validate_params(one, one, {-1, 0}, {-1, 0}, zero, zero);
  }
  if (base == "brst") {
    arity(3);
    return validate_params(args[0], args[0], args[1], args[1], args[2], args[2]);
  }
  if (base == "brs") {
    arity(2);
    return validate_params(args[0], args[0], args[1], args[1], zero, zero);
  }
  if (base == "zweier") {
    arity(1);
    const Complex c = one - args[0];
    return validate_params(args[0], args[0], c, c, zero, zero);
  }
  bad("unknown preset", name);
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"paper-ex1", "paper-ex2", "delta",
                                              "brs(r,s)",  "brst(r,s,t)", "zweier(s)"};
  return names;
}

std::array<double, 4> parse_extents(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) bad("expected re_min,re_max,im_min,im_max", text);
  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = parse_real(trim(parts[k]));
  return out;
}

std::pair<int, int> parse_resolution(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) bad("expected nx,ny", text);
  std::pair<int, int> out;
  auto one = [&](std::string_view piece, int& slot) {
    const std::string_view p = trim(piece);
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), slot);
    if (ec != std::errc{} || ptr != p.data() + p.size() || slot <= 0)
      bad("bad resolution", text);
  };
  one(parts[0], out.first);
  one(parts[1], out.second);
  return out;
}

}  // namespace bandspec
