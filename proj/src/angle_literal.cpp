#include "cosineq/angle_literal.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "cosineq/numeric.hpp"

namespace cosineq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  s = trim(s);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("angle literal: cannot parse number in '" +
                                std::string(whole) + "'");
  }
  return value;
}

std::size_t find_pi(std::string_view s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const char a = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
    const char b = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i + 1])));
    if (a == 'p' && b == 'i') return i;
  }
  return std::string_view::npos;
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view whole = text;
  std::string_view s = trim(text);
  if (s.empty()) {
    throw std::invalid_argument("angle literal: empty");
  }

  const std::size_t pi_pos = find_pi(s);
  double numerator = 1.0;
  double denominator = 1.0;
  bool has_pi = (pi_pos != std::string_view::npos);

  std::string_view head, tail;
  if (has_pi) {
    head = trim(s.substr(0, pi_pos));
    tail = trim(s.substr(pi_pos + 2));
    if (!head.empty()) {
      if (head.back() == '*') head = trim(head.substr(0, head.size() - 1));
      if (!head.empty()) numerator = parse_real(head, whole);
    }
  } else {
    // plain real or p/q
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return parse_real(s, whole);
    numerator = parse_real(s.substr(0, slash), whole);
    denominator = parse_real(s.substr(slash + 1), whole);
    if (denominator == 0.0) {
      throw std::invalid_argument("angle literal: division by zero in '" +
                                  std::string(whole) + "'");
    }
    return numerator / denominator;
  }

  if (!tail.empty()) {
    if (tail.front() != '/') {
      throw std::invalid_argument("angle literal: unexpected text after pi in '" +
                                  std::string(whole) + "'");
    }
    denominator = parse_real(tail.substr(1), whole);
    if (denominator == 0.0) {
      throw std::invalid_argument("angle literal: division by zero in '" +
                                  std::string(whole) + "'");
    }
  }
  return numerator * kPi / denominator;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::vector<double> parse_angle_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view part : split_commas(text)) out.push_back(parse_angle(part));
  return out;
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view part : split_commas(text)) {
    out.push_back(parse_real(part, text));
  }
  return out;
}

}  // namespace cosineq
