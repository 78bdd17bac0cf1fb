#include "benford/schedule.hpp"

#include "benford/errors.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace benford {
namespace {

double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError("schedule: cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

Schedule Schedule::constant(double value) {
  Schedule s;
  s.kind_ = Kind::constant;
  s.c_ = value;
  return s;
}

Schedule Schedule::polynomial(double c, double power, double offset) {
  Schedule s;
  s.kind_ = Kind::polynomial;
  s.c_ = c;
  s.power_ = power;
  s.offset_ = offset;
  return s;
}

Schedule Schedule::logarithmic(double c, double offset) {
  Schedule s;
  s.kind_ = Kind::logarithmic;
  s.c_ = c;
  s.offset_ = offset;
  return s;
}

Schedule Schedule::explicit_list(std::vector<double> values) {
  if (values.empty()) {
    throw ConfigError("schedule: explicit list must not be empty");
  }
  Schedule s;
  s.kind_ = Kind::explicit_list;
  s.values_ = std::move(values);
  return s;
}

double Schedule::operator()(std::int64_t n) const {
  if (n < 1) {
    throw DomainError("schedule: index must be >= 1");
  }
  const auto x = static_cast<double>(n);
  switch (kind_) {
    case Kind::constant:
      return c_;
    case Kind::polynomial:
      return offset_ + c_ * std::pow(x, power_);
    case Kind::logarithmic:
      return offset_ + c_ * (1.0 + std::log(x));
    case Kind::explicit_list:
      if (static_cast<std::size_t>(n) > values_.size()) {
        throw DomainError("schedule: index " + std::to_string(n) + " past explicit list of length " +
                          std::to_string(values_.size()));
      }
      return values_[static_cast<std::size_t>(n - 1)];
  }
  return c_;
}

Schedule Schedule::parse(std::string_view text) {
  if (text == "n") return polynomial(1.0, 1.0);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return constant(parse_number(text));

  const auto head = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  if (head == "const") return constant(parse_number(body));
  if (head == "list") {
    std::vector<double> values;
    for (auto part : split(body, ',')) values.push_back(parse_number(part));
    return explicit_list(std::move(values));
  }
  if (head != "poly" && head != "log") {
    throw ConfigError("schedule: unknown kind '" + std::string(head) + "'");
  }

  double c = 1.0;
  double power = 1.0;
  double offset = 0.0;
  for (auto part : split(body, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("schedule: expected key=value in '" + std::string(part) + "'");
    }
    const auto key = part.substr(0, eq);
    const double value = parse_number(part.substr(eq + 1));
    if (key == "c") {
      c = value;
    } else if (key == "offset") {
      offset = value;
    } else if ((key == "theta" || key == "power") && head == "poly") {
      power = value;
    } else {
      throw ConfigError("schedule: unknown key '" + std::string(key) + "'");
    }
  }
  return head == "poly" ? polynomial(c, power, offset) : logarithmic(c, offset);
}

std::string Schedule::to_string() const {
  switch (kind_) {
    case Kind::constant:
      return "const:" + format_number(c_);
    case Kind::polynomial: {
      std::string s = "poly:c=" + format_number(c_) + ",theta=" + format_number(power_);
      if (offset_ != 0.0) s += ",offset=" + format_number(offset_);
      return s;
    }
    case Kind::logarithmic: {
      std::string s = "log:c=" + format_number(c_);
      if (offset_ != 0.0) s += ",offset=" + format_number(offset_);
      return s;
    }
    case Kind::explicit_list: {
      std::string s = "list:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += format_number(values_[i]);
      }
      return s;
    }
  }
  return {};
}

}  // namespace benford
