#include "benford/cli.hpp"

#include "benford/errors.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <string>

namespace benford::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_scalar(std::string_view s, std::string_view whole) {
  s = trim(s);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("cannot parse '" + std::string(s) + "' in list '" + std::string(whole) + "'");
  }
  return v;
}

template <class F>
void for_each_item(std::string_view text, F&& f) {
  if (trim(text).empty()) throw ConfigError("empty list");
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    f(text.substr(start, end - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for_each_item(text, [&](std::string_view item) {
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_scalar<std::int64_t>(item, text));
      return;
    }
    const auto lo = parse_scalar<std::int64_t>(item.substr(0, dots), text);
    const auto hi = parse_scalar<std::int64_t>(item.substr(dots + 2), text);
    if (hi < lo) throw ConfigError("empty range '" + std::string(item) + "'");
    if (hi - lo >= 100'000'000) throw SizeError("range '" + std::string(item) + "' is too long");
    for (auto v = lo; v <= hi; ++v) out.push_back(v);
  });
  return out;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for_each_item(text, [&](std::string_view item) { out.push_back(parse_scalar<double>(item, text)); });
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256: digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", md[i]);
    hex += byte;
  }
  return hex;
}

}  // namespace benford::cli
