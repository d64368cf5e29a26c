#include "latroots/vec.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace latroots {

std::int64_t dot(const Vec& a, const Vec& b) {
  a.require_same_rank(b);
  std::int64_t acc = 0;
  for (int i = 0; i < a.rank(); ++i) acc += a.d[i] * b.d[i];
  if (acc % 4 != 0) throw InternalError("dot: non-integral pairing (inputs not lattice points)");
  return acc / 4;
}

std::int64_t norm(const Vec& v) { return dot(v, v); }

std::string to_machine(const Vec& v) {
  std::string s = "d2:";
  for (int i = 0; i < v.rank(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(v.d[i]);
  }
  return s;
}

std::string to_human(const Vec& v) {
  std::string s;
  for (int i = 0; i < v.rank(); ++i) {
    if (i) s.push_back(' ');
    if (v.d[i] % 2 == 0) {
      s += std::to_string(v.d[i] / 2);
    } else {
      s += std::to_string(v.d[i]);
      s += "/2";
    }
  }
  return s;
}

namespace {

std::int64_t parse_i64(std::string_view tok, std::string_view whole) {
  std::int64_t value = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw UsageError("bad vector literal: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Vec parse_vec(std::string_view text) {
  // Trim outer whitespace first.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' ||
                           text.back() == '\r'))
    text.remove_suffix(1);

  std::vector<std::int64_t> doubled;
  if (text.starts_with("d2:")) {
    std::string_view body = text.substr(3);
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view tok = body.substr(0, comma);
      doubled.push_back(parse_i64(tok, text));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      const auto slash = tok.find('/');
      if (slash == std::string::npos) {
        doubled.push_back(2 * parse_i64(tok, text));
      } else {
        const std::int64_t num = parse_i64(std::string_view(tok).substr(0, slash), text);
        const std::int64_t den = parse_i64(std::string_view(tok).substr(slash + 1), text);
        if (den == 1) {
          doubled.push_back(2 * num);
        } else if (den == 2) {
          doubled.push_back(num);
        } else {
          throw UsageError("vector coordinates must have denominator 1 or 2: '" +
                           std::string(text) + "'");
        }
      }
    }
  }
  if (doubled.empty() || doubled.size() > Vec::kMaxRank)
    throw UsageError("vector must have 1..8 coordinates: '" + std::string(text) + "'");
  return Vec::from_doubled(doubled);
}

}  // namespace latroots
