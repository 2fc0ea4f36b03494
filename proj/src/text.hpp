#pragma once

// Small parsing helpers shared by the text formats.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "pipn/errors.hpp"

namespace pipn::detail {

  inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
      s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
      s.remove_suffix(1);
    }
    return s;
  }

  inline std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        out.push_back(c);
      }
    }
    return out;
  }

  inline int parse_int(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
      s.remove_prefix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidInput("expected an integer, got '" + std::string(s) + "'");
    }
    return value;
  }

  inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t                   start = 0;
    while (true) {
      std::size_t pos = s.find(sep, start);
      if (pos == std::string_view::npos) {
        out.push_back(s.substr(start));
        return out;
      }
      out.push_back(s.substr(start, pos - start));
      start = pos + 1;
    }
  }

  // "1,2,3" -> {1,2,3}; the empty string is the empty list.
  inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    if (trim(s).empty()) {
      return out;
    }
    for (auto tok : split(s, ',')) {
      out.push_back(parse_int(tok));
    }
    return out;
  }

  template <typename Range>
  std::string join(Range const& r, std::string_view sep) {
    std::string out;
    bool        first = true;
    for (auto const& x : r) {
      if (!first) {
        out += sep;
      }
      first = false;
      out += std::to_string(x);
    }
    return out;
  }

}  // namespace pipn::detail
