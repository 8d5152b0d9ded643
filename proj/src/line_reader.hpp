#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mapf/io.hpp"

namespace mapf::detail {

/// Yields whitespace-split tokens of non-blank, comment-stripped lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> next(const char* expecting) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    throw ParseError(line_no_ + 1, std::string("unexpected end of input, expected ") + expecting);
  }

  bool at_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return false;
    }
    return true;
  }

  int line() const { return line_no_; }

  long long number(const std::string& tok) const {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line_no_, "bad integer '" + tok + "'");
    return value;
  }

  int count(const std::string& tok) const {
    const long long value = number(tok);
    if (value < 0 || value > 100'000'000) throw ParseError(line_no_, "count out of range: " + tok);
    return static_cast<int>(value);
  }

  int keyed(const char* key) {
    auto tokens = next(key);
    if (tokens.size() != 2 || tokens[0] != key) throw ParseError(line_no_, std::string("expected '") + key + " <n>'");
    return count(tokens[1]);
  }

  std::pair<int, int> pair(const char* what) {
    auto tokens = next(what);
    if (tokens.size() != 2) throw ParseError(line_no_, std::string("expected two integers for ") + what);
    return {static_cast<int>(number(tokens[0])), static_cast<int>(number(tokens[1]))};
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

}  // namespace mapf::detail
