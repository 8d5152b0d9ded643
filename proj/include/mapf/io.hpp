#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mapf/instance.hpp"

namespace mapf {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_string(const std::string& text);
void write_instance(std::ostream& out, const Instance& inst);
std::string instance_to_string(const Instance& inst);

/// `agent_count` is needed to validate line widths (lines for zero agents are empty).
Schedule parse_schedule(std::istream& in, int agent_count);
void write_schedule(std::ostream& out, const Schedule& sched);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace mapf
