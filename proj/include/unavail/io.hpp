#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

#include "unavail/core_model.hpp"

namespace unavail {

using Instance = std::variant<SchedulingInstance, PackingInstance>;
using Solution = std::variant<Schedule, Packing>;

// Malformed file content. The message names the offending field.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Line oriented "key value..." text, '#' starts a comment:
//   kind scheduling|packing
//   m 3            (scheduling only)
//   k 2
//   U 1/2
//   sizes 1/3 0.25 2
// Sizes are exact rationals; decimals are read digit by digit.
Instance parse_instance_text(const std::string& text);
Instance parse_instance(const std::filesystem::path& path);
std::string emit_instance(const Instance& inst);

// kind schedule|packing, then one "machine ..." or "bin ..." line per group
// listing indices. A trailing "value" line records the makespan or the bin
// count for readers; it is ignored on input.
Solution parse_solution_text(const std::string& text);
Solution parse_solution(const std::filesystem::path& path);
std::string emit_solution(const Instance& inst, const Solution& sol);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace unavail
