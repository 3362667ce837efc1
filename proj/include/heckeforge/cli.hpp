#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "heckeforge/group.hpp"

namespace heckeforge {

enum class OutputFormat { Json, Text };

struct RunConfig {
  int r = 1, p = 1, n = 1;
  RepKind rep = RepKind::Faithful;
  int max_poly_degree = 6;
  std::size_t budget = 1000000;
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument unless p | r, n >= 1 and |G(r,p,n)| fits the budget.
void validate(const RunConfig& cfg);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int input_error = 2;
}  // namespace exit_code

// args excludes the program name; `in` backs the "-" file argument.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace heckeforge
