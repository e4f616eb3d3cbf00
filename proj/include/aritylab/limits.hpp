#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aritylab {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// malformed input: bad structure data, unknown names, arity mismatches
struct validation_error : error {
  using error::error;
};

// text that does not parse; pos is a byte offset into the input
struct parse_error : error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t p)
      : error(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

// a computation would exceed the configured work or size budget
struct cap_error : error {
  using error::error;
};

struct Limits {
  std::uint64_t work_cap = 10'000'000;  // cells touched by one partition/eval
  int size_cap = 12;                    // max universe size at construction
};

inline void charge(std::uint64_t cells, const Limits& lim, const char* what) {
  if (cells > lim.work_cap)
    throw cap_error(std::string(what) + ": " + std::to_string(cells) +
                    " cells exceed work cap " + std::to_string(lim.work_cap));
}

}  // namespace aritylab
