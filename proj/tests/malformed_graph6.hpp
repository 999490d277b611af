#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Hand-built malformed graph6 lines with the byte offset at which the decoder
// must report the problem. Offsets follow from the format: one size byte
// (or '~' plus three), then ceil(n(n-1)/12) payload bytes.
struct MalformedCase {
  std::string line;
  std::size_t offset;
  std::string reason;  // substring expected in the message
};

inline std::vector<MalformedCase> malformed_graph6_cases() {
  return {
      {"", 0, "empty"},
      {" ", 0, "outside 63..126"},
      {"B!", 1, "outside 63..126"},
      {"B", 1, "truncated payload"},
      {"Boo", 2, "trailing"},
      {"Bp", 1, "padding"},
      {"~", 1, "truncated size"},
      {"~??", 3, "truncated size"},
      {"~~", 1, "8-byte"},
      {"~???", 1, "long size form"},
      {"~?@?", 4, "truncated payload"},
      {"C\x7f", 1, "outside 63..126"},
      {"\x80", 0, "outside 63..126"},
      {"DQ", 2, "truncated payload"},
      {"DQc ", 3, "trailing"},
      {"A`", 1, "padding"},
      {"@?", 1, "trailing"},
      {"E?>?", 2, "outside 63..126"},
      {">>graph6<<", 0, "empty"},
      {"G????\t", 5, "outside 63..126"},
  };
}
