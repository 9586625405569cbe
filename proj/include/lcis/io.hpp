#pragma once

// Sequence text format: whitespace-separated signed decimal integers,
// one sequence per file, length inferred.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcis {

inline std::vector<std::int64_t> parse_sequence(std::istream& in) {
  std::vector<std::int64_t> out;
  std::int64_t v;
  while (in >> v) out.push_back(v);
  if (in.fail() && !in.eof()) throw std::runtime_error("sequence parse error: non-integer token");
  // a trailing non-numeric token leaves the stream failed but not at eof
  in.clear();
  std::string rest;
  if (in >> rest) throw std::runtime_error("sequence parse error: unexpected token '" + rest + "'");
  return out;
}

inline std::vector<std::int64_t> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse_sequence(in);
}

inline void write_sequence(std::ostream& out, const std::vector<std::int64_t>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ' ';
    out << seq[i];
  }
  if (!seq.empty()) out << '\n';
}

inline void write_sequence_file(const std::string& path, const std::vector<std::int64_t>& seq) {
  std::ofstream out(path, std::ios::binary);  // binary: keep LF endings everywhere
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  write_sequence(out, seq);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace lcis
