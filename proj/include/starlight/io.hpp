#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "starlight/constructions.hpp"
#include "starlight/core.hpp"

namespace starlight {

// Malformed input; `line` is 1-based (0 when not tied to a line).
struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what);
  std::size_t line;
};

// System file:
//   ESS 1 e=<e> n=<n> blocks=<b>
//   <center>: <leaf> ... <leaf>      (b lines, leaves ascending)
// Lines starting with '#' are skipped. Parsing checks syntax, id ranges and
// the block count, not whether the blocks partition K_n.
void write_system(std::ostream& out, const StarSystem& sys);
std::string serialize_system(const StarSystem& sys);
StarSystem read_system(std::istream& in);
StarSystem parse_system(std::string_view text);

// Colouring file: `COL 1 n=<n> k=<k>` then n lines `<vertex> <class>`.
void write_colouring(std::ostream& out, const Colouring& col);
std::string serialize_colouring(const Colouring& col);
Colouring read_colouring(std::istream& in);
Colouring parse_colouring(std::string_view text);

// Claims sidecar: {"k","equitable","strongly_equitable","unique","provenance","params"}.
std::string serialize_claims(const Claims& c);
Claims parse_claims(std::string_view text);

// {"format":"ESS","version":1,"e","n","blocks":[[center,[leaves]]],"claims"?}
std::string export_json(const StarSystem& sys, const std::optional<Claims>& claims = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace starlight
