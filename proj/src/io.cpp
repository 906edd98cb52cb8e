#include "starlight/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace starlight {

using nlohmann::json;

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}

namespace {

// Splits on blanks; the line must not contain anything else.
std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t number(std::string_view w, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size() || w.empty())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(w) + "'");
  return v;
}

std::uint64_t field(std::string_view w, std::string_view key, std::size_t line) {
  if (w.substr(0, key.size()) != key || w.size() == key.size() || w[key.size()] != '=')
    throw ParseError(line, "expected " + std::string(key) + "=<value>");
  return number(w.substr(key.size() + 1), line);
}

// Yields non-comment lines with their numbers; rejects CR.
class Lines {
 public:
  explicit Lines(std::istream& in) : in_(in) {}
  bool next(std::string& s) {
    while (std::getline(in_, s)) {
      ++no_;
      if (!s.empty() && s.back() == '\r') throw ParseError(no_, "CR line endings are not accepted");
      if (!s.empty() && s[0] == '#') continue;
      if (words(s).empty()) continue;
      return true;
    }
    return false;
  }
  std::size_t no() const { return no_; }

 private:
  std::istream& in_;
  std::size_t no_ = 0;
};

std::vector<std::string_view> header(Lines& lines, std::string& buf, std::string_view magic, std::size_t fields) {
  if (!lines.next(buf)) throw ParseError(0, "empty input");
  auto w = words(buf);
  if (w.size() != fields + 2 || w[0] != magic) throw ParseError(lines.no(), "bad header, expected " + std::string(magic));
  if (w[1] != "1") throw ParseError(lines.no(), "unsupported version " + std::string(w[1]));
  return w;
}

}  // namespace

void write_system(std::ostream& out, const StarSystem& sys) {
  out << "ESS 1 e=" << sys.e() << " n=" << sys.n() << " blocks=" << sys.size() << '\n';
  std::string line;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto b = sys.block(i);
    line = std::to_string(b.center) + ':';
    for (Vertex v : b.leaves) (line += ' ') += std::to_string(v);
    line += '\n';
    out << line;
  }
}

std::string serialize_system(const StarSystem& sys) {
  std::ostringstream s;
  write_system(s, sys);
  return std::move(s).str();
}

StarSystem read_system(std::istream& in) {
  Lines lines(in);
  std::string buf;
  auto h = header(lines, buf, "ESS", 3);
  const auto e = field(h[2], "e", lines.no());
  const auto n = field(h[3], "n", lines.no());
  const auto b = field(h[4], "blocks", lines.no());
  if (e < 1 || e > 1'000'000) throw ParseError(lines.no(), "e out of range");
  if (n > 0xFFFFFFFFull) throw ParseError(lines.no(), "n out of range");
  StarSystem sys(static_cast<int>(e), static_cast<Vertex>(n));
  if (b <= expected_block_count(static_cast<int>(e), static_cast<Vertex>(n)) * 2) sys.reserve(b);
  std::vector<Vertex> leaves;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (!lines.next(buf)) throw ParseError(lines.no(), "expected " + std::to_string(b) + " blocks, got " + std::to_string(i));
    auto w = words(buf);
    if (w.empty() || w[0].back() != ':') throw ParseError(lines.no(), "expected '<center>: <leaves>'");
    const auto c = number(w[0].substr(0, w[0].size() - 1), lines.no());
    leaves.clear();
    for (std::size_t j = 1; j < w.size(); ++j) {
      auto v = number(w[j], lines.no());
      if (v > 0xFFFFFFFFull) throw ParseError(lines.no(), "vertex id out of range");
      leaves.push_back(static_cast<Vertex>(v));
    }
    try {
      sys.add(c > 0xFFFFFFFFull ? 0 : static_cast<Vertex>(c), leaves);
    } catch (const InvalidArgument& ex) {
      throw ParseError(lines.no(), ex.what());
    }
  }
  if (lines.next(buf)) throw ParseError(lines.no(), "trailing content after the last block");
  return sys;
}

StarSystem parse_system(std::string_view text) {
  std::istringstream s{std::string(text)};
  return read_system(s);
}

void write_colouring(std::ostream& out, const Colouring& col) {
  out << "COL 1 n=" << col.n() << " k=" << col.k() << '\n';
  for (Vertex v = 1; v <= col.n(); ++v) out << v << ' ' << col[v] << '\n';
}

std::string serialize_colouring(const Colouring& col) {
  std::ostringstream s;
  write_colouring(s, col);
  return std::move(s).str();
}

Colouring read_colouring(std::istream& in) {
  Lines lines(in);
  std::string buf;
  auto h = header(lines, buf, "COL", 2);
  const auto n = field(h[2], "n", lines.no());
  const auto k = field(h[3], "k", lines.no());
  if (k < 1 || k > 64) throw ParseError(lines.no(), "k must be in [1, 64]");
  if (n > 0xFFFFFFFFull) throw ParseError(lines.no(), "n out of range");
  std::vector<int> cls(n, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!lines.next(buf)) throw ParseError(lines.no(), "colouring is not total");
    auto w = words(buf);
    if (w.size() != 2) throw ParseError(lines.no(), "expected '<vertex> <class>'");
    const auto v = number(w[0], lines.no()), c = number(w[1], lines.no());
    if (v < 1 || v > n) throw ParseError(lines.no(), "vertex out of range");
    if (c < 1 || c > k) throw ParseError(lines.no(), "class out of range");
    if (cls[v - 1]) throw ParseError(lines.no(), "vertex listed twice");
    cls[v - 1] = static_cast<int>(c);
  }
  if (lines.next(buf)) throw ParseError(lines.no(), "trailing content after the last vertex");
  return Colouring(static_cast<int>(k), std::move(cls));
}

Colouring parse_colouring(std::string_view text) {
  std::istringstream s{std::string(text)};
  return read_colouring(s);
}

namespace {

json claims_object(const Claims& c) {
  json params = json::object();
  for (const auto& [key, v] : c.params) params[key] = v;
  return {{"k", c.k},
          {"equitable", c.equitable},
          {"strongly_equitable", c.strongly_equitable},
          {"unique", c.unique},
          {"provenance", c.provenance},
          {"params", params}};
}

}  // namespace

std::string serialize_claims(const Claims& c) { return claims_object(c).dump(2) + '\n'; }

Claims parse_claims(std::string_view text) {
  try {
    auto j = json::parse(text);
    Claims c;
    c.k = j.at("k").get<int>();
    c.equitable = j.at("equitable").get<bool>();
    c.strongly_equitable = j.at("strongly_equitable").get<bool>();
    c.unique = j.at("unique").get<bool>();
    c.provenance = j.at("provenance").get<std::string>();
    if (j.contains("params"))
      for (const auto& [key, v] : j["params"].items()) c.params.emplace_back(key, v.get<std::int64_t>());
    return c;
  } catch (const json::exception& ex) {
    throw ParseError(0, std::string("claims: ") + ex.what());
  }
}

std::string export_json(const StarSystem& sys, const std::optional<Claims>& claims) {
  json blocks = json::array();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    auto b = sys.block(i);
    blocks.push_back(json::array({b.center, std::vector<Vertex>(b.leaves.begin(), b.leaves.end())}));
  }
  json doc = {{"format", "ESS"}, {"version", 1}, {"e", sys.e()}, {"n", sys.n()}, {"blocks", std::move(blocks)}};
  if (claims) doc["claims"] = claims_object(*claims);
  return doc.dump() + '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed: " + path);
}

}  // namespace starlight
