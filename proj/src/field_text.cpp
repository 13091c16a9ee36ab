#include "tensorcomplex/field_text.hpp"

#include <sstream>
#include <vector>

namespace tensorcomplex {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::pair<int, int> index_of(FieldKind kind, std::size_t k) {
  if (is_matrix_kind(kind)) return {static_cast<int>(k / 3) + 1, static_cast<int>(k % 3) + 1};
  return {static_cast<int>(k) + 1, 1};
}

}  // namespace

std::string to_text(const TypedField& f) {
  std::string out = "kind " + std::string(kind_name(f.kind())) + "\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    auto [i, j] = index_of(f.kind(), k);
    out += std::to_string(i) + " " + std::to_string(j) + " : " + f[k].str() + "\n";
  }
  return out;
}

TypedField from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty() || lines[0].substr(0, 5) != "kind ")
    throw std::invalid_argument("field text must start with 'kind <name>'");
  auto kind = parse_kind(trim(lines[0].substr(5)));
  if (!kind) throw std::invalid_argument("unknown field kind '" + std::string(lines[0].substr(5)) + "'");
  std::size_t n = component_count(*kind);
  if (lines.size() != n + 1)
    throw std::invalid_argument("expected " + std::to_string(n) + " component lines, got " +
                                std::to_string(lines.size() - 1));
  std::vector<Poly3> comps(n);
  std::vector<bool> seen(n, false);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    auto colon = lines[l].find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("component line lacks ':'");
    std::istringstream idx{std::string(lines[l].substr(0, colon))};
    int i = 0, j = 0;
    std::string extra;
    if (!(idx >> i >> j) || (idx >> extra)) throw std::invalid_argument("malformed component index");
    std::size_t k;
    if (is_matrix_kind(*kind)) {
      if (i < 1 || i > 3 || j < 1 || j > 3) throw std::invalid_argument("component index out of range");
      k = static_cast<std::size_t>(3 * (i - 1) + (j - 1));
    } else {
      if (i < 1 || static_cast<std::size_t>(i) > n || j != 1) throw std::invalid_argument("component index out of range");
      k = static_cast<std::size_t>(i - 1);
    }
    if (seen[k]) throw std::invalid_argument("duplicate component line");
    seen[k] = true;
    comps[k] = parse_poly(lines[l].substr(colon + 1));
  }
  return TypedField(*kind, std::move(comps));
}

}  // namespace tensorcomplex
