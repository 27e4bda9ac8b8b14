#include "liealg/algebra_file.hpp"

#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace liealg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::size_t parse_count(const std::string& text, std::size_t line, const char* what) {
  static const std::regex digits(R"(\d{1,9})");
  if (!std::regex_match(text, digits)) throw ParseError(line, std::string("expected a ") + what + ", got '" + text + "'");
  return static_cast<std::size_t>(std::stoul(text));
}

std::size_t parse_index(const std::string& text, std::size_t n, std::size_t line) {
  const std::size_t k = parse_count(text, line, "basis index");
  if (k < 1 || k > n)
    throw ParseError(line, "index " + text + " out of range 1.." + std::to_string(n));
  return k - 1;
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) {
  static const std::regex bracket_line(R"(\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.*))");
  static const std::regex term_re(R"((-?\d+(?:/\d+)?)\s*\*\s*e(\d+))");

  std::optional<std::size_t> dim;
  std::optional<std::vector<std::string>> labels;
  std::optional<StructureConstants> constants;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (!dim) throw ParseError(line_no, "bracket line before the dim line");
      std::match_results<std::string_view::const_iterator> m;
      if (!std::regex_match(line.begin(), line.end(), m, bracket_line))
        throw ParseError(line_no, "malformed bracket line");
      const std::size_t i = parse_index(m[1].str(), *dim, line_no);
      const std::size_t j = parse_index(m[2].str(), *dim, line_no);
      const std::string rhs(trim(m[3].str()));

      Vector image(*dim);
      if (rhs != "0") {
        std::size_t pos = 0;
        for (;;) {
          const auto plus = rhs.find('+', pos);
          const std::string term(trim(std::string_view(rhs).substr(pos, plus == std::string::npos ? std::string::npos : plus - pos)));
          std::smatch tm;
          if (!std::regex_match(term, tm, term_re)) throw ParseError(line_no, "malformed term '" + term + "'");
          const std::size_t k = parse_index(tm[2].str(), *dim, line_no);
          try {
            image[k] += Rational::parse(tm[1].str());
          } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
          }
          if (plus == std::string::npos) break;
          pos = plus + 1;
        }
      }
      try {
        constants->set(i, j, std::move(image));
      } catch (const DuplicateBracket& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }

    const auto w = words(line);
    if (w[0] == "dim") {
      if (dim) throw ParseError(line_no, "duplicate dim line");
      if (w.size() != 2) throw ParseError(line_no, "expected 'dim <n>'");
      dim = parse_count(w[1], line_no, "dimension");
      constants.emplace(*dim);
    } else if (w[0] == "basis") {
      if (!dim) throw ParseError(line_no, "basis line before the dim line");
      if (labels) throw ParseError(line_no, "duplicate basis line");
      std::vector<std::string> names(w.begin() + 1, w.end());
      if (names.size() != *dim)
        throw ParseError(line_no, "basis needs exactly " + std::to_string(*dim) + " names");
      if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
        throw ParseError(line_no, "basis names must be unique");
      labels = std::move(names);
    } else {
      throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
    }
  }

  if (!dim) throw ParseError(0, "missing 'dim <n>' line");
  return make_algebra(std::move(*constants), labels.value_or(std::vector<std::string>{}));
}

std::string render_algebra(const LieAlgebra& lie, std::string_view title) {
  std::ostringstream os;
  if (!title.empty()) os << "# " << title << "\n";
  const std::size_t n = lie.dim();
  os << "dim " << n << "\n";
  if (!lie.has_default_labels()) {
    os << "basis";
    for (const auto& l : lie.labels()) os << " " << l;
    os << "\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& v = lie.basis_bracket(i, j);
      if (is_zero(v)) continue;
      os << "[" << i + 1 << "," << j + 1 << "] =";
      bool first = true;
      for (std::size_t k = 0; k < n; ++k) {
        if (v[k].is_zero()) continue;
        os << (first ? " " : " + ") << v[k] << "*e" << k + 1;
        first = false;
      }
      os << "\n";
    }
  return os.str();
}

}  // namespace liealg
