#pragma once

// Text formats.
//
//   table          one entry per line: `i j value`, `#` starts a comment
//   decomposition  one term per line: `COEFF * pi(d0,...,ds)` or `npi(...)`
//   sequence       comma-separated integers or rationals, no spaces
//   ferrers        one tuple per line, comma-separated 1-based coordinates

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "betti/ferrers.hpp"
#include "betti/linear.hpp"
#include "betti/tables.hpp"

namespace betti {

enum class Format { human, machine };

namespace detail {

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits into lines with comments and surrounding blanks removed; empty
/// lines are reported as empty views so line numbers stay aligned.
inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    lines.emplace_back(strip(line));
    start = end + 1;
  }
  return lines;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    parts.emplace_back(s.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

inline std::string line_prefix(std::size_t n) { return "line " + std::to_string(n + 1) + ": "; }

inline std::int64_t to_int64(const Integer& z, const std::string& what) {
  if (!z.fits_slong_p()) throw parse_error(what + " out of range");
  return z.get_si();
}

}  // namespace detail

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline BettiTable parse_table(std::string_view text) {
  BettiTable table;
  std::set<Slot> seen;
  const auto lines = detail::content_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    std::istringstream fields(lines[n]);
    std::string si, sj, sv, extra;
    if (!(fields >> si >> sj >> sv) || (fields >> extra))
      throw parse_error(detail::line_prefix(n) + "expected `i j value`");
    try {
      const auto i = detail::to_int64(parse_integer(si), "homological index");
      const auto j = detail::to_int64(parse_integer(sj), "internal degree");
      if (i < 0) throw parse_error("negative homological index " + si);
      if (i > 100000) throw parse_error("homological index " + si + " out of range");
      const Slot slot{static_cast<int>(i), j};
      if (!seen.insert(slot).second)
        throw parse_error("duplicate entry (" + si + "," + sj + ")");
      table.set(slot.i, slot.j, parse_rational(sv));
    } catch (const parse_error& e) {
      throw parse_error(detail::line_prefix(n) + e.what());
    }
  }
  return table;
}

/// Machine mode: sorted `i j value` lines. Human mode: the grid with row
/// j - i, column i, zeros shown as periods, and a `total:` row.
inline std::string render_table(const BettiTable& beta, Format mode) {
  std::string out;
  if (mode == Format::machine) {
    for (const auto& [slot, value] : beta.entries())
      out += std::to_string(slot.i) + " " + std::to_string(slot.j) + " " + to_string(value) + "\n";
    return out;
  }
  if (beta.empty()) return "0\n";
  const int columns = beta.max_index() + 1;
  Degree row_min = beta.entries().begin()->first.j - beta.entries().begin()->first.i;
  Degree row_max = row_min;
  for (const auto& [slot, _] : beta.entries()) {
    row_min = std::min(row_min, slot.j - slot.i);
    row_max = std::max(row_max, slot.j - slot.i);
  }
  std::vector<std::string> labels{"", "total:"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back({});
  cells.push_back({});
  for (int i = 0; i < columns; ++i) {
    cells[0].push_back(std::to_string(i));
    cells[1].push_back(to_string(beta.total(i)));
  }
  for (Degree r = row_min; r <= row_max; ++r) {
    labels.push_back(std::to_string(r) + ":");
    std::vector<std::string> row;
    for (int i = 0; i < columns; ++i) {
      Rational v = beta.at(i, r + i);
      row.push_back(v == 0 ? "." : to_string(v));
    }
    cells.push_back(std::move(row));
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(columns, 0);
  for (const auto& row : cells)
    for (int i = 0; i < columns; ++i) width[i] = std::max(width[i], row[i].size());
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line(label_width - labels[r].size(), ' ');
    line += labels[r];
    for (int i = 0; i < columns; ++i) {
      line += ' ';
      line += std::string(width[i] - cells[r][i].size(), ' ');
      line += cells[r][i];
    }
    out += line + "\n";
  }
  return out;
}

inline std::vector<Rational> parse_rational_list(std::string_view text) {
  if (text.empty()) throw parse_error("empty sequence");
  std::vector<Rational> out;
  for (const auto& part : detail::split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

inline std::vector<Integer> parse_integer_list(std::string_view text) {
  if (text.empty()) throw parse_error("empty sequence");
  std::vector<Integer> out;
  for (const auto& part : detail::split(text, ',')) out.push_back(parse_integer(part));
  return out;
}

inline DegreeSequence parse_degree_sequence(std::string_view text) {
  std::vector<Degree> degs;
  for (const auto& z : parse_integer_list(text)) degs.push_back(detail::to_int64(z, "degree"));
  try {
    return DegreeSequence(std::move(degs));
  } catch (const validation_error& e) {
    throw parse_error(e.what());
  }
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_string(values[i]);
  }
  return out;
}

inline std::string format_term(const Rational& coeff, const DegreeSequence& d,
                               bool normalized = false) {
  std::string seq = d.to_string();
  return to_string(coeff) + " * " + (normalized ? "npi" : "pi") + seq;
}

inline std::string render_decomposition(const Decomposition& dec) {
  std::string out;
  for (const auto& term : dec) out += format_term(term.coefficient, term.sequence) + "\n";
  return out;
}

inline std::string render_normalized(std::span<const NormalizedTerm> terms) {
  std::string out;
  for (const auto& term : terms) out += format_term(term.coefficient, term.sequence, true) + "\n";
  return out;
}

/// Reads decomposition lines. `npi` terms are converted to `pi` terms by
/// the normalization factor d_1 * ... * d_s.
inline Decomposition parse_decomposition(std::string_view text) {
  std::vector<DecompositionTerm> terms;
  const auto lines = detail::content_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    if (line.empty()) continue;
    try {
      const auto star = line.find('*');
      if (star == std::string_view::npos) throw parse_error("expected `COEFF * pi(...)`");
      const Rational coeff = parse_rational(detail::strip(line.substr(0, star)));
      std::string_view rest = detail::strip(line.substr(star + 1));
      bool normalized = false;
      if (rest.starts_with("npi(")) {
        normalized = true;
        rest.remove_prefix(4);
      } else if (rest.starts_with("pi(")) {
        rest.remove_prefix(3);
      } else {
        throw parse_error("expected pi(...) or npi(...)");
      }
      if (!rest.ends_with(")")) throw parse_error("missing closing parenthesis");
      rest.remove_suffix(1);
      const DegreeSequence d = parse_degree_sequence(rest);
      Rational c = coeff;
      if (normalized) {
        if (d.front() != 0) throw parse_error("npi needs d_0 = 0");
        for (std::size_t k = 1; k < d.size(); ++k) c *= Rational(static_cast<long>(d[k]));
      }
      terms.push_back({d, c});
    } catch (const parse_error& e) {
      throw parse_error(detail::line_prefix(n) + e.what());
    }
  }
  try {
    return Decomposition(std::move(terms));
  } catch (const validation_error& e) {
    throw parse_error(e.what());
  }
}

struct FerrersInput {
  std::size_t dimension = 0;
  std::set<Tuple> tuples;
};

/// Tuples must all share one arity; coordinates are positive integers.
inline FerrersInput parse_ferrers(std::string_view text) {
  FerrersInput input;
  const auto lines = detail::content_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    try {
      Tuple e;
      for (const auto& z : parse_integer_list(lines[n])) {
        const auto v = detail::to_int64(z, "coordinate");
        if (v < 1) throw parse_error("coordinates are 1-based");
        e.push_back(v);
      }
      if (input.dimension == 0) input.dimension = e.size();
      if (e.size() != input.dimension)
        throw parse_error("tuple has " + std::to_string(e.size()) + " coordinates, expected " +
                          std::to_string(input.dimension));
      input.tuples.insert(std::move(e));
    } catch (const parse_error& e) {
      throw parse_error(detail::line_prefix(n) + e.what());
    }
  }
  if (input.tuples.empty()) throw parse_error("no tuples");
  return input;
}

}  // namespace betti
