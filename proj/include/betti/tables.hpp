#pragma once

// Betti tables, degree sequences, pure diagrams and chain decompositions.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "betti/errors.hpp"
#include "betti/rational.hpp"

namespace betti {

/// Strictly increasing integer tuple (d_0, ..., d_s) indexing a pure diagram.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw validation_error("degree sequence must be nonempty");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
      if (degrees_[i - 1] >= degrees_[i])
        throw validation_error("degree sequence " + to_string() + " is not strictly increasing");
  }
  DegreeSequence(std::initializer_list<Degree> degrees)
      : DegreeSequence(std::vector<Degree>(degrees)) {}

  std::size_t size() const { return degrees_.size(); }
  /// Index of the last entry (the s of (d_0, ..., d_s)).
  std::size_t last() const { return degrees_.size() - 1; }
  Degree operator[](std::size_t i) const { return degrees_[i]; }
  Degree front() const { return degrees_.front(); }
  Degree back() const { return degrees_.back(); }
  auto begin() const { return degrees_.begin(); }
  auto end() const { return degrees_.end(); }
  const std::vector<Degree>& degrees() const { return degrees_; }

  /// (d_0, ..., d_k).
  DegreeSequence prefix(std::size_t k) const {
    return DegreeSequence(std::vector<Degree>(degrees_.begin(), degrees_.begin() + k + 1));
  }
  /// (d_first, ..., d_last).
  DegreeSequence slice(std::size_t first, std::size_t last) const {
    return DegreeSequence(
        std::vector<Degree>(degrees_.begin() + first, degrees_.begin() + last + 1));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(degrees_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<Degree> degrees_;
};

/// Position of a graded Betti number: homological index i, internal degree j.
struct Slot {
  int i = 0;
  Degree j = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// Sparse table of exact rationals. Only nonzero values are stored, so two
/// tables are equal iff their entry maps are equal.
class BettiTable {
 public:
  using Entries = std::map<Slot, Rational>;

  BettiTable() = default;
  BettiTable(std::initializer_list<std::pair<Slot, Rational>> entries) {
    for (const auto& [slot, value] : entries) add(slot.i, slot.j, value);
  }

  /// Value at (i, j); zero when absent.
  Rational at(int i, Degree j) const {
    auto it = entries_.find(Slot{i, j});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  /// Accumulates `value` into (i, j), erasing the slot if it cancels.
  void add(int i, Degree j, const Rational& value) {
    if (value == 0) return;
    if (i < 0) throw validation_error("negative homological index");
    auto [it, inserted] = entries_.try_emplace(Slot{i, j}, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) entries_.erase(it);
    }
  }

  void set(int i, Degree j, const Rational& value) {
    if (i < 0) throw validation_error("negative homological index");
    if (value == 0)
      entries_.erase(Slot{i, j});
    else
      entries_[Slot{i, j}] = value;
  }

  const Entries& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Largest homological index with a nonzero entry; -1 for the empty table.
  int max_index() const {
    int m = -1;
    for (const auto& [slot, _] : entries_) m = std::max(m, slot.i);
    return m;
  }

  /// Total Betti number: sum over the internal degrees of column i.
  Rational total(int i) const {
    Rational sum = 0;
    for (const auto& [slot, value] : entries_)
      if (slot.i == i) sum += value;
    return sum;
  }

  /// True when every stored entry is nonnegative.
  bool is_module_table() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.second > 0; });
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  Entries entries_;
};

struct PureDiagram {
  DegreeSequence sequence;
  BettiTable table;
};

/// Entry (i, d_i) of pi(d): (-1)^i prod_{k != i} 1/(d_k - d_i).
inline Rational pure_entry(const DegreeSequence& d, std::size_t i) {
  Integer denom = 1;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (k != i) denom *= Integer(static_cast<long>(d[k] - d[i]));
  Rational q(i % 2 == 0 ? 1 : -1);
  q /= Rational(denom);
  return q;
}

inline PureDiagram pure_diagram(const DegreeSequence& d) {
  BettiTable t;
  for (std::size_t i = 0; i < d.size(); ++i) t.set(static_cast<int>(i), d[i], pure_entry(d, i));
  return {d, std::move(t)};
}

/// d_1 * ... * d_s * pi(d), defined for d_0 = 0; its (0,0) entry is 1.
inline PureDiagram normalized_pure_diagram(const DegreeSequence& d) {
  if (d.front() != 0)
    throw validation_error("normalized pure diagram needs d_0 = 0, got " + d.to_string());
  Integer scale = 1;
  for (std::size_t k = 1; k < d.size(); ++k) scale *= Integer(static_cast<long>(d[k]));
  BettiTable t;
  for (std::size_t i = 0; i < d.size(); ++i)
    t.set(static_cast<int>(i), d[i], Rational(scale) * pure_entry(d, i));
  return {d, std::move(t)};
}

/// pi(a) <= pi(b) iff a is at least as long as b and a_i <= b_i on b's range.
inline bool diagram_leq(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() < b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool diagram_comparable(const DegreeSequence& a, const DegreeSequence& b) {
  return diagram_leq(a, b) || diagram_leq(b, a);
}

inline BettiTable table_linear_combination(
    std::span<const std::pair<Rational, BettiTable>> terms) {
  BettiTable out;
  for (const auto& [coeff, table] : terms)
    for (const auto& [slot, value] : table.entries()) out.add(slot.i, slot.j, coeff * value);
  return out;
}

inline BettiTable table_linear_combination(
    std::initializer_list<std::pair<Rational, BettiTable>> terms) {
  return table_linear_combination(std::span(terms.begin(), terms.size()));
}

/// Degrees of the lowest nonzero entry in each column 0..p, where p is the
/// last nonzero column. Throws not_decomposable on empty tables, column gaps
/// and non-increasing minima.
inline DegreeSequence top_strand(const BettiTable& beta) {
  if (beta.empty()) throw not_decomposable("empty table has no top strand");
  const int p = beta.max_index();
  std::vector<Degree> mins;
  mins.reserve(p + 1);
  auto it = beta.entries().begin();
  for (int i = 0; i <= p; ++i) {
    // entries are sorted by (i, j); the first one of column i is its minimum
    while (it != beta.entries().end() && it->first.i < i) ++it;
    if (it == beta.entries().end() || it->first.i != i)
      throw not_decomposable("column " + std::to_string(i) + " is empty");
    mins.push_back(it->first.j);
  }
  for (std::size_t i = 1; i < mins.size(); ++i)
    if (mins[i - 1] >= mins[i])
      throw not_decomposable("top strand is not strictly increasing at column " +
                             std::to_string(i));
  return DegreeSequence(std::move(mins));
}

struct DecompositionTerm {
  DegreeSequence sequence;
  Rational coefficient;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Positive combination of pure diagrams forming a chain, stored in
/// increasing partial order (the longest, smallest diagram first).
class Decomposition {
 public:
  Decomposition() = default;

  explicit Decomposition(std::vector<DecompositionTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.coefficient <= 0)
        throw validation_error("decomposition coefficient " + to_string(t.coefficient) +
                               " on pi" + t.sequence.to_string() + " is not positive");
    for (std::size_t a = 0; a < terms_.size(); ++a)
      for (std::size_t b = a + 1; b < terms_.size(); ++b) {
        if (terms_[a].sequence == terms_[b].sequence)
          throw validation_error("repeated sequence " + terms_[a].sequence.to_string());
        if (!diagram_comparable(terms_[a].sequence, terms_[b].sequence))
          throw validation_error("pi" + terms_[a].sequence.to_string() + " and pi" +
                                 terms_[b].sequence.to_string() + " are incomparable");
      }
    std::sort(terms_.begin(), terms_.end(), [](const auto& x, const auto& y) {
      return x.sequence != y.sequence && diagram_leq(x.sequence, y.sequence);
    });
  }

  const std::vector<DecompositionTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.coefficient.get_den() == 1; });
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  std::vector<DecompositionTerm> terms_;
};

}  // namespace betti
