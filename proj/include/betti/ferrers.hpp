#pragma once

// d-uniform Ferrers hypergraphs: downward-closed sets of d-tuples of
// positive integers. Gives a second, independent route to the quotient
// decompositions of linear.hpp.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "betti/linear.hpp"
#include "betti/oseq.hpp"
#include "betti/tables.hpp"

namespace betti {

using Tuple = std::vector<std::int64_t>;

class FerrersHypergraph {
 public:
  /// Takes `tuples` as the full edge set; throws if it is not downward closed.
  FerrersHypergraph(std::size_t dimension, std::set<Tuple> tuples)
      : dimension_(dimension), tuples_(std::move(tuples)) {
    if (dimension_ == 0) throw validation_error("hypergraph dimension must be positive");
    for (const auto& e : tuples_) {
      check_tuple(e, dimension_);
      for (std::size_t k = 0; k < dimension_; ++k) {
        if (e[k] == 1) continue;
        Tuple below = e;
        --below[k];
        if (!tuples_.count(below))
          throw validation_error("edge set is not downward closed: " + format(e) +
                                 " is present but " + format(below) + " is not");
      }
    }
  }

  std::size_t dimension() const { return dimension_; }
  const std::set<Tuple>& tuples() const { return tuples_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }
  bool contains(const Tuple& e) const { return tuples_.count(e) > 0; }

  static void check_tuple(const Tuple& e, std::size_t dimension) {
    if (e.size() != dimension)
      throw validation_error("tuple " + format(e) + " does not have " +
                             std::to_string(dimension) + " coordinates");
    for (auto v : e)
      if (v < 1) throw validation_error("tuple " + format(e) + " has a nonpositive coordinate");
  }

  static std::string format(const Tuple& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e[i]);
    }
    return out + ")";
  }

  friend bool operator==(const FerrersHypergraph&, const FerrersHypergraph&) = default;

 private:
  std::size_t dimension_;
  std::set<Tuple> tuples_;
};

/// Smallest downward-closed set containing the generators.
inline FerrersHypergraph ferrers_closure(const std::set<Tuple>& generators, std::size_t d) {
  if (d == 0) throw validation_error("hypergraph dimension must be positive");
  std::set<Tuple> closed;
  std::vector<Tuple> stack;
  for (const auto& g : generators) {
    FerrersHypergraph::check_tuple(g, d);
    if (closed.insert(g).second) stack.push_back(g);
  }
  while (!stack.empty()) {
    Tuple e = std::move(stack.back());
    stack.pop_back();
    for (std::size_t k = 0; k < d; ++k) {
      if (e[k] == 1) continue;
      Tuple below = e;
      --below[k];
      if (closed.insert(below).second) stack.push_back(std::move(below));
    }
  }
  return FerrersHypergraph(d, std::move(closed));
}

/// alpha_j = number of tuples with coordinate sum j + d.
inline OSequence ferrers_alpha(const FerrersHypergraph& F) {
  if (F.empty()) throw validation_error("empty hypergraph has no O-sequence");
  const auto d = static_cast<std::int64_t>(F.dimension());
  std::vector<Integer> alpha;
  for (const auto& e : F.tuples()) {
    std::int64_t sum = 0;
    for (auto v : e) sum += v;
    const auto j = static_cast<std::size_t>(sum - d);
    if (alpha.size() <= j) alpha.resize(j + 1, 0);
    ++alpha[j];
  }
  return OSequence(std::move(alpha));
}

/// Quotient decomposition from the coordinate projections of F: each (d-1)
/// tuple S of the projection dropping coordinate j contributes n_S * k_S! on
/// pi(0, d, ..., d + k_S), where n_S is the largest completing coordinate and
/// k_S = n_S - d + (sum of S). Contributions on the same sequence are summed.
inline Decomposition ferrers_quotient_decomposition(const FerrersHypergraph& F) {
  const std::size_t d = F.dimension();
  if (d < 2) throw validation_error("Ferrers decomposition needs d >= 2");
  if (F.empty()) throw validation_error("Ferrers decomposition needs a nonempty hypergraph");

  std::map<std::int64_t, Integer> by_k;
  for (std::size_t j = 0; j < d; ++j) {
    std::map<Tuple, std::int64_t> completion;  // S -> n_S
    for (const auto& e : F.tuples()) {
      Tuple s = e;
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(j));
      auto [it, fresh] = completion.try_emplace(std::move(s), e[j]);
      if (!fresh) it->second = std::max(it->second, e[j]);
    }
    for (const auto& [s, n_s] : completion) {
      std::int64_t k = n_s - static_cast<std::int64_t>(d);
      for (auto v : s) k += v;
      by_k[k] += Integer(static_cast<long>(n_s)) * factorial(k);
    }
  }
  std::vector<DecompositionTerm> terms;
  for (const auto& [k, coeff] : by_k)
    terms.push_back({linear_strand(static_cast<std::int64_t>(d), static_cast<std::size_t>(k), true),
                     Rational(coeff)});
  return Decomposition(std::move(terms));
}

/// Calls `visit` once for every nonempty downward-closed subset of
/// [bound]^d. The box may hold at most 64 points (d <= 3 with bound <= 4).
/// Order is deterministic: depth-first over box points by coordinate sum,
/// "excluded" explored before "included".
inline void for_each_ferrers(std::size_t d, std::int64_t bound,
                             const std::function<void(const FerrersHypergraph&)>& visit) {
  if (d < 1 || bound < 1) throw validation_error("dimension and bound must be positive");
  std::size_t points = 1;
  for (std::size_t k = 0; k < d; ++k) {
    points *= static_cast<std::size_t>(bound);
    if (points > 64) throw validation_error("enumeration box exceeds 64 points");
  }

  std::vector<Tuple> box;
  Tuple e(d, 1);
  for (std::size_t n = 0; n < points; ++n) {
    box.push_back(e);
    for (std::size_t k = d; k-- > 0;) {
      if (e[k] < bound) {
        ++e[k];
        break;
      }
      e[k] = 1;
    }
  }
  // a linear extension of the product order
  std::stable_sort(box.begin(), box.end(), [](const Tuple& a, const Tuple& b) {
    std::int64_t sa = 0, sb = 0;
    for (auto v : a) sa += v;
    for (auto v : b) sb += v;
    return sa < sb;
  });
  std::map<Tuple, std::size_t> position;
  for (std::size_t n = 0; n < box.size(); ++n) position[box[n]] = n;
  std::vector<std::uint64_t> lower(box.size(), 0);  // lower covers as a bitmask
  for (std::size_t n = 0; n < box.size(); ++n)
    for (std::size_t k = 0; k < d; ++k)
      if (box[n][k] > 1) {
        Tuple below = box[n];
        --below[k];
        lower[n] |= std::uint64_t{1} << position.at(below);
      }

  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t n, std::uint64_t mask) {
    if (n == box.size()) {
      if (mask == 0) return;
      std::set<Tuple> tuples;
      for (std::size_t p = 0; p < box.size(); ++p)
        if (mask >> p & 1) tuples.insert(box[p]);
      visit(FerrersHypergraph(d, std::move(tuples)));
      return;
    }
    walk(n + 1, mask);
    if ((mask & lower[n]) == lower[n]) walk(n + 1, mask | std::uint64_t{1} << n);
  };
  walk(0, 0);
}

inline std::vector<FerrersHypergraph> enumerate_ferrers(std::size_t d, std::int64_t bound) {
  std::vector<FerrersHypergraph> out;
  for_each_ferrers(d, bound, [&](const FerrersHypergraph& F) { out.push_back(F); });
  return out;
}

}  // namespace betti
