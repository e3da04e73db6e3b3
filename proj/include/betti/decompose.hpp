#pragma once

// Greedy computation of the unique chain decomposition of a Betti table.

#include <span>
#include <vector>

#include "betti/tables.hpp"

namespace betti {

inline bool is_chain(std::span<const DegreeSequence> sequences) {
  for (std::size_t a = 0; a < sequences.size(); ++a)
    for (std::size_t b = a + 1; b < sequences.size(); ++b)
      if (!diagram_comparable(sequences[a], sequences[b])) return false;
  return true;
}

inline bool is_chain(std::initializer_list<DegreeSequence> sequences) {
  return is_chain(std::span(sequences.begin(), sequences.size()));
}

inline BettiTable recompose(const Decomposition& dec) {
  BettiTable out;
  for (const auto& term : dec)
    for (std::size_t i = 0; i < term.sequence.size(); ++i)
      out.add(static_cast<int>(i), term.sequence[i],
              term.coefficient * pure_entry(term.sequence, i));
  return out;
}

/// Repeatedly strips c * pi(top_strand(beta)) with the largest c that keeps
/// every entry nonnegative. Each step zeroes at least one strand entry and
/// creates no new ones, so the loop runs at most beta.size() times.
inline Decomposition bs_decompose(const BettiTable& beta) {
  if (!beta.is_module_table()) throw not_decomposable("table has negative entries");
  BettiTable rest = beta;
  std::vector<DecompositionTerm> terms;
  const std::size_t max_steps = beta.size();
  while (!rest.empty()) {
    if (terms.size() == max_steps) throw not_decomposable("elimination did not terminate");
    DegreeSequence d = top_strand(rest);
    std::vector<Rational> weights(d.size());
    Rational c;
    for (std::size_t i = 0; i < d.size(); ++i) {
      weights[i] = pure_entry(d, i);
      Rational ratio = rest.at(static_cast<int>(i), d[i]) / weights[i];
      if (i == 0 || ratio < c) c = ratio;
    }
    for (std::size_t i = 0; i < d.size(); ++i)
      rest.add(static_cast<int>(i), d[i], -c * weights[i]);
    if (!terms.empty() && !diagram_leq(terms.back().sequence, d))
      throw not_decomposable("strand " + d.to_string() + " does not extend the chain");
    terms.push_back({std::move(d), c});
  }
  return Decomposition(std::move(terms));
}

}  // namespace betti
