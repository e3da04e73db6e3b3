#pragma once

// d-linear Betti tables built from O-sequences, and the decompositions of
// the matching quotient tables.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "betti/decompose.hpp"
#include "betti/oseq.hpp"
#include "betti/tables.hpp"

namespace betti {

/// (d, d+1, ..., d+j), or (0, d, ..., d+j) when `with_zero` is set.
inline DegreeSequence linear_strand(std::int64_t d, std::size_t j, bool with_zero = false) {
  std::vector<Degree> degs;
  if (with_zero) degs.push_back(0);
  for (std::size_t k = 0; k <= j; ++k) degs.push_back(d + static_cast<Degree>(k));
  return DegreeSequence(std::move(degs));
}

namespace detail {

inline void require_alpha1_at_most_d(const OSequence& alpha, std::int64_t d) {
  if (d <= 0) throw validation_error("generator degree d must be positive");
  if (alpha[1] > d)
    throw validation_error("alpha_1 = " + alpha[1].get_str() + " exceeds d = " +
                           std::to_string(d));
}

}  // namespace detail

/// sum_j alpha_j j! pi(d, ..., d+j). `variables`, when given, enforces t <= n.
inline BettiTable linear_ideal_table(const OSequence& alpha, std::int64_t d,
                                     std::optional<std::int64_t> variables = std::nullopt) {
  if (auto defect = o_sequence_defect(alpha.values()))
    throw validation_error("not an O-sequence: " + *defect);
  detail::require_alpha1_at_most_d(alpha, d);
  if (variables && static_cast<std::int64_t>(alpha.socle_degree()) > *variables)
    throw validation_error("socle degree " + std::to_string(alpha.socle_degree()) +
                           " exceeds the number of variables " + std::to_string(*variables));
  BettiTable out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    const DegreeSequence strand = linear_strand(d, j);
    const Rational weight(alpha[j] * factorial(static_cast<std::int64_t>(j)));
    for (std::size_t i = 0; i < strand.size(); ++i)
      out.add(static_cast<int>(i), strand[i], weight * pure_entry(strand, i));
  }
  return out;
}

/// q_j = ((d+j) alpha_j - (j+1) alpha_{j+1}) j!, j = 0..t, on pi(0, d, ..., d+j).
/// Accepts arbitrary rationals; negative entries are returned, not rejected.
inline std::vector<Rational> quotient_coefficients(std::span<const Rational> alpha,
                                                   std::int64_t d) {
  auto slacks = halfspace_slacks(alpha, d);
  for (std::size_t j = 0; j < slacks.size(); ++j)
    slacks[j] *= Rational(factorial(static_cast<std::int64_t>(j)));
  return slacks;
}

inline Decomposition quotient_decomposition(const OSequence& alpha, std::int64_t d) {
  detail::require_alpha1_at_most_d(alpha, d);
  const auto q = quotient_coefficients(alpha.as_rationals(), d);
  std::vector<DecompositionTerm> terms;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] < 0)
      throw validation_error("coefficient on pi" + linear_strand(d, j, true).to_string() +
                             " is negative (" + to_string(q[j]) +
                             "); the sequence violates a half-space bound");
    if (q[j] != 0) terms.push_back({linear_strand(d, j, true), q[j]});
  }
  return Decomposition(std::move(terms));
}

inline BettiTable quotient_table(const OSequence& alpha, std::int64_t d) {
  return recompose(quotient_decomposition(alpha, d));
}

/// n_j = alpha_j / C(d+j-1, j) - alpha_{j+1} / C(d+j, j+1), positional over
/// the normalized diagrams npi(0, d, ..., d+j), j = 0..t.
inline std::vector<Rational> normalized_quotient_coefficients(std::span<const Rational> alpha,
                                                              std::int64_t d) {
  // (d+j)!/(d-1)! * npi = pi scaling turns q_j into n_j
  auto q = quotient_coefficients(alpha, d);
  for (std::size_t j = 0; j < q.size(); ++j)
    q[j] /= Rational(factorial(d + static_cast<std::int64_t>(j)) / factorial(d - 1));
  return q;
}

struct NormalizedTerm {
  DegreeSequence sequence;
  Rational coefficient;
  friend bool operator==(const NormalizedTerm&, const NormalizedTerm&) = default;
};

/// Nonzero terms of the normalized quotient decomposition, longest first.
inline std::vector<NormalizedTerm> quotient_decomposition_normalized(const OSequence& alpha,
                                                                    std::int64_t d) {
  detail::require_alpha1_at_most_d(alpha, d);
  const auto n = normalized_quotient_coefficients(alpha.as_rationals(), d);
  std::vector<NormalizedTerm> out;
  for (std::size_t j = n.size(); j-- > 0;) {
    if (n[j] < 0)
      throw validation_error("normalized coefficient " + std::to_string(j) + " is negative");
    if (n[j] != 0) out.push_back({linear_strand(d, j, true), n[j]});
  }
  return out;
}

inline BettiTable recompose_normalized(std::span<const NormalizedTerm> terms) {
  BettiTable out;
  for (const auto& term : terms) {
    const PureDiagram npi = normalized_pure_diagram(term.sequence);
    for (const auto& [slot, value] : npi.table.entries())
      out.add(slot.i, slot.j, term.coefficient * value);
  }
  return out;
}

}  // namespace betti
