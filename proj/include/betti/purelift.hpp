#pragma once

// Coefficient transforms between the decomposition of a table with a pure
// resolution of type (d_0, ..., d_t) and the decomposition of its truncation.
//
// Coefficient lists are positional. On the full table, entry j belongs to
// pi(d_0, ..., d_j), j = 0..t. On the truncation, entry j - 1 belongs to
// pi(d_1, ..., d_j), j = 1..t. Zeros are kept until finalize_*.

#include <span>
#include <string>
#include <vector>

#include "betti/tables.hpp"

namespace betti {

/// Coefficients on pi(d_0..d_j) of the table whose truncation decomposes as
/// sum alpha_j * pi(d_1..d_j) and whose (0, d_0) entry is beta0.
inline std::vector<Rational> extend_decomposition(std::span<const Rational> alphas,
                                                  const DegreeSequence& d,
                                                  const Rational& beta0) {
  const std::size_t t = d.last();
  if (t < 1) throw validation_error("extension needs a degree sequence of length >= 2");
  if (alphas.size() != t)
    throw validation_error("expected " + std::to_string(t) + " truncated coefficients, got " +
                           std::to_string(alphas.size()));
  std::vector<Rational> c(t + 1);
  c[0] = beta0 - alphas[0];
  for (std::size_t j = 1; j <= t; ++j) {
    Rational next = j < t ? alphas[j] : Rational(0);
    c[j] = Rational(static_cast<long>(d[j] - d[0])) * alphas[j - 1] - next;
  }
  return c;
}

/// alpha_j = sum_{k >= j} delta_k / prod_{p=j..k} (d_p - d_0), j = 1..t.
/// delta_0 has no influence.
inline std::vector<Rational> truncate_decomposition(std::span<const Rational> deltas,
                                                    const DegreeSequence& d) {
  const std::size_t t = d.last();
  if (t < 1) throw validation_error("truncation needs a degree sequence of length >= 2");
  if (deltas.size() != t + 1)
    throw validation_error("expected " + std::to_string(t + 1) + " coefficients, got " +
                           std::to_string(deltas.size()));
  std::vector<Rational> alphas(t);
  for (std::size_t j = 1; j <= t; ++j) {
    Rational sum = 0;
    Integer denom = 1;
    for (std::size_t k = j; k <= t; ++k) {
      denom *= Integer(static_cast<long>(d[k] - d[0]));
      sum += deltas[k] / Rational(denom);
    }
    alphas[j - 1] = sum;
  }
  return alphas;
}

/// Drops zero entries of a full-table coefficient list and builds the chain.
inline Decomposition finalize_extension(std::span<const Rational> coeffs,
                                        const DegreeSequence& d) {
  if (coeffs.size() != d.size())
    throw validation_error("coefficient list does not match the degree sequence");
  std::vector<DecompositionTerm> terms;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) terms.push_back({d.prefix(j), coeffs[j]});
  return Decomposition(std::move(terms));
}

/// Same for a truncated coefficient list over pi(d_1..d_j).
inline Decomposition finalize_truncation(std::span<const Rational> alphas,
                                         const DegreeSequence& d) {
  if (alphas.size() + 1 != d.size())
    throw validation_error("coefficient list does not match the degree sequence");
  std::vector<DecompositionTerm> terms;
  for (std::size_t j = 1; j <= alphas.size(); ++j)
    if (alphas[j - 1] != 0) terms.push_back({d.slice(1, j), alphas[j - 1]});
  return Decomposition(std::move(terms));
}

/// Drops column 0 and shifts (i, j) -> (i - 1, j).
inline BettiTable truncate_table(const BettiTable& beta) {
  BettiTable out;
  for (const auto& [slot, value] : beta.entries())
    if (slot.i > 0) out.set(slot.i - 1, slot.j, value);
  return out;
}

}  // namespace betti
