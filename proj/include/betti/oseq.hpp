#pragma once

// Macaulay representations, O-sequences and the simplicial cone they span.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "betti/rational.hpp"

namespace betti {

/// Finite sequence (h_0, ..., h_t) with h_0 = 1 and h_t > 0. Trailing zeros
/// are trimmed on construction. Macaulay's growth condition is not enforced
/// here; see is_o_sequence.
class OSequence {
 public:
  explicit OSequence(std::vector<Integer> values) : values_(std::move(values)) {
    while (values_.size() > 1 && values_.back() == 0) values_.pop_back();
    if (values_.empty() || values_.front() != 1)
      throw validation_error("sequence must start with h_0 = 1");
    for (const auto& v : values_)
      if (v < 0) throw validation_error("sequence entries must be nonnegative");
  }
  OSequence(std::initializer_list<long> values)
      : OSequence(std::vector<Integer>(values.begin(), values.end())) {}

  const std::vector<Integer>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  /// Socle degree t.
  std::size_t socle_degree() const { return values_.size() - 1; }
  /// h_j, zero beyond the socle degree.
  Integer operator[](std::size_t j) const { return j < values_.size() ? values_[j] : Integer(0); }

  std::vector<Rational> as_rationals() const {
    return std::vector<Rational>(values_.begin(), values_.end());
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ',';
      out += values_[i].get_str();
    }
    return out;
  }

  friend bool operator==(const OSequence&, const OSequence&) = default;

 private:
  std::vector<Integer> values_;
};

/// a = C(top_d, d) + C(top_{d-1}, d-1) + ... with strictly decreasing tops
/// and bottoms, last bottom >= 1.
struct MacaulayRep {
  struct Term {
    Integer top;
    std::int64_t bottom;
    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  Integer value() const {
    Integer sum = 0;
    for (const auto& t : terms) sum += binomial(t.top, t.bottom);
    return sum;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& t : terms) {
      if (!out.empty()) out += " + ";
      out += "C(" + t.top.get_str() + "," + std::to_string(t.bottom) + ")";
    }
    return out;
  }

  friend bool operator==(const MacaulayRep&, const MacaulayRep&) = default;
};

inline MacaulayRep macaulay_representation(const Integer& a, std::int64_t d) {
  if (a <= 0) throw validation_error("Macaulay representation needs a >= 1");
  if (d <= 0) throw validation_error("Macaulay representation needs d >= 1");
  MacaulayRep rep;
  Integer rest = a;
  for (std::int64_t k = d; k >= 1 && rest > 0; --k) {
    // largest m with C(m, k) <= rest; C(k, k) = 1 <= rest so m >= k
    Integer lo = k, hi = k + 1;
    while (binomial(hi, k) <= rest) hi *= 2;
    while (hi - lo > 1) {
      Integer mid = (lo + hi) / 2;
      if (binomial(mid, k) <= rest)
        lo = mid;
      else
        hi = mid;
    }
    rep.terms.push_back({lo, k});
    rest -= binomial(lo, k);
  }
  return rep;
}

/// a^<d>.
inline Integer macaulay_bound(const Integer& a, std::int64_t d) {
  if (d <= 0) throw validation_error("Macaulay bound needs d >= 1");
  if (a < 0) throw validation_error("Macaulay bound needs a >= 0");
  if (a == 0) return 0;
  Integer sum = 0;
  for (const auto& t : macaulay_representation(a, d).terms) sum += binomial(t.top + 1, t.bottom + 1);
  return sum;
}

/// Brute-force growth of a lex segment. Takes the a lex-smallest degree-d
/// monomials in a variables (x_1 > x_2 > ...; larger exponent on an earlier
/// variable is larger) and counts the degree-(d+1) monomials all of whose
/// degree-d divisors are among them. Limited to a <= 60, d <= 5.
inline long lex_growth_oracle(long a, long d) {
  if (a < 1 || a > 60 || d < 1 || d > 5)
    throw validation_error("lex growth oracle is limited to 1 <= a <= 60, 1 <= d <= 5");
  using Monomial = std::vector<int>;
  const std::size_t n = static_cast<std::size_t>(a);
  Monomial m(n, 0);
  m.back() = static_cast<int>(d);
  std::set<Monomial> segment;
  // walk degree-d exponent vectors in ascending lex order, starting at x_n^d
  for (long taken = 0; taken < a; ++taken) {
    segment.insert(m);
    std::size_t i = n - 1;
    int tail = 0;
    while (i > 0) {
      --i;
      tail += m[i + 1];
      if (tail > 0) break;
    }
    ++m[i];
    std::fill(m.begin() + i + 1, m.end(), 0);
    m.back() = tail - 1;
  }
  // every qualifying degree-(d+1) monomial is some segment element times a variable
  std::set<Monomial> grown;
  for (const auto& base : segment)
    for (std::size_t v = 0; v < n; ++v) {
      Monomial up = base;
      ++up[v];
      if (grown.count(up)) continue;
      bool closed = true;
      for (std::size_t w = 0; w < n && closed; ++w) {
        if (up[w] == 0) continue;
        Monomial down = up;
        --down[w];
        closed = segment.count(down) > 0;
      }
      if (closed) grown.insert(std::move(up));
    }
  return static_cast<long>(grown.size());
}

struct MacaulayViolation {
  std::size_t index;  // j with h_{j+1} > h_j^<j>
  Integer value;      // h_j
  Integer next;       // h_{j+1}
  Integer bound;      // h_j^<j>

  std::string to_string() const {
    return "h_" + std::to_string(index + 1) + " = " + next.get_str() + " exceeds " +
           value.get_str() + "^<" + std::to_string(index) + "> = " + bound.get_str();
  }
};

/// Reason a list fails to be an O-sequence, or nullopt if it is one.
inline std::optional<std::string> o_sequence_defect(std::span<const Integer> h) {
  if (h.empty() || h[0] != 1) return "h_0 must be 1";
  for (const auto& v : h)
    if (v < 0) return "entries must be nonnegative";
  for (std::size_t j = 1; j + 1 < h.size(); ++j) {
    Integer bound = macaulay_bound(h[j], static_cast<std::int64_t>(j));
    if (h[j + 1] > bound) return MacaulayViolation{j, h[j], h[j + 1], bound}.to_string();
  }
  return std::nullopt;
}

/// h_0 = 1 and h_{j+1} <= h_j^<j> for j >= 1; h_1 is free.
inline bool is_o_sequence(std::span<const Integer> h) { return !o_sequence_defect(h); }

inline bool is_o_sequence(const OSequence& h) { return is_o_sequence(h.values()); }

/// Hilbert function of K[x_1..x_d]/m^{t+1}: C(d+j-1, j) for j = 0..t.
inline OSequence max_ideal_power_oseq(std::int64_t d, std::int64_t t) {
  if (d <= 0) throw validation_error("number of variables must be positive");
  if (t < 0) throw validation_error("socle degree must be nonnegative");
  std::vector<Integer> h;
  for (std::int64_t j = 0; j <= t; ++j) h.push_back(binomial(d + j - 1, j));
  return OSequence(std::move(h));
}

namespace detail {

inline Rational entry_or_zero(std::span<const Rational> alpha, std::size_t j) {
  return j < alpha.size() ? alpha[j] : Rational(0);
}

inline void require_cone_domain(std::span<const Rational> alpha, std::int64_t d) {
  if (d <= 0) throw validation_error("number of variables must be positive");
  if (alpha.empty() || alpha[0] != 1) throw validation_error("sequence must start with 1");
  if (entry_or_zero(alpha, 1) > d)
    throw validation_error("alpha_1 = " + to_string(alpha[1]) + " exceeds d = " +
                           std::to_string(d) + "; the cone is only defined for alpha_1 <= d");
}

}  // namespace detail

/// s_j = (d + j) alpha_j - (j + 1) alpha_{j+1}, j = 0..t, with alpha_{t+1} = 0.
inline std::vector<Rational> halfspace_slacks(std::span<const Rational> alpha, std::int64_t d) {
  detail::require_cone_domain(alpha, d);
  std::vector<Rational> slacks(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j)
    slacks[j] = Rational(static_cast<long>(d + static_cast<std::int64_t>(j))) * alpha[j] -
                Rational(static_cast<long>(j + 1)) * detail::entry_or_zero(alpha, j + 1);
  return slacks;
}

inline std::vector<Rational> halfspace_slacks(const OSequence& alpha, std::int64_t d) {
  return halfspace_slacks(alpha.as_rationals(), d);
}

inline bool in_cone(std::span<const Rational> alpha, std::int64_t d) {
  for (const auto& a : alpha)
    if (a < 0) throw validation_error("cone points have nonnegative entries");
  auto slacks = halfspace_slacks(alpha, d);
  return std::all_of(slacks.begin(), slacks.end(), [](const Rational& s) { return s >= 0; });
}

inline bool in_cone(const OSequence& alpha, std::int64_t d) {
  return in_cone(alpha.as_rationals(), d);
}

/// c_j = alpha_j / C(d+j-1, j) - alpha_{j+1} / C(d+j, j+1): the weights of
/// alpha on the rays h_{R/m^{j+1}}.
inline std::vector<Rational> oseq_decompose(std::span<const Rational> alpha, std::int64_t d) {
  detail::require_cone_domain(alpha, d);
  std::vector<Rational> c(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    c[j] = alpha[j] / Rational(binomial(d + jj - 1, jj)) -
           detail::entry_or_zero(alpha, j + 1) / Rational(binomial(d + jj, jj + 1));
  }
  return c;
}

inline std::vector<Rational> oseq_decompose(const OSequence& alpha, std::int64_t d) {
  return oseq_decompose(alpha.as_rationals(), d);
}

/// sum_j coeffs_j * h_{R/m^{j+1}}, trailing zeros trimmed.
inline std::vector<Rational> oseq_recompose(std::span<const Rational> coeffs, std::int64_t d) {
  if (d <= 0) throw validation_error("number of variables must be positive");
  std::vector<Rational> out(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    for (std::size_t k = 0; k <= j; ++k) {
      const auto kk = static_cast<std::int64_t>(k);
      out[k] += coeffs[j] * Rational(binomial(d + kk - 1, kk));
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace betti
