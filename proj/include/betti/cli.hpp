#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in memory.
//
// Exit status: 0 success or predicate true, 1 domain failure or predicate
// false, 2 parse or usage error.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betti/decompose.hpp"
#include "betti/ferrers.hpp"
#include "betti/io.hpp"
#include "betti/linear.hpp"
#include "betti/oseq.hpp"
#include "betti/purelift.hpp"

namespace betti::cli {

enum Exit : int { ok = 0, failure = 1, usage = 2 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw parse_error("cannot open '" + path + "'");
  return read_all(file);
}

inline std::string render_terms(std::span<const Rational> coeffs,
                                const std::function<DegreeSequence(std::size_t)>& sequence,
                                bool keep_zeros) {
  std::string out;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (keep_zeros || coeffs[j] != 0) out += format_term(coeffs[j], sequence(j)) + "\n";
  return out;
}

inline std::string integrality_note(const Decomposition& dec) {
  return dec.is_integral() ? "# integral coefficients\n" : "# rational coefficients\n";
}

}  // namespace detail

inline int run(std::vector<std::string> args, Streams io) {
  CLI::App app{"Exact Boij-Soderberg decompositions of Betti tables and O-sequences", "betti"};
  app.require_subcommand(1);

  std::string format_name = "human";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output style")
        ->check(CLI::IsMember({"human", "machine"}));
  };

  std::string path;
  std::string seq_text, degrees_text, beta0_text = "1";
  std::string a_text;
  long d_value = 0;
  std::optional<long> ring_vars;
  bool keep_zeros = false, normalized = false, verify_closed = false;

  auto* decompose_cmd = app.add_subcommand("decompose", "Chain decomposition of a Betti table");
  decompose_cmd->add_option("file", path, "Table file, or - for stdin")->required();
  add_format(decompose_cmd);

  auto* recompose_cmd = app.add_subcommand("recompose", "Table from a decomposition");
  recompose_cmd->add_option("file", path, "Decomposition file, or - for stdin")->required();
  add_format(recompose_cmd);

  auto* truncate_cmd = app.add_subcommand(
      "truncate", "Drop column 0 of a table, or transform coefficients with --deltas");
  truncate_cmd->add_option("file", path, "Table file, or - for stdin");
  truncate_cmd->add_option("--deltas", seq_text, "Coefficients on pi(d_0..d_j), j = 0..t");
  truncate_cmd->add_option("--degrees", degrees_text, "Degree sequence d_0,...,d_t");
  truncate_cmd->add_flag("--keep-zeros", keep_zeros);
  add_format(truncate_cmd);

  auto* extend_cmd = app.add_subcommand("extend", "Decomposition of an extension from its truncation");
  extend_cmd->add_option("--alphas", seq_text, "Coefficients on pi(d_1..d_j), j = 1..t")->required();
  extend_cmd->add_option("--degrees", degrees_text, "Degree sequence d_0,...,d_t")->required();
  extend_cmd->add_option("--beta0", beta0_text, "Entry (0, d_0) of the extended table");
  extend_cmd->add_flag("--keep-zeros", keep_zeros);
  add_format(extend_cmd);

  auto* oseq_cmd = app.add_subcommand("oseq", "O-sequence tools");
  oseq_cmd->require_subcommand(1);
  auto* oseq_check_cmd = oseq_cmd->add_subcommand("check", "Test Macaulay's growth condition");
  oseq_check_cmd->add_option("sequence", seq_text, "h_0,h_1,...")->required();
  add_format(oseq_check_cmd);
  auto* oseq_bound_cmd = oseq_cmd->add_subcommand("bound", "Macaulay bound a^<d>");
  oseq_bound_cmd->add_option("a", a_text)->required();
  oseq_bound_cmd->add_option("d", d_value)->required();
  add_format(oseq_bound_cmd);
  auto* oseq_decompose_cmd = oseq_cmd->add_subcommand("decompose", "Weights on the rays h_{R/m^{j+1}}");
  oseq_decompose_cmd->add_option("sequence", seq_text)->required();
  oseq_decompose_cmd->add_option("--vars", d_value, "Number of variables d")->required();
  oseq_decompose_cmd->add_flag("--keep-zeros", keep_zeros);
  add_format(oseq_decompose_cmd);

  auto* cone_cmd = app.add_subcommand("cone", "O-sequence cone");
  cone_cmd->require_subcommand(1);
  auto* cone_check_cmd = cone_cmd->add_subcommand("check", "Half-space membership");
  cone_check_cmd->add_option("sequence", seq_text, "alpha_0,alpha_1,... (rationals allowed)")
      ->required();
  cone_check_cmd->add_option("--vars", d_value, "Number of variables d")->required();
  add_format(cone_check_cmd);

  auto* linear_cmd = app.add_subcommand("linear", "d-linear ideal tables");
  linear_cmd->require_subcommand(1);
  auto* linear_table_cmd = linear_cmd->add_subcommand("table", "Betti table of the ideal");
  linear_table_cmd->add_option("sequence", seq_text)->required();
  linear_table_cmd->add_option("-d,--degree", d_value, "Generator degree d")->required();
  linear_table_cmd->add_option("-n,--variables", ring_vars, "Ring variables (checks t <= n)");
  add_format(linear_table_cmd);

  auto* quotient_cmd = app.add_subcommand("quotient", "Decomposition of the quotient table");
  quotient_cmd->add_option("sequence", seq_text)->required();
  quotient_cmd->add_option("-d,--degree", d_value, "Generator degree d")->required();
  quotient_cmd->add_flag("--normalized", normalized, "Use normalized diagrams npi");
  add_format(quotient_cmd);

  auto* ferrers_cmd = app.add_subcommand("ferrers", "Quotient decomposition of a Ferrers hypergraph");
  ferrers_cmd->add_option("file", path, "Tuple file, or - for stdin")->required();
  ferrers_cmd->add_flag("--verify-closed", verify_closed,
                    "Treat the input as the full edge set and reject it if not closed");
  add_format(ferrers_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return usage;
  }

  const Format mode = format_name == "machine" ? Format::machine : Format::human;
  try {
    if (decompose_cmd->parsed()) {
      const BettiTable beta = parse_table(detail::read_input(path, io.in));
      const Decomposition dec = bs_decompose(beta);
      io.out << render_decomposition(dec);
      if (mode == Format::human) io.out << detail::integrality_note(dec);
      return ok;
    }
    if (recompose_cmd->parsed()) {
      io.out << render_table(recompose(parse_decomposition(detail::read_input(path, io.in))), mode);
      return ok;
    }
    if (truncate_cmd->parsed()) {
      if (!seq_text.empty() || !degrees_text.empty()) {
        if (seq_text.empty() || degrees_text.empty())
          throw parse_error("--deltas and --degrees go together");
        const DegreeSequence d = parse_degree_sequence(degrees_text);
        const auto alphas = truncate_decomposition(parse_rational_list(seq_text), d);
        io.out << detail::render_terms(
            alphas, [&](std::size_t j) { return d.slice(1, j + 1); }, keep_zeros);
        return ok;
      }
      if (path.empty()) throw parse_error("truncate needs a table file or --deltas/--degrees");
      io.out << render_table(truncate_table(parse_table(detail::read_input(path, io.in))), mode);
      return ok;
    }
    if (extend_cmd->parsed()) {
      const DegreeSequence d = parse_degree_sequence(degrees_text);
      const auto c = extend_decomposition(parse_rational_list(seq_text), d,
                                          parse_rational(beta0_text));
      io.out << detail::render_terms(
          c, [&](std::size_t j) { return d.prefix(j); }, keep_zeros);
      if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return x < 0; })) {
        io.err << "error: negative coefficient; the input is not the truncation of a module "
                  "table\n";
        return failure;
      }
      return ok;
    }
    if (oseq_check_cmd->parsed()) {
      const auto h = parse_integer_list(seq_text);
      if (auto defect = o_sequence_defect(h)) {
        io.err << "not an O-sequence: " << *defect << "\n";
        return failure;
      }
      if (mode == Format::human) io.out << "O-sequence\n";
      return ok;
    }
    if (oseq_bound_cmd->parsed()) {
      const Integer a = parse_integer(a_text);
      const Integer bound = macaulay_bound(a, d_value);
      if (mode == Format::machine) {
        io.out << bound.get_str() << "\n";
      } else {
        io.out << a.get_str() << "^<" << d_value << "> = " << bound.get_str();
        if (a > 0) io.out << "  (" << a.get_str() << " = " << macaulay_representation(a, d_value).to_string() << ")";
        io.out << "\n";
      }
      return ok;
    }
    if (oseq_decompose_cmd->parsed()) {
      const auto c = oseq_decompose(parse_rational_list(seq_text), d_value);
      for (std::size_t j = 0; j < c.size(); ++j)
        if (keep_zeros || c[j] != 0) io.out << to_string(c[j]) << " * e(" << j << ")\n";
      if (std::any_of(c.begin(), c.end(), [](const Rational& x) { return x < 0; })) {
        io.err << "error: negative weight; the sequence lies outside the cone\n";
        return failure;
      }
      return ok;
    }
    if (cone_check_cmd->parsed()) {
      const auto alpha = parse_rational_list(seq_text);
      const auto slacks = halfspace_slacks(alpha, d_value);
      if (mode == Format::machine) {
        io.out << join(slacks) << "\n";
      } else {
        for (std::size_t j = 0; j < slacks.size(); ++j)
          io.out << "s_" << j << " = " << to_string(slacks[j]) << "\n";
      }
      if (!in_cone(alpha, d_value)) {
        for (std::size_t j = 0; j < slacks.size(); ++j)
          if (slacks[j] < 0) {
            io.err << "outside the cone: (" << d_value << " + " << j << ") alpha_" << j
                   << " - " << j + 1 << " alpha_" << j + 1 << " = " << to_string(slacks[j])
                   << " < 0\n";
            break;
          }
        return failure;
      }
      return ok;
    }
    if (linear_table_cmd->parsed()) {
      const OSequence alpha(parse_integer_list(seq_text));
      io.out << render_table(linear_ideal_table(alpha, d_value, ring_vars), mode);
      return ok;
    }
    if (quotient_cmd->parsed()) {
      const OSequence alpha(parse_integer_list(seq_text));
      if (normalized) {
        io.out << render_normalized(quotient_decomposition_normalized(alpha, d_value));
      } else {
        const Decomposition dec = quotient_decomposition(alpha, d_value);
        io.out << render_decomposition(dec);
        if (mode == Format::human) io.out << detail::integrality_note(dec);
      }
      return ok;
    }
    if (ferrers_cmd->parsed()) {
      const FerrersInput input = parse_ferrers(detail::read_input(path, io.in));
      const FerrersHypergraph F = verify_closed
                                      ? FerrersHypergraph(input.dimension, input.tuples)
                                      : ferrers_closure(input.tuples, input.dimension);
      const Decomposition dec = ferrers_quotient_decomposition(F);
      if (mode == Format::human)
        io.out << "# " << F.size() << " edges, alpha = (" << ferrers_alpha(F).to_string()
               << ")\n";
      io.out << render_decomposition(dec);
      return ok;
    }
  } catch (const parse_error& e) {
    io.err << "error: " << e.what() << "\n";
    return usage;
  } catch (const validation_error& e) {
    io.err << "error: " << e.what() << "\n";
    return failure;
  }
  io.err << app.help();
  return usage;
}

}  // namespace betti::cli
