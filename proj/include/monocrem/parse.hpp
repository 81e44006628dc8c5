#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monocrem/core.hpp"
#include "monocrem/error.hpp"

namespace monocrem {

namespace detail {

// Recursive-descent parser for comma-separated monomial expressions.
//
//   set      := monomial (',' monomial)*
//   monomial := factor (('*' | ws | nothing) factor)*
//   factor   := 'x' '_'? integer ('^' integer)?
//
// Variables are x1..xn (or x_1..x_n); juxtaposition multiplies, so both
// "x1*x2" and "x1x2" denote the same monomial.
class MonomialParser {
 public:
  explicit MonomialParser(std::string_view text) : text_(text) {}

  std::vector<std::vector<std::size_t>> parse_var_power_lists() {
    std::vector<std::vector<std::size_t>> monomials;
    skip_ws();
    monomials.push_back(parse_monomial());
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != ',')
        throw Error(errc::syntax_error, "expected ',' between monomials", pos_);
      ++pos_;
      skip_ws();
      monomials.push_back(parse_monomial());
      skip_ws();
    }
    return monomials;
  }

 private:
  // A monomial as a flat list of variable indices, one per power unit.
  std::vector<std::size_t> parse_monomial() {
    std::vector<std::size_t> powers;
    parse_factor(powers);
    for (;;) {
      std::size_t mark = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        parse_factor(powers);
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == 'x') {
        parse_factor(powers);
        continue;
      }
      pos_ = mark;
      return powers;
    }
  }

  void parse_factor(std::vector<std::size_t>& powers) {
    if (pos_ >= text_.size() || text_[pos_] != 'x')
      throw Error(errc::syntax_error, "expected a variable like x1 or x_1", pos_);
    ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
    std::size_t index = parse_integer("variable index");
    if (index == 0)
      throw Error(errc::syntax_error, "variable indices start at 1", pos_);
    std::size_t exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      exponent = parse_integer("exponent");
    }
    for (std::size_t e = 0; e < exponent; ++e) powers.push_back(index);
  }

  std::size_t parse_integer(const char* what) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw Error(errc::syntax_error, std::string("expected ") + what, pos_);
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1000)
        throw Error(errc::syntax_error, "index or exponent out of range", pos_);
      ++pos_;
    }
    return value;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a comma-separated list of monomials. When n is absent it is
/// inferred as the largest variable index that appears; an explicit n bounds
/// the indices instead.
inline MonomialSet parse_monomials(std::string_view text,
                                   std::optional<std::size_t> n = std::nullopt) {
  detail::MonomialParser parser(text);
  auto power_lists = parser.parse_var_power_lists();
  std::size_t max_index = 0;
  for (const auto& powers : power_lists)
    for (std::size_t index : powers) max_index = std::max(max_index, index);
  std::size_t vars = n.value_or(max_index);
  if (n && max_index > *n)
    fail(errc::index_out_of_range,
         "variable index " + std::to_string(max_index) + " exceeds n = " +
             std::to_string(*n));
  std::vector<std::vector<int>> vectors;
  vectors.reserve(power_lists.size());
  for (const auto& powers : power_lists) {
    std::vector<int> e(vars, 0);
    for (std::size_t index : powers) e[index - 1] += 1;
    vectors.push_back(std::move(e));
  }
  return new_monomial_set(vars, vectors);
}

inline std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out.empty() ? "1" : out;
}

/// Round-trips through parse_monomials for every valid set.
inline std::string format_monomial_set(const MonomialSet& f) {
  std::string out;
  for (std::size_t j = 0; j < f.q(); ++j) {
    if (j > 0) out += ", ";
    out += format_monomial(f.member(j));
  }
  return out;
}

}  // namespace monocrem
