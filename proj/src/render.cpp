#include "midk/render.hpp"

#include <cstdlib>

#include "midk/errors.hpp"

namespace midk {

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 1; i <= m.vars(); ++i) {
    const Exponent e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const Monomial& g : ideal.generators()) {
    if (!first) out += ", ";
    out += to_string(g);
    first = false;
  }
  out += ')';
  return out;
}

std::string to_string(const VariableOrder& ord) {
  std::string out;
  for (int v : ord.sequence()) {
    if (!out.empty()) out += " > ";
    out += 'x';
    out += std::to_string(v);
  }
  return out;
}

Monomial parse_monomial(const std::string& text, int nvars) {
  std::vector<Exponent> exps(static_cast<std::size_t>(nvars), 0);
  if (text == "1") return Monomial(std::move(exps));
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'x') {
      throw parse_error("monomial '" + text + "': expected 'x' at position " +
                        std::to_string(pos));
    }
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(text[pos])) ++pos;
    if (start == pos) {
      throw parse_error("monomial '" + text + "': missing variable index");
    }
    const long idx = std::strtol(text.substr(start, pos - start).c_str(),
                                 nullptr, 10);
    if (idx < 1 || idx > nvars) {
      throw parse_error("monomial '" + text + "': variable index " +
                        std::to_string(idx) + " out of range 1.." +
                        std::to_string(nvars));
    }
    Exponent e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < text.size() && std::isdigit(text[pos])) ++pos;
      if (start == pos) {
        throw parse_error("monomial '" + text + "': missing exponent");
      }
      e = std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
      if (e < 1) {
        throw parse_error("monomial '" + text + "': exponent must be >= 1");
      }
    }
    exps[static_cast<std::size_t>(idx - 1)] += e;
    if (pos < text.size()) {
      if (text[pos] != '*') {
        throw parse_error("monomial '" + text + "': expected '*' at position " +
                          std::to_string(pos));
      }
      ++pos;
      if (pos == text.size()) {
        throw parse_error("monomial '" + text + "': trailing '*'");
      }
    }
  }
  return Monomial(std::move(exps));
}

}  // namespace midk
