#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hyperlag/conjecture_lab.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/theorems.hpp"

namespace hyperlag::io {

/// Malformed hypergraph text; line() is 1-based (0 when the input ended early).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-oriented format:
///
///   # comment
///   vertices 4
///   1 2
///   1 2 3
Hypergraph read_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph(const std::string& path);

void write_hypergraph(std::ostream& out, const Hypergraph& h);
std::string format_hypergraph(const Hypergraph& h);

nlohmann::json to_json(const Optimum& opt);
nlohmann::json to_json(const AlphaParams& alpha);
nlohmann::json to_json(const TheoremVerdict& verdict);
nlohmann::json to_json(const ScanReport& report);

/// 12 significant digits, as used by the text reports.
std::string format_real(double v);

}  // namespace hyperlag::io
