#include "hyperlag/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperlag::io {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& token, int line) {
  int value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

Hypergraph read_hypergraph(std::istream& in) {
  std::string raw;
  int line = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    std::istringstream tokens(text);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (n < 0) {
      if (words.size() != 2 || words[0] != "vertices") {
        throw ParseError(line, "expected 'vertices N' before any edge");
      }
      n = parse_int(words[1], line);
      if (n < 0) throw ParseError(line, "vertex count must be nonnegative");
      continue;
    }
    Edge e;
    for (const std::string& w : words) {
      const int v = parse_int(w, line);
      if (v < 1 || v > n) {
        throw ParseError(line, "vertex " + w + " outside 1.." + std::to_string(n));
      }
      if (!e.empty() && v <= e.back()) throw ParseError(line, "edge vertices must increase");
      e.push_back(v);
    }
    if (!seen.insert(e).second) throw ParseError(line, "duplicate edge");
    edges.push_back(std::move(e));
  }
  if (n < 0) throw ParseError(0, "missing 'vertices N' line");
  return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "vertices " << h.n() << '\n';
  for (const auto& [r, edges] : h.levels()) {
    for (const Edge& e : edges) {
      for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
      out << '\n';
    }
  }
}

std::string format_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

nlohmann::json to_json(const Optimum& opt) {
  return {{"value", opt.value},
          {"weighting", opt.weighting.values()},
          {"support", opt.support},
          {"kkt_residual", opt.kkt_residual},
          {"converged", opt.converged}};
}

nlohmann::json to_json(const AlphaParams& alpha) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [r, v] : alpha.explicit_values()) out[std::to_string(r)] = v;
  return out;
}

nlohmann::json to_json(const TheoremVerdict& verdict) {
  nlohmann::json out = {{"theorem_id", verdict.theorem_id},
                        {"hypothesis_ok", verdict.hypothesis_ok},
                        {"predicted", verdict.predicted},
                        {"computed", verdict.computed},
                        {"abs_error", verdict.abs_error},
                        {"witness", to_json(verdict.witness)},
                        {"holds", verdict.holds},
                        {"notes", verdict.notes}};
  out["oracle_value"] = verdict.oracle_value ? nlohmann::json(*verdict.oracle_value) : nullptr;
  return out;
}

nlohmann::json to_json(const ScanReport& report) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Hypergraph& h : report.witnesses) witnesses.push_back(format_hypergraph(h));
  return {{"T", report.types.values()},
          {"alpha", to_json(report.alpha)},
          {"m", report.m},
          {"n", report.n},
          {"extremal_value", report.extremal_value},
          {"colex_value", report.colex_value},
          {"conjecture_holds", report.conjecture_holds},
          {"witnesses", witnesses},
          {"enumerated_count", report.enumerated_count},
          {"complete", report.complete},
          {"colex_in_family", report.colex_in_family},
          {"oracle_disagreements", report.oracle_disagreements}};
}

}  // namespace hyperlag::io
