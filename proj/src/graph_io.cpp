#include "pln/graph_io.hpp"

#include "pln/error.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace pln {

namespace {

struct SpinValue {
  bool exact = true;
  long long n = 1;
  int p = 0;
  double value = 1.0;
};

SpinValue parse_spin(const std::string& text, std::size_t line) {
  static const std::regex power(R"(\s*(\d+)\s*\^\s*\(\s*(-?\d+)\s*/\s*4\s*\)\s*)");
  static const std::regex integer(R"(\s*(\d+)\s*)");
  static const std::regex decimal(R"(\s*(\d+\.\d*|\.\d+|\d+(\.\d*)?[eE][-+]?\d+)\s*)");
  std::smatch m;
  SpinValue v;
  if (std::regex_match(text, m, power)) {
    v.n = std::stoll(m[1]);
    v.p = std::stoi(m[2]);
    if (v.n < 1) throw ParseError("spin radicand must be positive", line);
    v.value = std::pow(static_cast<double>(v.n), v.p / 4.0);
  } else if (std::regex_match(text, m, integer)) {
    v.n = std::stoll(m[1]);
    v.p = 4;
    if (v.n < 1) throw ParseError("spin must be positive", line);
    v.value = static_cast<double>(v.n);
  } else if (std::regex_match(text, m, decimal)) {
    v.exact = false;
    v.value = std::stod(m[1]);
    if (!(v.value > 0)) throw ParseError("spin must be positive", line);
  } else {
    throw ParseError("bad spin value '" + text + "'", line);
  }
  return v;
}

}  // namespace

SpinGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::vector<std::string> even, odd;
  std::vector<std::pair<std::string, std::string>> edge_names;
  std::vector<std::pair<std::string, SpinValue>> spins;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "even" || kw == "odd") {
      std::string v;
      while (ls >> v) (kw == "even" ? even : odd).push_back(v);
    } else if (kw == "edge") {
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra)) throw ParseError("edge needs two endpoints", line);
      edge_names.emplace_back(a, b);
    } else if (kw == "spin") {
      std::string rest;
      std::getline(ls, rest);
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("spin needs '='", line);
      std::istringstream vs(rest.substr(0, eq));
      std::string name;
      vs >> name;
      spins.emplace_back(name, parse_spin(rest.substr(eq + 1), line));
    } else {
      throw ParseError("unknown keyword '" + kw + "' on line " + std::to_string(line), line);
    }
  }
  std::vector<std::string> names = even;
  names.insert(names.end(), odd.begin(), odd.end());
  auto find = [&](const std::string& s) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return static_cast<int>(i);
    throw Error("unknown vertex '" + s + "'");
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : edge_names) {
    int x = find(a), y = find(b);
    if (x >= static_cast<int>(even.size())) std::swap(x, y);
    edges.emplace_back(x, y);
  }
  SpinGraph sg{BipartiteGraph(static_cast<int>(even.size()), static_cast<int>(odd.size()),
                              std::move(edges), names),
               {},
               {}};
  std::vector<SpinValue> values(names.size(), SpinValue{true, 1, 0, 1.0});
  for (const auto& [name, v] : spins) values[find(name)] = v;
  long long radicand = 0;
  bool exact = true;
  for (const auto& v : values) {
    if (!v.exact) exact = false;
    if (v.exact && v.p % 4 != 0) {
      if (radicand != 0 && radicand != v.n) exact = false;
      radicand = v.n;
    }
  }
  for (const auto& v : values)
    sg.mu.push_back(exact ? Scalar::quarter_power(v.n, v.p) : Scalar::from_double(v.value));
  sg.action = GraphAction::trivial(sg.graph);
  return sg;
}

std::string format_graph(const SpinGraph& sg) {
  const auto& g = sg.graph;
  std::ostringstream os;
  os << "even";
  for (int v = 0; v < g.n_even(); ++v) os << " " << g.name(v);
  os << "\nodd";
  for (int v = g.n_even(); v < g.vertex_count(); ++v) os << " " << g.name(v);
  os << "\n";
  for (auto [a, b] : g.edges()) os << "edge " << g.name(a) << " " << g.name(b) << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Scalar& s = sg.mu[v];
    os << "spin " << g.name(v) << " = ";
    if (!s.is_exact()) {
      os.precision(17);
      os << s.to_double();
    } else if (s.is_rational() && is_integer(s.coeff(0))) {
      os << s.coeff(0).str();
    } else {
      // a single monomial c * n^(r/4) with c a power of n is all the format holds
      int r = 1;
      while (r < 4 && s.coeff(r) == 0) ++r;
      os << s.radicand() << "^(" << r << "/4)";
      if (s.coeff(r) != 1 || s.coeff(0) != 0) os << "  # approx " << s.to_double();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace pln
