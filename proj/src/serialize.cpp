#include "pln/serialize.hpp"

#include "pln/error.hpp"

namespace pln {

Json scalar_to_json(const Scalar& s) {
  if (!s.is_exact()) return Json{{"approx", s.to_double()}};
  Json j{{"radicand", s.radicand()}};
  for (int r = 0; r < 4; ++r) j["r" + std::to_string(r)] = to_string(s.coeff(r));
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number()) return j.is_number_integer() ? Scalar(j.get<long long>()) : Scalar::from_double(j.get<double>());
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (!j.is_object()) throw Error("scalar must be an object, a number or a \"p/q\" string");
  if (j.contains("approx")) return Scalar::from_double(j.at("approx").get<double>());
  long long n = j.value("radicand", 0LL);
  std::array<Rational, 4> c{};
  for (int r = 0; r < 4; ++r) {
    auto key = "r" + std::to_string(r);
    if (j.contains(key)) c[r] = parse_rational(j.at(key).get<std::string>());
  }
  if (n == 0) {
    if (c[1] != 0 || c[2] != 0 || c[3] != 0) throw Error("irrational coefficients need a radicand");
    return Scalar(c[0]);
  }
  if (n < 1) throw Error("radicand must be positive");
  return Scalar::from_coeffs(n, c);
}

Json loop_to_json(const GraphPlanarAlgebra& pa, Color c, const Loop& l) {
  Json out = Json::array();
  if (c.is_zero()) {
    out.push_back(l.base);
    return out;
  }
  auto pi = pa.vertices(l);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    out.push_back(pi[i]);
    out.push_back(l.edges[i]);
  }
  return out;
}

Loop loop_from_json(const GraphPlanarAlgebra& pa, Color c, const Json& j) {
  if (!j.is_array() || j.empty()) throw Error("loop must be a non-empty array");
  Loop l{j.at(0).get<int>(), {}};
  if (c.is_zero()) {
    if (j.size() != 1) throw Error("colour " + c.str() + " loops are a single vertex");
  } else {
    if (j.size() != static_cast<std::size_t>(4 * c.k))
      throw Error("colour " + c.str() + " loop needs " + std::to_string(4 * c.k) + " entries");
    for (std::size_t i = 1; i < j.size(); i += 2) l.edges.push_back(j.at(i).get<int>());
  }
  if (!pa.is_loop(c, l)) throw Error("not a loop of colour " + c.str());
  if (!c.is_zero()) {
    auto pi = pa.vertices(l);
    for (std::size_t i = 0; i < pi.size(); ++i)
      if (j.at(2 * i).get<int>() != pi[i]) throw Error("loop vertices do not match its edges");
  }
  return l;
}

Json element_to_json(const GraphPlanarAlgebra& pa, const PAElement& x) {
  Json terms = Json::array();
  for (const auto& [l, s] : x.terms())
    terms.push_back({{"loop", loop_to_json(pa, x.color(), l)}, {"coeff", scalar_to_json(s)}});
  return {{"color", x.color().str()}, {"terms", terms}};
}

PAElement element_from_json(const GraphPlanarAlgebra& pa, const Json& j) {
  Color c = Color::parse(j.at("color").get<std::string>());
  PAElement x(c);
  for (const auto& t : j.at("terms"))
    x.add(loop_from_json(pa, c, t.at("loop")), scalar_from_json(t.at("coeff")));
  return x;
}

Json matrix_to_json(const CosetSpace& cs, const MatrixElement& x) {
  const auto& G = cs.group();
  Json entries = Json::array();
  for (const auto& [ix, e] : x.m.entries) {
    Json value = Json::array();
    for (const auto& [g, c] : e.terms()) {
      Json cj = c.is_rational() ? Json(to_string(c.rational_value())) : scalar_to_json(c);
      value.push_back({{"g", G.element(g).to_cycle_string()}, {"c", cj}});
    }
    entries.push_back({{"row", cs.unflat(ix.first, x.m.level)},
                       {"col", cs.unflat(ix.second, x.m.level)},
                       {"value", value}});
  }
  return {{"color", x.color.str()},
          {"level", x.m.level},
          {"parity", parity_name(x.m.parity)},
          {"entries", entries}};
}

MatrixElement matrix_from_json(const CosetSpace& cs, const Json& j) {
  Color c = Color::parse(j.at("color").get<std::string>());
  Level lv = level_of(c);
  if (j.contains("level") && j.at("level").get<int>() != lv.level)
    throw ColorMismatch("level does not match colour " + c.str());
  GroupAlgebraMatrix<Scalar> m;
  m.level = lv.level;
  m.parity = lv.parity;
  const auto& G = cs.group();
  for (const auto& e : j.at("entries")) {
    auto row = e.at("row").get<Tuple>(), col = e.at("col").get<Tuple>();
    for (const auto* t : {&row, &col}) {
      if (static_cast<int>(t->size()) != m.level) throw Error("tuple length differs from level");
      for (int v : *t)
        if (v < 1 || v > cs.n()) throw Error("tuple entry out of range");
    }
    GroupAlgElem<Scalar> a;
    for (const auto& term : e.at("value")) {
      auto p = Permutation::parse(term.at("g").get<std::string>(), G.degree());
      int g = G.index_of(p);
      if (g < 0) throw MembershipError("'" + term.at("g").get<std::string>() + "' is not in the group");
      a.add(g, scalar_from_json(term.at("c")));
    }
    m.add(cs.flat(row), cs.flat(col), a);
  }
  return {c, m};
}

std::map<std::string, Binding> parse_bindings(const PairContext& ctx, const Json& j) {
  if (!j.is_object()) throw Error("bindings must be a JSON object");
  std::map<std::string, Binding> out;
  for (const auto& [name, v] : j.items()) {
    Color c = Color::parse(v.at("color").get<std::string>());
    MatrixElement m;
    if (v.contains("basis")) {
      auto o = v.at("basis").get<std::size_t>();
      if (o >= ctx.commutant_basis(c).size())
        throw Error("binding '" + name + "': basis index out of range");
      m = ctx.commutant_element(c, o);
    } else if (v.contains("coords")) {
      std::vector<Scalar> coords;
      for (const auto& x : v.at("coords")) coords.push_back(scalar_from_json(x));
      m = ctx.matrix_from_coordinates(c, coords);
    } else if (v.contains("matrix")) {
      Json mj = v.at("matrix");
      mj["color"] = c.str();
      m = matrix_from_json(ctx.cosets(), mj);
    } else {
      throw Error("binding '" + name + "' needs one of basis, coords, matrix");
    }
    out.emplace(name, Binding{c, m, ctx.phi(m)});
  }
  return out;
}

}  // namespace pln
