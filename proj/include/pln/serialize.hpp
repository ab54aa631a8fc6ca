#pragma once

#include "pln/graph_planar_algebra.hpp"
#include "pln/isomorphism.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace pln {

using Json = nlohmann::json;

// {"radicand": n, "r0": "p/q", ..., "r3": "p/q"} or {"approx": x} in float mode.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// [v0, e0, v1, e1, ...] with global vertex ids and edge indices.
Json loop_to_json(const GraphPlanarAlgebra& pa, Color c, const Loop& l);
Loop loop_from_json(const GraphPlanarAlgebra& pa, Color c, const Json& j);

Json element_to_json(const GraphPlanarAlgebra& pa, const PAElement& x);
PAElement element_from_json(const GraphPlanarAlgebra& pa, const Json& j);

// {color, level, parity, entries: [{row, col, value: [{g, c}]}]}; tuples are
// 1-based, g is a cycle string, c is "p/q" or a scalar object.
Json matrix_to_json(const CosetSpace& cs, const MatrixElement& x);
MatrixElement matrix_from_json(const CosetSpace& cs, const Json& j);

// Bindings document: {"name": {"color": "2", "coords": ["1", "-1/2", ...]}} or
// {"name": {"color": "2", "basis": 0}}. Coordinates refer to the relative
// commutant basis; the loop-side value of a variable is phi of its matrix.
struct Binding {
  Color color;
  MatrixElement matrix;
  PAElement loop;
};
std::map<std::string, Binding> parse_bindings(const PairContext& ctx, const Json& j);

}  // namespace pln
