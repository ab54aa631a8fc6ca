#pragma once

#include "pln/error.hpp"
#include "pln/loop.hpp"

#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace pln {

// Composite of generator tangles. condE and condE1 are the raw maps Z_E and
// Z_{E'}; the "/d" spelling divides by delta. condEm caps a colour-1 element
// onto 0-.
struct Expr {
  enum class Kind { var, unit, jones, incl, mult, cond_e, cond_e_minus, cond_e_prime };

  Kind kind = Kind::var;
  bool normalized = false;
  std::string name;  // var only
  Color color;       // output colour
  std::vector<std::shared_ptr<const Expr>> args;
  std::size_t pos = 0;  // source offset, not part of equality

  friend bool operator==(const Expr& a, const Expr& b);
};

using ExprPtr = std::shared_ptr<const Expr>;

// Grammar:
//   expr  := ident | "unit" "(" color ")" | "jones" ["/d"] "(" color ")"
//          | fn ["/d"] "(" expr {"," expr} ")"
//   fn    := incl | mult | condE | condE1 | condEm
//   color := 0+ | 0- | <int>
// Variable colours come from var_colors.
ExprPtr parse_expr(std::string_view text, const std::map<std::string, Color>& var_colors);
std::string print_expr(const Expr& e);

// Non-empty, non-comment lines of a batch file.
std::vector<std::string> batch_lines(std::string_view text);

std::size_t expr_depth(const Expr& e);

// Colour arithmetic for a node with the given argument colours; throws ColorMismatch.
Color infer_color(Expr::Kind kind, const std::vector<Color>& args, std::size_t pos);

// Bottom-up evaluation in any model exposing the generator maps.
template <typename Model>
typename Model::Element evaluate(const Expr& e,
                                 const std::map<std::string, typename Model::Element>& bindings,
                                 const Model& model) {
  using K = Expr::Kind;
  auto arg = [&](std::size_t i) { return evaluate(*e.args[i], bindings, model); };
  auto norm = [&](typename Model::Element x) {
    return e.normalized ? model.scale(x, model.delta().inverse()) : x;
  };
  switch (e.kind) {
    case K::var: {
      auto it = bindings.find(e.name);
      if (it == bindings.end()) throw Error("unbound variable '" + e.name + "'");
      return it->second;
    }
    case K::unit:
      return model.unit(e.color);
    case K::jones:
      return norm(model.jones(e.color));
    case K::incl:
      return model.include(arg(0));
    case K::mult: {
      auto acc = arg(0);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = model.multiply(acc, arg(i));
      return acc;
    }
    case K::cond_e:
      return norm(model.cond_E(arg(0)));
    case K::cond_e_minus:
      return norm(model.cond_E_minus(arg(0)));
    case K::cond_e_prime:
      return norm(model.cond_Eprime(arg(0)));
  }
  throw Error("unknown expression node");
}

// Random well-coloured expression of the given output colour; variables are
// named v0, v1, ... and their colours recorded in vars.
struct RandomExprOptions {
  int max_depth = 4;
  int max_color = 4;
};
ExprPtr random_expr(std::mt19937_64& rng, Color out, const RandomExprOptions& opt,
                    std::map<std::string, Color>& vars);

}  // namespace pln
