#include "pln/tangle_expr.hpp"

#include <cctype>
#include <sstream>

namespace pln {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.normalized != b.normalized || a.name != b.name || a.color != b.color ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

Color infer_color(Expr::Kind kind, const std::vector<Color>& args, std::size_t pos) {
  using K = Expr::Kind;
  auto bad = [&](const std::string& what) {
    return ColorMismatch(what + " at position " + std::to_string(pos));
  };
  switch (kind) {
    case K::incl:
      return args[0].is_zero() ? Color::of(1) : Color::of(args[0].k + 1);
    case K::mult:
      for (std::size_t i = 1; i < args.size(); ++i)
        if (args[i] != args[0])
          throw bad("mult: argument " + std::to_string(i + 1) + " has colour " + args[i].str() +
                    ", want " + args[0].str());
      return args[0];
    case K::cond_e:
      if (args[0].is_zero()) throw bad("condE: got colour " + args[0].str() + ", want >= 1");
      return args[0].k == 1 ? Color::plus0() : Color::of(args[0].k - 1);
    case K::cond_e_minus:
      if (args[0] != Color::of(1)) throw bad("condEm: got colour " + args[0].str() + ", want 1");
      return Color::minus0();
    case K::cond_e_prime:
      if (args[0].is_zero()) throw bad("condE1: got colour " + args[0].str() + ", want >= 1");
      return args[0];
    default:
      throw bad("node takes no arguments");
  }
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::map<std::string, Color>& vars)
      : text_(text), vars_(vars) {}

  ExprPtr parse() {
    auto e = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("expected end of input", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c, const std::string& expected) {
    if (!peek(c)) throw ParseError("expected " + expected, pos_);
    ++pos_;
  }
  std::string ident() {
    skip();
    std::size_t b = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (b == pos_) throw ParseError("expected one of: identifier, unit, jones, incl, mult, condE, condE1, condEm", pos_);
    return std::string(text_.substr(b, pos_ - b));
  }
  Color color() {
    skip();
    std::size_t b = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    try {
      return Color::parse(text_.substr(b, pos_ - b));
    } catch (const Error&) {
      throw ParseError("expected colour (0+, 0- or a positive integer)", b);
    }
  }
  bool normalized_suffix() {
    skip();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip();
      if (pos_ >= text_.size() || text_[pos_] != 'd') throw ParseError("expected 'd' after '/'", pos_);
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    skip();
    std::size_t start = pos_;
    std::string id = ident();
    auto node = std::make_shared<Expr>();
    node->pos = start;
    using K = Expr::Kind;
    static const std::map<std::string, K> fns{{"incl", K::incl},
                                              {"mult", K::mult},
                                              {"condE", K::cond_e},
                                              {"condE1", K::cond_e_prime},
                                              {"condEm", K::cond_e_minus}};
    if (id == "unit" || id == "jones") {
      node->kind = id == "unit" ? K::unit : K::jones;
      if (node->kind == K::jones) node->normalized = normalized_suffix();
      expect('(', "'('");
      std::size_t cpos = pos_;
      node->color = color();
      if (node->kind == K::jones && node->color.k < 2)
        throw ColorMismatch("jones: got colour " + node->color.str() + ", want >= 2 at position " +
                            std::to_string(cpos));
      expect(')', "')'");
      return node;
    }
    auto fn = fns.find(id);
    if (fn == fns.end()) {
      if (peek('(')) throw ParseError("unknown function '" + id + "'", start);
      auto v = vars_.find(id);
      if (v == vars_.end()) throw ParseError("unknown variable '" + id + "' (no colour given)", start);
      node->kind = K::var;
      node->name = id;
      node->color = v->second;
      return node;
    }
    node->kind = fn->second;
    node->normalized = normalized_suffix();
    if (node->normalized && node->kind != K::cond_e && node->kind != K::cond_e_minus &&
        node->kind != K::cond_e_prime)
      throw ParseError("'/d' applies to condE, condE1, condEm and jones only", start);
    expect('(', "'('");
    std::vector<ExprPtr> args{expr()};
    while (peek(',')) {
      ++pos_;
      args.push_back(expr());
    }
    expect(')', "')' or ','");
    std::size_t want = node->kind == K::mult ? 2 : 1;
    if ((node->kind == K::mult && args.size() < want) || (node->kind != K::mult && args.size() != want))
      throw ParseError(id + " takes " + (node->kind == K::mult ? "at least 2" : "exactly 1") +
                           " argument(s)",
                       start);
    std::vector<Color> cols;
    for (const auto& a : args) cols.push_back(a->color);
    node->color = infer_color(node->kind, cols, start);
    node->args = std::move(args);
    return node;
  }

  std::string_view text_;
  const std::map<std::string, Color>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text, const std::map<std::string, Color>& var_colors) {
  return Parser(text, var_colors).parse();
}

std::string print_expr(const Expr& e) {
  using K = Expr::Kind;
  std::string suffix = e.normalized ? "/d" : "";
  switch (e.kind) {
    case K::var:
      return e.name;
    case K::unit:
      return "unit(" + e.color.str() + ")";
    case K::jones:
      return "jones" + suffix + "(" + e.color.str() + ")";
    default:
      break;
  }
  static const std::map<K, std::string> names{{K::incl, "incl"},
                                              {K::mult, "mult"},
                                              {K::cond_e, "condE"},
                                              {K::cond_e_prime, "condE1"},
                                              {K::cond_e_minus, "condEm"}};
  std::string s = names.at(e.kind) + suffix + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) s += ", ";
    s += print_expr(*e.args[i]);
  }
  return s + ")";
}

std::vector<std::string> batch_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::size_t expr_depth(const Expr& e) {
  std::size_t d = 0;
  for (const auto& a : e.args) d = std::max(d, expr_depth(*a) + 1);
  return d;
}

namespace {

ExprPtr random_node(std::mt19937_64& rng, Color out, int budget, const RandomExprOptions& opt,
                    std::map<std::string, Color>& vars) {
  using K = Expr::Kind;
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  auto node = std::make_shared<Expr>();
  node->color = out;

  std::vector<K> ops;
  if (budget > 0) {
    if (out.k >= 1) ops.push_back(K::incl);
    ops.push_back(K::mult);
    if (out == Color::plus0() || (out.k >= 1 && out.k + 1 <= opt.max_color)) ops.push_back(K::cond_e);
    if (out == Color::minus0()) ops.push_back(K::cond_e_minus);
    if (out.k >= 1) ops.push_back(K::cond_e_prime);
  }
  if (ops.empty() || coin(0.25)) {
    int pick = std::uniform_int_distribution<int>(0, 5)(rng);
    if (pick == 0) {
      node->kind = K::unit;
    } else if (pick == 1 && out.k >= 2) {
      node->kind = K::jones;
      node->normalized = coin(0.5);
    } else {
      node->kind = K::var;
      node->name = "v" + std::to_string(vars.size());
      vars[node->name] = out;
    }
    return node;
  }
  node->kind = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
  auto child = [&](Color c) { return random_node(rng, c, budget - 1, opt, vars); };
  switch (node->kind) {
    case K::incl:
      node->args.push_back(child(out.k == 1 ? (coin(0.5) ? Color::plus0() : Color::minus0())
                                            : Color::of(out.k - 1)));
      break;
    case K::mult:
      node->args.push_back(child(out));
      node->args.push_back(child(out));
      break;
    case K::cond_e:
      node->normalized = coin(0.5);
      node->args.push_back(child(out.is_zero() ? Color::of(1) : Color::of(out.k + 1)));
      break;
    case K::cond_e_minus:
      node->normalized = coin(0.5);
      node->args.push_back(child(Color::of(1)));
      break;
    case K::cond_e_prime:
      node->normalized = coin(0.5);
      node->args.push_back(child(out));
      break;
    default:
      break;
  }
  return node;
}

}  // namespace

ExprPtr random_expr(std::mt19937_64& rng, Color out, const RandomExprOptions& opt,
                    std::map<std::string, Color>& vars) {
  return random_node(rng, out, opt.max_depth, opt, vars);
}

}  // namespace pln
