#include "pln/verification.hpp"

#include "pln/tangle_expr.hpp"

#include <algorithm>
#include <random>

namespace pln {

namespace {

CheckResult result(const std::string& tangle, Color c, std::size_t size, const std::string& err) {
  return {tangle, c.str(), size, err.empty(), err};
}

template <typename Model>
void tl_relations(const Model& m, const std::string& side, int max_m, int n,
                  std::vector<CheckResult>& out) {
  Scalar inv_n = Scalar(Rational(1, n));
  Scalar inv_delta = m.delta().inverse();
  auto e = [&](int k) { return m.scale(m.jones(Color::of(k + 1)), inv_delta); };
  for (int k = 1; k <= max_m; ++k) {
    Color c = Color::of(k + 1), up = Color::of(k + 2);
    auto ek = e(k);
    auto guard = [&](const std::string& name, Color col, auto fn) {
      std::string err;
      try {
        err = fn();
      } catch (const std::exception& ex) {
        err = ex.what();
      }
      out.push_back(result("tl:" + name + ":" + side + ":e" + std::to_string(k), col, 1, err));
    };
    guard("idempotent", c, [&] { return m.multiply(ek, ek) == ek ? "" : std::string("e^2 != e"); });
    guard("selfadjoint", c, [&] { return m.star(ek) == ek ? "" : std::string("e* != e"); });
    guard("trace", c, [&]() -> std::string {
      Scalar t = m.trace(ek);
      return t == inv_n ? "" : "tr(e) = " + t.to_string();
    });
    auto next = e(k + 1);
    auto lifted = m.include(ek);
    guard("e_m e_m+1 e_m", up, [&] {
      return m.multiply(lifted, m.multiply(next, lifted)) == m.scale(lifted, inv_n)
                 ? ""
                 : std::string("e_m e_{m+1} e_m != e_m / n");
    });
    guard("e_m+1 e_m e_m+1", up, [&] {
      return m.multiply(next, m.multiply(lifted, next)) == m.scale(next, inv_n)
                 ? ""
                 : std::string("e_{m+1} e_m e_{m+1} != e_{m+1} / n");
    });
  }
}

}  // namespace

std::vector<CheckResult> temperley_lieb_suite(const PairContext& ctx, int max_m) {
  std::vector<CheckResult> out;
  tl_relations(ctx.loops(), "loop", max_m, ctx.n(), out);
  tl_relations(ctx.matrices(), "matrix", max_m, ctx.n(), out);
  const auto& Q = ctx.matrices();
  const auto& P = ctx.loops();
  Scalar inv_delta = ctx.delta().inverse();
  for (int k = 1; k <= max_m; ++k) {
    Color c = Color::of(k + 1);
    std::string err;
    try {
      MatrixElement e{c, Q.model().jones_projection(k)};
      if (ctx.phi(e) != P.scale(P.jones(c), inv_delta)) err = "phi(e~) differs from Z(jones)/delta";
    } catch (const std::exception& ex) {
      err = ex.what();
    }
    out.push_back(result("tl:phi:e" + std::to_string(k), c, 1, err));
  }
  return out;
}

std::vector<CheckResult> trace_suite(const PairContext& ctx, int max_r) {
  std::vector<CheckResult> out;
  const auto& Q = ctx.matrices();
  const auto& P = ctx.loops();
  Scalar order_h(static_cast<long>(ctx.cosets().subgroup().size()));
  for (int r = 0; r <= max_r; ++r) {
    Color c = Color::of(2 * r + 1);
    const auto& b = ctx.commutant_basis(c);
    Scalar expected_diag = order_h / Scalar::quarter_power(ctx.n(), 4 * r);
    std::string err;
    for (std::size_t o = 0; o < b.size() && err.empty(); ++o) {
      try {
        const auto& [i, j] = b.reps[o];
        Scalar want = i == j ? expected_diag : Scalar(0);
        auto x = ctx.commutant_element(c, o);
        Scalar tq = Q.trace(x), tp = P.trace(ctx.phi(x));
        if (tq != want || tp != want)
          err = "orbit " + std::to_string(o) + ": want " + want.to_string() + ", matrix " +
                tq.to_string() + ", loop " + tp.to_string();
      } catch (const std::exception& ex) {
        err = ex.what();
      }
    }
    out.push_back(result("trace:orbit-sums", c, b.size(), err));
  }
  return out;
}

std::vector<CheckResult> structural_suite(const PairContext& ctx) {
  std::vector<CheckResult> out;
  const auto& inv = ctx.invariants();
  auto routes = [&](const std::string& name, PredicateRoutes r) {
    std::string err;
    if (!r.agree())
      err = "routes disagree: group " + std::to_string(r.group_route) + ", algebra " +
            std::to_string(r.algebra_route);
    else if (!r.group_route)
      err = "predicate fails";
    out.push_back(result("structure:" + name, Color::plus0(), 1, err));
  };
  routes("connected", inv.connected());
  auto m = inv.modulus();
  std::string err;
  if (!m.agree())
    err = "routes disagree: PF " + m.group_value.to_string() + ", algebra " + m.algebra_value.to_string();
  else if (!m.group_route || m.group_value != ctx.delta())
    err = "modulus " + m.group_value.to_string() + " is not sqrt(n)";
  out.push_back(result("structure:modulus", Color::plus0(), 1, err));
  routes("irreducible", inv.irreducible());
  return out;
}

std::vector<CheckResult> composite_suite(const PairContext& ctx, const CompositeOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  RandomExprOptions ro{opt.max_depth, opt.max_color};
  std::vector<Color> outs{Color::plus0(), Color::minus0()};
  for (int k = 1; k <= opt.max_color; ++k) outs.push_back(Color::of(k));
  std::string err;
  int done = 0;
  for (; done < opt.count && err.empty(); ++done) {
    Color out = outs[std::uniform_int_distribution<std::size_t>(0, outs.size() - 1)(rng)];
    std::map<std::string, Color> vars;
    auto expr = random_expr(rng, out, ro, vars);
    std::map<std::string, MatrixElement> mb;
    std::map<std::string, PAElement> lb;
    try {
      for (const auto& [name, c] : vars) {
        const auto& basis = ctx.commutant_basis(c);
        std::vector<Scalar> coords(basis.size());
        for (auto& x : coords) x = Scalar(std::uniform_int_distribution<int>(-2, 2)(rng));
        auto m = ctx.matrix_from_coordinates(c, coords);
        mb.emplace(name, m);
        lb.emplace(name, ctx.phi(m));
      }
      auto q = evaluate(*expr, mb, ctx.matrices());
      auto p = evaluate(*expr, lb, ctx.loops());
      if (ctx.phi(q) != p) err = "tree " + std::to_string(done) + ": " + print_expr(*expr);
    } catch (const std::exception& ex) {
      err = "tree " + std::to_string(done) + " (" + print_expr(*expr) + "): " + ex.what();
    }
  }
  CheckResult r{"composite:random-trees", "all", static_cast<std::size_t>(done), err.empty(), err};
  return {r};
}

int default_depth(int n) {
  if (n <= 3) return 5;
  if (n == 4) return 4;
  if (n <= 6) return 3;
  return 2;
}

bool VerifyReport::passed() const {
  return dims.agree() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(const PairContext& ctx, const VerifyOptions& opt) {
  VerifyReport r;
  r.group = ctx.pair().group_name;
  r.subgroup = ctx.pair().subgroup_name;
  r.depth = opt.depth > 0 ? opt.depth : default_depth(ctx.n());
  int d = r.depth;
  r.dims = dimension_table(ctx, d);
  auto append = [&](std::vector<CheckResult> v) {
    r.checks.insert(r.checks.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  append(verify_morphism(ctx, d, opt.jobs));
  append(temperley_lieb_suite(ctx, std::clamp(d, 1, 4)));
  append(trace_suite(ctx, std::min(2, (d - 1) / 2)));
  append(structural_suite(ctx));
  append(sandwich_check(ctx, d));
  append(flip_duality_check(ctx, std::min(d, 4)));
  if (opt.random_trees > 0) {
    CompositeOptions co;
    co.count = opt.random_trees;
    co.seed = opt.seed;
    co.max_color = std::min(d, 4);
    append(composite_suite(ctx, co));
  }
  r.closure_note =
      "Every generator tangle commutes with phi on full bases up to colour " + std::to_string(d) +
      ". Tangle maps are closed under composition, so phi commutes with every composite of "
      "generators whose intermediate colours stay at or below " + std::to_string(d) + ".";
  return r;
}

Json dims_to_json(const DimsTable& t) {
  return {{"k", t.k},
          {"formula", t.formula},
          {"burnside", t.burnside},
          {"matrix_model", t.matrix_model},
          {"loop_model", t.loop_model},
          {"agree", t.agree()}};
}

Json report_to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"tangle", c.tangle},
           {"color", c.color},
           {"basis_size", c.basis_size},
           {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) j["counterexample"] = c.counterexample;
    checks.push_back(std::move(j));
  }
  return {{"pair", {{"group", r.group}, {"subgroup", r.subgroup}}},
          {"depth", r.depth},
          {"checks", checks},
          {"dims", dims_to_json(r.dims)},
          {"closure", r.closure_note},
          {"status", r.passed() ? "pass" : "fail"}};
}

}  // namespace pln
