// Acceptance run: one line per criterion, exit 1 if any fails.
#include "pln/group_spec.hpp"
#include "pln/isomorphism.hpp"
#include "pln/verification.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace pln;

namespace {

// runtime budgets in seconds; all comparisons are exact
constexpr double dims_budget = 30.0;
constexpr double morphism_budget = 300.0;
constexpr double composite_budget = 120.0;
constexpr int composite_trees = 200;
constexpr int composite_depth = 4;

struct Pair {
  const char* spec;
  int depth;
};
const std::vector<Pair> pairs{{"S3:S2", 5}, {"S3:A3", 5}, {"C4:C2", 5}, {"S4:S3", 4}};

const PairContext& context(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<PairContext>> cache;
  auto& slot = cache[spec];
  if (!slot) slot = std::make_unique<PairContext>(builtin_pair(spec));
  return *slot;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

// first failing check, if any
Outcome scan(const std::string& spec, const std::vector<CheckResult>& checks, std::size_t& count) {
  count += checks.size();
  for (const auto& c : checks)
    if (!c.passed) return {false, spec + " " + c.tangle + " @ " + c.color + ": " + c.counterexample};
  return {};
}

std::string join(const std::vector<long long>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  return s.str();
}

Outcome dimensions() {
  std::ostringstream s;
  for (auto [spec, depth] : pairs) {
    auto t = dimension_table(context(spec), depth);
    if (!t.agree()) return {false, std::string(spec) + " tables disagree"};
    if (std::string(spec) == "S3:S2" && t.formula != std::vector<long long>{1, 2, 5, 14, 41})
      return {false, "S3:S2 gives " + join(t.formula)};
    s << spec << " [" << join(t.formula) << "] ";
  }
  return {true, s.str()};
}

Outcome morphism() {
  std::size_t n = 0;
  for (auto [spec, depth] : pairs) {
    auto o = scan(spec, verify_morphism(context(spec), depth), n);
    if (!o.ok) return o;
  }
  return {true, std::to_string(n) + " checks"};
}

Outcome temperley_lieb() {
  std::size_t n = 0;
  for (const char* spec : {"S3:A3", "S3:S2", "S4:S3"}) {
    auto o = scan(spec, temperley_lieb_suite(context(spec), 4), n);
    if (!o.ok) return o;
  }
  return {true, "n = 2, 3, 4; " + std::to_string(n) + " checks"};
}

Outcome traces() {
  std::size_t n = 0;
  for (auto [spec, depth] : pairs) {
    auto o = scan(spec, trace_suite(context(spec), 2), n);
    if (!o.ok) return o;
  }
  return {true, std::to_string(n) + " checks"};
}

Outcome structural() {
  std::size_t n = 0;
  for (auto [spec, depth] : pairs) {
    auto o = scan(spec, structural_suite(context(spec)), n);
    if (!o.ok) return o;
  }
  return {true, std::to_string(n) + " checks"};
}

Outcome flip_dual() {
  std::size_t n = 0;
  for (const char* spec : {"S3:S2", "S3:A3", "C4:C2"}) {
    auto o = scan(spec, flip_duality_check(context(spec), 4), n);
    if (!o.ok) return o;
  }
  return {true, std::to_string(n) + " checks"};
}

Outcome sandwich() {
  std::size_t n = 0;
  auto o = scan("S3:S2", sandwich_check(context("S3:S2"), 4), n);
  if (!o.ok) return o;
  return {true, std::to_string(n) + " checks"};
}

Outcome composite() {
  CompositeOptions opt;
  opt.count = composite_trees;
  opt.max_depth = composite_depth;
  std::size_t n = 0;
  auto o = scan("S3:S2", composite_suite(context("S3:S2"), opt), n);
  if (!o.ok) return o;
  return {true, std::to_string(composite_trees) + " trees, seed " + std::to_string(opt.seed)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget;  // <= 0 means no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 dimension agreement", dims_budget, dimensions},
      {"AC2 phi commutes with generators", morphism_budget, morphism},
      {"AC3 Temperley-Lieb relations", 0, temperley_lieb},
      {"AC4 orbit-sum traces", 0, traces},
      {"AC5 structural predicates", 0, structural},
      {"AC6 flip duality", 0, flip_dual},
      {"AC7 sandwich", 0, sandwich},
      {"AC8 composite tangles", composite_budget, composite},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.budget > 0 && secs > c.budget) {
      o.ok = false;
      o.detail += " over budget";
    }
    all = all && o.ok;
    std::printf("%s %-34s %7.2fs  %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
