#pragma once

#include "pln/isomorphism.hpp"
#include "pln/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pln {

// e_m^2 = e_m = e_m^*, e_m e_{m+-1} e_m = e_m / n and tr(e_m) = 1/n in both
// models for m <= max_m, plus phi(e~_m) = delta^{-1} Z(jones(m+1)).
std::vector<CheckResult> temperley_lieb_suite(const PairContext& ctx, int max_m);

// tr(sum_h h[i,j]^ev) = |H| / n^r when i = j and 0 otherwise, in the matrix
// model and through phi with the loop trace, r <= max_r.
std::vector<CheckResult> trace_suite(const PairContext& ctx, int max_r);

// Connected, modulus sqrt(n) and irreducible, each by both routes.
std::vector<CheckResult> structural_suite(const PairContext& ctx);

// Random composite tangles evaluated in both models and compared through phi.
struct CompositeOptions {
  int count = 200;
  int max_depth = 4;
  int max_color = 4;
  std::uint64_t seed = 20240601;
};
std::vector<CheckResult> composite_suite(const PairContext& ctx, const CompositeOptions& opt);

struct VerifyOptions {
  int depth = 0;  // 0 picks the default from n
  int jobs = 1;
  std::uint64_t seed = 20240601;
  int random_trees = 200;
};

int default_depth(int n);

struct VerifyReport {
  std::string group, subgroup;
  int depth = 0;
  std::vector<CheckResult> checks;
  DimsTable dims;
  std::string closure_note;
  bool passed() const;
};

VerifyReport run_verify(const PairContext& ctx, const VerifyOptions& opt);
Json report_to_json(const VerifyReport& r);
Json dims_to_json(const DimsTable& t);

}  // namespace pln
