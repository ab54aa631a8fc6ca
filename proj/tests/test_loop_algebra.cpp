#include "helpers.hpp"

#include "pln/error.hpp"
#include "pln/graph_io.hpp"
#include "pln/linalg.hpp"

#include <catch_amalgamated.hpp>

using namespace pln;
using pln::test::context;
using pln::test::sqrt_n;

namespace {

// Markov trace from the path decomposition P_k = (+)_w End(paths ending at w):
// the loop p . rev(q) has trace delta_{pq} mu^2_{end} / (mu^2_{start} delta^k),
// recorded on the base vertex. No cap maps involved.
PAElement oracle_trace_vector(const GraphPlanarAlgebra& pa, const PAElement& x) {
  Color c = x.color();
  PAElement out(c.is_zero() ? c : Color::plus0());
  for (const auto& [l, s] : x.terms()) {
    if (c.is_zero()) {
      out.add(l, s);
      continue;
    }
    std::size_t k = static_cast<std::size_t>(c.k);
    bool palindrome = true;
    for (std::size_t i = 0; i < k; ++i) palindrome = palindrome && l.edges[i] == l.edges[2 * k - 1 - i];
    if (!palindrome) continue;
    auto pi = pa.vertices(l);
    const auto& sg = pa.spin_graph();
    Scalar w = sg.mu2(pi[k]) / sg.mu2(pi[0]);
    for (std::size_t i = 0; i < k; ++i) w /= pa.delta();
    out.add(Loop{l.base, {}}, s * w);
  }
  return out;
}

PAElement basis_loop(const GraphPlanarAlgebra& pa, Color c, std::size_t i) {
  return PAElement(c, pa.loops(c)[i]);
}

std::shared_ptr<GraphPlanarAlgebra> a3_path() {
  return std::make_shared<GraphPlanarAlgebra>(
      parse_graph("even x y\nodd a\nedge x a\nedge y a\nspin a = 2^(1/4)\n"));
}

}  // namespace

TEST_CASE("loop counts on star graphs", "[loops]") {
  for (const char* spec : {"S2:S1", "S3:S2", "S4:S3"}) {
    const auto& pa = context(spec).loops();
    int n = context(spec).n();
    CHECK(pa.loops(Color::plus0()).size() == static_cast<std::size_t>(n));
    CHECK(pa.loops(Color::minus0()).size() == 1);
    long long expect = 1;
    for (int k = 1; k <= 5; ++k) {
      expect *= n;
      CHECK(static_cast<long long>(pa.loops(Color::of(k)).size()) == expect);
      // lexicographic order, all valid
      const auto& ls = pa.loops(Color::of(k));
      CHECK(std::is_sorted(ls.begin(), ls.end()));
      for (const auto& l : ls) CHECK(pa.is_loop(Color::of(k), l));
    }
  }
}

TEST_CASE("units", "[loops]") {
  const auto& pa = context("S3:S2").loops();
  auto u1 = pa.unit(Color::of(1));
  CHECK(u1.size() == 3);
  for (const auto& [l, s] : u1.terms()) {
    CHECK(s == Scalar(1));
    CHECK(l.edges[0] == l.edges[1]);
  }
  CHECK(pa.unit(Color::plus0()).size() == 3);
  CHECK(pa.unit(Color::minus0()).size() == 1);
  for (int k = 1; k <= 4; ++k) {
    Color c = Color::of(k);
    auto u = pa.unit(c);
    for (std::size_t i = 0; i < pa.loops(c).size(); ++i) {
      auto x = basis_loop(pa, c, i);
      REQUIRE(pa.multiply(u, x) == x);
      REQUIRE(pa.multiply(x, u) == x);
    }
  }
  const auto& p1 = context("S3:S3").loops();
  for (int k = 1; k <= 3; ++k) CHECK(p1.unit(Color::of(k)).size() == 1);
}

TEST_CASE("multiplication on star_3", "[loops]") {
  const auto& pa = context("S3:S2").loops();
  Color one = Color::of(1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto p = pa.multiply(basis_loop(pa, one, i), basis_loop(pa, one, j));
      if (i == j) CHECK(p == basis_loop(pa, one, i));
      else CHECK(p.is_zero());
    }
  // 0+ is pointwise
  auto v0 = basis_loop(pa, Color::plus0(), 0), v1 = basis_loop(pa, Color::plus0(), 1);
  CHECK(pa.multiply(v0, v0) == v0);
  CHECK(pa.multiply(v0, v1).is_zero());
  CHECK_THROWS_AS(pa.multiply(basis_loop(pa, one, 0), v0), ColorMismatch);
}

TEST_CASE("associativity and the star structure", "[loops]") {
  for (const char* spec : {"S2:S1", "S3:S2"}) {
    const auto& pa = context(spec).loops();
    int max_k = context(spec).n() == 2 ? 3 : 2;
    for (int k = 1; k <= max_k; ++k) {
      Color c = Color::of(k);
      std::size_t d = pa.loops(c).size();
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          auto x = basis_loop(pa, c, a), y = basis_loop(pa, c, b);
          auto xy = pa.multiply(x, y);
          REQUIRE(pa.star(xy) == pa.multiply(pa.star(y), pa.star(x)));
          for (std::size_t e = 0; e < d; ++e) {
            auto z = basis_loop(pa, c, e);
            REQUIRE(pa.multiply(xy, z) == pa.multiply(x, pa.multiply(y, z)));
          }
        }
      for (std::size_t a = 0; a < d; ++a) {
        auto x = basis_loop(pa, c, a);
        CHECK(pa.star(pa.star(x)) == x);
      }
    }
  }
  const auto& pa = context("S3:S2").loops();
  for (std::size_t i = 0; i < 3; ++i) CHECK(pa.star(basis_loop(pa, Color::of(1), i)) == basis_loop(pa, Color::of(1), i));
}

TEST_CASE("inclusion", "[loops]") {
  const auto& pa = context("S3:S2").loops();
  // (Hg_i) goes to the sum of loop(Hg_i; Hg_v) over the three v
  auto x = pa.include(basis_loop(pa, Color::of(1), 0));
  CHECK(x.color() == Color::of(2));
  CHECK(x.size() == 3);
  for (int k = 1; k <= 4; ++k) CHECK(pa.include(pa.unit(Color::of(k))) == pa.unit(Color::of(k + 1)));
  CHECK(pa.include(pa.unit(Color::plus0())) == pa.unit(Color::of(1)));
  CHECK(pa.include(pa.unit(Color::minus0())) == pa.unit(Color::of(1)));
  // injective: the image vectors have full rank
  for (int k = 1; k <= 3; ++k) {
    Color c = Color::of(k), up = Color::of(k + 1);
    const auto& src = pa.loops(c);
    Mat<Scalar> m = Mat<Scalar>::Zero(static_cast<Eigen::Index>(src.size()),
                                      static_cast<Eigen::Index>(pa.loops(up).size()));
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto img = pa.include(PAElement(c, src[i]));
      for (const auto& [l, s] : img.terms()) m(static_cast<Eigen::Index>(i), pa.index_of(up, l)) = s;
    }
    CHECK(rank(m) == static_cast<Eigen::Index>(src.size()));
  }
}

TEST_CASE("trace agrees with the path-weight oracle", "[loops][trace]") {
  std::vector<std::shared_ptr<const GraphPlanarAlgebra>> algebras{
      context("S2:S1").loops_ptr(), context("S3:S2").loops_ptr(), a3_path()};
  for (const auto& pa : algebras) {
    for (int k = 1; k <= 3; ++k) {
      Color c = Color::of(k);
      for (std::size_t i = 0; i < pa->loops(c).size(); ++i) {
        auto x = basis_loop(*pa, c, i);
        REQUIRE(pa->trace_vector(x) == oracle_trace_vector(*pa, x));
      }
    }
  }
  const auto& pa = context("S3:S2").loops();
  CHECK(pa.trace(pa.unit(Color::of(3))) == Scalar(1));
  // Markov property
  auto e1 = pa.scale(pa.jones(Color::of(2)), pa.delta().inverse());
  CHECK(pa.trace(e1) == Scalar(Rational(1, 3)));
  // a single loop is not central on the full algebra
  CHECK_THROWS_AS(pa.trace(basis_loop(pa, Color::of(1), 0)), NonScalarTrace);
}

TEST_CASE("cap maps against the trace-preserving conditional expectation", "[loops][condE]") {
  std::vector<std::shared_ptr<const GraphPlanarAlgebra>> algebras{
      context("S2:S1").loops_ptr(), context("S3:S2").loops_ptr(), a3_path()};
  for (const auto& pa : algebras) {
    Scalar dinv = pa->delta().inverse();
    for (int k = 1; k <= 2; ++k) {
      Color c = Color::of(k), up = Color::of(k + 1);
      std::size_t dk = pa->loops(c).size(), du = pa->loops(up).size();
      for (std::size_t xi = 0; xi < du; ++xi) {
        auto x = basis_loop(*pa, up, xi);
        auto ex = pa->scale(pa->cond_E(x), dinv);
        // tr_k(a E(x)) = tr_{k+1}(I(a) x) characterises E on a faithful trace
        for (std::size_t ai = 0; ai < dk; ++ai) {
          auto a = basis_loop(*pa, c, ai);
          REQUIRE(oracle_trace_vector(*pa, pa->multiply(a, ex)) ==
                  oracle_trace_vector(*pa, pa->multiply(pa->include(a), x)));
        }
      }
      for (std::size_t ai = 0; ai < dk; ++ai) {
        auto a = basis_loop(*pa, c, ai);
        REQUIRE(pa->cond_E(pa->include(a)) == pa->delta() * a);
      }
      // bimodule law E(I(a) x I(b)) = a E(x) b
      if (k == 1) {
        for (std::size_t xi = 0; xi < du; ++xi)
          for (std::size_t ai = 0; ai < dk; ++ai)
            for (std::size_t bi = 0; bi < dk; ++bi) {
              auto x = basis_loop(*pa, up, xi), a = basis_loop(*pa, c, ai), b = basis_loop(*pa, c, bi);
              auto lhs = pa->cond_E(pa->multiply(pa->include(a), pa->multiply(x, pa->include(b))));
              auto rhs = pa->multiply(a, pa->multiply(pa->cond_E(x), b));
              REQUIRE(lhs == rhs);
            }
      }
    }
  }
}

TEST_CASE("cap values on star_3", "[loops][condE]") {
  const auto& pa = context("S3:S2").loops();
  Scalar r = Scalar::quarter_power(3, -2);
  for (const auto& l : pa.loops(Color::of(2))) {
    // every even vertex of the star has degree one, so the middle strands always match
    auto pi = pa.vertices(l);
    auto y = pa.cond_E(PAElement(Color::of(2), l));
    CHECK(y == PAElement(Color::of(1), Loop{pi[0], {pi[0], pi[0]}}, r));
  }
  // colour 1 to 0+: (Hg_i) -> sqrt3 (Hg_i)
  auto v = pa.cond_E(basis_loop(pa, Color::of(1), 1));
  CHECK(v == PAElement(Color::plus0(), Loop{1, {}}, sqrt_n(3)));
  auto m = pa.cond_E_minus(basis_loop(pa, Color::of(1), 1));
  CHECK(m == PAElement(Color::minus0(), Loop{3, {}}, sqrt_n(3).inverse()));
  CHECK_THROWS_AS(pa.cond_E(pa.unit(Color::plus0())), ColorMismatch);
}

TEST_CASE("left cap", "[loops][condE]") {
  const auto& pa = context("S3:S2").loops();
  // (Hg_i) -> n^{-1/2} sum_u (u)
  auto y = pa.cond_Eprime(basis_loop(pa, Color::of(1), 2));
  CHECK(y == sqrt_n(3).inverse() * pa.unit(Color::of(1)));
  Scalar dinv = pa.delta().inverse();
  for (int k = 1; k <= 3; ++k) {
    Color c = Color::of(k);
    for (std::size_t i = 0; i < pa.loops(c).size(); ++i) {
      auto x = basis_loop(pa, c, i);
      auto once = pa.scale(pa.cond_Eprime(x), dinv);
      REQUIRE(pa.scale(pa.cond_Eprime(once), dinv) == once);
    }
  }
}

TEST_CASE("Jones elements and Temperley-Lieb relations", "[loops][tl]") {
  const auto& pa3 = context("S3:S2").loops();
  PAElement expect(Color::of(2));
  for (const auto& l : pa3.loops(Color::of(2))) {
    auto pi = pa3.vertices(l);
    if (pi[0] == pi[2]) expect.add(l, sqrt_n(3));
  }
  CHECK(pa3.jones(Color::of(2)) == expect);

  for (const char* spec : {"S2:S1", "S3:S2", "S4:S3"}) {
    const auto& pa = context(spec).loops();
    int n = context(spec).n();
    Scalar inv_n(Rational(1, n));
    auto e = [&](int m) { return pa.scale(pa.jones(Color::of(m + 1)), pa.delta().inverse()); };
    for (int m = 1; m <= 3; ++m) {
      auto em = e(m);
      CHECK(pa.multiply(em, em) == em);
      CHECK(pa.star(em) == em);
      CHECK(pa.trace(em) == inv_n);
      auto lifted = pa.include(em), next = e(m + 1);
      CHECK(pa.multiply(lifted, pa.multiply(next, lifted)) == inv_n * lifted);
      CHECK(pa.multiply(next, pa.multiply(lifted, next)) == inv_n * next);
      // far-apart projections commute
      if (m >= 2) {
        auto far = pa.include(pa.include(e(m - 1)));
        CHECK(pa.multiply(far, e(m + 1)) == pa.multiply(e(m + 1), far));
      }
    }
  }
}
