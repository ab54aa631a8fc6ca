#include "helpers.hpp"

#include "pln/error.hpp"
#include "pln/linalg.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pln;
using pln::test::context;

namespace {

using Model = SubfactorModel<Scalar>;
using Matrix = Model::Matrix;
using Elem = Model::Elem;

// od -> ev at the same level, ev -> od one level up
Matrix lift(const Model& m, const Matrix& a) {
  return a.parity == Parity::od ? m.od_to_ev(a) : m.theta_inclusion(a);
}

// Random matrix with small integer coefficients; od matrices stay supported in H.
Matrix random_matrix(const Model& m, int level, Parity p, std::mt19937& rng, int terms = 6) {
  const auto& cs = m.cosets();
  std::uniform_int_distribution<std::int64_t> idx(0, cs.power(level) - 1);
  std::uniform_int_distribution<int> grp(0, static_cast<int>(m.group().order()) - 1);
  std::uniform_int_distribution<int> hidx(0, static_cast<int>(cs.subgroup().size()) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  Matrix a = m.zero(level, p);
  for (int t = 0; t < terms; ++t) {
    int g = p == Parity::od ? cs.subgroup()[static_cast<std::size_t>(hidx(rng))] : grp(rng);
    a.add(idx(rng), idx(rng), Elem::unit(g, Scalar(coef(rng))));
  }
  return a;
}

}  // namespace

TEST_CASE("matrix units", "[model]") {
  const auto& m = context("S3:S2").model();
  const auto& cs = m.cosets();
  for (int k = 1; k <= 2; ++k) {
    for (std::int64_t a = 0; a < cs.power(k); ++a)
      for (std::int64_t b = 0; b < cs.power(k); ++b)
        for (std::int64_t c = 0; c < cs.power(k); c += 2) {
          Tuple i = cs.unflat(a, k), j = cs.unflat(b, k), l = cs.unflat(c, k);
          REQUIRE(m.matmul(m.basis_ev(i, j), m.basis_ev(j, l)) == m.basis_ev(i, l));
        }
    // od units vanish exactly off Y_k
    std::size_t nonzero = 0;
    for (std::int64_t a = 0; a < cs.power(k); ++a)
      for (std::int64_t b = 0; b < cs.power(k); ++b) {
        Tuple i = cs.unflat(a, k), j = cs.unflat(b, k);
        bool z = m.basis_od(i, j).is_zero();
        CHECK(z == !cs.in_y(i, j));
        nonzero += z ? 0 : 1;
      }
    CHECK(nonzero == cs.y_k(k).size());
  }
  CHECK(m.adjoint(m.basis_ev({1, 2}, {3, 1})) == m.basis_ev({3, 1}, {1, 2}));
}

TEST_CASE("theta is a unital homomorphism into M_n(N)", "[model]") {
  for (const char* spec : {"S3:S2", "C4:C2", "S4:S3"}) {
    const auto& m = context(spec).model();
    const auto& G = m.group();
    CHECK(m.theta(Elem::unit(G.identity())) == m.identity(1, Parity::od));
    for (std::size_t a = 0; a < G.order(); ++a)
      for (std::size_t b = 0; b < G.order(); ++b) {
        int ai = static_cast<int>(a), bi = static_cast<int>(b);
        auto ta = m.theta(Elem::unit(ai)), tb = m.theta(Elem::unit(bi));
        REQUIRE(m.matmul(ta, tb) == m.theta(Elem::unit(G.mul(ai, bi))));
        for (const auto& [ix, x] : ta.entries) REQUIRE(x.supported_in(m.cosets()));
      }
    // theta of u_g is a monomial matrix
    for (std::size_t g = 0; g < G.order(); ++g) CHECK(m.theta(Elem::unit(static_cast<int>(g))).entries.size() == static_cast<std::size_t>(m.n()));
  }
}

TEST_CASE("Theta is a *-homomorphism extending theta", "[model]") {
  const auto& m = context("S3:S2").model();
  const auto& G = m.group();
  for (std::size_t g = 0; g < G.order(); ++g) {
    Matrix a = m.zero(0, Parity::ev);
    a.add(0, 0, Elem::unit(static_cast<int>(g)));
    CHECK(m.theta_inclusion(a) == m.theta(Elem::unit(static_cast<int>(g))));
  }
  std::mt19937 rng(11);
  for (int k = 0; k <= 2; ++k) {
    CHECK(m.theta_inclusion(m.identity(k, Parity::ev)) == m.identity(k + 1, Parity::od));
    for (int t = 0; t < 10; ++t) {
      auto a = random_matrix(m, k, Parity::ev, rng), b = random_matrix(m, k, Parity::ev, rng);
      REQUIRE(m.theta_inclusion(m.matmul(a, b)) == m.matmul(m.theta_inclusion(a), m.theta_inclusion(b)));
      REQUIRE(m.theta_inclusion(m.adjoint(a)) == m.adjoint(m.theta_inclusion(a)));
      REQUIRE(m.trace(m.theta_inclusion(a)) == m.trace(a));
    }
  }
}

TEST_CASE("theta^(k) is the iterated inclusion", "[model]") {
  for (const char* spec : {"S3:S2", "C4:C2"}) {
    const auto& m = context(spec).model();
    const auto& G = m.group();
    for (std::size_t g = 0; g < G.order(); ++g) {
      int gi = static_cast<int>(g);
      auto t = m.theta_k(gi, 1, Parity::od);
      CHECK(t == m.theta(Elem::unit(gi)));
      for (int k = 1; k <= 3; ++k) {
        auto next = m.theta_k(gi, k + 1, Parity::od);
        REQUIRE(next == m.theta_inclusion(m.od_to_ev(m.theta_k(gi, k, Parity::od))));
        // unitary
        REQUIRE(m.matmul(next, m.adjoint(next)) == m.identity(k + 1, Parity::od));
      }
    }
    for (std::size_t a = 0; a < G.order(); ++a)
      for (std::size_t b = 0; b < G.order(); ++b) {
        int ai = static_cast<int>(a), bi = static_cast<int>(b);
        REQUIRE(m.matmul(m.theta_k(ai, 2, Parity::ev), m.theta_k(bi, 2, Parity::ev)) ==
                m.theta_k(G.mul(ai, bi), 2, Parity::ev));
      }
  }
}

TEST_CASE("Jones projections", "[model][tl]") {
  for (const char* spec : {"S2:S1", "S3:S2", "S4:S3"}) {
    INFO(spec);
    const auto& m = context(spec).model();
    Scalar inv_n(Rational(1, m.n()));
    for (int j = 1; j <= 5; ++j) {
      auto e = m.jones_projection(j);
      CHECK(e.level == (j + 1) / 2);
      CHECK(e.parity == (j % 2 ? Parity::od : Parity::ev));
      CHECK(m.matmul(e, e) == e);
      CHECK(m.adjoint(e) == e);
      CHECK(m.trace(e) == inv_n);
      auto up = lift(m, e), next = m.jones_projection(j + 1);
      CHECK(m.matmul(up, m.matmul(next, up)) == m.scale(up, inv_n));
      CHECK(m.matmul(next, m.matmul(up, next)) == m.scale(next, inv_n));
      if (j >= 2) {
        auto far = lift(m, lift(m, m.jones_projection(j - 1)));
        CHECK(m.commutes(far, next));
      }
    }
  }
  CHECK_THROWS_AS(context("S3:S2").model().jones_projection(0), Error);
}

TEST_CASE("conditional expectations", "[model]") {
  for (const char* spec : {"S3:S2", "C4:C2"}) {
    const auto& m = context(spec).model();
    std::mt19937 rng(5);
    for (int k = 0; k <= 2; ++k) {
      for (int t = 0; t < 8; ++t) {
        auto a = random_matrix(m, k, Parity::ev, rng);
        auto b = random_matrix(m, k, Parity::od, rng);
        auto c = random_matrix(m, k, Parity::od, rng);
        // E_N: trace preserving, identity on the smaller algebra, bimodular
        auto en = m.cond_exp_EN(a);
        CHECK(m.trace(en) == m.trace(a));
        CHECK(m.cond_exp_EN(m.od_to_ev(b)) == b);
        CHECK(m.cond_exp_EN(m.matmul(m.od_to_ev(b), m.matmul(a, m.od_to_ev(c)))) ==
              m.matmul(b, m.matmul(en, c)));
        // E_M one level up
        auto x = random_matrix(m, k + 1, Parity::od, rng, 12);
        auto em = m.cond_exp_EM(x);
        CHECK(em.level == k);
        CHECK(m.trace(em) == m.trace(x));
        CHECK(m.cond_exp_EM(m.theta_inclusion(a)) == a);
        auto a2 = random_matrix(m, k, Parity::ev, rng);
        CHECK(m.cond_exp_EM(m.matmul(m.theta_inclusion(a), m.matmul(x, m.theta_inclusion(a2)))) ==
              m.matmul(a, m.matmul(em, a2)));
      }
    }
    CHECK_THROWS_AS(m.cond_exp_EN(m.identity(1, Parity::od)), ColorMismatch);
    CHECK_THROWS_AS(m.cond_exp_EM(m.identity(0, Parity::od)), Error);
  }
}

TEST_CASE("basic construction identities", "[model]") {
  const auto& m = context("S3:S2").model();
  std::mt19937 rng(3);
  for (int k = 1; k <= 2; ++k)
    for (int t = 0; t < 8; ++t) {
      // e_{2k+1} Theta(A) e_{2k+1} = Theta(E_N(A)) e_{2k+1}
      auto a = random_matrix(m, k, Parity::ev, rng);
      auto e = m.jones_projection(2 * k + 1);
      CHECK(m.matmul(e, m.matmul(m.theta_inclusion(a), e)) ==
            m.matmul(m.theta_inclusion(m.od_to_ev(m.cond_exp_EN(a))), e));
      // e_{2k} A e_{2k} = Theta(E_M(A)) e_{2k}
      auto b = random_matrix(m, k, Parity::od, rng);
      auto f = m.jones_projection(2 * k);
      CHECK(m.matmul(f, m.matmul(m.od_to_ev(b), f)) ==
            m.matmul(m.od_to_ev(m.theta_inclusion(m.cond_exp_EM(b))), f));
    }
}

TEST_CASE("trace is tracial", "[model]") {
  const auto& m = context("S4:S3").model();
  std::mt19937 rng(17);
  for (int k = 0; k <= 2; ++k)
    for (Parity p : {Parity::ev, Parity::od})
      for (int t = 0; t < 8; ++t) {
        auto a = random_matrix(m, k, p, rng, 10), b = random_matrix(m, k, p, rng, 10);
        CHECK(m.trace(m.matmul(a, b)) == m.trace(m.matmul(b, a)));
      }
  CHECK(m.trace(m.identity(3, Parity::ev)) == Scalar(1));
}

TEST_CASE("relative commutant bases", "[model][commutant]") {
  for (const char* spec : {"S3:S2", "S3:A3", "C4:C2", "S4:S3"}) {
    INFO(spec);
    const auto& ctx = context(spec);
    const auto& m = ctx.model();
    int depth = ctx.n() == 4 ? 4 : 5;
    for (int c = 1; c <= depth; ++c) {
      Color col = Color::of(c);
      const auto& b = ctx.commutant_basis(col);
      CHECK(b.size() == ctx.invariants().basis(col).size());
      CHECK(b.burnside == b.size());
    }
    for (int c = 1; c <= 3; ++c) {
      Color col = Color::of(c);
      auto lv = level_of(col);
      for (Flavor f : {Flavor::n_prime, Flavor::m_prime}) {
        const auto& b = ctx.commutant_basis(col, f);
        const auto& acting = f == Flavor::n_prime ? m.cosets().subgroup() : std::vector<int>{};
        std::vector<int> all;
        for (std::size_t g = 0; g < m.group().order(); ++g) all.push_back(static_cast<int>(g));
        for (std::size_t o = 0; o < b.size(); ++o) {
          const auto& x = b.elements[o];
          CHECK(x.level == lv.level);
          CHECK(m.is_relative_commutant(x, f));
          for (int h : f == Flavor::n_prime ? acting : all)
            REQUIRE(m.commutes(x, m.theta_k(h, lv.level, lv.parity)));
        }
        // Gram matrix of the trace form
        Mat<Scalar> gram(static_cast<Eigen::Index>(b.size()), static_cast<Eigen::Index>(b.size()));
        for (std::size_t i = 0; i < b.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j)
            gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m.trace(m.matmul(m.adjoint(b.elements[i]), b.elements[j]));
        CHECK(is_positive_definite(gram));
      }
      // M' cap M_k sits inside N' cap M_k
      CHECK(ctx.commutant_basis(col, Flavor::m_prime).size() <= ctx.commutant_basis(col).size());
    }
  }
  // an element that is not a scalar multiple of the label fails membership
  const auto& m = context("S3:S2").model();
  auto bad = m.basis_ev({1}, {2});
  CHECK_FALSE(m.is_relative_commutant(bad, Flavor::n_prime));
  CHECK(m.is_relative_commutant(m.identity(2, Parity::ev), Flavor::m_prime));
}

TEST_CASE("M' expectation lands in the M' commutant", "[model][commutant]") {
  const auto& m = context("S3:S2").model();
  std::mt19937 rng(23);
  for (int t = 0; t < 5; ++t) {
    auto a = random_matrix(m, 1, Parity::ev, rng);
    auto p = m.cond_exp_Mprime(a);
    CHECK(m.cond_exp_Mprime(p) == p);
    for (std::size_t g = 0; g < m.group().order(); ++g)
      CHECK(m.commutes(p, m.theta_k(static_cast<int>(g), 1, Parity::ev)));
  }
}
