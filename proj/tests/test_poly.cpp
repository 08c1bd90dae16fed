#include <random>

#include "doctest.h"
#include "soergel/coxeter.hpp"
#include "soergel/poly.hpp"

using namespace soergel;

namespace {

MultiPoly f(int k) { return MultiPoly::var(k); }
MultiPoly P(const char* s) { return MultiPoly::parse(s); }

// oracle: polynomials as functions; s_i acts on values by substitution
std::vector<Q> reflect_point(int i, std::vector<Q> x) {
  Q xi = x[i - 1];
  x[i - 1] = -xi;
  if (i - 2 >= 0) x[i - 2] += xi;
  if (i < static_cast<int>(x.size())) x[i] += xi;
  return x;
}

Q oracle_demazure_at(int i, const MultiPoly& p, const std::vector<Q>& x) {
  return (p.eval(x) - p.eval(reflect_point(i, x))) / x[i - 1];
}

// d_{i_1}...d_{i_k} evaluated purely through values of P
Q oracle_word_at(const Word& w, const MultiPoly& p, const std::vector<Q>& x) {
  if (w.empty()) return p.eval(x);
  Word rest(w.begin() + 1, w.end());
  int i = w[0];
  return (oracle_word_at(rest, p, x) - oracle_word_at(rest, p, reflect_point(i, x))) / x[i - 1];
}

MultiPoly random_homogeneous(std::mt19937_64& rng, int n, int total) {
  std::vector<int> vars;
  for (int k = 1; k <= n; ++k) vars.push_back(k);
  auto monos = monomials_of_degree(vars, total);
  std::vector<MultiPoly::Term> terms;
  std::uniform_int_distribution<int> coef(-3, 3);
  for (auto m : monos) terms.emplace_back(m, Q(coef(rng)));
  return MultiPoly::from_terms(terms);
}

std::vector<Q> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-20, 20);
  std::vector<Q> x;
  for (int k = 0; k < n; ++k) {
    int v = d(rng);
    Q q(v == 0 ? 7 : v, 3);
    q.canonicalize();
    x.push_back(q);
  }
  return x;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  MultiPoly p = P("3/2*f1^2*f2 - f3 + 7");
  CHECK(MultiPoly::parse(p.str()) == p);
  CHECK(p.str() == "3/2*f1^2*f2 - 1*f3 + 7");
  CHECK(MultiPoly().str() == "0");
  CHECK(P("0").is_zero());
  CHECK(P("4/2*f1") == f(1) * Q(2));
}

TEST_CASE("reflect examples") {
  CHECK(reflect(1, f(1)) == -f(1));
  CHECK(reflect(1, f(3)) == f(3));
  CHECK(reflect(1, f(2)) == f(1) + f(2));
  CHECK_THROWS_AS(reflect(0, f(1)), std::out_of_range);
}

TEST_CASE("demazure examples") {
  CHECK(demazure(1, f(1)) == MultiPoly(2));
  CHECK(demazure(1, f(1) * f(1)).is_zero());
  CHECK(demazure(1, f(2)) == MultiPoly(-1));
  CHECK(demazure(1, f(1) * f(2)) == f(2) * Q(2) + f(1));
  // oracle check of the derived values by evaluation
  std::mt19937_64 rng(1);
  for (auto p : {f(2), f(1) * f(2)}) {
    auto x = random_point(rng, 3);
    CHECK(demazure(1, p).eval(x) == oracle_demazure_at(1, p, x));
  }
}

TEST_CASE("demazure agrees with evaluation oracle on random polynomials") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4;
    auto p = random_homogeneous(rng, n, 1 + trial % 4);
    int i = 1 + trial % n;
    auto x = random_point(rng, n);
    CHECK(demazure(i, p).eval(x) == oracle_demazure_at(i, p, x));
  }
}

TEST_CASE("demazure_word") {
  CHECK(demazure_word({1}, f(1)) == MultiPoly(2));
  CHECK_THROWS_AS(demazure_word({1, 1}, f(1)), std::invalid_argument);
  MultiPoly g = f(1) * f(2) * (f(1) + f(2));
  MultiPoly a = demazure_word({1, 2, 1}, g), b = demazure_word({2, 1, 2}, g);
  CHECK(a == b);
  CHECK(a.is_constant());
  std::mt19937_64 rng(3);
  auto x = random_point(rng, 2);
  CHECK(a.eval(x) == oracle_word_at({1, 2, 1}, g, x));
  CHECK(a == MultiPoly(oracle_word_at({2, 1, 2}, g, x)));
}

TEST_CASE("invariant_split") {
  auto [a0, a1] = invariant_split(1, f(1));
  CHECK(a0.is_zero());
  CHECK(a1 == MultiPoly(1));
  auto [c0, c1] = invariant_split(1, MultiPoly(Q(5, 3)));
  CHECK(c0 == MultiPoly(Q(5, 3)));
  CHECK(c1.is_zero());
  auto [b0, b1] = invariant_split(1, f(2));
  CHECK(b0 == f(2) + f(1) * Q(1, 2));
  CHECK(b1 == MultiPoly(Q(-1, 2)));
  CHECK(b0 + f(1) * b1 == f(2));
  CHECK(is_invariant({1}, b0));
  CHECK(is_invariant({1}, b1));
}

TEST_CASE("is_invariant") {
  CHECK(is_invariant({1}, f(1) * f(1)));
  CHECK_FALSE(is_invariant({1}, f(1)));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5; ++t) {
    auto p = random_homogeneous(rng, 3, 4);
    CHECK(is_invariant({1, 2}, demazure_word({1, 2, 1}, p)));
  }
}

TEST_CASE("property: reflection is an involutive ring automorphism") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    int i = 1 + t % 4;
    auto p = random_homogeneous(rng, 4, 1 + t % 3), q = random_homogeneous(rng, 4, 1 + (t / 3) % 3);
    CHECK(reflect(i, reflect(i, p)) == p);
    CHECK(reflect(i, p * q) == reflect(i, p) * reflect(i, q));
    CHECK(reflect(i, p).degree() == p.degree());
  }
}

TEST_CASE("property: nilpotence, braid relations, twisted Leibniz through degree 12") {
  std::vector<int> vars{1, 2, 3, 4};
  for (int d = 0; d <= 6; ++d) {
    for (auto m : monomials_of_degree(vars, d)) {
      MultiPoly p = MultiPoly::monomial(m);
      for (int i = 1; i <= 4; ++i) {
        REQUIRE(demazure(i, demazure(i, p)).is_zero());
        for (int j = i + 1; j <= 4; ++j) {
          if (j == i + 1) {
            REQUIRE(demazure(i, demazure(j, demazure(i, p))) == demazure(j, demazure(i, demazure(j, p))));
          } else {
            REQUIRE(demazure(i, demazure(j, p)) == demazure(j, demazure(i, p)));
          }
        }
      }
    }
  }
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    int i = 1 + t % 4;
    auto p = random_homogeneous(rng, 4, 1 + t % 3), q = random_homogeneous(rng, 4, 1 + (t / 2) % 3);
    CHECK(demazure(i, p * q) == demazure(i, p) * q + reflect(i, p) * demazure(i, q));
  }
}

TEST_CASE("property: demazure_word is independent of the reduced word and R^J-linear") {
  for (IndexSet J : {IndexSet{1}, IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{1, 2, 3}}) {
    auto words = reduced_words(longest(J, 3).w);
    std::mt19937_64 rng(7);
    auto p = random_homogeneous(rng, 3, static_cast<int>(words[0].size()) + 1);
    MultiPoly ref = demazure_word(words[0], p);
    for (auto& w : words) CHECK(demazure_word(w, p) == ref);
    MultiPoly q = demazure_word(words[0], random_homogeneous(rng, 3, static_cast<int>(words[0].size()) + 1));
    REQUIRE(is_invariant(J, q));
    CHECK(demazure_word(words[0], q * p) == q * ref);
  }
}

TEST_CASE("dual bases") {
  auto e = dual_bases({});
  REQUIRE(e.basis.size() == 1);
  CHECK(e.basis[0] == MultiPoly(1));
  CHECK(e.dual[0] == MultiPoly(1));

  auto one = dual_bases({1});
  REQUIRE(one.basis.size() == 2);
  CHECK(one.basis[0] == MultiPoly(1));
  CHECK(one.basis[1] == f(1));
  CHECK(one.dual[0] == f(1) * Q(1, 2));
  CHECK(one.dual[1] == MultiPoly(Q(1, 2)));

  for (IndexSet J : {IndexSet{1}, IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{2, 3}, IndexSet{1, 2, 3}}) {
    auto db = dual_bases(J);
    Word wj = longest_word(J);
    int d = static_cast<int>(wj.size());
    CHECK(db.basis.size() == static_cast<std::size_t>(hilbert(J).at_one()));
    CHECK(db.basis[0] == MultiPoly(1));
    CHECK(db.dual.back().is_constant());
    for (std::size_t r = 0; r < db.basis.size(); ++r) {
      CHECK(db.basis[r].degree() == 2 * db.length[r]);
      if (!db.dual[r].is_zero()) CHECK(db.dual[r].degree() == 2 * (d - db.length[r]));
      CHECK(db.dual[r].is_homogeneous());
      for (std::size_t q = 0; q < db.basis.size(); ++q)
        CHECK(demazure_word(wj, db.basis[r] * db.dual[q]) == MultiPoly(r == q ? 1 : 0));
    }
  }
  auto two = dual_bases({1, 2});
  std::vector<int> prof;
  for (auto& g : two.basis) prof.push_back(g.degree());
  CHECK(prof == std::vector<int>{0, 2, 2, 4, 4, 6});
}

TEST_CASE("beta") {
  auto b = beta({1});
  REQUIRE(b.size() == 2);
  CHECK(b[0].first == MultiPoly(1));
  CHECK(b[0].second == f(1) * Q(1, 2));
  CHECK(b[1].first == f(1));
  CHECK(b[1].second == MultiPoly(Q(1, 2)));
  auto e = beta({});
  REQUIRE(e.size() == 1);
  CHECK(e[0].first == MultiPoly(1));
}
