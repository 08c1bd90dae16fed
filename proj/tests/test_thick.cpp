#include "doctest.h"
#include "soergel/thick.hpp"

using namespace soergel;

namespace {

void all_pass(const std::vector<Check>& cs) {
  CHECK_FALSE(cs.empty());
  for (auto& c : cs) {
    INFO(c.check << " " << c.params << " " << c.witness);
    CHECK(c.pass);
  }
}

size_t count(const std::vector<Check>& cs, const std::string& name) {
  size_t k = 0;
  for (auto& c : cs) k += c.check == name;
  return k;
}

}  // namespace

TEST_CASE("z examples") {
  for (int i = 1; i <= 3; ++i) CHECK(z_morphism({i}) == identity({i}));
  CHECK(z_morphism({1, 2}) == gen_sixvalent(1, 2));
  CHECK(zbar_morphism({1, 2}) == gen_sixvalent(2, 1));
  BSMorphism z = z_morphism({1, 2, 3}), zb = zbar_morphism({1, 2, 3});
  CHECK(z.rows() == 64);
  CHECK(z.cols() == 64);
  CHECK(compose_v(z, compose_v(zb, z)) == z);
}

TEST_CASE("transition examples") {
  IndexSet J{1, 2};
  Word s = anchor_word(J, Anchor::S, Side::Right), t = anchor_word(J, Anchor::T, Side::Right);
  CHECK(s == parse_word("121"));
  CHECK(t == parse_word("212"));
  CHECK(transition(J, t, s) == zbar_morphism(J));
  CHECK(transition(J, s, s) == compose_v(gen_sixvalent(2, 1), gen_sixvalent(1, 2)));
  CHECK(psi(J, s, t) == z_morphism(J));
}

TEST_CASE("a_thick examples") {
  CHECK(a_thick({1}, 1, Side::Right, Anchor::S).morphism == gen_merge(1));
  CHECK(a_thick({1}, 1, Side::Left, Anchor::T).morphism == gen_merge(1));
  // J={1,2}, i=2 on s: a six-valent vertex to the right of the merge for 1
  auto a = a_thick({1, 2}, 2, Side::Right, Anchor::S);
  CHECK(a.diagram.bottom == parse_word("1212"));
  CHECK(a.diagram.top() == parse_word("121"));
  CHECK(a.morphism == compose_v(embed({}, gen_merge(1), {2, 1}), embed({1}, gen_sixvalent(2, 1), {})));
  CHECK(a.morphism.degree() == -1);
  for (Anchor an : {Anchor::S, Anchor::T})
    for (Side sd : {Side::Right, Side::Left})
      for (int i : {1, 2, 3}) {
        auto b = a_thick({1, 2, 3}, i, sd, an);
        CHECK(b.morphism.degree() == -1);
        CHECK(is_bimodule_map(b.morphism, 3));
      }
  CHECK_THROWS(a_thick({1, 2}, 3, Side::Right, Anchor::S));
}

TEST_CASE("a properties, small J") {
  for (IndexSet J : {IndexSet{1}, IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{2, 3}}) {
    auto cs = verify_a_properties(J);
    all_pass(cs);
    CHECK(count(cs, "asquared") == 2 * J.size());
    CHECK(count(cs, "a_action") == J.size());
  }
}

TEST_CASE("what kills, small J") {
  for (IndexSet J : {IndexSet{1}, IndexSet{1, 2}, IndexSet{1, 3}}) all_pass(verify_whatkills(J));
  auto cs = verify_whatkills({1, 2});
  CHECK(count(cs, "whatkills") > 0);
}

TEST_CASE("projectors, small J") {
  for (IndexSet J : {IndexSet{1}, IndexSet{1, 2}, IndexSet{1, 3}}) {
    auto cs = verify_projectors(J, 4, 7);
    all_pass(cs);
  }
  auto cs = verify_projectors({1, 2}, 4, 7);
  CHECK(count(cs, "abortedV") == 1);
  CHECK(count(cs, "phi_eq_psi") >= 4);
}

TEST_CASE("abort points") {
  CHECK(abort_points({1}) == 0);
  CHECK(abort_points({1, 2}) == 1);
  CHECK(abort_points({1, 2, 3}) == 4);
  for (int k = 0; k < abort_points({1, 2, 3}); ++k)
    CHECK(compose_v(abort_morphism({1, 2, 3}, k), zbar_morphism({1, 2, 3})).is_zero());
}

TEST_CASE("xi") {
  CHECK(xi({1}, {1}) == gen_counit(1));
  IndexSet J{1, 2};
  BSMorphism a = xi(J, parse_word("121")), b = xi(J, parse_word("212"));
  CHECK(a == b);
  CHECK(a.degree() == 3);
  CHECK(a.image_of_label(0) == one_tensor({}));
  BSMorphism c = xi({1, 2, 3}, anchor_word({1, 2, 3}, Anchor::S, Side::Right));
  CHECK(c.image_of_label(0) == one_tensor({}));
}

TEST_CASE("summand ranks") {
  CHECK(summand_rank({1}, {1}) == 2);
  CHECK(summand_rank({1, 2}, parse_word("121")) == 6);
  CHECK(summand_rank({1, 2}, parse_word("212")) == 6);
  CHECK(summand_rank({2, 3}, parse_word("232")) == 6);
  CHECK(summand_rank({1, 3}, parse_word("13")) == 4);
  CHECK(summand_rank({1, 2, 3}, anchor_word({1, 2, 3}, Anchor::S, Side::Right)) == 24);
}

TEST_CASE("graded class is b_J") {
  for (IndexSet J : {IndexSet{1}, IndexSet{1, 2}}) {
    CHECK(graded_class(J) == LaurentPoly(1));
    auto from = hom_from_R_dims(J), to = hom_to_R_dims(J);
    int d = static_cast<int>(anchor_word(J, Anchor::S, Side::Right).size());
    // the window starts at -d; nothing below d, a single generator at d
    for (int k = 0; k < 2 * d; ++k) {
      CHECK(from[k] == 0);
      CHECK(to[k] == 0);
    }
    CHECK(from[2 * d] == 1);
    CHECK(to[2 * d] == 1);
  }
}

TEST_CASE("C (x) B_i splits") {
  for (auto [J, i] : std::vector<std::pair<IndexSet, int>>{{{1}, 1}, {{1, 2}, 1}, {{1, 2}, 2}}) {
    auto sp = split_CBi(J, i);
    INFO(word_str(J) << " " << i);
    CHECK(compose_v(sp.plus, sp.plus) == sp.plus);
    CHECK(compose_v(sp.minus, sp.minus) == sp.minus);
    CHECK(compose_v(sp.plus, sp.minus).is_zero());
    CHECK(compose_v(sp.minus, sp.plus).is_zero());
    CHECK(sp.plus + sp.minus == sp.unit);
    int w = summand_rank(J, anchor_word(J, Anchor::S, Side::Right));
    CHECK(numeric_rank(sp.plus).rank == w);
    CHECK(numeric_rank(sp.minus).rank == w);
  }
  auto sp = split_CBi({1}, 1);
  CHECK(sp.alpha == Q(1, 2));
  CHECK(sp.beta == Q(1, 2));
}

TEST_CASE("very thick action, |J| <= 2") {
  for (IndexSet J : {IndexSet{1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{1, 3}}) {
    auto cs = very_thick_action_check(J);
    all_pass(cs);
    CHECK(count(cs, "thick_decomposition") == 1);
  }
}

TEST_CASE("json report") {
  std::vector<Check> cs{{"a", "i=1", true, ""}, {"b", "i=2", false, "x"}};
  std::string s = checks_to_json(cs);
  CHECK(s.find("\"status\"") != std::string::npos);
  CHECK(s.find("\"witness\"") != std::string::npos);
}
