#include <set>

#include "doctest.h"
#include "soergel/coxeter.hpp"

using namespace soergel;

namespace {

// brute force: all words of length l(w) over the letters, filtered by evaluation
std::set<Word> brute_reduced_words(const Perm& w, int n) {
  int l = length(w);
  std::set<Word> out;
  Word cur(l, 1);
  while (true) {
    if (eval(cur, n) == w) out.insert(cur);
    int k = l - 1;
    while (k >= 0 && cur[k] == n) cur[k--] = 1;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

}  // namespace

TEST_CASE("eval and reduced") {
  CHECK(eval({}, 3) == identity_perm(3));
  CHECK(length(eval({1, 2, 1}, 3)) == 3);
  CHECK(eval({1, 1}, 3) == identity_perm(3));
  CHECK(is_reduced({1, 2, 1}));
  CHECK_FALSE(is_reduced({1, 1}));
  CHECK(is_reduced({2, 1, 3, 2}));
  CHECK(length(eval({2, 1, 3, 2}, 3)) == 4);
}

TEST_CASE("longest elements") {
  CHECK(longest({1}, 3).d == 1);
  CHECK(longest({1, 2}, 3).d == 3);
  CHECK(longest({1, 2, 3}, 3).d == 6);
  // oracle: inversion count of the order reversing permutation of 4 letters
  CHECK(longest({1, 2, 3}, 3).w.img == std::vector<int>{4, 3, 2, 1});
  CHECK(longest({1, 3}, 3).d == 2);
}

TEST_CASE("reduced word enumeration") {
  auto w12 = reduced_words(longest({1, 2}, 2).w);
  CHECK(w12 == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  auto w123 = reduced_words(longest({1, 2, 3}, 3).w);
  CHECK(w123.size() == 16);
  auto brute = brute_reduced_words(longest({1, 2, 3}, 3).w, 3);
  CHECK(std::set<Word>(w123.begin(), w123.end()) == brute);
  CHECK(std::is_sorted(w123.begin(), w123.end()));
  for (auto& w : w123) {
    CHECK(is_reduced(w));
    CHECK(eval(w, 3) == longest({1, 2, 3}, 3).w);
  }
  CHECK(reduced_words(longest({1, 2, 3, 4}, 4).w).size() == 768);
}

TEST_CASE("property: reduced word counts invariant under the Dynkin flip") {
  int n = 4;
  for (Word w : {Word{1, 2}, Word{1, 2, 1, 3}, Word{2, 3, 4, 3}, Word{1, 3, 2, 4, 3}}) {
    Word flipped;
    for (int i : w) flipped.push_back(n + 1 - i);
    CHECK(reduced_words(eval(w, n)).size() == reduced_words(eval(flipped, n)).size());
  }
}

TEST_CASE("omega") {
  CHECK(omega({1, 2, 3}) == Word{3, 2, 1});
  CHECK(omega({}).empty());
  CHECK(omega({1, 2, 1}) == Word{1, 2, 1});
}

TEST_CASE("hilbert") {
  CHECK(hilbert({1}) == LaurentPoly::quantum2());
  CHECK(hilbert({}) == LaurentPoly(1));
  // oracle: direct sum over the elements of W_J
  for (IndexSet J : {IndexSet{1, 2}, IndexSet{1, 3}, IndexSet{1, 2, 3}, IndexSet{1, 2, 4}}) {
    int n = 4;
    LaurentPoly direct;
    for (auto& p : parabolic_elements(J, n)) direct += LaurentPoly::monomial(2 * length(p));
    direct = direct.shift(-longest(J, n).d);
    CHECK(hilbert(J) == direct);
    CHECK(hilbert(J).is_palindromic());
    CHECK(hilbert(J).at_one() == static_cast<std::int64_t>(parabolic_elements(J, n).size()));
  }
  LaurentPoly q3 = LaurentPoly::monomial(2) + LaurentPoly(1) + LaurentPoly::monomial(-2);
  CHECK(hilbert({1, 2}) == LaurentPoly::quantum2() * q3);
}

TEST_CASE("laurent division") {
  LaurentPoly a = LaurentPoly::quantum2() * LaurentPoly::quantum2();
  CHECK(a.divide_exact(LaurentPoly::quantum2()) == LaurentPoly::quantum2());
  CHECK_THROWS_AS(LaurentPoly(1).divide_exact(LaurentPoly::quantum2()), std::domain_error);
}

TEST_CASE("index set parsing") {
  CHECK(parse_index_set("3,1,2") == IndexSet{1, 2, 3});
  CHECK(parse_word("121") == Word{1, 2, 1});
  CHECK(parse_word("1,2,8").size() == 3);
  CHECK(components({1, 2, 4}) == std::vector<IndexSet>{{1, 2}, {4}});
}
