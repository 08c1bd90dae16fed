#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "soergel/poly.hpp"

namespace soergel {

// bit k set: slot k+1 of 1 (x) e_1 (x) ... (x) e_d holds f_{i_{k+1}} instead of 1
using Label = std::uint32_t;

inline int label_degree(Label e, int d) { return 2 * __builtin_popcount(e) - d; }

// element of B_word in left normal form, one left coefficient per label
struct BSElement {
  Word word;
  std::vector<MultiPoly> coords;
  bool operator==(const BSElement& o) const { return word == o.word && coords == o.coords; }
  bool is_zero() const;
};

BSElement zero_element(const Word& word);
BSElement one_tensor(const Word& word);
// slots has word.size()+1 entries: s_0 (x) s_1 (x) ... (x) s_d
BSElement normal_form(const Word& word, const std::vector<MultiPoly>& slots);
BSElement right_multiply(const BSElement& e, const MultiPoly& f);
BSElement left_multiply(const MultiPoly& f, const BSElement& e);
// f placed in region k, after the first k strands
BSElement multiply_in_region(const BSElement& e, int k, const MultiPoly& f);
// (basis element with label e) * P, as coordinates
const std::vector<MultiPoly>& transport_mono(const Word& word, Label e, MonoKey m);
std::vector<MultiPoly> transport(const Word& word, Label e, const MultiPoly& p);

class BSMorphism {
 public:
  BSMorphism() = default;
  BSMorphism(Word source, Word target, int degree);

  const Word& source() const { return src_; }
  const Word& target() const { return tgt_; }
  int degree() const { return deg_; }
  int rows() const { return static_cast<int>(m_.size()); }
  int cols() const { return rows() ? static_cast<int>(m_[0].size()) : 1 << src_.size(); }
  const MultiPoly& at(Label t, Label s) const { return m_[t][s]; }
  MultiPoly& at(Label t, Label s) { return m_[t][s]; }
  const std::vector<std::vector<MultiPoly>>& matrix() const { return m_; }

  BSElement apply(const BSElement& x) const;
  BSElement image_of_label(Label s) const;
  bool is_zero() const;
  // every entry homogeneous of the degree forced by the labels
  bool degree_consistent() const;

  BSMorphism& operator+=(const BSMorphism& o);
  BSMorphism& operator-=(const BSMorphism& o);
  friend BSMorphism operator+(BSMorphism a, const BSMorphism& b) { return a += b; }
  friend BSMorphism operator-(BSMorphism a, const BSMorphism& b) { return a -= b; }
  friend BSMorphism operator*(const Q& c, BSMorphism a);
  friend BSMorphism operator*(const MultiPoly& p, const BSMorphism& a);  // box in the leftmost region
  bool operator==(const BSMorphism& o) const;
  bool operator!=(const BSMorphism& o) const { return !(*this == o); }

  std::string to_json() const;

 private:
  Word src_, tgt_;
  int deg_ = 0;
  std::vector<std::vector<MultiPoly>> m_;  // m_[target label][source label]
};

BSMorphism identity(const Word& w);
BSMorphism scalar_map(const MultiPoly& p);  // R -> R
BSMorphism gen_counit(int i);  // B_i -> R
BSMorphism gen_unit(int i);  // R -> B_i
BSMorphism gen_split(int i);  // B_i -> B_iB_i
BSMorphism gen_merge(int i);  // B_iB_i -> B_i
BSMorphism gen_crossing(int i, int j);  // B_iB_j -> B_jB_i, distant
BSMorphism gen_sixvalent(int i, int j);  // B_iB_jB_i -> B_jB_iB_j, adjacent
BSMorphism gen_aborted(int i, int j);  // B_iB_jB_i -> B_i
BSMorphism gen_aborted_dual(int i, int j);  // B_i -> B_iB_jB_i

BSMorphism compose_v(const BSMorphism& g, const BSMorphism& f);  // g after f
BSMorphism compose_h(const BSMorphism& f, const BSMorphism& g);  // f beside g, f on the left
BSMorphism embed(const Word& left, const BSMorphism& f, const Word& right);
// multiplication by p in the region just left of strand k (k = word.size() is the rightmost region)
BSMorphism poly_in_region(const Word& word, int k, const MultiPoly& p);
BSMorphism right_mult_matrix(const Word& word, const MultiPoly& p);

bool is_bimodule_map(const BSMorphism& m, int nvars);
int word_rank(const Word& x, const Word& y = {});

// degree m homogeneous bimodule maps B_x -> B_y, dimension over Q; R has nvars variables
long hom_dim_at_degree(const Word& x, const Word& y, int m, int nvars);
// same, restricted to maps g with g = q o g o p for idempotents p on B_x and q on B_y
long hom_dim_between_summands(const BSMorphism& p, const BSMorphism& q, int m, int nvars);

// rank over the fraction field, by evaluation at random integer points
struct NumericRank {
  int rank;
  int agreeing;  // trials attaining the maximum
  int trials;
};
NumericRank numeric_rank(const BSMorphism& m, int trials = 4, unsigned seed = 0);

}  // namespace soergel
