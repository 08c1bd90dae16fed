#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace soergel {

using Q = mpq_class;
using Word = std::vector<int>;
using IndexSet = std::vector<int>;  // sorted, distinct

constexpr int kMaxVars = 8;

// exponent vector, 8 bits per variable; variable k (1-based) lives at bits 8(k-1)
using MonoKey = std::uint64_t;

inline int mono_exp(MonoKey m, int k) { return static_cast<int>((m >> (8 * (k - 1))) & 0xffu); }
inline MonoKey mono_var(int k, int e = 1) { return static_cast<MonoKey>(e) << (8 * (k - 1)); }
int mono_total(MonoKey m);
// graded lex: total degree first, then exponent of f1, f2, ...
bool grlex_less(MonoKey a, MonoKey b);
// all monomials of total degree d in the given variables
std::vector<MonoKey> monomials_of_degree(const std::vector<int>& vars, int d);

class MultiPoly {
 public:
  using Term = std::pair<MonoKey, Q>;

  MultiPoly() = default;
  MultiPoly(int c);
  MultiPoly(const Q& c);
  static MultiPoly var(int k);
  static MultiPoly monomial(MonoKey m, const Q& c = 1);
  static MultiPoly from_terms(std::vector<Term> terms);  // any order, duplicates allowed

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Q constant_term() const;
  Q coeff(MonoKey m) const;
  // graded degree (2 * total exponent) of the top term; -1 for zero
  int degree() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_part(int graded_deg) const;
  int max_var() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Q& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Q& c) { return a *= c; }
  friend MultiPoly operator*(const Q& c, MultiPoly a) { return a *= c; }
  bool operator==(const MultiPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MultiPoly& o) const { return !(t_ == o.t_); }

  // this += a*b without temporaries for the common case
  void add_product(const MultiPoly& a, const MultiPoly& b);

  std::string str() const;
  static MultiPoly parse(const std::string& s);
  Q eval(const std::vector<Q>& point) const;  // point[k-1] is the value of f_k

 private:
  std::vector<Term> t_;  // sorted by key, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// s_i acting on R: f_i -> -f_i, f_{i+-1} -> f_{i+-1} + f_i
MultiPoly reflect(int i, const MultiPoly& p);
MultiPoly demazure(int i, const MultiPoly& p);
// d_{i_1} o ... o d_{i_k}; word must be reduced
MultiPoly demazure_word(const Word& word, const MultiPoly& p);
std::pair<MultiPoly, MultiPoly> invariant_split(int i, const MultiPoly& p);
bool is_invariant(const IndexSet& J, const MultiPoly& p);
// variables renamed by f_k -> f_{sigma(k)}
MultiPoly rename_vars(const MultiPoly& p, const std::map<int, int>& sigma);

struct DualBasisPair {
  IndexSet J;
  std::vector<Word> index;  // reduced word of each r in W_J, same order as basis
  std::vector<int> length;
  std::vector<MultiPoly> basis;
  std::vector<MultiPoly> dual;
};

DualBasisPair dual_bases(const IndexSet& J);

// sum_r g_r (x) g*_r as a list of pairs
std::vector<std::pair<MultiPoly, MultiPoly>> beta(const IndexSet& J);

}  // namespace soergel
