#pragma once

#include <map>
#include <string>

#include "soergel/coxeter.hpp"
#include "soergel/laurent.hpp"

namespace soergel {

// element of the Hecke algebra of S_{n+1}, standard-basis coordinates
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(int n) : n_(n) {}
  HeckeElt(int n, const LaurentPoly& scalar);
  static HeckeElt standard(const Perm& w, const LaurentPoly& c = 1);

  int n() const { return n_; }
  const std::map<Perm, LaurentPoly>& coords() const { return c_; }
  LaurentPoly coeff(const Perm& w) const;
  bool is_zero() const { return c_.empty(); }
  void add(const Perm& w, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a);
  bool operator==(const HeckeElt& o) const;
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

  HeckeElt padded(int n) const;
  std::string str() const;

 private:
  int n_ = 1;
  std::map<Perm, LaurentPoly> c_;
};

// H_s H_w = H_sw when the length goes up, H_sw + (v^-1 - v) H_w otherwise
HeckeElt left_mult_s(int i, const HeckeElt& x);
HeckeElt mult(const HeckeElt& x, const HeckeElt& y);
HeckeElt b_gen(int i, int n);
HeckeElt b_word(const Word& w, int n);
HeckeElt b_parabolic(const IndexSet& J, int n);
LaurentPoly epsilon(const HeckeElt& x);
HeckeElt omega_inv(const HeckeElt& x);
LaurentPoly pairing(const HeckeElt& x, const HeckeElt& y);
LaurentPoly hom_rank_bs(const Word& x, const Word& y);
LaurentPoly tj_rank(const IndexSet& J, const Word& i, const Word& j);
// renormalized product xy/[J]; throws std::domain_error if not divisible
HeckeElt algebroid_compose(const IndexSet& J, const HeckeElt& x, const HeckeElt& y);

// smallest n such that J and the words live in S_{n+1}
int rank_needed(const IndexSet& J, const Word& a = {}, const Word& b = {});

}  // namespace soergel
