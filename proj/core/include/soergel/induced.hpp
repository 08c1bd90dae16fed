#pragma once

#include <string>
#include <vector>

#include "soergel/thick.hpp"

namespace soergel {

// objects of T_J: a word to the left of a J-labelled membrane
struct MembraneWord {
  IndexSet J;
  Word word;
};

// realized on B_word (x) B_s with s = s^R_J, the B_J idempotent applied on the right
struct MembraneMorphism {
  MembraneWord source, target;
  BSMorphism realization;
  bool right_invariant = false;  // commutes with R^J placed just left of the membrane
};

// one layer of a T_J diagram: an ordinary morphism inside the word, or strand i entering the membrane
struct MembraneStep {
  enum class Kind { Ordinary, Membrane } kind;
  Word left;
  BSMorphism f;
  Word right;
  int i = 0;
};
MembraneStep ordinary(const Word& left, const BSMorphism& f, const Word& right);
MembraneStep into_membrane(int i);

// the idempotent on B_s realizing B_J (identity for empty J)
BSMorphism membrane_idempotent(const IndexSet& J);
// left-facing thick trivalent at the membrane: B_i B_s -> B_s, realized
BSMorphism membrane_trivalent(const IndexSet& J, int i);

// steps are applied bottom to top starting from the source word
MembraneMorphism induce(const IndexSet& J, const Word& source, const std::vector<MembraneStep>& steps);

LaurentPoly tj_hom_rank(const IndexSet& J, const Word& i, const Word& j);

// dimension of the degree m part of a free graded module of graded rank p over R with n variables
long graded_dim(const LaurentPoly& p, int m, int nvars);

struct HomsReport {
  LaurentPoly bimodule_rank;  // (b_i b_J, b_j b_J)
  LaurentPoly tj_side;  // tj_rank * v^d_J [J]
  bool agree = false;
  bool bimodule_checked = false;
  bool bimodule_agree = true;
  std::vector<int> degrees;
  std::vector<long> dims, predicted;
};
// the bimodule cross-check runs only when d(i) + d(j) + d_J <= max_size
HomsReport verify_homsinTJ(const IndexSet& J, const Word& i, const Word& j, int deg_lo, int deg_hi,
                           int max_size = 5);

// functoriality, membrane relations, the action f (x) g -> f d_i(g), and the R^J action
std::vector<Check> verify_induced(const IndexSet& J);

std::string homs_report_json(const IndexSet& J, const Word& i, const Word& j, const HomsReport& r);

}  // namespace soergel
