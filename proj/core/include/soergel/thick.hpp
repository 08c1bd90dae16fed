#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "soergel/bsmod.hpp"
#include "soergel/exprgraph.hpp"
#include "soergel/hecke.hpp"
#include "soergel/relations.hpp"

namespace soergel {

// a diagram as a stack of generators, bottom to top
enum class Gen { Merge, Split, Unit, Counit, Crossing, Six, Aborted, AbortedDual };

struct Layer {
  Gen g;
  int pos;  // leftmost input strand (for Unit: where the new strand appears)
  int c1;
  int c2 = 0;
};

struct Diagram {
  Word bottom;
  std::vector<Layer> layers;

  Word top() const;
  std::vector<Word> levels() const;  // word below each layer, then the top
  BSMorphism realize() const;
  BSElement apply(const BSElement& x) const;  // without building matrices
  Diagram flipped() const;  // upside down
  Diagram mirrored() const;  // left to right
  Diagram recolored(const std::function<int(int)>& c) const;
  Diagram then(const Diagram& above) const;
  Diagram embedded(const Word& left, const Word& right) const;
};

Word apply_layer(const Word& w, const Layer& l);
Diagram path_diagram(const Path& p);

enum class Side { Right, Left };
enum class Anchor { S, T };

// anchor word for J: s^R, s^L, t^R, t^L
Word anchor_word(const IndexSet& J, Anchor a, Side side);

BSMorphism z_morphism(const IndexSet& J);  // s_J -> t_J along V_J
BSMorphism zbar_morphism(const IndexSet& J);

// x down to t, up to s, down to y
Path transition_path(const IndexSet& J, const Word& x, const Word& y);
// x up to s, down to t, up to y
Path psi_path(const IndexSet& J, const Word& x, const Word& y);
BSMorphism transition(const IndexSet& J, const Word& x, const Word& y);
BSMorphism psi(const IndexSet& J, const Word& x, const Word& y);

struct ThickTrivalent {
  IndexSet J;
  int i;
  Side side;
  Anchor anchor;
  Diagram diagram;  // (anchor word) i -> anchor word, or i (anchor word) -> anchor word
  BSMorphism morphism;
};
// connected J, or disconnected with identity on the other components
ThickTrivalent a_thick(const IndexSet& J, int i, Side side, Anchor anchor);

// aborted terms of a_i with a unit dot on its extra strand, one per six-valent vertex the dot meets;
// a_i o (id (x) unit) = (pass-through) + sum of these
struct AbortedTerm {
  int step;  // index of the six-valent layer in the diagram
  BSMorphism morphism;  // anchor word -> anchor word
};
struct DotResolution {
  BSMorphism pass_through;
  std::vector<AbortedTerm> aborted;
};
DotResolution resolve_unit_dot(const ThickTrivalent& a);

// V_J with the adjacent move at step k (counting adjacent moves from 0) replaced by the aborted vertex
BSMorphism abort_morphism(const IndexSet& J, int k);
int abort_points(const IndexSet& J);

// dots on every strand of x, after including C into B_x; B_s -> R
BSMorphism xi(const IndexSet& J, const Word& via);

struct Check {
  std::string check;
  std::string params;
  bool pass;
  std::string witness;
};

std::vector<Check> verify_a_properties(const IndexSet& J);
std::vector<Check> verify_projectors(const IndexSet& J, int samples = 6, unsigned seed = 1);
std::vector<Check> verify_whatkills(const IndexSet& J);

int summand_rank(const IndexSet& J, const Word& x);
// c(v) with [C] = c(v) b_J, read off from Hom(R, C) dimensions in the degree window
LaurentPoly graded_class(const IndexSet& J, int extra = 4);
// dims of Hom(R, C) and Hom(C, R) in degrees [-d_J, d_J + extra]
std::vector<long> hom_from_R_dims(const IndexSet& J, int extra = 4);
std::vector<long> hom_to_R_dims(const IndexSet& J, int extra = 4);

struct CBiSplit {
  BSMorphism plus, minus;  // orthogonal idempotents on the realized C (x) B_i, inside B_{s i}
  BSMorphism unit;  // the idempotent on C (x) B_i they sum to
  Q alpha, beta;
  // degrees of the maps C (x) B_i -> C through which plus and minus factor
  int plus_degree = 0, minus_degree = 0;
};
CBiSplit split_CBi(const IndexSet& J, int i);

std::vector<Check> very_thick_action_check(const IndexSet& J);

std::string checks_to_json(const std::vector<Check>& cs);

}  // namespace soergel
