#pragma once

#include <string>
#include <vector>

#include "soergel/laurent.hpp"
#include "soergel/poly.hpp"

namespace soergel {

// one-line notation, values 1..n+1
struct Perm {
  std::vector<int> img;
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
  int size() const { return static_cast<int>(img.size()); }
};

Perm identity_perm(int n);  // element of S_{n+1}
Perm eval(const Word& w, int n);
int length(const Perm& p);
bool is_reduced(const Word& w);
Perm times_s(const Perm& p, int i);  // p * s_i
Perm s_times(int i, const Perm& p);  // s_i * p
Perm inverse(const Perm& p);
Word reduced_word(const Perm& p);  // lexicographically least
std::vector<Word> reduced_words(const Perm& p);  // lexicographic order

struct Longest {
  Perm w;
  int d;
};
Longest longest(const IndexSet& J, int n);
Word longest_word(const IndexSet& J);  // lexicographically least reduced word of w_J
std::vector<Perm> parabolic_elements(const IndexSet& J, int n);

Word omega(const Word& w);
LaurentPoly hilbert(const IndexSet& J);

IndexSet make_index_set(std::vector<int> v);
bool is_connected(const IndexSet& J);
std::vector<IndexSet> components(const IndexSet& J);
IndexSet parse_index_set(const std::string& s);  // "1,2,3"
Word parse_word(const std::string& s);  // "121" or "1,2,1"
std::string word_str(const Word& w);  // digits concatenated when all < 10

}  // namespace soergel
