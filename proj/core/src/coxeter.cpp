#include "soergel/coxeter.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace soergel {

Perm identity_perm(int n) {
  Perm p;
  for (int k = 1; k <= n + 1; ++k) p.img.push_back(k);
  return p;
}

Perm times_s(const Perm& p, int i) {
  if (i < 1 || i >= p.size()) throw std::out_of_range("times_s: index " + std::to_string(i));
  Perm r = p;
  std::swap(r.img[i - 1], r.img[i]);
  return r;
}

Perm s_times(int i, const Perm& p) {
  if (i < 1 || i >= p.size()) throw std::out_of_range("s_times: index " + std::to_string(i));
  Perm r = p;
  for (int& v : r.img) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return r;
}

Perm inverse(const Perm& p) {
  Perm r;
  r.img.assign(p.img.size(), 0);
  for (int k = 0; k < p.size(); ++k) r.img[p.img[k] - 1] = k + 1;
  return r;
}

Perm eval(const Word& w, int n) {
  Perm p = identity_perm(n);
  for (int i : w) p = times_s(p, i);
  return p;
}

int length(const Perm& p) {
  int inv = 0;
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (p.img[a] > p.img[b]) ++inv;
  return inv;
}

bool is_reduced(const Word& w) {
  if (w.empty()) return true;
  int n = *std::max_element(w.begin(), w.end());
  if (*std::min_element(w.begin(), w.end()) < 1) throw std::out_of_range("is_reduced: letters must be positive");
  return length(eval(w, n)) == static_cast<int>(w.size());
}

namespace {

void words_rec(const Perm& p, std::map<Perm, std::vector<Word>>& memo) {
  if (memo.count(p)) return;
  std::vector<Word> out;
  if (length(p) == 0) {
    out.push_back({});
  } else {
    for (int i = 1; i < p.size(); ++i) {
      if (p.img[i - 1] < p.img[i]) continue;  // not a right descent
      Perm q = times_s(p, i);
      words_rec(q, memo);
      for (const Word& w : memo[q]) {
        Word x = w;
        x.push_back(i);
        out.push_back(std::move(x));
      }
    }
  }
  std::sort(out.begin(), out.end());
  memo[p] = std::move(out);
}

}  // namespace

std::vector<Word> reduced_words(const Perm& p) {
  std::map<Perm, std::vector<Word>> memo;
  words_rec(p, memo);
  return memo[p];
}

Word reduced_word(const Perm& p) {
  // greedy: smallest left descent first gives the lexicographically least word
  Word w;
  Perm q = p;
  while (length(q) > 0) {
    for (int i = 1; i < q.size(); ++i) {
      Perm r = s_times(i, q);
      if (length(r) < length(q)) {
        w.push_back(i);
        q = r;
        break;
      }
    }
  }
  return w;
}

IndexSet make_index_set(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (int i : v)
    if (i < 1 || i > kMaxVars) throw std::out_of_range("index set entry out of range: " + std::to_string(i));
  return v;
}

bool is_connected(const IndexSet& J) {
  for (std::size_t k = 1; k < J.size(); ++k)
    if (J[k] != J[k - 1] + 1) return false;
  return true;
}

std::vector<IndexSet> components(const IndexSet& J) {
  std::vector<IndexSet> out;
  for (int i : J) {
    if (out.empty() || out.back().back() + 1 != i) out.push_back({});
    out.back().push_back(i);
  }
  return out;
}

Longest longest(const IndexSet& J, int n) {
  Perm p = identity_perm(n);
  for (auto& c : components(J)) {
    if (c.back() > n) throw std::out_of_range("longest: J not inside {1..n}");
    std::reverse(p.img.begin() + (c.front() - 1), p.img.begin() + c.back() + 1);
  }
  return {p, length(p)};
}

Word longest_word(const IndexSet& J) {
  int n = J.empty() ? 1 : J.back();
  return reduced_word(longest(J, n).w);
}

std::vector<Perm> parabolic_elements(const IndexSet& J, int n) {
  std::vector<Perm> out{identity_perm(n)};
  std::map<Perm, bool> seen{{out[0], true}};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i : J) {
      Perm q = times_s(out[k], i);
      if (!seen.count(q)) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Word omega(const Word& w) { return Word(w.rbegin(), w.rend()); }

LaurentPoly hilbert(const IndexSet& J) {
  LaurentPoly total = 1;
  int d = 0;
  for (auto& c : components(J)) {
    int k = static_cast<int>(c.size());
    d += k * (k + 1) / 2;
    for (int m = 1; m <= k + 1; ++m) {
      LaurentPoly f;
      for (int e = 0; e < m; ++e) f += LaurentPoly::monomial(2 * e);
      total = total * f;
    }
  }
  return total.shift(-d);
}

IndexSet parse_index_set(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int x = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad index set entry '" + tok + "'");
    v.push_back(x);
  }
  return make_index_set(v);
}

Word parse_word(const std::string& s) {
  Word w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      w.push_back(std::stoi(tok));
    }
  } else {
    for (char c : s) {
      if (c == ' ') continue;
      if (c < '1' || c > '9') throw std::invalid_argument(std::string("bad word letter '") + c + "'");
      w.push_back(c - '0');
    }
  }
  for (int i : w)
    if (i < 1 || i > kMaxVars) throw std::out_of_range("word letter out of range");
  return w;
}

std::string word_str(const Word& w) {
  bool small = std::all_of(w.begin(), w.end(), [](int i) { return i < 10; });
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!small && k) s += ",";
    s += std::to_string(w[k]);
  }
  return s;
}

}  // namespace soergel
