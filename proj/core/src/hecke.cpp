#include "soergel/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace soergel {

namespace {

Perm pad(const Perm& p, int n) {
  Perm q = p;
  while (q.size() < n + 1) q.img.push_back(q.size() + 1);
  return q;
}

}  // namespace

HeckeElt::HeckeElt(int n, const LaurentPoly& scalar) : n_(n) {
  if (!scalar.is_zero()) c_[identity_perm(n)] = scalar;
}

HeckeElt HeckeElt::standard(const Perm& w, const LaurentPoly& c) {
  HeckeElt x(w.size() - 1);
  x.add(w, c);
  return x;
}

LaurentPoly HeckeElt::coeff(const Perm& w) const {
  auto it = c_.find(pad(w, n_));
  return it == c_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(const Perm& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (w.size() != n_ + 1) throw std::invalid_argument("HeckeElt::add: permutation size mismatch");
  auto it = c_.find(w);
  if (it == c_.end()) {
    c_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

HeckeElt HeckeElt::padded(int n) const {
  if (n < n_) throw std::invalid_argument("HeckeElt::padded: cannot shrink");
  HeckeElt x(n);
  for (auto& [w, c] : c_) x.c_.emplace(pad(w, n), c);
  return x;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  int n = std::max(n_, o.n_);
  if (n != n_) *this = padded(n);
  for (auto& [w, c] : o.c_) add(pad(w, n), c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  int n = std::max(n_, o.n_);
  if (n != n_) *this = padded(n);
  for (auto& [w, c] : o.c_) add(pad(w, n), -c);
  return *this;
}

bool HeckeElt::operator==(const HeckeElt& o) const {
  int n = std::max(n_, o.n_);
  return padded(n).c_ == o.padded(n).c_;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a) {
  HeckeElt r(a.n_);
  if (c.is_zero()) return r;
  for (auto& [w, x] : a.c_) r.add(w, c * x);
  return r;
}

HeckeElt left_mult_s(int i, const HeckeElt& x) {
  HeckeElt r(x.n());
  if (i < 1 || i > x.n()) throw std::out_of_range("left_mult_s: index out of range");
  LaurentPoly corr = LaurentPoly::monomial(-1) - LaurentPoly::monomial(1);
  for (auto& [w, c] : x.coords()) {
    Perm sw = s_times(i, w);
    r.add(sw, c);
    if (length(sw) < length(w)) r.add(w, corr * c);
  }
  return r;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  int n = std::max(a.n_, b.n_);
  HeckeElt x = a.padded(n), y = b.padded(n);
  HeckeElt r(n);
  for (auto& [u, cu] : x.c_) {
    Word w = reduced_word(u);
    HeckeElt t = y;
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = left_mult_s(*it, t);
    r += cu * t;
  }
  return r;
}

HeckeElt mult(const HeckeElt& x, const HeckeElt& y) { return x * y; }

HeckeElt b_gen(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("b_gen: index out of range");
  HeckeElt x(n, LaurentPoly::v());
  x.add(times_s(identity_perm(n), i), 1);
  return x;
}

HeckeElt b_word(const Word& w, int n) {
  HeckeElt x(n, 1);
  for (int i : w) x = x * b_gen(i, n);
  return x;
}

HeckeElt b_parabolic(const IndexSet& J, int n) {
  int d = longest(J, n).d;
  HeckeElt x(n);
  for (const Perm& w : parabolic_elements(J, n)) x.add(w, LaurentPoly::monomial(d - length(w)));
  return x;
}

LaurentPoly epsilon(const HeckeElt& x) { return x.coeff(identity_perm(x.n())); }

HeckeElt omega_inv(const HeckeElt& x) {
  // omega(H_s) = H_s + v - v^-1 and omega reverses products
  int n = x.n();
  HeckeElt r(n);
  LaurentPoly shift = LaurentPoly::v() - LaurentPoly::monomial(-1);
  for (auto& [w, c] : x.coords()) {
    Word word = reduced_word(w);
    HeckeElt t(n, c.bar());
    for (int i : word) {
      // right factor order reversed: multiply on the left by omega(H_{s_i})
      t = left_mult_s(i, t) + shift * t;
    }
    r += t;
  }
  return r;
}

LaurentPoly pairing(const HeckeElt& x, const HeckeElt& y) { return epsilon(y * omega_inv(x)); }

int rank_needed(const IndexSet& J, const Word& a, const Word& b) {
  int n = 1;
  for (int i : J) n = std::max(n, i);
  for (int i : a) n = std::max(n, i);
  for (int i : b) n = std::max(n, i);
  return n;
}

LaurentPoly hom_rank_bs(const Word& x, const Word& y) {
  int n = rank_needed({}, x, y);
  return pairing(b_word(x, n), b_word(y, n));
}

LaurentPoly tj_rank(const IndexSet& J, const Word& i, const Word& j) {
  int n = rank_needed(J, i, j);
  int d = longest(J, n).d;
  return epsilon(b_parabolic(J, n) * b_word(i, n) * b_word(omega(j), n)).shift(-d);
}

HeckeElt algebroid_compose(const IndexSet& J, const HeckeElt& x, const HeckeElt& y) {
  HeckeElt p = x * y;
  LaurentPoly h = hilbert(J);
  HeckeElt r(p.n());
  for (auto& [w, c] : p.coords()) r.add(w, c.divide_exact(h));
  return r;
}

std::string HeckeElt::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*H[" << word_str(reduced_word(w)) << "]";
  }
  return os.str();
}

}  // namespace soergel
