#include "soergel/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace soergel {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
  return r;
}

void add_to(std::map<int, std::int64_t>& m, int e, std::int64_t c) {
  if (c == 0) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) m.erase(it);
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) c_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int e, std::int64_t c) {
  LaurentPoly p;
  if (c != 0) p.c_[e] = c;
  return p;
}

std::int64_t LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("LaurentPoly: zero has no exponents");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("LaurentPoly: zero has no exponents");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[e] = checked_mul(c, -1);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.c_) add_to(c_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [e, c] : o.c_) add_to(c_, e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto& [ea, ca] : a.c_)
    for (auto& [eb, cb] : b.c_) add_to(r.c_, ea + eb, checked_mul(ca, cb));
  return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

std::int64_t LaurentPoly::at_one() const {
  std::int64_t s = 0;
  for (auto& [e, c] : c_) s = checked_add(s, c);
  return s;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
  LaurentPoly rem = *this, q;
  int dtop = d.max_exp();
  std::int64_t lead = d.coeff(dtop);
  while (!rem.is_zero()) {
    if (rem.max_exp() - rem.min_exp() < d.max_exp() - d.min_exp())
      throw std::domain_error("LaurentPoly: not divisible");
    int top = rem.max_exp();
    std::int64_t c = rem.coeff(top);
    if (c % lead != 0) throw std::domain_error("LaurentPoly: not divisible");
    LaurentPoly t = monomial(top - dtop, c / lead);
    q += t;
    rem -= t * d;
  }
  return q;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (e == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace soergel
