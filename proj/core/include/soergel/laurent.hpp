#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace soergel {

// Laurent polynomial in v with integer coefficients; overflow is an error
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t c);
  static LaurentPoly monomial(int e, std::int64_t c = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly quantum2() { return monomial(1) + monomial(-1); }

  const std::map<int, std::int64_t>& coeffs() const { return c_; }
  std::int64_t coeff(int e) const;
  bool is_zero() const { return c_.empty(); }
  int min_exp() const;
  int max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  LaurentPoly shift(int k) const;  // times v^k
  LaurentPoly bar() const;  // v -> v^-1
  std::int64_t at_one() const;
  bool is_palindromic() const { return *this == bar(); }
  // exact quotient; throws std::domain_error when d does not divide *this
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  std::string str() const;

 private:
  std::map<int, std::int64_t> c_;
};

}  // namespace soergel
