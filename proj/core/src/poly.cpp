#include "soergel/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "soergel/coxeter.hpp"
#include "soergel/linalg.hpp"

namespace soergel {

int mono_total(MonoKey m) {
  int s = 0;
  for (int k = 1; k <= kMaxVars; ++k) s += mono_exp(m, k);
  return s;
}

bool grlex_less(MonoKey a, MonoKey b) {
  int da = mono_total(a), db = mono_total(b);
  if (da != db) return da < db;
  for (int k = 1; k <= kMaxVars; ++k) {
    int ea = mono_exp(a, k), eb = mono_exp(b, k);
    if (ea != eb) return ea < eb;
  }
  return false;
}

std::vector<MonoKey> monomials_of_degree(const std::vector<int>& vars, int d) {
  std::vector<MonoKey> out;
  if (d < 0) return out;
  std::function<void(std::size_t, int, MonoKey)> rec = [&](std::size_t idx, int left, MonoKey acc) {
    if (idx + 1 == vars.size() || vars.empty()) {
      if (vars.empty()) {
        if (left == 0) out.push_back(acc);
        return;
      }
      out.push_back(acc + mono_var(vars[idx], left));
      return;
    }
    for (int e = left; e >= 0; --e) rec(idx + 1, left - e, acc + mono_var(vars[idx], e));
  };
  rec(0, d, 0);
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

namespace {

void check_index(int i) {
  if (i < 1 || i > kMaxVars) throw std::out_of_range("simple reflection index out of range: " + std::to_string(i));
}

}  // namespace

MultiPoly::MultiPoly(int c) {
  if (c != 0) t_.emplace_back(0, Q(c));
}

MultiPoly::MultiPoly(const Q& c) {
  if (sgn(c) != 0) t_.emplace_back(0, c);
}

MultiPoly MultiPoly::var(int k) {
  check_index(k);
  return monomial(mono_var(k));
}

MultiPoly MultiPoly::monomial(MonoKey m, const Q& c) {
  MultiPoly p;
  if (sgn(c) != 0) p.t_.emplace_back(m, c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().first == t.first) p.t_.back().second += t.second;
    else p.t_.push_back(std::move(t));
  }
  p.t_.erase(std::remove_if(p.t_.begin(), p.t_.end(), [](const Term& t) { return sgn(t.second) == 0; }), p.t_.end());
  return p;
}

bool MultiPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }

Q MultiPoly::constant_term() const { return coeff(0); }

Q MultiPoly::coeff(MonoKey m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, MonoKey k) { return t.first < k; });
  if (it != t_.end() && it->first == m) return it->second;
  return 0;
}

int MultiPoly::degree() const {
  int d = -1;
  for (auto& t : t_) d = std::max(d, 2 * mono_total(t.first));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = mono_total(t_[0].first);
  for (auto& t : t_)
    if (mono_total(t.first) != d) return false;
  return true;
}

MultiPoly MultiPoly::homogeneous_part(int graded_deg) const {
  MultiPoly p;
  for (auto& t : t_)
    if (2 * mono_total(t.first) == graded_deg) p.t_.push_back(t);
  return p;
}

int MultiPoly::max_var() const {
  int m = 0;
  for (auto& t : t_)
    for (int k = 1; k <= kMaxVars; ++k)
      if (mono_exp(t.first, k)) m = std::max(m, k);
  return m;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.t_) t.second = -t.second;
  return p;
}

namespace {

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a, const std::vector<MultiPoly::Term>& b,
                                         int sign) {
  std::vector<MultiPoly::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, sign > 0 ? b[j].second : Q(-b[j].second));
      ++j;
    } else {
      Q v = sign > 0 ? Q(a[i].second + b[j].second) : Q(a[i].second - b[j].second);
      if (sgn(v) != 0) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) {
    t_ = o.t_;
    return *this;
  }
  t_ = merge_terms(t_, o.t_, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge_terms(t_, o.t_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Q& c) {
  if (sgn(c) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.second *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.t_.size() == 1 && a.t_[0].first == 0) return b * a.t_[0].second;
  if (b.t_.size() == 1 && b.t_[0].first == 0) return a * b.t_[0].second;
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.t_.size() * b.t_.size());
  for (auto& x : a.t_)
    for (auto& y : b.t_) prod.emplace_back(x.first + y.first, x.second * y.second);
  return MultiPoly::from_terms(std::move(prod));
}

void MultiPoly::add_product(const MultiPoly& a, const MultiPoly& b) {
  if (a.t_.empty() || b.t_.empty()) return;
  *this += a * b;
}

Q MultiPoly::eval(const std::vector<Q>& point) const {
  Q s = 0;
  for (auto& [m, c] : t_) {
    Q v = c;
    for (int k = 1; k <= kMaxVars; ++k) {
      int e = mono_exp(m, k);
      if (!e) continue;
      if (k > static_cast<int>(point.size())) throw std::out_of_range("MultiPoly::eval: point too short");
      for (int r = 0; r < e; ++r) v *= point[k - 1];
    }
    s += v;
  }
  return s;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<Term> ts = t_;
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return grlex_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : ts) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Q a = abs(c);
    os << a.get_str();
    for (int k = 1; k <= kMaxVars; ++k) {
      int e = mono_exp(m, k);
      if (!e) continue;
      os << "*f" << k;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

MultiPoly MultiPoly::parse(const std::string& s) {
  std::vector<Term> terms;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  };
  auto read_int = [&]() -> std::string {
    std::size_t st = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (st == p) throw std::invalid_argument("polynomial parse error at " + std::to_string(st) + " in '" + s + "'");
    return s.substr(st, p - st);
  };
  skip();
  if (s.substr(p) == "0") return {};
  bool first = true;
  while (true) {
    skip();
    if (p >= s.size()) break;
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
      skip();
    } else if (!first) {
      throw std::invalid_argument("polynomial parse error: expected sign in '" + s + "'");
    }
    first = false;
    Q c = 1;
    MonoKey m = 0;
    bool need_factor = true;
    while (need_factor) {
      skip();
      if (p < s.size() && s[p] == 'f') {
        ++p;
        int k = std::stoi(read_int());
        check_index(k);
        int e = 1;
        if (p < s.size() && s[p] == '^') {
          ++p;
          e = std::stoi(read_int());
        }
        m += mono_var(k, e);
      } else {
        std::string num = read_int();
        if (p < s.size() && s[p] == '/') {
          ++p;
          num += "/" + read_int();
        }
        Q val(num);
        val.canonicalize();
        c *= val;
      }
      skip();
      if (p < s.size() && s[p] == '*') ++p;
      else need_factor = false;
    }
    terms.emplace_back(m, sign > 0 ? c : Q(-c));
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<int, MonoKey>& k) const {
    return std::hash<MonoKey>()(k.second * 31 + static_cast<MonoKey>(k.first));
  }
};

const MultiPoly& reflect_mono(int i, MonoKey m) {
  thread_local std::unordered_map<std::pair<int, MonoKey>, MultiPoly, PairHash> cache;
  auto key = std::make_pair(i, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  MultiPoly r = 1;
  MultiPoly fi = MultiPoly::var(i);
  for (int k = 1; k <= kMaxVars; ++k) {
    int e = mono_exp(m, k);
    if (!e) continue;
    MultiPoly base;
    if (k == i) base = -fi;
    else if (k == i - 1 || k == i + 1) base = MultiPoly::var(k) + fi;
    else base = MultiPoly::var(k);
    for (int r2 = 0; r2 < e; ++r2) r = r * base;
  }
  return cache.emplace(key, std::move(r)).first->second;
}

const MultiPoly& demazure_mono(int i, MonoKey m) {
  thread_local std::unordered_map<std::pair<int, MonoKey>, MultiPoly, PairHash> cache;
  auto key = std::make_pair(i, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  MultiPoly d = MultiPoly::monomial(m) - reflect_mono(i, m);
  std::vector<MultiPoly::Term> q;
  for (auto& [mk, c] : d.terms()) {
    if (mono_exp(mk, i) == 0) throw std::logic_error("demazure: division by f_i left a remainder");
    q.emplace_back(mk - mono_var(i), c);
  }
  return cache.emplace(key, MultiPoly::from_terms(std::move(q))).first->second;
}

}  // namespace

MultiPoly reflect(int i, const MultiPoly& p) {
  check_index(i);
  MultiPoly r;
  for (auto& [m, c] : p.terms()) r += reflect_mono(i, m) * c;
  return r;
}

MultiPoly demazure(int i, const MultiPoly& p) {
  check_index(i);
  MultiPoly r;
  for (auto& [m, c] : p.terms()) {
    const MultiPoly& d = demazure_mono(i, m);
    if (!d.is_zero()) r += d * c;
  }
  return r;
}

MultiPoly demazure_word(const Word& word, const MultiPoly& p) {
  if (!is_reduced(word)) throw std::invalid_argument("demazure_word: word " + word_str(word) + " is not reduced");
  MultiPoly r = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = demazure(*it, r);
  return r;
}

std::pair<MultiPoly, MultiPoly> invariant_split(int i, const MultiPoly& p) {
  check_index(i);
  MultiPoly s = reflect(i, p);
  MultiPoly p0 = (p + s) * Q(1, 2);
  MultiPoly p1 = demazure(i, p) * Q(1, 2);
  return {std::move(p0), std::move(p1)};
}

bool is_invariant(const IndexSet& J, const MultiPoly& p) {
  for (int i : J)
    if (reflect(i, p) != p) return false;
  return true;
}

MultiPoly rename_vars(const MultiPoly& p, const std::map<int, int>& sigma) {
  std::vector<MultiPoly::Term> out;
  for (auto& [m, c] : p.terms()) {
    MonoKey nm = 0;
    for (int k = 1; k <= kMaxVars; ++k) {
      int e = mono_exp(m, k);
      if (!e) continue;
      auto it = sigma.find(k);
      int to = it == sigma.end() ? k : it->second;
      check_index(to);
      nm += mono_var(to, e);
    }
    out.emplace_back(nm, c);
  }
  return MultiPoly::from_terms(std::move(out));
}

namespace {

// staircase monomials for one connected component {a..b}: exponent of f_{a+m-1} at most m (or reversed)
std::vector<MonoKey> staircase(const IndexSet& comp, bool reversed) {
  std::vector<MonoKey> out{0};
  int k = static_cast<int>(comp.size());
  for (int m = 1; m <= k; ++m) {
    int cap = reversed ? k + 1 - m : m;
    std::vector<MonoKey> next;
    for (MonoKey base : out)
      for (int e = 0; e <= cap; ++e) next.push_back(base + mono_var(comp[m - 1], e));
    out = std::move(next);
  }
  return out;
}

}  // namespace

DualBasisPair dual_bases(const IndexSet& J) {
  DualBasisPair out;
  out.J = J;
  int n = J.empty() ? 1 : J.back();
  Word wj = longest_word(J);
  auto elems = parabolic_elements(J, n);
  std::sort(elems.begin(), elems.end(), [](const Perm& a, const Perm& b) {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return reduced_word(a) < reduced_word(b);
  });
  auto comps = components(J);
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<MonoKey> cand{0};
    for (auto& c : comps) {
      auto st = staircase(c, attempt == 1);
      std::vector<MonoKey> next;
      for (MonoKey a : cand)
        for (MonoKey b : st) next.push_back(a + b);
      cand = std::move(next);
    }
    std::sort(cand.begin(), cand.end(), grlex_less);
    if (cand.size() != elems.size()) throw std::logic_error("dual_bases: staircase size mismatch");
    std::vector<MultiPoly> g;
    for (MonoKey m : cand) g.push_back(MultiPoly::monomial(m));
    int d = static_cast<int>(wj.size());
    std::vector<MultiPoly> dual;
    bool ok = true;
    for (std::size_t q = 0; q < elems.size() && ok; ++q) {
      int lq = length(elems[q]);
      if (2 * mono_total(cand[q]) != 2 * lq) throw std::logic_error("dual_bases: degree profile mismatch");
      auto monos = monomials_of_degree(J, d - lq);
      // equations: coefficient of every monomial of d_J(g_r * x) equals delta
      std::map<std::pair<std::size_t, MonoKey>, SparseRow> rows;
      for (std::size_t u = 0; u < monos.size(); ++u) {
        for (std::size_t r = 0; r < g.size(); ++r) {
          MultiPoly val = demazure_word(wj, g[r] * MultiPoly::monomial(monos[u]));
          for (auto& [mk, c] : val.terms()) rows[{r, mk}].emplace_back(static_cast<int>(u), c);
        }
      }
      SparseSolver solver(static_cast<int>(monos.size()));
      for (std::size_t r = 0; r < g.size(); ++r) {
        // make sure the constant equation exists even if all entries vanish
        rows[{r, 0}];
      }
      for (auto& [key, row] : rows) solver.add_row(row, (key.first == q && key.second == 0) ? Q(1) : Q(0));
      auto sol = solver.solve();
      if (!sol) {
        ok = false;
        break;
      }
      std::vector<MultiPoly::Term> terms;
      for (std::size_t u = 0; u < monos.size(); ++u)
        if (sgn((*sol)[u]) != 0) terms.emplace_back(monos[u], (*sol)[u]);
      dual.push_back(MultiPoly::from_terms(std::move(terms)));
    }
    if (!ok) continue;
    out.basis = std::move(g);
    out.dual = std::move(dual);
    for (auto& e : elems) {
      out.index.push_back(reduced_word(e));
      out.length.push_back(length(e));
    }
    return out;
  }
  throw std::logic_error("dual_bases: no staircase candidate is a basis");
}

std::vector<std::pair<MultiPoly, MultiPoly>> beta(const IndexSet& J) {
  auto db = dual_bases(J);
  std::vector<std::pair<MultiPoly, MultiPoly>> out;
  for (std::size_t r = 0; r < db.basis.size(); ++r) out.emplace_back(db.basis[r], db.dual[r]);
  return out;
}

}  // namespace soergel
