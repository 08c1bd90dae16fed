#include "soergel/bsmod.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "soergel/coxeter.hpp"
#include "soergel/linalg.hpp"

namespace soergel {

namespace {

std::string cache_key(const Word& w, Label e, MonoKey m) {
  std::string k(w.begin(), w.end());
  k.push_back('|');
  k.append(reinterpret_cast<const char*>(&e), sizeof e);
  k.append(reinterpret_cast<const char*>(&m), sizeof m);
  return k;
}

void check_label_count(const Word& w) {
  if (w.size() > 20) throw std::length_error("Bott-Samelson word too long for dense labels");
}

}  // namespace

bool BSElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

BSElement zero_element(const Word& word) {
  check_label_count(word);
  return {word, std::vector<MultiPoly>(std::size_t{1} << word.size())};
}

BSElement one_tensor(const Word& word) {
  BSElement e = zero_element(word);
  e.coords[0] = 1;
  return e;
}

const std::vector<MultiPoly>& transport_mono(const Word& word, Label e, MonoKey m) {
  thread_local std::unordered_map<std::string, std::vector<MultiPoly>> cache;
  std::string key = cache_key(word, e, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::size_t d = word.size();
  std::vector<MultiPoly> out(std::size_t{1} << d);
  if (d == 0) {
    out[0] = MultiPoly::monomial(m);
  } else {
    int i = word[d - 1];
    Label bit = Label{1} << (d - 1);
    MultiPoly g = MultiPoly::monomial(m);
    if (e & bit) g = g * MultiPoly::var(i);
    auto [g0, g1] = invariant_split(i, g);
    Word prefix(word.begin(), word.end() - 1);
    Label ep = e & ~bit;
    for (int part = 0; part < 2; ++part) {
      const MultiPoly& h = part ? g1 : g0;
      for (auto& [mm, c] : h.terms()) {
        const auto& sub = transport_mono(prefix, ep, mm);
        for (Label l = 0; l < sub.size(); ++l)
          if (!sub[l].is_zero()) out[l | (part ? bit : 0)] += sub[l] * c;
      }
    }
  }
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

std::vector<MultiPoly> transport(const Word& word, Label e, const MultiPoly& p) {
  std::vector<MultiPoly> out(std::size_t{1} << word.size());
  for (auto& [m, c] : p.terms()) {
    const auto& t = transport_mono(word, e, m);
    for (std::size_t l = 0; l < t.size(); ++l)
      if (!t[l].is_zero()) out[l] += t[l] * c;
  }
  return out;
}

BSElement normal_form(const Word& word, const std::vector<MultiPoly>& slots) {
  if (slots.size() != word.size() + 1) throw std::invalid_argument("normal_form: need word.size()+1 slots");
  // sweep from the right: fold the last slot into the previous one through the split
  BSElement acc = zero_element(word);
  // start with slot_0 (x) 1 (x) ... (x) 1 and multiply slot by slot from the left
  std::vector<MultiPoly> cur{slots[0]};
  for (std::size_t k = 1; k <= word.size(); ++k) {
    Word prefix(word.begin(), word.begin() + k);
    std::vector<MultiPoly> next(std::size_t{1} << k);
    // cur is in normal form for word[0..k-1); append a unit slot then right multiply by slots[k]
    for (Label l = 0; l < cur.size(); ++l) {
      if (cur[l].is_zero()) continue;
      auto t = transport(prefix, l, slots[k]);
      for (Label u = 0; u < t.size(); ++u)
        if (!t[u].is_zero()) next[u] += cur[l] * t[u];
    }
    cur = std::move(next);
  }
  acc.coords = std::move(cur);
  return acc;
}

BSElement right_multiply(const BSElement& e, const MultiPoly& f) {
  BSElement r = zero_element(e.word);
  for (Label l = 0; l < e.coords.size(); ++l) {
    if (e.coords[l].is_zero()) continue;
    auto t = transport(e.word, l, f);
    for (Label u = 0; u < t.size(); ++u)
      if (!t[u].is_zero()) r.coords[u] += e.coords[l] * t[u];
  }
  return r;
}

BSElement left_multiply(const MultiPoly& f, const BSElement& e) {
  BSElement r = e;
  for (auto& c : r.coords) c = f * c;
  return r;
}

BSElement multiply_in_region(const BSElement& e, int k, const MultiPoly& f) {
  if (k < 0 || k > static_cast<int>(e.word.size())) throw std::out_of_range("multiply_in_region: bad region");
  Word head(e.word.begin(), e.word.begin() + k);
  Label mask = (Label{1} << k) - 1;
  BSElement r = zero_element(e.word);
  for (Label l = 0; l < e.coords.size(); ++l) {
    if (e.coords[l].is_zero()) continue;
    auto t = transport(head, l & mask, f);
    for (Label u = 0; u < t.size(); ++u)
      if (!t[u].is_zero()) r.coords[u | (l & ~mask)] += e.coords[l] * t[u];
  }
  return r;
}

BSMorphism::BSMorphism(Word source, Word target, int degree) : src_(std::move(source)), tgt_(std::move(target)), deg_(degree) {
  check_label_count(src_);
  check_label_count(tgt_);
  m_.assign(std::size_t{1} << tgt_.size(), std::vector<MultiPoly>(std::size_t{1} << src_.size()));
}

BSElement BSMorphism::image_of_label(Label s) const {
  BSElement r = zero_element(tgt_);
  for (Label t = 0; t < m_.size(); ++t) r.coords[t] = m_[t][s];
  return r;
}

BSElement BSMorphism::apply(const BSElement& x) const {
  if (x.word != src_) throw std::invalid_argument("BSMorphism::apply: word mismatch");
  BSElement r = zero_element(tgt_);
  for (Label s = 0; s < x.coords.size(); ++s) {
    if (x.coords[s].is_zero()) continue;
    for (Label t = 0; t < m_.size(); ++t)
      if (!m_[t][s].is_zero()) r.coords[t] += x.coords[s] * m_[t][s];
  }
  return r;
}

bool BSMorphism::is_zero() const {
  for (auto& row : m_)
    for (auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

bool BSMorphism::degree_consistent() const {
  int ds = static_cast<int>(src_.size()), dt = static_cast<int>(tgt_.size());
  for (Label t = 0; t < m_.size(); ++t)
    for (Label s = 0; s < m_[t].size(); ++s) {
      const MultiPoly& p = m_[t][s];
      if (p.is_zero()) continue;
      int want = deg_ + label_degree(s, ds) - label_degree(t, dt);
      if (!p.is_homogeneous() || p.degree() != want) return false;
    }
  return true;
}

BSMorphism& BSMorphism::operator+=(const BSMorphism& o) {
  if (o.src_ != src_ || o.tgt_ != tgt_) throw std::invalid_argument("BSMorphism +: boundary mismatch");
  if (is_zero()) deg_ = o.deg_;
  else if (!o.is_zero() && o.deg_ != deg_) throw std::invalid_argument("BSMorphism +: degree mismatch");
  for (std::size_t t = 0; t < m_.size(); ++t)
    for (std::size_t s = 0; s < m_[t].size(); ++s)
      if (!o.m_[t][s].is_zero()) m_[t][s] += o.m_[t][s];
  return *this;
}

BSMorphism& BSMorphism::operator-=(const BSMorphism& o) { return *this += Q(-1) * o; }

BSMorphism operator*(const Q& c, BSMorphism a) {
  for (auto& row : a.m_)
    for (auto& p : row) p *= c;
  return a;
}

BSMorphism operator*(const MultiPoly& p, const BSMorphism& a) {
  if (!p.is_homogeneous()) throw std::invalid_argument("polynomial box must be homogeneous");
  BSMorphism r = a;
  r.deg_ += p.is_zero() ? 0 : p.degree();
  for (auto& row : r.m_)
    for (auto& q : row)
      if (!q.is_zero()) q = p * q;
  return r;
}

bool BSMorphism::operator==(const BSMorphism& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_ || m_ != o.m_) return false;
  return is_zero() || deg_ == o.deg_;
}

std::string BSMorphism::to_json() const {
  nlohmann::json j;
  j["source"] = src_;
  j["target"] = tgt_;
  j["degree"] = deg_;
  j["matrix"] = nlohmann::json::array();
  for (auto& row : m_) {
    nlohmann::json r = nlohmann::json::array();
    for (auto& p : row) r.push_back(p.str());
    j["matrix"].push_back(r);
  }
  return j.dump();
}

BSMorphism identity(const Word& w) {
  BSMorphism m(w, w, 0);
  for (int k = 0; k < m.rows(); ++k) m.at(k, k) = 1;
  return m;
}

BSMorphism scalar_map(const MultiPoly& p) {
  if (!p.is_homogeneous()) throw std::invalid_argument("scalar_map: polynomial must be homogeneous");
  BSMorphism m({}, {}, p.is_zero() ? 0 : p.degree());
  m.at(0, 0) = p;
  return m;
}

BSMorphism gen_counit(int i) {
  BSMorphism m({i}, {}, 1);
  m.at(0, 0) = 1;
  m.at(0, 1) = MultiPoly::var(i);
  return m;
}

BSMorphism gen_unit(int i) {
  BSMorphism m({}, {i}, 1);
  m.at(0, 0) = MultiPoly::var(i) * Q(1, 2);
  m.at(1, 0) = Q(1, 2);
  return m;
}

BSMorphism gen_split(int i) {
  BSMorphism m({i}, {i, i}, -1);
  m.at(0, 0) = 1;
  m.at(2, 1) = 1;
  return m;
}

BSMorphism gen_merge(int i) {
  BSMorphism m({i, i}, {i}, -1);
  m.at(0, 1) = 2;
  m.at(1, 3) = 2;
  return m;
}

BSMorphism gen_crossing(int i, int j) {
  if (std::abs(i - j) < 2) throw std::invalid_argument("gen_crossing: colors must be distant");
  BSMorphism m({i, j}, {j, i}, 0);
  for (Label s = 0; s < 4; ++s) {
    MultiPoly g = 1;
    if (s & 1) g = g * MultiPoly::var(i);
    if (s & 2) g = g * MultiPoly::var(j);
    auto col = transport({j, i}, 0, g);
    for (Label t = 0; t < 4; ++t) m.at(t, s) = col[t];
  }
  return m;
}

BSMorphism gen_aborted(int i, int j) {
  return compose_v(gen_merge(i), embed({i}, gen_counit(j), {i}));
}

BSMorphism gen_aborted_dual(int i, int j) {
  return compose_v(embed({i}, gen_unit(j), {i}), gen_split(i));
}

BSMorphism gen_sixvalent(int i, int j) {
  if (std::abs(i - j) != 1) throw std::invalid_argument("gen_sixvalent: colors must be adjacent");
  thread_local std::map<std::pair<int, int>, BSMorphism> cache;
  if (auto it = cache.find({i, j}); it != cache.end()) return it->second;

  Word iji{i, j, i}, jij{j, i, j};
  BSMorphism pi = gen_aborted(i, j), io = gen_aborted_dual(i, j);
  BSMorphism loop = compose_v(pi, io);
  Q lambda = loop.at(0, 0).constant_term();
  if (sgn(lambda) == 0 || loop != lambda * identity({i})) throw std::logic_error("gen_sixvalent: aborted loop is not a scalar");
  BSMorphism e1 = identity(iji) - (1 / lambda) * compose_v(io, pi);

  DualBasisPair db = dual_bases(make_index_set({i, j}));
  std::size_t nr = db.basis.size();
  std::vector<std::vector<MultiPoly>> src_img(nr), tgt_img(nr);
  for (std::size_t r = 0; r < nr; ++r) {
    src_img[r] = transport(iji, 0, db.basis[r]);
    tgt_img[r] = transport(jij, 0, db.basis[r]);
  }
  std::vector<int> vars{std::min(i, j), std::max(i, j)};
  BSMorphism six(iji, jij, 0);
  for (Label b = 0; b < 8; ++b) {
    // e1(b) = sum_r c_r * (1-tensor * g_r), solve for the c_r
    std::vector<std::pair<std::size_t, MonoKey>> unknowns;
    for (std::size_t r = 0; r < nr; ++r) {
      int deg = __builtin_popcount(b) - db.length[r];
      for (MonoKey m : monomials_of_degree(vars, deg)) unknowns.emplace_back(r, m);
    }
    std::map<std::pair<Label, MonoKey>, SparseRow> rows;
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto [r, m] = unknowns[u];
      for (Label l = 0; l < 8; ++l)
        for (auto& [mm, c] : src_img[r][l].terms()) rows[{l, m + mm}].emplace_back(static_cast<int>(u), c);
    }
    std::map<std::pair<Label, MonoKey>, Q> rhs;
    for (Label l = 0; l < 8; ++l)
      for (auto& [mm, c] : e1.at(l, b).terms()) {
        rhs[{l, mm}] = c;
        rows[{l, mm}];
      }
    SparseSolver solver(static_cast<int>(unknowns.size()));
    for (auto& [key, row] : rows) {
      auto it = rhs.find(key);
      solver.add_row(row, it == rhs.end() ? Q(0) : it->second);
    }
    auto sol = solver.solve();
    if (!sol || solver.nullity() != 0) throw std::logic_error("gen_sixvalent: projection solve failed");
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      if (sgn((*sol)[u]) == 0) continue;
      auto [r, m] = unknowns[u];
      MultiPoly c = MultiPoly::monomial(m, (*sol)[u]);
      for (Label t = 0; t < 8; ++t)
        if (!tgt_img[r][t].is_zero()) six.at(t, b) += c * tgt_img[r][t];
    }
  }
  cache.emplace(std::make_pair(i, j), six);
  return six;
}

BSMorphism compose_v(const BSMorphism& g, const BSMorphism& f) {
  if (g.source() != f.target())
    throw std::invalid_argument("compose_v: " + word_str(f.target()) + " vs " + word_str(g.source()));
  BSMorphism r(f.source(), g.target(), f.degree() + g.degree());
  int rows = g.rows(), mid = f.rows(), cols = f.cols();
  std::vector<std::vector<int>> gcol(mid);
  for (int t = 0; t < rows; ++t)
    for (int u = 0; u < mid; ++u)
      if (!g.at(t, u).is_zero()) gcol[u].push_back(t);
  // collect every product term of an entry first, then sort once
  std::vector<std::vector<MultiPoly::Term>> acc(rows);
  for (int s = 0; s < cols; ++s) {
    for (int u = 0; u < mid; ++u) {
      const MultiPoly& fu = f.at(u, s);
      if (fu.is_zero()) continue;
      for (int t : gcol[u])
        for (auto& [gm, gc] : g.at(t, u).terms())
          for (auto& [fm, fc] : fu.terms()) acc[t].emplace_back(gm + fm, gc * fc);
    }
    for (int t = 0; t < rows; ++t) {
      if (acc[t].empty()) continue;
      r.at(t, s) = MultiPoly::from_terms(std::move(acc[t]));
      acc[t].clear();
    }
  }
  return r;
}

BSMorphism embed(const Word& left, const BSMorphism& f, const Word& right) {
  if (left.empty() && right.empty()) return f;
  Word src = left, tgt = left;
  src.insert(src.end(), f.source().begin(), f.source().end());
  src.insert(src.end(), right.begin(), right.end());
  tgt.insert(tgt.end(), f.target().begin(), f.target().end());
  tgt.insert(tgt.end(), right.begin(), right.end());
  BSMorphism r(src, tgt, f.degree());
  int la = static_cast<int>(left.size()), lx = static_cast<int>(f.source().size()), ly = static_cast<int>(f.target().size());
  Label na = Label{1} << la, nb = Label{1} << right.size();
  for (Label ea = 0; ea < na; ++ea)
    for (Label ex = 0; ex < static_cast<Label>(f.cols()); ++ex)
      for (Label t = 0; t < static_cast<Label>(f.rows()); ++t) {
        const MultiPoly& p = f.at(t, ex);
        if (p.is_zero()) continue;
        auto moved = transport(left, ea, p);
        for (Label ea2 = 0; ea2 < na; ++ea2) {
          if (moved[ea2].is_zero()) continue;
          for (Label eb = 0; eb < nb; ++eb)
            r.at(ea2 | t << la | eb << (la + ly), ea | ex << la | eb << (la + lx)) += moved[ea2];
        }
      }
  return r;
}

BSMorphism compose_h(const BSMorphism& f, const BSMorphism& g) {
  return compose_v(embed({}, f, g.target()), embed(f.source(), g, {}));
}

BSMorphism poly_in_region(const Word& word, int k, const MultiPoly& p) {
  if (k < 0 || k > static_cast<int>(word.size())) throw std::out_of_range("poly_in_region: bad region");
  Word left(word.begin(), word.begin() + k), right(word.begin() + k, word.end());
  return embed(left, p * identity(right), {});
}

BSMorphism right_mult_matrix(const Word& word, const MultiPoly& p) {
  return poly_in_region(word, static_cast<int>(word.size()), p);
}

int word_rank(const Word& x, const Word& y) {
  int n = 1;
  for (int i : x) n = std::max(n, i);
  for (int i : y) n = std::max(n, i);
  return n;
}

bool is_bimodule_map(const BSMorphism& m, int nvars) {
  for (int k = 1; k <= nvars; ++k) {
    MultiPoly f = MultiPoly::var(k);
    if (compose_v(m, right_mult_matrix(m.source(), f)) != compose_v(right_mult_matrix(m.target(), f), m)) return false;
  }
  return true;
}

namespace {

std::vector<int> var_list(int nvars) {
  std::vector<int> v;
  for (int k = 1; k <= nvars; ++k) v.push_back(k);
  return v;
}

struct HomSystem {
  std::vector<std::tuple<Label, Label, MonoKey>> unknowns;  // (t, s, monomial)
  SparseSolver solver{0};
};

HomSystem hom_system(const Word& x, const Word& y, int m, int nvars) {
  int dx = static_cast<int>(x.size()), dy = static_cast<int>(y.size());
  Label nx = Label{1} << dx, ny = Label{1} << dy;
  HomSystem h;
  std::vector<int> vars = var_list(nvars);
  std::map<std::pair<Label, Label>, std::vector<int>> entry_unknowns;
  for (Label t = 0; t < ny; ++t)
    for (Label s = 0; s < nx; ++s) {
      int deg = m + label_degree(s, dx) - label_degree(t, dy);
      if (deg < 0 || deg % 2) continue;
      for (MonoKey mk : monomials_of_degree(vars, deg / 2)) {
        entry_unknowns[{t, s}].push_back(static_cast<int>(h.unknowns.size()));
        h.unknowns.emplace_back(t, s, mk);
      }
    }
  h.solver = SparseSolver(static_cast<int>(h.unknowns.size()));
  std::vector<SparseRow> all;
  for (int k = 1; k <= nvars; ++k) {
    BSMorphism rx = right_mult_matrix(x, MultiPoly::var(k)), ry = right_mult_matrix(y, MultiPoly::var(k));
    // M rx - ry M = 0, entry (t, s)
    std::map<std::tuple<Label, Label, MonoKey>, SparseRow> rows;
    for (auto& [ts, ids] : entry_unknowns) {
      auto [t, u] = ts;
      for (Label s = 0; s < nx; ++s) {
        const MultiPoly& r = rx.at(u, s);
        for (auto& [rm, rc] : r.terms())
          for (int id : ids) rows[{t, s, std::get<2>(h.unknowns[id]) + rm}].emplace_back(id, rc);
      }
      auto [u2, s2] = ts;
      for (Label t2 = 0; t2 < ny; ++t2) {
        const MultiPoly& r = ry.at(t2, u2);
        for (auto& [rm, rc] : r.terms())
          for (int id : ids) rows[{t2, s2, std::get<2>(h.unknowns[id]) + rm}].emplace_back(id, -rc);
      }
    }
    for (auto& [key, row] : rows) all.push_back(normalize_row(std::move(row)));
  }
  // sparse rows first keeps fill-in (and coefficient growth) down
  std::stable_sort(all.begin(), all.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  for (auto& row : all) h.solver.add_row(std::move(row));
  return h;
}

BSMorphism from_vector(const Word& x, const Word& y, int m, const HomSystem& h, const std::vector<Q>& v) {
  BSMorphism g(x, y, m);
  for (std::size_t u = 0; u < v.size(); ++u) {
    if (sgn(v[u]) == 0) continue;
    auto [t, s, mk] = h.unknowns[u];
    g.at(t, s) += MultiPoly::monomial(mk, v[u]);
  }
  return g;
}

}  // namespace

long hom_dim_at_degree(const Word& x, const Word& y, int m, int nvars) {
  HomSystem h = hom_system(x, y, m, nvars);
  return h.solver.nullity();
}

long hom_dim_between_summands(const BSMorphism& p, const BSMorphism& q, int m, int nvars) {
  const Word& x = p.source();
  const Word& y = q.source();
  HomSystem h = hom_system(x, y, m, nvars);
  auto basis = h.solver.nullspace();
  // rank of g -> q g p over the Hom basis
  std::map<std::tuple<Label, Label, MonoKey>, int> coord;
  std::vector<SparseRow> rows;
  for (auto& v : basis) {
    BSMorphism g = compose_v(q, compose_v(from_vector(x, y, m, h, v), p));
    SparseRow row;
    for (Label t = 0; t < static_cast<Label>(g.rows()); ++t)
      for (Label s = 0; s < static_cast<Label>(g.cols()); ++s)
        for (auto& [mk, c] : g.at(t, s).terms()) {
          auto [it, fresh] = coord.emplace(std::make_tuple(t, s, mk), static_cast<int>(coord.size()));
          row.emplace_back(it->second, c);
        }
    rows.push_back(std::move(row));
  }
  SparseSolver rank_solver(static_cast<int>(coord.size()));
  for (auto& r : rows) rank_solver.add_row(r);
  return rank_solver.rank();
}

NumericRank numeric_rank(const BSMorphism& m, int trials, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-97, 97);
  int nv = 1;
  for (auto& row : m.matrix())
    for (auto& p : row) nv = std::max(nv, p.max_var());
  NumericRank out{0, 0, trials};
  for (int t = 0; t < trials; ++t) {
    std::vector<Q> pt;
    for (int k = 0; k < nv; ++k) {
      int v = d(rng);
      pt.push_back(Q(v == 0 ? 101 : v));
    }
    std::vector<std::vector<Q>> dense(m.rows(), std::vector<Q>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero()) dense[r][c] = m.at(r, c).eval(pt);
    int rk = dense_rank(std::move(dense));
    if (rk > out.rank) {
      out.rank = rk;
      out.agreeing = 1;
    } else if (rk == out.rank) {
      ++out.agreeing;
    }
  }
  return out;
}

}  // namespace soergel
