#include "soergel/thick.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "soergel/coxeter.hpp"
#include "soergel/linalg.hpp"

namespace soergel {

namespace {

int in_len(const Layer& l) {
  switch (l.g) {
    case Gen::Merge: return 2;
    case Gen::Split: return 1;
    case Gen::Unit: return 0;
    case Gen::Counit: return 1;
    case Gen::Crossing: return 2;
    case Gen::Six: return 3;
    case Gen::Aborted: return 3;
    case Gen::AbortedDual: return 1;
  }
  return 0;
}

Word layer_out(const Layer& l) {
  switch (l.g) {
    case Gen::Merge: return {l.c1};
    case Gen::Split: return {l.c1, l.c1};
    case Gen::Unit: return {l.c1};
    case Gen::Counit: return {};
    case Gen::Crossing: return {l.c2, l.c1};
    case Gen::Six: return {l.c2, l.c1, l.c2};
    case Gen::Aborted: return {l.c1};
    case Gen::AbortedDual: return {l.c1, l.c2, l.c1};
  }
  return {};
}

Word layer_in(const Layer& l) {
  switch (l.g) {
    case Gen::Merge: return {l.c1, l.c1};
    case Gen::Split: return {l.c1};
    case Gen::Unit: return {};
    case Gen::Counit: return {l.c1};
    case Gen::Crossing: return {l.c1, l.c2};
    case Gen::Six: return {l.c1, l.c2, l.c1};
    case Gen::Aborted: return {l.c1, l.c2, l.c1};
    case Gen::AbortedDual: return {l.c1};
  }
  return {};
}

BSMorphism layer_gen(const Layer& l) {
  switch (l.g) {
    case Gen::Merge: return gen_merge(l.c1);
    case Gen::Split: return gen_split(l.c1);
    case Gen::Unit: return gen_unit(l.c1);
    case Gen::Counit: return gen_counit(l.c1);
    case Gen::Crossing: return gen_crossing(l.c1, l.c2);
    case Gen::Six: return gen_sixvalent(l.c1, l.c2);
    case Gen::Aborted: return gen_aborted(l.c1, l.c2);
    case Gen::AbortedDual: return gen_aborted_dual(l.c1, l.c2);
  }
  throw std::logic_error("layer_gen");
}

Layer inverse_layer(const Layer& l) {
  switch (l.g) {
    case Gen::Merge: return {Gen::Split, l.pos, l.c1};
    case Gen::Split: return {Gen::Merge, l.pos, l.c1};
    case Gen::Unit: return {Gen::Counit, l.pos, l.c1};
    case Gen::Counit: return {Gen::Unit, l.pos, l.c1};
    case Gen::Crossing: return {Gen::Crossing, l.pos, l.c2, l.c1};
    case Gen::Six: return {Gen::Six, l.pos, l.c2, l.c1};
    case Gen::Aborted: return {Gen::AbortedDual, l.pos, l.c1, l.c2};
    case Gen::AbortedDual: return {Gen::Aborted, l.pos, l.c1, l.c2};
  }
  return l;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

int nvars_for(const IndexSet& J) { return J.empty() ? 1 : J.back(); }

// a^R at s^R for the interval [a, b]: (s^R) i -> s^R
Diagram build_s(int a, int b, int i) {
  if (i < a || i > b) throw std::invalid_argument("a_thick: index outside J");
  IndexSet J;
  for (int k = a; k <= b; ++k) J.push_back(k);
  Word s = canonical_vertex(J, Vertex::sR);
  Diagram d{concat(s, {i}), {}};
  if (a == b) {
    d.layers.push_back({Gen::Merge, 0, i});
    return d;
  }
  int e = static_cast<int>(s.size());  // position of the extra strand
  if (i == a) {
    d.layers.push_back({Gen::Merge, e - 1, i});
    return d;
  }
  Word cur = d.bottom;
  auto push = [&](Layer l) {
    cur = apply_layer(cur, l);
    d.layers.push_back(l);
  };
  int p = e;
  for (int k = 0; k < i - 1 - a; ++k, --p) push({Gen::Crossing, p - 1, cur[p - 1], i});
  push({Gen::Six, p - 2, i, i - 1});
  int q = p - 2;
  for (int k = 0; k < b - i; ++k, --q) push({Gen::Crossing, q - 1, cur[q - 1], i - 1});
  IndexSet K(J.begin(), J.end() - 1);
  Word tail(cur.begin() + q + 1, cur.end());
  Diagram rest = build_s(a, b - 1, i - 1).embedded({}, tail);
  if (rest.bottom != cur) throw std::logic_error("build_s: boundary mismatch");
  for (auto& l : rest.layers) push(l);
  return d;
}

Diagram build_connected(const IndexSet& J, int i, Side side, Anchor anchor) {
  int a = J.front(), b = J.back();
  Diagram d = anchor == Anchor::S ? build_s(a, b, i)
                                  : build_s(a, b, a + b - i).recolored([a, b](int x) { return a + b - x; });
  if (side == Side::Left) d = d.mirrored();
  return d;
}

Path v_path_any(const IndexSet& J) {
  auto comps = components(J);
  Path p;
  Word left, right;
  for (auto& c : comps) right = concat(right, canonical_vertex(c, Vertex::sR));
  p.start = right;
  Word done;
  for (auto& c : comps) {
    Word sc = canonical_vertex(c, Vertex::sR);
    right.erase(right.begin(), right.begin() + sc.size());
    Path v = v_path(c);
    p.append(v.embedded(done, right));
    done = concat(done, canonical_vertex(c, Vertex::tR));
  }
  return p;
}

Word anchor_any(const IndexSet& J, Anchor a, Side side) {
  Word w;
  for (auto& c : components(J)) {
    Vertex v = a == Anchor::S ? (side == Side::Right ? Vertex::sR : Vertex::sL)
                              : (side == Side::Right ? Vertex::tR : Vertex::tL);
    w = concat(w, canonical_vertex(c, v));
  }
  return w;
}

std::string jstr(const IndexSet& J) { return word_str(J); }

}  // namespace

Word apply_layer(const Word& w, const Layer& l) {
  Word in = layer_in(l);
  if (l.pos < 0 || l.pos + static_cast<int>(in.size()) > static_cast<int>(w.size()))
    throw std::invalid_argument("layer out of range");
  for (size_t k = 0; k < in.size(); ++k)
    if (w[l.pos + k] != in[k]) throw std::invalid_argument("layer does not match its boundary");
  Word r(w.begin(), w.begin() + l.pos);
  Word out = layer_out(l);
  r.insert(r.end(), out.begin(), out.end());
  r.insert(r.end(), w.begin() + l.pos + in.size(), w.end());
  return r;
}

Word Diagram::top() const {
  Word w = bottom;
  for (auto& l : layers) w = apply_layer(w, l);
  return w;
}

std::vector<Word> Diagram::levels() const {
  std::vector<Word> out{bottom};
  for (auto& l : layers) out.push_back(apply_layer(out.back(), l));
  return out;
}

BSMorphism Diagram::realize() const {
  BSMorphism acc = identity(bottom);
  Word cur = bottom;
  for (auto& l : layers) {
    int n = in_len(l);
    Word left(cur.begin(), cur.begin() + l.pos), right(cur.begin() + l.pos + n, cur.end());
    acc = compose_v(embed(left, layer_gen(l), right), acc);
    cur = apply_layer(cur, l);
  }
  return acc;
}

namespace {

BSElement apply_embedded(const Word& cur, const Layer& l, const BSElement& x) {
  int la = l.pos, lx = in_len(l);
  Word out = layer_out(l);
  int ly = static_cast<int>(out.size());
  Word left(cur.begin(), cur.begin() + la);
  Word tgt = apply_layer(cur, l);
  BSElement r = zero_element(tgt);
  BSMorphism g = layer_gen(l);
  Label na = Label{1} << la, nx = Label{1} << lx;
  for (Label e = 0; e < static_cast<Label>(x.coords.size()); ++e) {
    const MultiPoly& c = x.coords[e];
    if (c.is_zero()) continue;
    Label ea = e & (na - 1), ex = (e >> la) & (nx - 1), eb = e >> (la + lx);
    for (Label t = 0; t < static_cast<Label>(g.rows()); ++t) {
      const MultiPoly& p = g.at(t, ex);
      if (p.is_zero()) continue;
      auto moved = transport(left, ea, p);
      for (Label ea2 = 0; ea2 < na; ++ea2)
        if (!moved[ea2].is_zero()) r.coords[ea2 | t << la | eb << (la + ly)] += c * moved[ea2];
    }
  }
  return r;
}

}  // namespace

BSElement Diagram::apply(const BSElement& x) const {
  if (x.word != bottom) throw std::invalid_argument("Diagram::apply: wrong source");
  BSElement cur = x;
  Word w = bottom;
  for (auto& l : layers) {
    cur = apply_embedded(w, l, cur);
    w = apply_layer(w, l);
  }
  return cur;
}

Diagram Diagram::flipped() const {
  Diagram d{top(), {}};
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) d.layers.push_back(inverse_layer(*it));
  return d;
}

Diagram Diagram::mirrored() const {
  Diagram d{Word(bottom.rbegin(), bottom.rend()), {}};
  Word cur = bottom;
  for (auto& l : layers) {
    Layer m = l;
    m.pos = static_cast<int>(cur.size()) - l.pos - in_len(l);
    if (l.g == Gen::Crossing) std::swap(m.c1, m.c2);
    d.layers.push_back(m);
    cur = apply_layer(cur, l);
  }
  return d;
}

Diagram Diagram::recolored(const std::function<int(int)>& c) const {
  Diagram d{{}, layers};
  for (int x : bottom) d.bottom.push_back(c(x));
  for (auto& l : d.layers) {
    l.c1 = c(l.c1);
    if (l.c2) l.c2 = c(l.c2);
  }
  return d;
}

Diagram Diagram::then(const Diagram& above) const {
  if (above.bottom != top()) throw std::invalid_argument("Diagram::then: boundary mismatch");
  Diagram d = *this;
  d.layers.insert(d.layers.end(), above.layers.begin(), above.layers.end());
  return d;
}

Diagram Diagram::embedded(const Word& left, const Word& right) const {
  Diagram d{concat(concat(left, bottom), right), layers};
  for (auto& l : d.layers) l.pos += static_cast<int>(left.size());
  return d;
}

Diagram path_diagram(const Path& p) {
  Diagram d{p.start, {}};
  Word cur = p.start;
  for (auto& m : p.moves) {
    Layer l = m.kind == MoveKind::Adjacent ? Layer{Gen::Six, m.pos, cur[m.pos], cur[m.pos + 1]}
                                           : Layer{Gen::Crossing, m.pos, cur[m.pos], cur[m.pos + 1]};
    d.layers.push_back(l);
    cur = apply_layer(cur, l);
  }
  return d;
}

Word anchor_word(const IndexSet& J, Anchor a, Side side) { return anchor_any(J, a, side); }

BSMorphism z_morphism(const IndexSet& J) { return path_morphism(v_path_any(J)); }
BSMorphism zbar_morphism(const IndexSet& J) { return path_morphism(v_path_any(J).reversed()); }

namespace {

Path down_to(const Word& x, const Word& y) {
  auto p = oriented_path(x, y);
  if (!p) throw std::invalid_argument("no oriented path " + word_str(x) + " -> " + word_str(y));
  return *p;
}

}  // namespace

Path transition_path(const IndexSet& J, const Word& x, const Word& y) {
  Path v = v_path_any(J);
  Path p = down_to(x, v.end());
  p.append(v.reversed());
  p.append(down_to(v.start, y));
  return p;
}

Path psi_path(const IndexSet& J, const Word& x, const Word& y) {
  Path v = v_path_any(J);
  Path p = down_to(v.start, x).reversed();
  p.append(v);
  p.append(down_to(y, v.end()).reversed());
  return p;
}

BSMorphism transition(const IndexSet& J, const Word& x, const Word& y) {
  return path_morphism(transition_path(J, x, y));
}
BSMorphism psi(const IndexSet& J, const Word& x, const Word& y) { return path_morphism(psi_path(J, x, y)); }

ThickTrivalent a_thick(const IndexSet& J, int i, Side side, Anchor anchor) {
  if (!std::binary_search(J.begin(), J.end(), i)) throw std::invalid_argument("a_thick: i not in J");
  auto comps = components(J);
  Word left, right;
  Diagram core;
  bool seen = false;
  for (auto& c : comps) {
    Word w = anchor_any(c, anchor, side);
    if (std::binary_search(c.begin(), c.end(), i)) {
      core = build_connected(c, i, side, anchor);
      seen = true;
    } else if (!seen) {
      left = concat(left, w);
    } else {
      right = concat(right, w);
    }
  }
  Diagram d;
  if (side == Side::Right) {
    // the extra strand crosses the components to its left
    Word w = concat(concat(concat(left, core.top()), right), {i});
    d.bottom = w;
    int p = static_cast<int>(w.size()) - 1;
    for (size_t k = 0; k < right.size(); ++k, --p) {
      Layer l{Gen::Crossing, p - 1, d.top()[p - 1], i};
      d.layers.push_back(l);
    }
    d = d.then(core.embedded(left, right));
  } else {
    Word w = concat({i}, concat(concat(left, core.top()), right));
    d.bottom = w;
    for (size_t k = 0; k < left.size(); ++k) {
      Layer l{Gen::Crossing, static_cast<int>(k), i, d.top()[k + 1]};
      d.layers.push_back(l);
    }
    d = d.then(core.embedded(left, right));
  }
  return {J, i, side, anchor, d, d.realize()};
}

DotResolution resolve_unit_dot(const ThickTrivalent& a) {
  const Diagram& d = a.diagram;
  if (a.side != Side::Right) throw std::invalid_argument("resolve_unit_dot: right-facing maps only");
  auto levels = d.levels();
  Word base(d.bottom.begin(), d.bottom.end() - 1);  // without the dotted strand
  BSMorphism below = identity(base);  // acts on words without the dotted strand
  Word cur = base;
  int u = static_cast<int>(base.size());
  int color = a.i;
  DotResolution out;
  auto above_from = [&](size_t k) {
    Diagram rest{levels[k], std::vector<Layer>(d.layers.begin() + k, d.layers.end())};
    return rest.realize();
  };
  auto insert_unit = [&](const Word& w, int pos, int c) {
    Word l(w.begin(), w.begin() + pos), r(w.begin() + pos, w.end());
    return embed(l, gen_unit(c), r);
  };
  for (size_t k = 0; k < d.layers.size(); ++k) {
    const Layer& l = d.layers[k];
    int n = in_len(l);
    bool touches = u >= l.pos && u < l.pos + n;
    if (!touches) {
      Layer shifted = l;
      if (l.pos > u) shifted.pos -= 1;
      Word left(cur.begin(), cur.begin() + shifted.pos), right(cur.begin() + shifted.pos + n, cur.end());
      below = compose_v(embed(left, layer_gen(shifted), right), below);
      cur = apply_layer(cur, shifted);
      if (l.pos + n <= u) u += static_cast<int>(layer_out(l).size()) - n;
      continue;
    }
    if (l.g == Gen::Crossing) {
      u = u == l.pos ? l.pos + 1 : l.pos;
      continue;
    }
    if (l.g == Gen::Six) {
      if (u != l.pos + 2 && u != l.pos) throw std::logic_error("resolve_unit_dot: dot on the middle leg");
      Word full = levels[k];
      Word left(full.begin(), full.begin() + l.pos), right(full.begin() + l.pos + 3, full.end());
      BSMorphism through = compose_v(embed(left, gen_sixvalent(l.c1, l.c2), right), insert_unit(cur, u, color));
      int nu = u == l.pos + 2 ? l.pos : l.pos + 2;
      BSMorphism pass = insert_unit(cur, nu, l.c2);
      BSMorphism term = compose_v(above_from(k + 1), compose_v(through - pass, below));
      out.aborted.push_back({static_cast<int>(k), term});
      u = nu;
      color = l.c2;
      continue;
    }
    if (l.g == Gen::Merge) {
      // merge with a unit on one leg is the identity
      for (size_t r = k + 1; r < d.layers.size(); ++r) {
        const Layer& m = d.layers[r];
        int mn = in_len(m);
        Word left(cur.begin(), cur.begin() + m.pos), right(cur.begin() + m.pos + mn, cur.end());
        below = compose_v(embed(left, layer_gen(m), right), below);
        cur = apply_layer(cur, m);
      }
      out.pass_through = below;
      return out;
    }
    throw std::logic_error("resolve_unit_dot: unexpected generator on the dotted strand");
  }
  throw std::logic_error("resolve_unit_dot: dot never absorbed");
}

int abort_points(const IndexSet& J) { return v_path_any(J).length(); }

BSMorphism abort_morphism(const IndexSet& J, int k) {
  Path v = v_path_any(J);
  Path head{v.start, {}};
  int seen = 0;
  for (auto& m : v.moves) {
    if (m.kind == MoveKind::Adjacent) {
      if (seen == k) {
        Word w = head.end();
        BSMorphism ab = embed(Word(w.begin(), w.begin() + m.pos), gen_aborted(w[m.pos], w[m.pos + 1]),
                              Word(w.begin() + m.pos + 3, w.end()));
        return compose_v(ab, path_morphism(head));
      }
      ++seen;
    }
    head.moves.push_back(m);
  }
  throw std::out_of_range("abort_morphism: no such abort point");
}

BSMorphism xi(const IndexSet& J, const Word& via) {
  BSMorphism dots = identity(via);
  Word cur = via;
  while (!cur.empty()) {
    Word rest(cur.begin() + 1, cur.end());
    dots = compose_v(embed({}, gen_counit(cur[0]), rest), dots);
    cur = rest;
  }
  return compose_v(dots, transition(J, anchor_any(J, Anchor::S, Side::Right), via));
}

int summand_rank(const IndexSet& J, const Word& x) { return numeric_rank(transition(J, x, x), 4, 11).rank; }

std::vector<long> hom_from_R_dims(const IndexSet& J, int extra) {
  Word s = anchor_any(J, Anchor::S, Side::Right);
  BSMorphism e = transition(J, s, s);
  int d = static_cast<int>(s.size());
  std::vector<long> out;
  for (int m = -d; m <= d + extra; ++m)
    out.push_back((m + d) % 2 ? 0 : hom_dim_between_summands(identity({}), e, m, nvars_for(J)));
  return out;
}

std::vector<long> hom_to_R_dims(const IndexSet& J, int extra) {
  Word s = anchor_any(J, Anchor::S, Side::Right);
  BSMorphism e = transition(J, s, s);
  int d = static_cast<int>(s.size());
  std::vector<long> out;
  for (int m = -d; m <= d + extra; ++m)
    out.push_back((m + d) % 2 ? 0 : hom_dim_between_summands(e, identity({}), m, nvars_for(J)));
  return out;
}

LaurentPoly graded_class(const IndexSet& J, int extra) {
  int d = static_cast<int>(anchor_any(J, Anchor::S, Side::Right).size());
  int n = nvars_for(J);
  auto dims = hom_from_R_dims(J, extra);
  // graded rank = dims * (1 - v^2)^n, valid on the window
  LaurentPoly series;
  for (size_t k = 0; k < dims.size(); ++k)
    if (dims[k]) series += LaurentPoly::monomial(-d + static_cast<int>(k), dims[k]);
  LaurentPoly f(1);
  for (int k = 0; k < n; ++k) f = f * (LaurentPoly(1) - LaurentPoly::monomial(2));
  LaurentPoly prod = series * f, out;
  for (auto& [e, c] : prod.coeffs())
    if (e <= d + extra) out += LaurentPoly::monomial(e - d, c);
  return out;
}

CBiSplit split_CBi(const IndexSet& J, int i) {
  Word s = anchor_any(J, Anchor::S, Side::Right);
  Word si = concat(s, {i});
  BSMorphism e = embed({}, transition(J, s, s), {i});
  ThickTrivalent a = a_thick(J, i, Side::Right, Anchor::S);
  BSMorphism down = compose_v(a.morphism, e);  // C (x) B_i -> C, degree -1
  BSMorphism up = compose_v(e, a.diagram.flipped().realize());  // C -> C (x) B_i, degree -1
  BSMorphism mid = poly_in_region(si, static_cast<int>(s.size()), MultiPoly::var(i));
  BSMorphism A = compose_v(compose_v(up, down), mid);
  BSMorphism B = compose_v(mid, compose_v(up, down));
  A = compose_v(e, compose_v(A, e));
  B = compose_v(e, compose_v(B, e));
  // alpha A + beta B = e, solved entrywise
  SparseSolver solver(2);
  for (int t = 0; t < e.rows(); ++t)
    for (int c = 0; c < e.cols(); ++c) {
      std::map<MonoKey, std::pair<Q, Q>> coef;
      std::map<MonoKey, Q> rhs;
      for (auto& [m, v] : A.at(t, c).terms()) coef[m].first += v;
      for (auto& [m, v] : B.at(t, c).terms()) coef[m].second += v;
      for (auto& [m, v] : e.at(t, c).terms()) {
        rhs[m] += v;
        coef[m];
      }
      for (auto& [m, ab] : coef) solver.add_row({{0, ab.first}, {1, ab.second}}, rhs[m]);
    }
  auto sol = solver.solve();
  if (!sol) throw std::runtime_error("split_CBi: no decomposition of the form alpha A + beta B");
  Q alpha = (*sol)[0], beta = (*sol)[1];
  return {alpha * A, beta * B, e, alpha, beta, compose_v(down, mid).degree(), down.degree()};
}

namespace {

using M = BSMorphism;
M V(const M& g, const M& f) { return compose_v(g, f); }
M V(const M& h, const M& g, const M& f) { return compose_v(h, compose_v(g, f)); }
M E(const Word& l, const M& f, const Word& r) { return embed(l, f, r); }

std::string pr(std::initializer_list<std::pair<const char*, std::string>> kv) {
  std::string out;
  for (auto& [k, v] : kv) out += (out.empty() ? "" : " ") + std::string(k) + "=" + v;
  return out;
}

const char* anchor_name(Anchor a) { return a == Anchor::S ? "s" : "t"; }

BSElement add(BSElement a, const BSElement& b) {
  for (size_t k = 0; k < a.coords.size(); ++k) a.coords[k] += b.coords[k];
  return a;
}

std::vector<Word> classes_of(const IndexSet& J) {
  auto g = build_expanded_from_word(anchor_any(J, Anchor::S, Side::Right));
  return conflate(g).reps;
}

// vertices of V_J, one per class, in path order
std::vector<Word> v_vertices(const IndexSet& J) {
  Path v = v_path_any(J);
  std::vector<Word> out{v.start};
  Word cur = v.start;
  for (auto& m : v.moves) {
    cur = apply_move(cur, m);
    if (m.kind == MoveKind::Adjacent) out.push_back(cur);
  }
  return out;
}

}  // namespace

std::vector<Check> verify_a_properties(const IndexSet& J) {
  std::vector<Check> out;
  int nv = nvars_for(J);
  auto add_check = [&](const std::string& c, const std::string& p, bool ok, const std::string& w = "") {
    out.push_back({c, p, ok, w});
  };
  for (Anchor an : {Anchor::S, Anchor::T}) {
    Word w = anchor_any(J, an, Side::Right);
    M z = z_morphism(J), zb = zbar_morphism(J);
    M below = an == Anchor::T ? z : zb;
    M proj = an == Anchor::T ? V(z, zb) : V(zb, z);
    std::map<int, M> a;
    for (int i : J) a[i] = a_thick(J, i, Side::Right, an).morphism;
    for (int i : J) {
      std::string p = pr({{"anchor", anchor_name(an)}, {"i", std::to_string(i)}});
      add_check("a_bimodule", p, is_bimodule_map(a[i], nv) && a[i].degree() == -1 && a[i].degree_consistent());
      add_check("asquared", p, V(a[i], E({}, a[i], {i})) == V(a[i], E(w, gen_merge(i), {})));
      M dotted = V(a[i], E(w, gen_unit(i), {}));
      add_check("adotz", p, V(dotted, below) == below);
      for (int j : J) {
        std::string pj = pr({{"anchor", anchor_name(an)}, {"i", std::to_string(i)}, {"j", std::to_string(j)}});
        if (std::abs(i - j) >= 2) {
          M l = V(a[j], E({}, a[i], {j}));
          M r = V(a[i], E({}, a[j], {i}), E(w, gen_crossing(i, j), {}));
          add_check("a4", pj, l == r);
        }
      }
    }
    for (int i : J)
      for (int j : J) {
        if (std::abs(i - j) != 1 || i > j) continue;
        std::string pj = pr({{"anchor", anchor_name(an)}, {"i", std::to_string(i)}, {"j", std::to_string(j)}});
        // absorbing i j i equals absorbing j i j after a six-valent vertex
        auto absorb = [&](int x, int y) { return V(a[x], E({}, a[y], {x}), E({}, a[x], {y, x})); };
        M iji = absorb(i, j), jij = absorb(j, i);
        bool fwd = iji == V(jij, E(w, gen_sixvalent(i, j), {}));
        bool bwd = jij == V(iji, E(w, gen_sixvalent(j, i), {}));
        add_check("a6", pj, fwd || bwd, fwd && bwd ? "both orientations" : fwd ? "six from iji" : bwd ? "six from jij" : "");
        M pi = E({}, proj, {i, j, i}), pj2 = E({}, proj, {j, i, j});
        bool rf = V(iji, pi) == V(jij, E(w, gen_sixvalent(i, j), {}), pi);
        bool rb = V(jij, pj2) == V(iji, E(w, gen_sixvalent(j, i), {}), pj2);
        add_check("a6_on_summand", pj, rf && rb);
      }
    // aopp with a^L conjugated onto the right-handed representative
    Word wl = anchor_any(J, an, Side::Left);
    M c = path_morphism(commute_path(w, wl)), ci = path_morphism(commute_path(wl, w));
    for (int i : J)
      for (int j : J) {
        M al = V(ci, a_thick(J, j, Side::Left, an).morphism, E({j}, c, {}));
        bool ok = V(a[i], E({}, al, {i})) == V(al, E({j}, a[i], {}));
        add_check("aopp", pr({{"anchor", anchor_name(an)}, {"i", std::to_string(i)}, {"j", std::to_string(j)}}), ok);
      }
    // the realized action f (x) g (x) h -> f (x) d_i(g) h
    if (an == Anchor::T) {
      Word s = anchor_any(J, Anchor::S, Side::Right);
      for (int i : J) {
        bool ok = true;
        for (int k : J)
          for (MultiPoly g : {MultiPoly(1), MultiPoly::var(i), MultiPoly::var(k) * MultiPoly::var(i),
                              MultiPoly::var(k) * MultiPoly::var(k) * MultiPoly::var(J.front())}) {
            std::vector<MultiPoly> slots(s.size() + 2, MultiPoly(1));
            slots[s.size()] = g;
            BSElement x = normal_form(concat(s, {i}), slots);
            BSElement y = V(a[i], E({}, z, {i})).apply(x);
            if (y != right_multiply(one_tensor(w), demazure(i, g))) ok = false;
          }
        add_check("a_action", pr({{"i", std::to_string(i)}}), ok);
      }
    }
  }
  return out;
}

std::vector<Check> verify_whatkills(const IndexSet& J) {
  std::vector<Check> out;
  for (Anchor an : {Anchor::S, Anchor::T}) {
    M below = an == Anchor::T ? z_morphism(J) : zbar_morphism(J);
    for (int i : J) {
      auto res = resolve_unit_dot(a_thick(J, i, Side::Right, an));
      for (auto& term : res.aborted)
        out.push_back({"whatkills",
                       pr({{"anchor", anchor_name(an)}, {"i", std::to_string(i)}, {"layer", std::to_string(term.step)}}),
                       V(term.morphism, below).is_zero(), ""});
      out.push_back({"unit_dot_pass_through", pr({{"anchor", anchor_name(an)}, {"i", std::to_string(i)}}),
                     res.pass_through == identity(anchor_any(J, an, Side::Right)), ""});
    }
  }
  // a_i wrapped around z vanishes: a_t o (z (x) id) o flipped a_s
  Word s = anchor_any(J, Anchor::S, Side::Right);
  M z = z_morphism(J);
  for (int i : J) {
    M up = a_thick(J, i, Side::Right, Anchor::S).diagram.flipped().realize();
    M down = a_thick(J, i, Side::Right, Anchor::T).morphism;
    out.push_back({"awrap", pr({{"i", std::to_string(i)}}), V(down, E({}, z, {i}), up).is_zero(), ""});
  }
  return out;
}

std::vector<Check> verify_projectors(const IndexSet& J, int samples, unsigned seed) {
  std::vector<Check> out;
  auto add_check = [&](const std::string& c, const std::string& p, bool ok) { out.push_back({c, p, ok, ""}); };
  Word s = anchor_any(J, Anchor::S, Side::Right), t = anchor_any(J, Anchor::T, Side::Right);
  M z = z_morphism(J), zb = zbar_morphism(J);
  std::string pj = pr({{"J", jstr(J)}});
  add_check("z_degree_zero", pj, z.degree() == 0 && zb.degree() == 0);
  add_check("z_one_tensor", pj, z.image_of_label(0) == one_tensor(t) && zb.image_of_label(0) == one_tensor(s));
  add_check("z_zbar_z", pj, V(z, zb, z) == z);
  add_check("zbar_z_zbar", pj, V(zb, z, zb) == zb);
  add_check("phi_t_s_is_zbar", pj, transition(J, t, s) == zb);
  // any oriented path gives z
  {
    auto g = build_expanded_from_word(s);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, g.vertices.size() - 1);
    bool ok = true;
    for (int k = 0; k < samples; ++k) {
      Word via = g.vertices[pick(rng)];
      auto p = down_to(s, via);
      p.append(down_to(via, t));
      if (path_morphism(p) != z) ok = false;
    }
    add_check("z_path_independent", pj, ok);
  }
  auto onV = v_vertices(J);
  auto all = classes_of(J);
  std::mt19937 rng(seed);
  std::vector<Word> sample = onV;
  {
    std::vector<Word> others;
    for (auto& c : all) {
      bool on = false;
      for (auto& x : onV)
        if (conflate(build_expanded_from_word(s)).class_of_word(build_expanded_from_word(s), x) ==
            conflate(build_expanded_from_word(s)).class_of_word(build_expanded_from_word(s), c))
          on = true;
      if (!on) others.push_back(c);
    }
    std::shuffle(others.begin(), others.end(), rng);
    for (int k = 0; k < samples && k < static_cast<int>(others.size()); ++k) sample.push_back(others[k]);
  }
  std::map<std::pair<size_t, size_t>, M> phi;
  auto getphi = [&](size_t a, size_t b) -> const M& {
    auto it = phi.find({a, b});
    if (it == phi.end()) it = phi.emplace(std::make_pair(a, b), transition(J, sample[a], sample[b])).first;
    return it->second;
  };
  size_t nV = onV.size();
  for (size_t a = 0; a < sample.size(); ++a) {
    const M& f = getphi(a, a);
    std::string px = pr({{"J", jstr(J)}, {"x", word_str(sample[a])}});
    add_check("phi_idempotent", px, V(f, f) == f);
    add_check("phi_one_tensor", px, f.image_of_label(0) == one_tensor(sample[a]));
  }
  for (size_t a = 0; a < nV; ++a)
    for (size_t b = 0; b < nV; ++b)
      for (size_t c = 0; c < nV; ++c)
        add_check("phi_consistent_V",
                  pr({{"J", jstr(J)}, {"x", word_str(sample[a])}, {"y", word_str(sample[b])}, {"z", word_str(sample[c])}}),
                  V(getphi(b, c), getphi(a, b)) == getphi(a, c));
  long wj = 1;
  for (auto& cmp : components(J))
    for (size_t k = 2; k <= cmp.size() + 1; ++k) wj *= static_cast<long>(k);
  for (size_t a = 0; a < sample.size(); ++a) {
    NumericRank rk = numeric_rank(getphi(a, a), 4, seed);
    add_check("phi_rank", pr({{"J", jstr(J)}, {"x", word_str(sample[a])}, {"rank", std::to_string(rk.rank)}}),
              rk.rank == wj && rk.agreeing >= 3);
  }
  std::uniform_int_distribution<size_t> any(0, sample.size() - 1);
  for (int k = 0; k < samples; ++k) {
    size_t a = any(rng), b = any(rng), c = any(rng);
    add_check("phi_consistent",
              pr({{"J", jstr(J)}, {"x", word_str(sample[a])}, {"y", word_str(sample[b])}, {"z", word_str(sample[c])}}),
              V(getphi(b, c), getphi(a, b)) == getphi(a, c));
  }
  for (size_t a = 0; a < sample.size(); ++a)
    for (size_t b = 0; b < sample.size(); ++b) {
      if ((a >= nV || b >= nV) && a != b && (a + b) % 3) continue;
      add_check(a < nV && b < nV ? "phi_eq_psi" : "phi_eq_psi_off_path",
                pr({{"J", jstr(J)}, {"x", word_str(sample[a])}, {"y", word_str(sample[b])}}),
                psi(J, sample[a], sample[b]) == getphi(a, b));
    }
  // corollaries along V_J
  Path v = v_path_any(J);
  M ts = path_morphism(v.reversed());
  for (size_t k = 0; k + 1 < onV.size(); ++k) {
    const Word &x = onV[k], &y = onV[k + 1];
    Path phi1 = v.reversed();
    phi1.append(down_to(s, x));
    Path phi2 = v.reversed();
    phi2.append(down_to(s, y));
    phi2.append(down_to(x, y).reversed());
    add_check("UDdueqUD", pr({{"J", jstr(J)}, {"x", word_str(x)}}), path_morphism(phi1) == path_morphism(phi2));
  }
  for (auto& x : onV) {
    Path p1 = v.reversed();
    p1.append(down_to(s, x));
    p1.append(down_to(s, x).reversed());
    Path p2 = v;
    p2.append(down_to(x, t).reversed());
    p2.append(down_to(x, t));
    Path p3 = v;
    p3.append(v.reversed());
    p3.append(down_to(s, x));
    Path p4 = v;
    p4.append(down_to(x, t).reversed());
    std::string px = pr({{"J", jstr(J)}, {"x", word_str(x)}});
    add_check("UDetc1_up", px, path_morphism(p1) == ts);
    add_check("UDetc1_down", px, path_morphism(p2) == z);
    add_check("UDetc2", px, path_morphism(p3) == path_morphism(p4));
  }
  for (int k = 0; k < abort_points(J); ++k)
    add_check("abortedV", pr({{"J", jstr(J)}, {"k", std::to_string(k)}}), V(abort_morphism(J, k), zb).is_zero());
  // xi
  M x0 = xi(J, s);
  add_check("xi_one_tensor", pj, x0.image_of_label(0) == one_tensor({}) && x0.degree() == static_cast<int>(s.size()));
  bool indep = true;
  for (auto& x : sample)
    if (xi(J, x) != x0) indep = false;
  add_check("xi_independent", pj, indep);
  return out;
}

std::vector<Check> very_thick_action_check(const IndexSet& J) {
  std::vector<Check> out;
  Word s = anchor_any(J, Anchor::S, Side::Right), t = anchor_any(J, Anchor::T, Side::Right);
  int d = static_cast<int>(s.size());
  Diagram vt{concat(t, t), {}};
  for (int k = 0; k < d; ++k)
    vt = vt.then(a_thick(J, t[k], Side::Right, Anchor::T).diagram.embedded({}, Word(t.begin() + k + 1, t.end())));
  Diagram zd = path_diagram(v_path_any(J));
  Diagram zz = zd.embedded({}, s).then(zd.embedded(t, {}));
  std::string pj = pr({{"J", jstr(J)}});
  // d_J on the middle term
  std::vector<MultiPoly> gs{MultiPoly(1)};
  MultiPoly prod(1), sq(1);
  for (int j : J) {
    gs.push_back(MultiPoly::var(j));
    prod = prod * MultiPoly::var(j);
  }
  gs.push_back(prod);
  // a product of all positive roots has nonzero d_J
  MultiPoly roots(1);
  for (int a : J)
    for (int b : J) {
      if (b < a) continue;
      MultiPoly r;
      for (int k = a; k <= b; ++k) r += MultiPoly::var(k);
      roots = roots * r;
    }
  gs.push_back(roots);
  gs.push_back(roots * MultiPoly::var(J.front()));
  bool ok = true;
  std::string bad;
  for (auto& g : gs) {
    std::vector<MultiPoly> slots(2 * d + 1, MultiPoly(1));
    slots[d] = g;
    BSElement y = vt.apply(zz.apply(normal_form(concat(s, s), slots)));
    if (y != right_multiply(one_tensor(t), demazure_word(t, g))) {
      ok = false;
      bad = g.str();
    }
  }
  out.push_back({"very_thick_demazure", pj, ok, bad});
  // thick unit of 1 is the beta element
  Diagram units{{}, {}};
  for (int k = 0; k < d; ++k) units.layers.push_back({Gen::Unit, k, s[k]});
  BSElement img = zd.apply(units.apply(one_tensor({})));
  BSElement b = zero_element(t);
  auto B = beta(J);
  for (auto& [g, gs2] : B) b = add(b, left_multiply(g, right_multiply(one_tensor(t), gs2)));
  out.push_back({"thick_unit_is_beta", pj, img == b, ""});
  // beta is central: f beta = beta f
  bool central = true;
  for (int k = 1; k <= nvars_for(J); ++k)
    if (left_multiply(MultiPoly::var(k), b) != right_multiply(b, MultiPoly::var(k))) central = false;
  out.push_back({"beta_central", pj, central, ""});
  // resolution of the identity on the realized C (x) C, on a few elements
  if (d <= 3) {
    Diagram vtd = vt.flipped();
    bool res = true;
    for (Label k : {Label{0}, Label{1}, Label{5}, (Label{1} << d) | 1, (Label{3} << d) | 2, (Label{1} << (2 * d)) - 1}) {
      BSElement x = zero_element(concat(s, s));
      if (k >= x.coords.size()) continue;
      x.coords[k] = MultiPoly(1);
      x = zz.apply(x);
      BSElement sum = zero_element(concat(t, t));
      for (auto& [g, gs2] : B) sum = add(sum, multiply_in_region(vtd.apply(vt.apply(multiply_in_region(x, static_cast<int>(t.size()), gs2))), static_cast<int>(t.size()), g));
      if (sum != x) res = false;
    }
    out.push_back({"thick_decomposition", pj, res, ""});
  }
  return out;
}

std::string checks_to_json(const std::vector<Check>& cs) {
  nlohmann::json j = nlohmann::json::array();
  for (auto& c : cs) {
    nlohmann::json o{{"check", c.check}, {"parameters", c.params}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.witness.empty()) o["witness"] = c.witness;
    j.push_back(o);
  }
  return j.dump(2);
}

}  // namespace soergel
