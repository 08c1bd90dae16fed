#include "soergel/exprgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace soergel {

namespace {

bool adjacent_letters(int x, int y) { return std::abs(x - y) == 1; }
bool distant_letters(int x, int y) { return std::abs(x - y) >= 2; }

int move_len(MoveKind k) { return k == MoveKind::Adjacent ? 3 : 2; }

bool move_fits(const Word& w, const Move& m) {
  int n = static_cast<int>(w.size());
  if (m.pos < 0 || m.pos + move_len(m.kind) > n) return false;
  if (m.kind == MoveKind::Distant) return distant_letters(w[m.pos], w[m.pos + 1]);
  return w[m.pos] == w[m.pos + 2] && adjacent_letters(w[m.pos], w[m.pos + 1]);
}

std::vector<Move> applicable_moves(const Word& w) {
  std::vector<Move> out;
  for (int p = 0; p < static_cast<int>(w.size()); ++p)
    for (MoveKind k : {MoveKind::Distant, MoveKind::Adjacent})
      if (move_fits(w, {p, k})) out.push_back({p, k});
  return out;
}

Word run(int from, int to) {
  Word w;
  if (from <= to)
    for (int k = from; k <= to; ++k) w.push_back(k);
  else
    for (int k = from; k >= to; --k) w.push_back(k);
  return w;
}

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void require_connected(const IndexSet& J) {
  if (J.empty() || !is_connected(J)) throw std::invalid_argument("expected a nonempty connected index set");
}

}  // namespace

Word apply_move(const Word& w, const Move& m) {
  if (!move_fits(w, m)) throw std::invalid_argument("move does not apply at position " + std::to_string(m.pos));
  Word r = w;
  if (m.kind == MoveKind::Distant) {
    std::swap(r[m.pos], r[m.pos + 1]);
  } else {
    int x = w[m.pos], y = w[m.pos + 1];
    r[m.pos] = y;
    r[m.pos + 1] = x;
    r[m.pos + 2] = y;
  }
  return r;
}

bool move_is_oriented(const Word& w, const Move& m) {
  if (m.kind == MoveKind::Distant) return true;
  return w[m.pos] < w[m.pos + 1];
}

Word Path::end() const {
  Word w = start;
  for (auto& m : moves) w = apply_move(w, m);
  return w;
}

std::vector<Word> Path::vertices() const {
  std::vector<Word> out{start};
  for (auto& m : moves) out.push_back(apply_move(out.back(), m));
  return out;
}

int Path::length() const {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.kind == MoveKind::Adjacent; }));
}

bool Path::is_oriented() const {
  Word w = start;
  for (auto& m : moves) {
    if (!move_is_oriented(w, m)) return false;
    w = apply_move(w, m);
  }
  return true;
}

bool Path::is_reverse_oriented() const { return reversed().is_oriented(); }

Path Path::reversed() const {
  // every braid move is its own inverse at the same position
  Path r{end(), {}};
  r.moves.assign(moves.rbegin(), moves.rend());
  return r;
}

Path& Path::append(const Path& p) {
  if (p.start != end()) throw std::invalid_argument("Path::append: endpoints do not match");
  moves.insert(moves.end(), p.moves.begin(), p.moves.end());
  return *this;
}

Path Path::embedded(const Word& left, const Word& right) const {
  Path r{cat(cat(left, start), right), moves};
  for (auto& m : r.moves) m.pos += static_cast<int>(left.size());
  return r;
}

bool ExpandedGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<int>> adj(vertices.size());
  for (auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(vertices.size());
  std::deque<int> q{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push_back(v);
      }
  }
  return count == vertices.size();
}

ExpandedGraph build_expanded(const Perm& w) {
  ExpandedGraph g;
  g.element = w;
  g.vertices = reduced_words(w);
  for (int k = 0; k < static_cast<int>(g.vertices.size()); ++k) g.index[g.vertices[k]] = k;
  for (int u = 0; u < static_cast<int>(g.vertices.size()); ++u)
    for (auto& m : applicable_moves(g.vertices[u])) {
      int v = g.index.at(apply_move(g.vertices[u], m));
      if (u < v) g.edges.push_back({u, v, m.kind, m.pos});
    }
  return g;
}

ExpandedGraph build_expanded_from_word(const Word& w) {
  if (!is_reduced(w)) throw std::invalid_argument("build_expanded_from_word: word is not reduced");
  int n = w.empty() ? 1 : *std::max_element(w.begin(), w.end());
  return build_expanded(eval(w, n));
}

int ConflatedGraph::class_of_word(const ExpandedGraph& g, const Word& w) const {
  auto it = g.index.find(w);
  if (it == g.index.end()) throw std::invalid_argument("word " + word_str(w) + " is not a vertex");
  return class_of[it->second];
}

std::vector<int> ConflatedGraph::sources() const {
  std::vector<bool> has_in(reps.size());
  for (auto& a : arrows) has_in[a.to] = true;
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(reps.size()); ++c)
    if (!has_in[c]) out.push_back(c);
  return out;
}

std::vector<int> ConflatedGraph::sinks() const {
  std::vector<bool> has_out(reps.size());
  for (auto& a : arrows) has_out[a.from] = true;
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(reps.size()); ++c)
    if (!has_out[c]) out.push_back(c);
  return out;
}

ConflatedGraph conflate(const ExpandedGraph& g) {
  int nv = static_cast<int>(g.vertices.size());
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& e : g.edges)
    if (e.kind == MoveKind::Distant) parent[find(e.u)] = find(e.v);
  ConflatedGraph c;
  c.class_of.assign(nv, -1);
  std::map<int, int> root_to_class;
  // vertices are lexicographic, so the first vertex met in a class is its least word
  for (int u = 0; u < nv; ++u) {
    int r = find(u);
    auto it = root_to_class.find(r);
    if (it == root_to_class.end()) {
      it = root_to_class.emplace(r, static_cast<int>(c.reps.size())).first;
      c.reps.push_back(g.vertices[u]);
    }
    c.class_of[u] = it->second;
  }
  std::set<std::pair<int, int>> seen;
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
    auto& e = g.edges[k];
    if (e.kind != MoveKind::Adjacent) continue;
    int a = c.class_of[e.u], b = c.class_of[e.v];
    if (!move_is_oriented(g.vertices[e.u], {e.pos, e.kind})) std::swap(a, b);
    if (seen.insert({a, b}).second) c.arrows.push_back({a, b, k});
  }
  return c;
}

SourceSink source_sink(const ExpandedGraph&, const ConflatedGraph& c) {
  auto s = c.sources(), t = c.sinks();
  if (s.size() != 1 || t.size() != 1)
    throw std::logic_error("source/sink not unique: " + std::to_string(s.size()) + " sources, " +
                           std::to_string(t.size()) + " sinks");
  return {s[0], t[0]};
}

namespace {

Word sR(int a, int b) {
  if (a == b) return {a};
  return cat(sR(a, b - 1), run(b, a));
}

Word tR(int a, int b) {
  if (a == b) return {a};
  return cat(tR(a + 1, b), run(a, b));
}

}  // namespace

Word canonical_vertex(const IndexSet& J, Vertex which, std::optional<int> i) {
  require_connected(J);
  int a = J.front(), b = J.back();
  if (i && (*i < a || *i > b)) throw std::invalid_argument("canonical_vertex: index not in J");
  Word w;
  bool source = which == Vertex::sR || which == Vertex::sL;
  if (source) {
    if (!i) {
      w = sR(a, b);
    } else {
      for (int top = b; top > *i; --top) w = cat(w, run(a, top));
      w = cat(w, sR(a, *i));
    }
  } else {
    if (!i) {
      w = tR(a, b);
    } else {
      for (int bot = a; bot < *i; ++bot) w = cat(w, run(b, bot));
      w = cat(w, tR(*i, b));
    }
  }
  if (which == Vertex::sL || which == Vertex::tL) std::reverse(w.begin(), w.end());
  return w;
}

Path commute_path(const Word& from, const Word& to) {
  if (from.size() != to.size()) throw std::invalid_argument("commute_path: lengths differ");
  Path p{from, {}};
  Word cur = from;
  for (int k = 0; k < static_cast<int>(to.size()); ++k) {
    int m = k;
    while (m < static_cast<int>(cur.size()) && cur[m] != to[k]) ++m;
    if (m == static_cast<int>(cur.size()))
      throw std::invalid_argument("commute_path: " + word_str(from) + " and " + word_str(to) + " differ");
    for (int r = m; r > k; --r) {
      if (!distant_letters(cur[r - 1], cur[r]))
        throw std::invalid_argument("commute_path: " + word_str(from) + " and " + word_str(to) +
                                    " are not commutation equivalent");
      std::swap(cur[r - 1], cur[r]);
      p.moves.push_back({r - 1, MoveKind::Distant});
    }
  }
  return p;
}

Path flip_path(int i, int j, const Word& at, int offset) {
  if (i >= j) throw std::invalid_argument("flip_path: need i < j");
  Word expect = cat(run(i, j), run(j - 1, i));
  if (offset < 0 || offset + expect.size() > at.size() || !std::equal(expect.begin(), expect.end(), at.begin() + offset))
    throw std::invalid_argument("flip_path: sub-word at offset is not " + word_str(expect));
  Path p{at, {}};
  Word cur = at;
  auto push = [&](Move m) {
    cur = apply_move(cur, m);
    p.moves.push_back(m);
  };
  int off = offset;
  for (int top = j; top > i; --top) {
    // current sub-word at off: i..top..i
    int bot = i;
    int centre = off + (top - bot);
    push({centre - 1, MoveKind::Adjacent});
    // now ... top-2, [top, top-1, top], top-2 ...
    for (int r = centre - 1; r > off; --r) push({r - 1, MoveKind::Distant});
    for (int r = centre + 1; r < off + 2 * (top - bot); ++r) push({r, MoveKind::Distant});
    ++off;
  }
  return p;
}

namespace {

// the flips after V_K: from t^R_K (b..a) to t^R_J
Path v_tail(int a, int b) {
  Word w = cat(tR(a, b - 1), run(b, a));
  Path p{w, {}};
  for (int k = a; k < b; ++k) {
    Word prefix = k + 1 <= b - 1 ? tR(k + 1, b - 1) : Word{};
    Word suffix;
    for (int m = k - 1; m >= a; --m) suffix = cat(suffix, run(m, b));
    Word target = cat(cat(prefix, cat(run(k, b), run(b - 1, k))), suffix);
    p.append(commute_path(p.end(), target));
    p.append(flip_path(k, b, target, static_cast<int>(prefix.size())));
  }
  return p;
}

}  // namespace

Path v_path(const IndexSet& J) {
  require_connected(J);
  int a = J.front(), b = J.back();
  if (a == b) return Path{{a}, {}};
  IndexSet K = run(a, b - 1);
  Path p = v_path(K).embedded({}, run(b, a));
  p.append(v_tail(a, b));
  return p;
}

Word dynkin_flip(const Word& w, int a, int b) {
  Word r = w;
  for (int& x : r) x = a + b - x;
  return r;
}

Path fr_path(const IndexSet& J, int i, Endpoint e) {
  require_connected(J);
  int a = J.front(), b = J.back();
  if (i < a || i > b) throw std::invalid_argument("fr_path: index not in J");
  if (e == Endpoint::source) {
    Path t = fr_path(J, a + b - i, Endpoint::sink);
    return Path{dynkin_flip(t.start, a, b), t.moves};
  }
  Word top = tR(a, b);
  if (i == b) return Path{top, {}};
  Word spliced = canonical_vertex(J, Vertex::tR, i);
  Path p = commute_path(top, spliced);
  Word blocks(spliced.begin(), spliced.end() - tR(i, b).size());
  p.append(v_tail(i, b).reversed().embedded(blocks, {}));
  return p;
}

std::optional<Path> oriented_path(const Word& x, const Word& y, bool freeze_last) {
  if (x.size() != y.size()) return std::nullopt;
  int limit = static_cast<int>(x.size()) - (freeze_last ? 1 : 0);
  std::map<Word, std::pair<Word, Move>> parent;
  std::deque<Word> q{x};
  parent.emplace(x, std::make_pair(Word{}, Move{-1, MoveKind::Distant}));
  while (!q.empty()) {
    Word u = q.front();
    q.pop_front();
    if (u == y) break;
    for (auto& m : applicable_moves(u)) {
      if (m.pos + move_len(m.kind) > limit || !move_is_oriented(u, m)) continue;
      Word v = apply_move(u, m);
      if (parent.count(v)) continue;
      parent.emplace(v, std::make_pair(u, m));
      q.push_back(v);
    }
  }
  if (!parent.count(y)) return std::nullopt;
  std::vector<Move> rev;
  for (Word w = y; w != x;) {
    auto& [u, m] = parent.at(w);
    rev.push_back(m);
    w = u;
  }
  return Path{x, {rev.rbegin(), rev.rend()}};
}

Path rewrite_path_for_i(const IndexSet& J, int i) {
  Path s = fr_path(J, i, Endpoint::source);
  Path t = fr_path(J, i, Endpoint::sink);
  auto mid = oriented_path(s.end(), t.end(), true);
  if (!mid) throw std::logic_error("rewrite_path_for_i: no oriented path fixing the last letter");
  Path p = s;
  p.append(*mid);
  p.append(t.reversed());
  return p;
}

CycleCensus classify_cycles(const ExpandedGraph& g) {
  CycleCensus c;
  long square_incidences = 0;
  for (const Word& w : g.vertices) {
    auto ms = applicable_moves(w);
    for (std::size_t p = 0; p < ms.size(); ++p)
      for (std::size_t q = p + 1; q < ms.size(); ++q) {
        int e1 = ms[p].pos + move_len(ms[p].kind), e2 = ms[q].pos + move_len(ms[q].kind);
        if (e1 <= ms[q].pos || e2 <= ms[p].pos) ++square_incidences;
      }
    int n = static_cast<int>(w.size());
    for (int p = 0; p + 3 <= n; ++p) {
      int x = w[p], y = w[p + 1], z = w[p + 2];
      if (x < y && y < z && distant_letters(x, y) && distant_letters(y, z) && distant_letters(x, z)) ++c.distant_hexagons;
    }
    for (int p = 0; p + 4 <= n; ++p) {
      int x = w[p], y = w[p + 1], k = w[p + 3];
      if (w[p + 2] == x && y == x + 1 && distant_letters(k, x) && distant_letters(k, y)) ++c.distant_octagons;
    }
    for (int p = 0; p + 6 <= n; ++p) {
      int a = w[p];
      Word pat{a, a + 1, a, a + 2, a + 1, a};
      if (std::equal(pat.begin(), pat.end(), w.begin() + p)) ++c.zamolodchikov;
    }
  }
  c.disjoint_squares = static_cast<int>(square_incidences / 4);
  return c;
}

std::string to_dot(const ExpandedGraph& g, const ConflatedGraph* c) {
  std::ostringstream os;
  os << "digraph G {\n";
  if (!c) {
    for (std::size_t k = 0; k < g.vertices.size(); ++k) os << "  v" << k << " [label=\"" << word_str(g.vertices[k]) << "\"];\n";
    for (auto& e : g.edges) {
      if (e.kind == MoveKind::Distant) {
        os << "  v" << e.u << " -> v" << e.v << " [style=dashed, dir=none];\n";
      } else {
        int a = e.u, b = e.v;
        if (!move_is_oriented(g.vertices[a], {e.pos, e.kind})) std::swap(a, b);
        os << "  v" << a << " -> v" << b << ";\n";
      }
    }
  } else {
    auto s = c->sources(), t = c->sinks();
    for (std::size_t k = 0; k < c->reps.size(); ++k) {
      os << "  c" << k << " [label=\"" << word_str(c->reps[k]) << "\"";
      if (std::count(s.begin(), s.end(), static_cast<int>(k))) os << ", shape=box";
      if (std::count(t.begin(), t.end(), static_cast<int>(k))) os << ", shape=doublecircle";
      os << "];\n";
    }
    for (auto& a : c->arrows) os << "  c" << a.from << " -> c" << a.to << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_json(const ExpandedGraph& g, const ConflatedGraph& c, bool conflated) {
  using nlohmann::json;
  json j;
  j["vertices"] = json::array();
  j["edges"] = json::array();
  if (conflated) {
    for (auto& r : c.reps) j["vertices"].push_back(r);
    for (auto& a : c.arrows)
      j["edges"].push_back({{"u", a.from}, {"v", a.to}, {"kind", "adjacent"}, {"pos", g.edges[a.edge].pos}});
  } else {
    for (auto& w : g.vertices) j["vertices"].push_back(w);
    for (auto& e : g.edges)
      j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"kind", e.kind == MoveKind::Adjacent ? "adjacent" : "distant"}, {"pos", e.pos}});
  }
  auto s = c.sources(), t = c.sinks();
  j["source"] = s.size() == 1 ? json(c.reps[s[0]]) : json(nullptr);
  j["sink"] = t.size() == 1 ? json(c.reps[t[0]]) : json(nullptr);
  return j.dump();
}

}  // namespace soergel
