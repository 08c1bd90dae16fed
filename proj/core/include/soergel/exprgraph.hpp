#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soergel/coxeter.hpp"

namespace soergel {

enum class MoveKind { Adjacent, Distant };

// a braid move applied at 0-based offset pos (leftmost changed letter)
struct Move {
  int pos;
  MoveKind kind;
  bool operator==(const Move& o) const { return pos == o.pos && kind == o.kind; }
};

// applies the move; throws std::invalid_argument if the letters do not fit
Word apply_move(const Word& w, const Move& m);
// adjacent moves are oriented when they go from i,i+1,i to i+1,i,i+1
bool move_is_oriented(const Word& w, const Move& m);

struct Path {
  Word start;
  std::vector<Move> moves;

  Word end() const;
  std::vector<Word> vertices() const;
  int length() const;  // adjacent moves only
  bool is_oriented() const;
  bool is_reverse_oriented() const;
  Path reversed() const;
  Path& append(const Path& p);  // p must start where this ends
  Path embedded(const Word& left, const Word& right) const;  // same moves inside left*word*right
};

struct GraphEdge {
  int u, v;  // u < v
  MoveKind kind;
  int pos;
};

struct ExpandedGraph {
  Perm element;
  std::vector<Word> vertices;  // lexicographic
  std::map<Word, int> index;
  std::vector<GraphEdge> edges;
  bool connected() const;
};

ExpandedGraph build_expanded(const Perm& w);
ExpandedGraph build_expanded_from_word(const Word& w);

struct ConflatedGraph {
  std::vector<int> class_of;  // per expanded vertex
  std::vector<Word> reps;  // lexicographically least word per class
  struct Arrow {
    int from, to;
    int edge;  // one witnessing expanded edge
  };
  std::vector<Arrow> arrows;  // oriented adjacent edges between classes, deduplicated
  int class_of_word(const ExpandedGraph& g, const Word& w) const;
  std::vector<int> sources() const;
  std::vector<int> sinks() const;
};

ConflatedGraph conflate(const ExpandedGraph& g);

struct SourceSink {
  int s, t;  // class ids
};
// throws std::logic_error when either is not unique
SourceSink source_sink(const ExpandedGraph& g, const ConflatedGraph& c);

enum class Vertex { sR, sL, tR, tL };
// connected J; i in J selects the spliced variants s^R_{J,i} etc
Word canonical_vertex(const IndexSet& J, Vertex which, std::optional<int> i = std::nullopt);

// distant moves only; throws if the words are not commutation equivalent
Path commute_path(const Word& from, const Word& to);
// F_{i,j} acting on i,i+1,..,j,..,i+1,i at offset
Path flip_path(int i, int j, const Word& at, int offset);
Path v_path(const IndexSet& J);
enum class Endpoint { source, sink };
// source: oriented path from s^R_J to a word ending in i
// sink: reverse oriented path from t^R_J to a word ending in i
Path fr_path(const IndexSet& J, int i, Endpoint e);
// oriented path (distant moves free) from word x to word y; BFS over the expanded graph
std::optional<Path> oriented_path(const Word& x, const Word& y, bool freeze_last = false);
Path rewrite_path_for_i(const IndexSet& J, int i);

struct CycleCensus {
  int disjoint_squares = 0;
  int distant_hexagons = 0;
  int distant_octagons = 0;
  int zamolodchikov = 0;
  bool operator==(const CycleCensus& o) const = default;
};
CycleCensus classify_cycles(const ExpandedGraph& g);

std::string to_dot(const ExpandedGraph& g, const ConflatedGraph* c = nullptr);
std::string to_json(const ExpandedGraph& g, const ConflatedGraph& c, bool conflated);

// i -> a+b-i on a word
Word dynkin_flip(const Word& w, int a, int b);

}  // namespace soergel
