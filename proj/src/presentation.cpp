#include "qfs/presentation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "qfs/errors.hpp"

namespace qfs {

int PantsDecompositionGraph::curve_index(const std::string& label) const {
  for (std::size_t k = 0; k < gluings.size(); ++k)
    if (gluings[k].curve == label) return static_cast<int>(k);
  return -1;
}

const Word& SurfaceGroupPresentation::marking_of(const std::string& curve) const {
  const int k = graph.curve_index(curve);
  if (k < 0) throw UnknownGenerator("unknown curve '" + curve + "'");
  return marking[static_cast<std::size_t>(k)];
}

void validate(const PantsDecompositionGraph& g) {
  if (g.genus < 2) throw MalformedGraph("genus must be at least 2");
  if (g.pants_count != 2 * g.genus - 2)
    throw MalformedGraph("expected " + std::to_string(2 * g.genus - 2) + " pants, got " + std::to_string(g.pants_count));
  if (g.curve_count() != 3 * g.genus - 3)
    throw MalformedGraph("expected " + std::to_string(3 * g.genus - 3) + " gluings, got " +
                         std::to_string(g.curve_count()));
  std::vector<int> used(static_cast<std::size_t>(3 * g.pants_count), 0);
  std::set<std::string> labels;
  std::vector<int> parent(static_cast<std::size_t>(g.pants_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Gluing& gl : g.gluings) {
    if (!labels.insert(gl.curve).second) throw MalformedGraph("duplicate curve label '" + gl.curve + "'");
    for (const CuffRef& c : gl.ends) {
      if (c.pants < 0 || c.pants >= g.pants_count || c.cuff < 0 || c.cuff > 2)
        throw MalformedGraph("curve '" + gl.curve + "' refers to a missing cuff");
      if (++used[static_cast<std::size_t>(3 * c.pants + c.cuff)] > 1)
        throw MalformedGraph("cuff (" + std::to_string(c.pants) + ", " + std::to_string(c.cuff) + ") glued twice");
    }
    parent[find(gl.ends[0].pants)] = find(gl.ends[1].pants);
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) throw MalformedGraph("a cuff is left unglued");
  for (int p = 0; p < g.pants_count; ++p)
    if (find(p) != find(0)) throw MalformedGraph("gluing graph is disconnected");
}

CellComplex build_cell_complex(const PantsDecompositionGraph& g) {
  CellComplex cx;
  const int M = g.pants_count;
  cx.vertex_count = 4 * M;
  for (int p = 0; p < M; ++p)
    for (int i = 0; i < 3; ++i) {
      const CuffRef c{p, i};
      cx.edges.push_back({CellComplex::centre(p), CellComplex::base_point(c), CellComplex::Kind::spoke, c, -1});
      cx.edges.push_back({CellComplex::base_point(c), CellComplex::base_point(c), CellComplex::Kind::cuff, c, -1});
    }

  std::vector<int> order(static_cast<std::size_t>(g.curve_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.gluings[a].curve < g.gluings[b].curve; });
  std::vector<int> gluing_edge(order.size());
  for (int k : order) {
    const Gluing& gl = g.gluings[static_cast<std::size_t>(k)];
    cx.edges.push_back({CellComplex::base_point(gl.ends[0]), CellComplex::base_point(gl.ends[1]),
                        CellComplex::Kind::gluing, {}, k});
    gluing_edge[static_cast<std::size_t>(k)] = static_cast<int>(cx.edges.size());
  }

  for (int p = 0; p < M; ++p) {
    Word f;
    for (int i = 0; i < 3; ++i) {
      const CuffRef c{p, i};
      f.insert(f.end(), {cx.spoke(c), cx.cuff_loop(c), -cx.spoke(c)});
    }
    cx.faces.push_back(f);
  }
  for (int k = 0; k < g.curve_count(); ++k) {
    const Gluing& gl = g.gluings[static_cast<std::size_t>(k)];
    const int e = gluing_edge[static_cast<std::size_t>(k)];
    cx.faces.push_back({-cx.cuff_loop(gl.ends[0]), e, -cx.cuff_loop(gl.ends[1]), -e});
  }

  // Breadth-first spanning tree from vertex 0, neighbours in edge-id order.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(cx.vertex_count));
  for (int e = 1; e <= static_cast<int>(cx.edges.size()); ++e) {
    const auto& ed = cx.edges[static_cast<std::size_t>(e - 1)];
    adj[static_cast<std::size_t>(ed.src)].push_back({e, ed.dst});
    adj[static_cast<std::size_t>(ed.dst)].push_back({-e, ed.src});
  }
  cx.in_tree.assign(cx.edges.size() + 1, false);
  cx.tree_path.assign(static_cast<std::size_t>(cx.vertex_count), Word{});
  std::vector<bool> seen(static_cast<std::size_t>(cx.vertex_count), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto [e, w] : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      cx.in_tree[static_cast<std::size_t>(std::abs(e))] = true;
      cx.tree_path[static_cast<std::size_t>(w)] = cx.tree_path[static_cast<std::size_t>(v)];
      cx.tree_path[static_cast<std::size_t>(w)].push_back(e);
      queue.push_back(w);
    }
  }
  return cx;
}

namespace {

// A one-relator word together with the change of basis accumulated while
// rewriting it: `cur_in_raw[x]` expresses current generator x in the raw
// generators and `raw_in_cur[r]` the converse.
struct Rewrite {
  Word word;
  std::map<int, Word> cur_in_raw;
  std::map<int, Word> raw_in_cur;

  Word to_raw(const Word& w) const {
    Word out;
    for (int y : w) {
      const Word& r = cur_in_raw.at(std::abs(y));
      if (y > 0)
        out.insert(out.end(), r.begin(), r.end());
      else {
        const Word ri = inverse(r);
        out.insert(out.end(), ri.begin(), ri.end());
      }
    }
    return out;
  }

  void invert(int g) {
    const std::map<int, Word> s{{g, Word{-g}}};
    word = substitute(word, s);
    cur_in_raw[g] = inverse(cur_in_raw[g]);
    for (auto& [k, v] : raw_in_cur) v = substitute(v, s);
  }

  // Each x in xs becomes the new generator L x R; L and R avoid xs.
  void move(const std::vector<int>& xs, const Word& L, const Word& R) {
    std::map<int, Word> s;
    for (int x : xs) s[x] = concat(concat(inverse(L), Word{x}), inverse(R));
    const Word next = substitute(word, s);
    if (next.size() != word.size()) throw Error("internal: Nielsen move changed the relator length");
    word = next;
    const Word Lr = to_raw(L), Rr = to_raw(R);
    for (int x : xs) cur_in_raw[x] = free_reduce(concat(concat(Lr, cur_in_raw[x]), Rr));
    for (auto& [k, v] : raw_in_cur) v = substitute(v, s);
  }

  std::size_t cost() const {
    std::size_t n = 0;
    for (const auto& [k, v] : cur_in_raw) n += v.size();
    return n;
  }
};

std::vector<std::pair<int, int>> linked_pairs(const Word& W, std::size_t done) {
  const Word R(W.begin() + static_cast<std::ptrdiff_t>(done), W.end());
  std::map<int, std::size_t> pos;
  for (std::size_t k = 0; k < R.size(); ++k) pos[R[k]] = k;
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < R.size(); ++k) {
    const std::size_t kinv = pos.at(-R[k]);
    if (kinv < k) continue;
    for (std::size_t j = k + 1; j < kinv; ++j)
      if (pos.at(-R[j]) > kinv) out.push_back({R[k], R[j]});
  }
  return out;
}

// Brings the linked pair (x, y) to the front of the unprocessed suffix as the
// commutator x y x^-1 y^-1.
void split_off_commutator(Rewrite& rw, std::size_t done, int x, int y) {
  if (x < 0) {
    rw.invert(-x);
    x = -x;
  }
  if (y < 0) {
    rw.invert(-y);
    y = -y;
  }
  auto slice = [&](int from, int to) {
    const Word R(rw.word.begin() + static_cast<std::ptrdiff_t>(done), rw.word.end());
    std::map<int, std::ptrdiff_t> pos;
    for (std::size_t k = 0; k < R.size(); ++k) pos[R[k]] = static_cast<std::ptrdiff_t>(k);
    const std::ptrdiff_t a = from == 0 ? 0 : pos.at(from) + 1;
    return Word(R.begin() + a, R.begin() + pos.at(to));
  };
  rw.move({x}, {}, slice(x, y));      // D x A y ...      -> x := x A
  rw.move({y}, {}, slice(y, -x));     // D x y B x^-1 ... -> y := y B
  rw.move({x}, inverse(slice(-x, -y)), {});  // x := C^-1 x
  const Word E = slice(0, x);
  rw.move({x, y}, E, inverse(E));     // conjugate both by the prefix
  const Word& w = rw.word;
  if (!(w[done] == x && w[done + 1] == y && w[done + 2] == -x && w[done + 3] == -y))
    throw Error("internal: commutator normalization failed");
}

struct Search {
  std::size_t budget = 200000;
  std::size_t leaves = 0;
  bool have = false;
  std::size_t best_cost = 0;
  Rewrite best;

  void run(const Rewrite& rw, std::size_t done) {
    if (done == rw.word.size()) {
      ++leaves;
      if (!have || rw.cost() < best_cost) {
        have = true;
        best_cost = rw.cost();
        best = rw;
      }
      return;
    }
    const auto pairs = linked_pairs(rw.word, done);
    if (pairs.empty()) throw Error("internal: relator has no linked pair");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i > 0 && leaves >= budget) break;
      Rewrite next = rw;
      split_off_commutator(next, done, pairs[i].first, pairs[i].second);
      run(next, done + 4);
    }
  }
};

}  // namespace

SurfaceGroupPresentation build_presentation(const PantsDecompositionGraph& g) {
  validate(g);
  SurfaceGroupPresentation out;
  out.graph = g;
  out.genus = g.genus;
  out.complex = build_cell_complex(g);
  const CellComplex& cx = out.complex;

  auto drop_tree = [&](const Word& w) {
    Word o;
    for (int x : w)
      if (!cx.in_tree[static_cast<std::size_t>(std::abs(x))]) o.push_back(x);
    return free_reduce(o);
  };

  std::vector<Word> faces;
  for (const Word& f : cx.faces) faces.push_back(cyclic_reduce(drop_tree(f)));
  std::vector<Word> marks;
  for (const Gluing& gl : g.gluings) {
    const Word& p = cx.tree_path[static_cast<std::size_t>(CellComplex::base_point(gl.ends[0]))];
    marks.push_back(drop_tree(concat(concat(p, Word{cx.cuff_loop(gl.ends[0])}), inverse(p))));
  }

  // Merge faces along shared edges until a single relator is left.
  std::set<int> live;
  for (int e = 1; e <= static_cast<int>(cx.edges.size()); ++e)
    if (!cx.in_tree[static_cast<std::size_t>(e)]) live.insert(e);
  while (faces.size() > 1) {
    int edge = 0;
    std::size_t fa = 0, ka = 0, fb = 0, kb = 0;
    for (int e : live) {
      std::vector<std::pair<std::size_t, std::size_t>> hits;
      for (std::size_t fi = 0; fi < faces.size(); ++fi)
        for (std::size_t k = 0; k < faces[fi].size(); ++k)
          if (std::abs(faces[fi][k]) == e) hits.push_back({fi, k});
      if (hits.size() == 2 && hits[0].first != hits[1].first) {
        edge = e;
        std::tie(fa, ka) = hits[0];
        std::tie(fb, kb) = hits[1];
        break;
      }
    }
    if (edge == 0) throw MalformedGraph("faces of the surface complex cannot be merged");
    if (faces[fa][ka] < 0) {
      std::swap(fa, fb);
      std::swap(ka, kb);
    }
    if (faces[fa][ka] != edge || faces[fb][kb] != -edge) throw MalformedGraph("surface complex is not orientable");
    Word A = faces[fa], B = faces[fb];
    std::rotate(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(ka), A.end());
    std::rotate(B.begin(), B.begin() + static_cast<std::ptrdiff_t>(kb), B.end());
    const Word X(A.begin() + 1, A.end()), Y(B.begin() + 1, B.end());
    const std::map<int, Word> s{{edge, inverse(X)}};
    for (Word& m : marks) m = substitute(m, s);
    live.erase(edge);
    std::vector<Word> next;
    for (std::size_t fi = 0; fi < faces.size(); ++fi)
      if (fi != fa && fi != fb) next.push_back(faces[fi]);
    next.push_back(cyclic_reduce(concat(X, Y)));
    faces = std::move(next);
  }
  const Word& surface_word = faces.front();
  if (live.size() != static_cast<std::size_t>(2 * g.genus) || surface_word.size() != static_cast<std::size_t>(4 * g.genus))
    throw MalformedGraph("surface relator has the wrong shape");

  // Raw generators 1..2g in increasing edge order.
  out.raw_edges.assign(live.begin(), live.end());
  std::map<int, Word> to_raw_letter;
  for (std::size_t r = 0; r < out.raw_edges.size(); ++r) to_raw_letter[out.raw_edges[r]] = {static_cast<int>(r + 1)};
  const Word raw_word = substitute(surface_word, to_raw_letter);
  for (Word& m : marks) m = substitute(m, to_raw_letter);

  // Nielsen-normalize to a product of commutators, searching over starting
  // rotations and linked-pair choices for the shortest generator words.
  Rewrite start;
  for (int r = 1; r <= 2 * g.genus; ++r) {
    start.cur_in_raw[r] = {r};
    start.raw_in_cur[r] = {r};
  }
  Search search;
  for (std::size_t rot = 0; rot < raw_word.size(); ++rot) {
    Rewrite rw = start;
    rw.word = raw_word;
    std::rotate(rw.word.begin(), rw.word.begin() + static_cast<std::ptrdiff_t>(rot), rw.word.end());
    search.run(rw, 0);
  }
  const Rewrite& best = search.best;

  std::map<int, Word> relabel;
  out.generator_in_raw.assign(static_cast<std::size_t>(2 * g.genus), Word{});
  for (int i = 0; i < g.genus; ++i) {
    const int x = best.word[static_cast<std::size_t>(4 * i)];
    const int y = best.word[static_cast<std::size_t>(4 * i + 1)];
    relabel[x] = {2 * i + 1};
    relabel[y] = {2 * i + 2};
    out.generator_in_raw[static_cast<std::size_t>(2 * i)] = best.cur_in_raw.at(x);
    out.generator_in_raw[static_cast<std::size_t>(2 * i + 1)] = best.cur_in_raw.at(y);
  }
  out.relator = substitute(best.word, relabel);
  for (const Word& m : marks) {
    Word w = cyclic_reduce(substitute(substitute(m, best.raw_in_cur), relabel));
    if (w.empty()) throw MalformedGraph("decomposition curve is null-homotopic");
    out.marking.push_back(std::move(w));
  }
  return out;
}

}  // namespace qfs
