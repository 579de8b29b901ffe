#pragma once

#include <array>
#include <string>
#include <vector>

#include "qfs/words.hpp"

namespace qfs {

struct CuffRef {
  int pants = 0;
  int cuff = 0;  // 0, 1 or 2

  friend bool operator==(const CuffRef&, const CuffRef&) = default;
};

struct Gluing {
  std::string curve;
  std::array<CuffRef, 2> ends;
};

/// Trivalent gluing graph: pants are vertices, decomposition curves are edges.
/// Both ends of a gluing may sit on the same pants.
struct PantsDecompositionGraph {
  int genus = 2;
  int pants_count = 2;
  std::vector<Gluing> gluings;

  int curve_count() const { return static_cast<int>(gluings.size()); }
  int curve_index(const std::string& label) const;
};

/// Throws MalformedGraph unless the counts match the genus, every cuff is
/// used exactly once and the graph is connected.
void validate(const PantsDecompositionGraph& g);

/// 2-complex of the surface built from the gluing graph. Each pants has a
/// centre vertex joined by a spoke to a base point on each cuff; each cuff
/// carries a loop edge; each gluing is an edge between the two cuff base
/// points. Edge ids are 1-based so that a signed id is a path letter.
struct CellComplex {
  enum class Kind { spoke, cuff, gluing };
  struct Edge {
    int src = 0;
    int dst = 0;
    Kind kind = Kind::spoke;
    CuffRef cuff;   // spoke and cuff edges
    int curve = -1; // gluing edges: index into the graph's gluings
  };

  int vertex_count = 0;
  std::vector<Edge> edges;          // edges[e - 1] is edge e
  std::vector<Word> faces;          // boundary words in signed edge ids
  std::vector<Word> tree_path;      // per vertex, spanning-tree path from vertex 0
  std::vector<bool> in_tree;        // per edge id (index 0 unused)

  static int centre(int pants) { return 4 * pants; }
  static int base_point(CuffRef c) { return 4 * c.pants + 1 + c.cuff; }
  int spoke(CuffRef c) const { return 6 * c.pants + 2 * c.cuff + 1; }
  int cuff_loop(CuffRef c) const { return 6 * c.pants + 2 * c.cuff + 2; }
};

CellComplex build_cell_complex(const PantsDecompositionGraph& g);

/// Standard presentation <a1, b1, ..., ag, bg | [a1, b1] ... [ag, bg]> of the
/// surface group, with a word for every decomposition curve and the recipe
/// expressing each standard generator through the edges of the cell complex.
struct SurfaceGroupPresentation {
  PantsDecompositionGraph graph;
  CellComplex complex;
  int genus = 0;
  Word relator;
  std::vector<Word> marking;            // indexed like graph.gluings

  /// Non-tree edges; raw generator r (1-based) is the loop
  /// path(src) * edge * path(dst)^-1 based at vertex 0.
  std::vector<int> raw_edges;
  /// Standard generator k (1-based letter k) as a word in raw generators.
  std::vector<Word> generator_in_raw;

  int rank() const { return 2 * genus; }
  const Word& marking_of(const std::string& curve) const;
};

/// Deterministic: gluing edges enter the spanning tree in lexicographic order
/// of their curve labels.
SurfaceGroupPresentation build_presentation(const PantsDecompositionGraph& g);

}  // namespace qfs
