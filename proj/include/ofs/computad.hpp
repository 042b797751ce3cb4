#ifndef OFS_COMPUTAD_HPP
#define OFS_COMPUTAD_HPP

#include <string>
#include <vector>

#include "ofs/calculus.hpp"
#include "ofs/gt.hpp"
#include "ofs/morphism.hpp"
#include "ofs/structure.hpp"

// The free many-to-one computad on a face structure S: its n-cells are
// iso-classes of local maps R -> S with dim(R) <= n, generated by closing
// the principal covers of S under identities and graded composition.

namespace ofs {

// A computad cell.  The shape is stored in canonical form and the map is
// rewritten along the canonicalization, so two cells are equal iff their
// levels and keys agree.  dim(shape) < level marks an identity cell.
struct Cell {
  int level = 0;
  Ofs shape;
  Morphism map;  // shape -> the generating structure
  std::string key;

  int shape_dim() const { return shape.dim(); }
};

// Canonicalizes the shape and transports the map; the key matches the one
// omega_category_of assigns to the same local map.
Cell make_computad_cell(int level, const Ofs& shape,
                        const Morphism& into_ambient);

// Complete duplicate-free list of the n-cells of the free computad on s:
// principal covers of the faces of dimension <= n, closed under
// composition along every k < n.  Sorted by key.  Throws BudgetExceeded
// when a shape outgrows the face cap or the cell count outgrows the cell
// cap (possible when s has loops, which admit arbitrarily long windings).
std::vector<Cell> cells(const Ofs& s, int n, const Budget& budget = {});

// Precomposition with the k-domain / k-codomain inclusion of the shape;
// the result lives at level k.  Requires k <= level(a).
Cell cell_domain(const Cell& a, int k);
Cell cell_codomain(const Cell& a, int k);

// The unique local map out of the tensor of the shapes restricting to a
// and b along the two injections.  Throws NotComposable when the
// k-codomain of a differs from the k-domain of b (or the shapes disagree
// on the glued interface) and propagates CompletionConflict from tensor.
Cell compose_cells(const Cell& a, const Cell& b, int k,
                   Dim0Linearity mode = Dim0Linearity::Strict);

// True iff the cell is an indeterminate: a principal shape of dimension
// exactly level(a).
bool is_indet(const Cell& a);

// Evaluates a by recursive decomposition along every cut of its shape and
// checks that all evaluation orders yield the same cell (well-definedness
// of composite evaluation; interchange makes the 2x2 grid case
// non-trivial).  Principal or 0-dimensional shapes pass vacuously.
LawReport check_cut_independence(const Cell& a,
                                 Dim0Linearity mode = Dim0Linearity::Strict);

}  // namespace ofs

#endif
