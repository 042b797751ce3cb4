#ifndef OFS_ENUMERATE_HPP
#define OFS_ENUMERATE_HPP

#include <map>
#include <vector>

#include "ofs/axioms.hpp"
#include "ofs/structure.hpp"

// Exhaustive generation of valid structures within face bounds, with a
// slower filter-everything generator and an independent planar-tree oracle
// for the dimension-3 principal catalog as cross-checks.

namespace ofs {

struct Catalog {
  // canonical representatives grouped by (dimension, total face count)
  std::map<std::pair<int, int>, std::vector<Ofs>> buckets;

  int total() const;
  std::vector<Ofs> all() const;
  std::map<std::pair<int, int>, int> counts() const;
};

// All valid structures with dim <= max_dim and at most max_faces faces, up
// to isomorphism.  Backtracking over the gamma/delta tables with axiom
// pruning; the order relations are reconstructed from their constraints
// (they are forced up to direction ties) rather than searched.
Catalog enumerate_valid(int max_dim, int max_faces,
                        Dim0Linearity mode = Dim0Linearity::Strict);

// The principal structures of exactly the given dimension.
Catalog enumerate_principal(int dim, int max_faces,
                            Dim0Linearity mode = Dim0Linearity::Strict);

// Independent oracle: enumerate every table and every order relation, then
// filter by validate.  Exponential; small bounds only.
Catalog enumerate_valid_slow(int max_dim, int max_faces,
                             Dim0Linearity mode = Dim0Linearity::Strict);

// Planar-tree oracle for principal 3-dimensional structures: each such
// structure is determined by the planar tree of its 2-cell pasting domain,
// and a tree with n nodes and f free inputs yields 2n + 2f + 3 faces.
// Returns face-count -> number of trees, for totals <= max_faces.
std::map<int, long long> tree_counts_dim3(int max_faces);

}  // namespace ofs

#endif
