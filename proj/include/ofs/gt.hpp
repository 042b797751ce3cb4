#ifndef OFS_GT_HPP
#define OFS_GT_HPP

#include <functional>
#include <string>
#include <vector>

#include "ofs/calculus.hpp"
#include "ofs/morphism.hpp"
#include "ofs/structure.hpp"

// Graded tensor theories as finite-fragment instances, their generic
// models, and the free omega-category presentation a model generates.

namespace ofs {

// An instance supplies canonical objects on demand (materialized fragments
// of an infinite category) plus the morphism flavor its generic model
// evaluates with.  Domains, codomains, and tensors are the graded calculus
// operations, which both built-in instances share.
struct GtInstance {
  std::string name;
  // Canonical objects of dimension <= dim with at most max_faces faces.
  std::function<std::vector<Ofs>(int dim, int max_faces)> objects;
  MorphKind model_kind = MorphKind::Local;
};

// Finite linear graphs [n]: the chains, with dimension 0 or 1, endpoint
// domains/codomains, and [n] tensor_0 [m] = [n+m].  Models evaluate with
// plain hypergraph maps (graph morphisms).
GtInstance delta0_instance();

// The face-structure instance itself; models evaluate with local maps.
GtInstance ofs_instance();

// Instance-generic law suite: d/c composition and unit laws per object,
// domains/codomains of tensors and associativity over the composable
// pairs/triples in the fragment (capped at max_tuples of each kind).
LawReport check_gt_laws(const GtInstance& inst, int dim, int max_faces,
                        int max_tuples = 200);

// ---------------------------------------------------------------------------
// Free omega-categories from a model (the generic model evaluated at an
// ambient object): n-cells are ambient maps out of instance objects of
// dimension n, identified up to the unique iso between shapes.

struct Budget {
  int max_object_faces = 13;  // face cap on shapes considered
  int max_cells_per_level = 10000;
};

// A cell: an ambient map out of a canonical shape.  Cells are equal iff
// their keys are equal (canonical shape plus the image tables).
struct GtCell {
  Ofs shape;
  Morphism map;  // shape -> ambient
  std::string key;
};

// Canonicalizes the shape, transports the map, computes the key.
GtCell make_cell(const Ofs& shape, const Morphism& into_ambient);

struct OmegaCategory {
  Ofs ambient;
  MorphKind kind = MorphKind::Local;
  std::vector<std::vector<GtCell>> cells;  // grouped by shape dimension
  int total() const;
};

// Enumerates every cell with shape dimension <= n_max.  Throws
// "BudgetExceeded" when shapes at the face cap still admit maps (the free
// structure is then potentially infinite, e.g. a graph with directed
// cycles) or a level outgrows the cell cap.
OmegaCategory omega_category_of(const GtInstance& inst, const Ofs& ambient,
                                int n_max, const Budget& budget = {});

// Boundary and composition of cells (pure; composition throws
// NotComposable when the k-boundaries of the two cells differ).
GtCell cell_boundary(const GtCell& a, int k, bool domain);
GtCell cell_compose(const GtCell& a, const GtCell& b, int k,
                    Dim0Linearity mode = Dim0Linearity::Strict);

// Omega-category laws on an enumerated cell set: boundary composition
// equations, boundary compatibility of composites, and associativity over
// the composable pairs/triples found (capped).
LawReport check_omega_laws(const OmegaCategory& oc, int max_tuples = 500,
                           Dim0Linearity mode = Dim0Linearity::Strict);

// Independent oracle for free categories on a graph (dimension <= 1
// ambient): identities plus directed paths, counted by length-bounded
// dynamic programming.  Throws "BudgetExceeded" past max_len steps.
long long free_category_cell_count(const Ofs& graph, int max_len = 64);

// ---------------------------------------------------------------------------
// Finite models: a contravariant evaluation of shapes into finite sets of
// ambient maps.  Model status means tensor squares become pullbacks.

struct FiniteModel {
  Ofs ambient;
  MorphKind kind = MorphKind::Local;
  // Evaluation override for mutation tests; defaults to enumerate_homs
  // into `ambient` with `kind`.
  std::function<std::vector<Morphism>(const Ofs&)> eval;
};

LawReport check_is_model(const FiniteModel& m,
                         const std::vector<TensorResult>& squares);

}  // namespace ofs

#endif
