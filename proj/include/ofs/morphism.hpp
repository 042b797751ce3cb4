#ifndef OFS_MORPHISM_HPP
#define OFS_MORPHISM_HPP

#include <string>
#include <vector>

#include "ofs/structure.hpp"

// Morphisms of face structures: plain hypergraph maps, monotone maps
// (preserving tilde), local maps (order-isos on each domain fiber), and
// isomorphisms, plus hom-set enumeration and principal covers.

namespace ofs {

struct Morphism {
  Ofs source;
  Ofs target;
  // map[k][i] = index in target level k of the image of source face (k,i).
  std::vector<std::vector<int>> map;

  int apply(int k, int i) const { return map[k][i]; }
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

enum class MorphKind { Hypergraph, Monotone, Local, Iso };

struct MorphCheck {
  bool ok = true;
  std::string detail;  // first violated clause, with faces
};

Morphism identity(const Ofs& s);
MorphCheck check_morphism(const Morphism& f, MorphKind kind);

// f then g; throws NotComposable when target(f) != source(g).
Morphism compose(const Morphism& f, const Morphism& g);

// Complete duplicate-free list of morphisms of the kind, in a deterministic
// order (backtracking by dimension then index).
std::vector<Morphism> enumerate_homs(const Ofs& s, const Ofs& t,
                                     MorphKind kind);

// The principal cover of a face: the downward gamma/delta closure of `a`
// with inherited tilde, together with its inclusion into s.
struct PrincipalCover {
  Ofs shape;
  FaceId top;     // the top face of the shape
  Morphism map;   // local map shape -> s sending top to a
};

PrincipalCover principal_cover(const Ofs& s, FaceId a);

// One element per face of s: the full principal cocone over s.
std::vector<PrincipalCover> principal_cocone(const Ofs& s);

}  // namespace ofs

#endif
