#ifndef OFS_STRUCTURE_HPP
#define OFS_STRUCTURE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Graded face structures: finite sets of faces per dimension, a codomain
// function gamma, a domain relation delta (a set of faces one dimension
// down, or a single empty-face marker), and a strict order `tilde` per
// dimension.  Empty faces 1_u are never stored; they are synthesized from
// their base face on demand.

namespace ofs {

struct OfsError : std::runtime_error {
  std::string code;
  OfsError(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

// A face of dimension `level` is identified by (level, index).
struct FaceId {
  int level = 0;
  int index = 0;
  friend auto operator<=>(const FaceId&, const FaceId&) = default;
};

// Element of S_k ∪ 1_{S_{k-1}}: a real k-face index, or an empty face on a
// (k-1)-face.  Encoded as index<<1 | is_empty.
using Ext = int;
constexpr Ext real_ext(int i) { return i << 1; }
constexpr Ext empty_ext(int base) { return (base << 1) | 1; }
constexpr bool is_empty_ext(Ext e) { return (e & 1) != 0; }
constexpr int ext_index(Ext e) { return e >> 1; }

// Sorted, duplicate-free set of Ext values at one level.
using ExtSet = std::vector<Ext>;

ExtSet ext_union(const ExtSet& a, const ExtSet& b);
ExtSet ext_intersect(const ExtSet& a, const ExtSet& b);
ExtSet ext_minus(const ExtSet& a, const ExtSet& b);
bool ext_contains(const ExtSet& a, Ext e);
void ext_insert(ExtSet& a, Ext e);

// delta of a k-face (k >= 1): either a non-empty set of (k-1)-faces, or a
// single empty face 1_base with base a (k-2)-face (only possible for k >= 2).
struct Delta {
  bool empty_dom = false;
  int base = -1;            // (k-2)-face index when empty_dom
  std::vector<int> faces;   // sorted (k-1)-face indices otherwise
  friend auto operator<=>(const Delta&, const Delta&) = default;
};

using TildePairs = std::vector<std::pair<int, int>>;  // sorted

struct OrderedFaceStructure {
  // names[k] lists the non-empty k-faces; names.size() == dim()+1.
  std::vector<std::vector<std::string>> names;
  // gamma[k][i] is the (k-1)-face index of gamma of face (k,i); gamma[0] empty.
  std::vector<std::vector<int>> gamma;
  std::vector<std::vector<Delta>> delta;  // delta[0] empty
  std::vector<TildePairs> tilde;          // tilde[k]: pairs (a,b) with a <~ b
  // Interface structures may leave loops unfilled at the top dimension.
  bool relaxed_top = false;

  int dim() const { return static_cast<int>(names.size()) - 1; }
  int count(int k) const {
    return (k >= 0 && k < static_cast<int>(names.size()))
               ? static_cast<int>(names[k].size())
               : 0;
  }
  int total_faces() const;
  bool tilde_has(int k, int a, int b) const;

  // Drops empty top levels and re-sorts delta/tilde entries.
  void normalize();

  friend bool operator==(const OrderedFaceStructure&,
                         const OrderedFaceStructure&) = default;
};

using Ofs = OrderedFaceStructure;

// Raw build tables (External-interface flavored; name based).
struct RawDelta {
  std::optional<std::string> empty_base;  // set: delta = {1_base}
  std::vector<std::string> faces;
};
struct RawStructure {
  std::vector<std::vector<std::string>> faces;  // per dimension
  std::vector<std::pair<std::string, std::string>> gamma;   // face -> face
  std::vector<std::pair<std::string, RawDelta>> delta;      // face -> delta
  std::vector<std::pair<std::string, std::string>> tilde;   // a <~ b
  bool relaxed_top = false;
};

// Structural well-formedness only; axiom validity is a separate concern.
// Throws OfsError with codes DanglingName, DuplicateName, EmptyDelta,
// DeltaMixedEmptyAndReal, MissingTable, DimensionMismatch.
Ofs build(const RawStructure& raw);

// Lookup by name across all dimensions (names are globally unique in built
// structures coming from documents; programmatic structures may shadow).
std::optional<FaceId> find_face(const Ofs& s, const std::string& name);

bool is_loop(const Ofs& s, int k, int i);

// delta / gamma with empty-face handling.  Queries at dimension 0 throw
// UnknownOperationAtDim0; unknown faces throw UnknownFace.
ExtSet delta_ext(const Ofs& s, int k, int i);       // δ(a) ⊆ S_{k-1} ∪ 1_{S_{k-2}}
std::vector<int> dot_delta(const Ofs& s, int k, int i);  // δ̇(a) = δ(a) ∩ S
std::vector<int> dot_delta_nonloop(const Ofs& s, int k, int i);  // δ̇^{-λ}(a)
ExtSet theta(const Ofs& s, int k, int i);           // δ(a) ∪ {γ(a)}
std::vector<int> dot_theta(const Ofs& s, int k, int i);
std::vector<int> iota(const Ofs& s, int k, int i);  // γδ̇^{-λ}(a) ∩ δδ̇^{-λ}(a)

// A ≡₁ B  iff  A ∪ 1_{θ(A∩S)} = B ∪ 1_{θ(B∩S)}; A,B are Ext sets at `level`.
bool one_equal(const Ofs& s, int level, const ExtSet& a, const ExtSet& b);

// Derived order relations per structure snapshot.
struct DerivedRelations {
  // lt_minus[k][a*n+b] : a <⁻ b on S_k (n = count(k)); likewise lt_plus.
  std::vector<std::vector<char>> lt_minus;
  std::vector<std::vector<char>> lt_plus;
  std::vector<std::vector<char>> loops;  // loops[k][i]

  bool minus(int k, int a, int b) const;
  bool plus(int k, int a, int b) const;
  bool perp_plus(int k, int a, int b) const { return plus(k, a, b) || plus(k, b, a); }
};

DerivedRelations derive(const Ofs& s);

// The two closure algorithms behind derive (exposed for cross-checking).
std::vector<char> transitive_closure_squaring(std::vector<char> rel, int n);
std::vector<char> transitive_closure_dfs(const std::vector<char>& rel, int n);

}  // namespace ofs

#endif
