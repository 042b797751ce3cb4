#ifndef OFS_CALCULUS_HPP
#define OFS_CALCULUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ofs/axioms.hpp"
#include "ofs/morphism.hpp"
#include "ofs/structure.hpp"

// The graded tensor calculus on face structures: size and principality,
// k-domains and k-codomains with their inclusions, the k-tensor with its
// two injections, cut enumeration / splitting, and the law checkers.

namespace ofs {

// size(S)_n = |S_n - delta(S_{n+1} minus loops)|, trailing zeros trimmed.
using SizeVector = std::vector<int>;

SizeVector size_vector(const Ofs& s);
// s < t iff some entry is smaller and all higher entries agree.
bool size_less(const SizeVector& s, const SizeVector& t);
bool is_principal(const Ofs& s);

// A k-domain or k-codomain together with its inclusion into the ambient
// structure.  The structure may be an interface with relaxed loop-filling
// at its top dimension (flagged on the structure itself).
struct Interface {
  Ofs structure;
  Morphism inclusion;  // structure -> ambient
};

Interface k_domain(const Ofs& s, int k);
Interface k_codomain(const Ofs& s, int k);

struct TensorResult {
  Ofs object;
  Morphism kappa1;  // first component -> object
  Morphism kappa2;  // second component -> object
  int level = 0;
};

// Glues s and sp along the unique iso c_k(s) ~ d_k(sp).  Throws
// InterfaceMismatch when no such iso exists and CompletionConflict when no
// axiom-consistent order completion of the glued structure exists.
TensorResult tensor(const Ofs& s, const Ofs& sp, int k,
                    Dim0Linearity mode = Dim0Linearity::Strict);

struct Cut {
  int level = 0;
  std::vector<FaceId> lower;  // the faces of dimension > level on the S-down side
  FaceId witness;             // a level-dimensional interface face
};

// All cuts defining proper decompositions: split succeeds, both parts are
// valid and strictly smaller, and the tensor of the parts is iso to s.
std::vector<Cut> enumerate_cuts(const Ofs& s,
                                Dim0Linearity mode = Dim0Linearity::Strict);

// Throws InvalidCut unless the cut defines a proper decomposition.
std::pair<Ofs, Ofs> split(const Ofs& s, const Cut& cut,
                          Dim0Linearity mode = Dim0Linearity::Strict);

struct LawReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// (a) d/c composition laws for all k < l <= dim(s), object- and arrow-level.
LawReport check_dc_laws(const Ofs& s);
// (b) unit laws d_k(s) tensor_k s ~ s and s tensor_k c_k(s) ~ s for k < dim.
LawReport check_unit_laws(const Ofs& s);
// (c) associativity on a composable triple.
LawReport check_associativity(const Ofs& a, const Ofs& b, const Ofs& c, int k);
// (d) middle exchange for k < l on a composable quadruple.
LawReport check_middle_exchange(const Ofs& r, const Ofs& rp, const Ofs& s,
                                const Ofs& sp, int k, int l);
// (e) domains/codomains of a tensor.
LawReport check_dc_of_tensor(const Ofs& s, const Ofs& sp, int l);

// Pushout test in a chosen morphism class: pairs of maps out of the two
// components that agree on the interface must correspond bijectively to
// maps out of the glued object.
bool check_pushout(const TensorResult& square, const Ofs& probe,
                   MorphKind kind);

// The three factorization clauses for a principal probe against a tensor
// square: every local map factors through kappa1 or kappa2; kappa1
// factorizations are unique; when both kinds exist a factorization through
// the interface exists; two distinct kappa2 factorizations force a kappa1
// factorization.
LawReport check_factorization(const TensorResult& square, const Ofs& principal);

}  // namespace ofs

#endif
