#ifndef OFS_AXIOMS_HPP
#define OFS_AXIOMS_HPP

#include <string>
#include <vector>

#include "ofs/structure.hpp"

// Validity of an ordered face structure: the six axioms on top of the
// structural well-formedness enforced by build().

namespace ofs {

enum class Axiom {
  Globularity,
  LocalDiscreteness,
  Strictness,
  Disjointness,
  PencilLinearity,
  LoopFilling,
};

const char* axiom_name(Axiom a);

// How linearity at dimension 0 is interpreted.  Strict requires the plus
// order itself to be linear on 0-faces.  Combined only requires the
// transitive closure of (plus ∪ tilde) on 0-faces to be linear, which
// admits structures that are disjoint unions of 0-dimensional chains.
enum class Dim0Linearity { Strict, Combined };

// A failed clause, pinned to the faces it was evaluated on, so it can be
// re-evaluated independently of the full validation pass.
struct AxiomWitness {
  Axiom axiom;
  std::string clause;          // which clause of the axiom failed
  std::vector<FaceId> faces;   // the faces the clause quantifies over
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomWitness> failures;
  bool ok() const { return failures.empty(); }
  bool axiom_ok(Axiom a) const;
};

AxiomReport validate(const Ofs& s, Dim0Linearity mode = Dim0Linearity::Strict);

inline bool is_valid(const Ofs& s, Dim0Linearity mode = Dim0Linearity::Strict) {
  return validate(s, mode).ok();
}

// Re-evaluates the single clause recorded in the witness; returns true if
// the clause holds (i.e. the witness no longer demonstrates a failure).
bool recheck(const Ofs& s, const AxiomWitness& w,
             Dim0Linearity mode = Dim0Linearity::Strict);

// Individual clauses that do not depend on tilde, exposed so the enumerator
// can prune partially-built structures with exactly the checks that the
// final validate() pass will apply.
namespace detail {
bool clause_glob_gamma(const Ofs& s, int k, int a);
bool clause_glob_delta(const Ofs& s, int k, int a);
bool clause_loop_filled(const Ofs& s, int k, int a);
bool clause_local_discrete(const Ofs& s, const DerivedRelations& r, int k,
                           int a, int x, int y);
bool clause_dim0_linear(const Ofs& s, const DerivedRelations& r,
                        Dim0Linearity mode, int a, int b);
}  // namespace detail

}  // namespace ofs

#endif
