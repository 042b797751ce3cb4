#ifndef OFS_CANONICAL_HPP
#define OFS_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ofs/structure.hpp"

// Canonical forms up to isomorphism.  Valid structures are rigid (they have
// no non-trivial automorphisms), so the canonical representative is unique
// and two structures are isomorphic iff their keys are equal.

namespace ofs {

// perm[k][old_index] = new_index, one permutation per level.
using LevelPerm = std::vector<std::vector<int>>;

// Rebuilds s with faces reindexed by perm and renamed to the scheme
// "f<level>_<index>".
Ofs relabel(const Ofs& s, const LevelPerm& perm);

// Applies an arbitrary renaming without reindexing (for iso-invariance
// tests); names must stay unique.
Ofs rename(const Ofs& s, const std::vector<std::vector<std::string>>& names);

struct CanonicalForm {
  Ofs structure;     // the canonical representative (relabelled s)
  LevelPerm perm;    // the relabeling that produced it
  std::string key;   // iso-invariant encoding of `structure`
};

CanonicalForm canonical_form(const Ofs& s);
std::string canonical_key(const Ofs& s);

// Face-level isomorphism S -> T, or nullopt.  Derived from the two
// canonical relabelings.
std::optional<LevelPerm> find_iso(const Ofs& s, const Ofs& t);

// Brute-force list of all hypergraph+tilde isomorphisms S -> T (used to
// certify rigidity and that find_iso misses nothing).
std::vector<LevelPerm> all_isos(const Ofs& s, const Ofs& t);

}  // namespace ofs

#endif
