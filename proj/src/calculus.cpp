#include "ofs/calculus.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ofs/canonical.hpp"

namespace ofs {

namespace {

// ---- carriers: subsets of the faces of an ambient structure ----

using Keep = std::vector<std::vector<char>>;  // keep[k][i]

Keep full_keep(const Ofs& s) {
  Keep k(s.dim() + 1);
  for (int j = 0; j <= s.dim(); ++j) k[j].assign(s.count(j), 1);
  return k;
}

int top_level(const Keep& keep) {
  for (int k = static_cast<int>(keep.size()) - 1; k >= 0; --k)
    for (char c : keep[k])
      if (c) return k;
  return -1;
}

// Extracts the kept faces as a structure plus its inclusion.
Interface substructure(const Ofs& s, const Keep& keep) {
  int d = top_level(keep);
  Ofs p;
  Morphism inc;
  p.names.resize(d + 1);
  p.gamma.resize(d + 1);
  p.delta.resize(d + 1);
  p.tilde.resize(d + 1);
  inc.map.resize(d + 1);
  std::vector<std::vector<int>> to_new(d + 1);
  for (int k = 0; k <= d; ++k) {
    to_new[k].assign(s.count(k), -1);
    for (int i = 0; i < s.count(k); ++i)
      if (keep[k][i]) {
        to_new[k][i] = static_cast<int>(p.names[k].size());
        p.names[k].push_back(s.names[k][i]);
        inc.map[k].push_back(i);
      }
  }
  for (int k = 1; k <= d; ++k) {
    p.gamma[k].resize(p.names[k].size());
    p.delta[k].resize(p.names[k].size());
    for (int i = 0; i < s.count(k); ++i) {
      if (!keep[k][i]) continue;
      int ni = to_new[k][i];
      p.gamma[k][ni] = to_new[k - 1][s.gamma[k][i]];
      const Delta& dl = s.delta[k][i];
      Delta nd;
      nd.empty_dom = dl.empty_dom;
      if (dl.empty_dom) {
        nd.base = k >= 2 ? to_new[k - 2][dl.base] : -1;
      } else {
        for (int f : dl.faces) nd.faces.push_back(to_new[k - 1][f]);
      }
      if (nd.empty_dom && k >= 2 && nd.base < 0)
        throw OfsError("InvalidInput", "carrier not closed at " + s.names[k][i]);
      for (int f : nd.faces)
        if (f < 0)
          throw OfsError("InvalidInput", "carrier not closed at " + s.names[k][i]);
      if (p.gamma[k][ni] < 0)
        throw OfsError("InvalidInput", "carrier not closed at " + s.names[k][i]);
      p.delta[k][ni] = nd;
    }
  }
  for (int k = 0; k <= d; ++k)
    for (auto [a, b] : s.tilde[k])
      if (to_new[k][a] >= 0 && to_new[k][b] >= 0)
        p.tilde[k].emplace_back(to_new[k][a], to_new[k][b]);
  p.normalize();
  // unfilled loops can only sit at the top after restriction
  for (int i = 0; i < p.count(p.dim()); ++i)
    if (is_loop(p, p.dim(), i)) {
      p.relaxed_top = true;
      break;
    }
  inc.source = p;
  inc.target = s;
  return {p, inc};
}

enum class Side { Domain, Codomain };

// One step: drop the top level together with the gamma-images (domain
// side) or the dot-delta-images plus the internal iota-faces (codomain
// side) of its non-loop faces.  Everything else survives: lower-level
// faces not under the new top level, such as whiskering edges, stay part
// of the boundary.
Keep boundary_step(const Ofs& s, Keep keep, Side side) {
  int m = top_level(keep);
  if (m <= 0) throw OfsError("InvalidInput", "no level to remove");
  for (int i = 0; i < s.count(m); ++i) {
    if (!keep[m][i]) continue;
    keep[m][i] = 0;
    if (is_loop(s, m, i)) continue;
    if (side == Side::Domain) {
      keep[m - 1][s.gamma[m][i]] = 0;
    } else {
      const Delta& d = s.delta[m][i];
      if (!d.empty_dom)
        for (int f : d.faces) keep[m - 1][f] = 0;
      // internal faces sit strictly between the domain components and
      // belong to neither boundary of the composite
      if (m >= 2)
        for (int f : iota(s, m, i)) keep[m - 2][f] = 0;
    }
  }
  return keep;
}

}  // namespace

SizeVector size_vector(const Ofs& s) {
  SizeVector out(s.dim() + 1, 0);
  for (int k = 0; k <= s.dim(); ++k) {
    std::set<int> removed;
    for (int i = 0; i < s.count(k + 1); ++i)
      if (!is_loop(s, k + 1, i))
        for (int f : dot_delta(s, k + 1, i)) removed.insert(f);
    out[k] = s.count(k) - static_cast<int>(removed.size());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

bool size_less(const SizeVector& s, const SizeVector& t) {
  size_t n = std::max(s.size(), t.size());
  auto at = [](const SizeVector& v, size_t i) {
    return i < v.size() ? v[i] : 0;
  };
  for (size_t k = 0; k < n; ++k) {
    if (at(s, k) >= at(t, k)) continue;
    bool tail_equal = true;
    for (size_t l = k + 1; l < n; ++l)
      if (at(s, l) != at(t, l)) tail_equal = false;
    if (tail_equal) return true;
  }
  return false;
}

bool is_principal(const Ofs& s) {
  for (int e : size_vector(s))
    if (e > 1) return false;
  return true;
}

Interface k_domain(const Ofs& s, int k) {
  if (k < 0) throw OfsError("InvalidInput", "negative level");
  Keep keep = full_keep(s);
  while (top_level(keep) > k) keep = boundary_step(s, keep, Side::Domain);
  return substructure(s, keep);
}

Interface k_codomain(const Ofs& s, int k) {
  if (k < 0) throw OfsError("InvalidInput", "negative level");
  Keep keep = full_keep(s);
  while (top_level(keep) > k) keep = boundary_step(s, keep, Side::Codomain);
  return substructure(s, keep);
}

namespace {

// The order completion used by tensor: pairs demanded by pencil linearity
// or the boundary-disjointness biconditional get the direction of the
// one-way minus order; ties (both directions) are broken by component.
void complete_tilde(Ofs& t, const std::vector<std::vector<int>>& component,
                    Dim0Linearity mode) {
  DerivedRelations r = derive(t);
  for (int k = 1; k <= t.dim(); ++k) {
    int n = t.count(k);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (t.tilde_has(k, a, b) || t.tilde_has(k, b, a)) continue;
        if (r.perp_plus(k, a, b)) continue;
        bool mab = r.minus(k, a, b), mba = r.minus(k, b, a);
        if (!mab && !mba) continue;  // no admissible direction exists
        bool pencil = [&] {
          auto ta = dot_theta(t, k, a), tb = dot_theta(t, k, b);
          std::vector<int> common;
          std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                                std::back_inserter(common));
          if (!common.empty()) return true;
          // empty-domain pencil demands, either way around
          for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
            if (k < 2 || !t.delta[k][p].empty_dom) continue;
            int gg = t.gamma[k - 1][t.gamma[k][p]];
            auto in = iota(t, k, q);
            if (std::binary_search(in.begin(), in.end(), gg)) return true;
          }
          return false;
        }();
        bool theta_disjoint =
            ext_intersect(theta(t, k, a), theta(t, k, b)).empty();
        if (!pencil && !theta_disjoint) continue;
        if (mab && !mba) {
          t.tilde[k].emplace_back(a, b);
        } else if (mba && !mab) {
          t.tilde[k].emplace_back(b, a);
        } else if (pencil) {
          // both directions available: earlier component goes first
          if (component[k][a] <= component[k][b])
            t.tilde[k].emplace_back(a, b);
          else
            t.tilde[k].emplace_back(b, a);
        }
      }
  }
  if (mode == Dim0Linearity::Combined && t.count(0) > 1) {
    DerivedRelations r0 = derive(t);
    int n = t.count(0);
    std::vector<char> rel(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r0.plus(0, i, j) || t.tilde_has(0, i, j)) rel[i * n + j] = 1;
    auto cl = transitive_closure_dfs(rel, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || cl[a * n + b] || cl[b * n + a]) continue;
        if (component[0][a] < component[0][b]) t.tilde[0].emplace_back(a, b);
      }
  }
  // transitive closure of tilde, per level
  for (int k = 0; k <= t.dim(); ++k) {
    int n = t.count(k);
    std::vector<char> rel(n * n, 0);
    for (auto [a, b] : t.tilde[k]) rel[a * n + b] = 1;
    rel = transitive_closure_dfs(rel, n);
    t.tilde[k].clear();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (rel[a * n + b]) t.tilde[k].emplace_back(a, b);
  }
  t.normalize();
}

}  // namespace

TensorResult tensor(const Ofs& s, const Ofs& sp, int k, Dim0Linearity mode) {
  Interface c = k_codomain(s, k);
  Interface d = k_domain(sp, k);
  auto iso = find_iso(c.structure, d.structure);
  if (!iso)
    throw OfsError("InterfaceMismatch",
                   "codomain of first factor does not match domain of second");

  // sp-face -> s-face for interface faces (via the unique iso), else -1
  int dim_t = std::max(s.dim(), sp.dim());
  std::vector<std::vector<int>> shared(sp.dim() + 1);
  for (int j = 0; j <= sp.dim(); ++j) shared[j].assign(sp.count(j), -1);
  for (int j = 0; j <= c.structure.dim(); ++j)
    for (int i = 0; i < c.structure.count(j); ++i)
      shared[j][d.inclusion.map[j][(*iso)[j][i]]] = c.inclusion.map[j][i];

  Ofs t;
  t.names.resize(dim_t + 1);
  t.gamma.resize(dim_t + 1);
  t.delta.resize(dim_t + 1);
  t.tilde.resize(dim_t + 1);
  Morphism k1{s, {}, {}}, k2{sp, {}, {}};
  k1.map.resize(s.dim() + 1);
  k2.map.resize(sp.dim() + 1);
  std::vector<std::vector<int>> component(dim_t + 1);

  for (int j = 0; j <= dim_t; ++j) {
    for (int i = 0; j <= s.dim() && i < s.count(j); ++i) {
      k1.map[j].push_back(static_cast<int>(t.names[j].size()));
      component[j].push_back(0);
      t.names[j].push_back(s.names[j][i]);
    }
    for (int i = 0; j <= sp.dim() && i < sp.count(j); ++i) {
      if (shared[j][i] >= 0) {
        k2.map[j].push_back(k1.map[j][shared[j][i]]);
      } else {
        k2.map[j].push_back(static_cast<int>(t.names[j].size()));
        component[j].push_back(1);
        // avoid accidental name collisions between the two factors
        std::string nm = sp.names[j][i];
        while (std::find(t.names[j].begin(), t.names[j].end(), nm) !=
               t.names[j].end())
          nm += "'";
        t.names[j].push_back(nm);
      }
    }
  }

  for (int j = 1; j <= dim_t; ++j) {
    t.gamma[j].assign(t.names[j].size(), -1);
    t.delta[j].resize(t.names[j].size());
    auto put = [&](const Ofs& src, const Morphism& km, int i) {
      int ni = km.map[j][i];
      t.gamma[j][ni] = km.map[j - 1][src.gamma[j][i]];
      const Delta& dl = src.delta[j][i];
      Delta nd;
      nd.empty_dom = dl.empty_dom;
      if (dl.empty_dom) {
        nd.base = j >= 2 ? km.map[j - 2][dl.base] : -1;
      } else {
        for (int f : dl.faces) nd.faces.push_back(km.map[j - 1][f]);
        std::sort(nd.faces.begin(), nd.faces.end());
      }
      t.delta[j][ni] = nd;
    };
    for (int i = 0; j <= s.dim() && i < s.count(j); ++i) put(s, k1, i);
    for (int i = 0; j <= sp.dim() && i < sp.count(j); ++i)
      if (shared[j][i] < 0) put(sp, k2, i);
  }
  for (int j = 0; j <= dim_t; ++j) {
    if (j <= s.dim())
      for (auto [a, b] : s.tilde[j])
        t.tilde[j].emplace_back(k1.map[j][a], k1.map[j][b]);
    if (j <= sp.dim())
      for (auto [a, b] : sp.tilde[j])
        t.tilde[j].emplace_back(k2.map[j][a], k2.map[j][b]);
  }
  t.relaxed_top = (s.relaxed_top && s.dim() == dim_t) ||
                  (sp.relaxed_top && sp.dim() == dim_t);
  t.normalize();

  complete_tilde(t, component, mode);
  AxiomReport rep = validate(t, mode);
  if (!rep.ok())
    throw OfsError("CompletionConflict",
                   "no axiom-consistent order completion: " +
                       rep.failures.front().clause + " " +
                       rep.failures.front().detail);

  k1.target = t;
  k2.target = t;
  return {t, k1, k2, k};
}

namespace {

// Carrier of one side of a candidate cut: the closure of the chosen high
// faces plus every low face that the other side's closure does not reach.
Keep cut_side(const Ofs& s, int k, const Keep& mine, const Keep& theirs) {
  Keep out(s.dim() + 1);
  for (int j = 0; j <= s.dim(); ++j) out[j] = mine[j];
  // full downward closure of mine
  for (int j = s.dim(); j >= 1; --j)
    for (int i = 0; i < s.count(j); ++i) {
      if (!out[j][i]) continue;
      out[j - 1][s.gamma[j][i]] = 1;
      const Delta& d = s.delta[j][i];
      if (d.empty_dom) {
        if (j >= 2) out[j - 2][d.base] = 1;
      } else {
        for (int f : d.faces) out[j - 1][f] = 1;
      }
    }
  // closure of theirs, to find the low faces nobody reaches
  Keep other(s.dim() + 1);
  for (int j = 0; j <= s.dim(); ++j) other[j] = theirs[j];
  for (int j = s.dim(); j >= 1; --j)
    for (int i = 0; i < s.count(j); ++i) {
      if (!other[j][i]) continue;
      other[j - 1][s.gamma[j][i]] = 1;
      const Delta& d = s.delta[j][i];
      if (d.empty_dom) {
        if (j >= 2) other[j - 2][d.base] = 1;
      } else {
        for (int f : d.faces) other[j - 1][f] = 1;
      }
    }
  for (int j = 0; j <= std::min(k, s.dim()); ++j)
    for (int i = 0; i < s.count(j); ++i)
      if (!other[j][i]) out[j][i] = 1;
  return out;
}

struct SplitParts {
  Ofs down, up;
  FaceId witness;  // in s
};

std::optional<SplitParts> try_split(const Ofs& s, int k,
                                    const std::vector<char>& lower_high,
                                    Dim0Linearity mode) {
  // lower_high indexes the faces of dimension > k in level-major order
  Keep lo(s.dim() + 1), hi(s.dim() + 1);
  for (int j = 0; j <= s.dim(); ++j) {
    lo[j].assign(s.count(j), 0);
    hi[j].assign(s.count(j), 0);
  }
  int pos = 0;
  bool any_lo = false, any_hi = false;
  for (int j = k + 1; j <= s.dim(); ++j)
    for (int i = 0; i < s.count(j); ++i, ++pos) {
      if (lower_high[pos]) {
        lo[j][i] = 1;
        any_lo = true;
      } else {
        hi[j][i] = 1;
        any_hi = true;
      }
    }
  if (!any_lo || !any_hi) return std::nullopt;
  // each side must be boundary-closed above k
  auto closed = [&](const Keep& side) {
    for (int j = k + 2; j <= s.dim(); ++j)
      for (int i = 0; i < s.count(j); ++i) {
        if (!side[j][i]) continue;
        if (!side[j - 1][s.gamma[j][i]]) return false;
        const Delta& d = s.delta[j][i];
        if (!d.empty_dom)
          for (int f : d.faces)
            if (!side[j - 1][f]) return false;
        if (d.empty_dom && j - 2 > k && !side[j - 2][d.base]) return false;
      }
    return true;
  };
  if (!closed(lo) || !closed(hi)) return std::nullopt;

  Interface down, up;
  try {
    down = substructure(s, cut_side(s, k, lo, hi));
    up = substructure(s, cut_side(s, k, hi, lo));
  } catch (const OfsError&) {
    return std::nullopt;
  }
  if (down.structure.relaxed_top || up.structure.relaxed_top)
    return std::nullopt;
  // A part may leave a loop of dimension <= k unfilled when its filler
  // lives in the other part (it is glued back by the tensor); every other
  // axiom must hold outright.
  auto part_valid = [&](const Ofs& part, const Morphism& inc) {
    AxiomReport rep = validate(part, mode);
    for (const AxiomWitness& w : rep.failures) {
      if (w.axiom != Axiom::LoopFilling || w.faces.empty()) return false;
      FaceId f = w.faces[0];
      if (f.level > k) return false;
      int in_s = inc.map[f.level][f.index];
      bool filled = false;
      for (int i = 0; i < s.count(f.level + 1) && !filled; ++i)
        if (!is_loop(s, f.level + 1, i) && s.gamma[f.level + 1][i] == in_s)
          filled = true;
      if (!filled) return false;
    }
    return true;
  };
  if (!part_valid(down.structure, down.inclusion) ||
      !part_valid(up.structure, up.inclusion))
    return std::nullopt;
  SizeVector sz = size_vector(s);
  if (!size_less(size_vector(down.structure), sz) ||
      !size_less(size_vector(up.structure), sz))
    return std::nullopt;
  try {
    TensorResult t = tensor(down.structure, up.structure, k, mode);
    // The reconstruction must restore s face-for-face: the mediating map
    // phi with phi(kappa1(x)) = x and phi(kappa2(y)) = y has to be an iso.
    Morphism phi{t.object, s, {}};
    phi.map.resize(t.object.dim() + 1);
    for (int j = 0; j <= t.object.dim(); ++j)
      phi.map[j].assign(t.object.count(j), -1);
    auto install = [&](const Morphism& kappa, const Morphism& inc) {
      for (size_t j = 0; j < kappa.map.size(); ++j)
        for (size_t i = 0; i < kappa.map[j].size(); ++i) {
          int& slot = phi.map[j][kappa.map[j][i]];
          int want = inc.map[j][i];
          if (slot >= 0 && slot != want) return false;
          slot = want;
        }
      return true;
    };
    if (!install(t.kappa1, down.inclusion) || !install(t.kappa2, up.inclusion))
      return std::nullopt;
    if (!check_morphism(phi, MorphKind::Iso).ok) return std::nullopt;
  } catch (const OfsError&) {
    return std::nullopt;
  }
  // witness: a top face of the interface, named in s
  Interface c = k_codomain(down.structure, k);
  int ct = c.structure.dim();
  if (c.structure.count(ct) == 0) return std::nullopt;
  int in_down = c.inclusion.map[ct][0];
  FaceId w{ct, down.inclusion.map[ct][in_down]};
  return SplitParts{down.structure, up.structure, w};
}

std::vector<char> cut_mask(const Ofs& s, const Cut& cut) {
  int pos = 0;
  std::map<std::pair<int, int>, int> index;
  for (int j = cut.level + 1; j <= s.dim(); ++j)
    for (int i = 0; i < s.count(j); ++i, ++pos) index[{j, i}] = pos;
  std::vector<char> mask(pos, 0);
  for (FaceId f : cut.lower) {
    auto it = index.find({f.level, f.index});
    if (it == index.end())
      throw OfsError("InvalidCut", "face outside the high-dimensional part");
    mask[it->second] = 1;
  }
  return mask;
}

}  // namespace

std::vector<Cut> enumerate_cuts(const Ofs& s, Dim0Linearity mode) {
  std::vector<Cut> out;
  for (int k = 0; k < s.dim(); ++k) {
    int nhigh = 0;
    for (int j = k + 1; j <= s.dim(); ++j) nhigh += s.count(j);
    if (nhigh < 2 || nhigh > 20) continue;
    for (unsigned mask = 1; mask + 1 < (1u << nhigh); ++mask) {
      std::vector<char> lower(nhigh);
      for (int b = 0; b < nhigh; ++b) lower[b] = (mask >> b) & 1;
      auto parts = try_split(s, k, lower, mode);
      if (!parts) continue;
      Cut cut;
      cut.level = k;
      int pos = 0;
      for (int j = k + 1; j <= s.dim(); ++j)
        for (int i = 0; i < s.count(j); ++i, ++pos)
          if (lower[pos]) cut.lower.push_back({j, i});
      cut.witness = parts->witness;
      out.push_back(cut);
    }
  }
  return out;
}

std::pair<Ofs, Ofs> split(const Ofs& s, const Cut& cut, Dim0Linearity mode) {
  if (cut.level < 0 || cut.level >= s.dim())
    throw OfsError("InvalidCut", "cut level out of range");
  auto parts = try_split(s, cut.level, cut_mask(s, cut), mode);
  if (!parts) throw OfsError("InvalidCut", "cut is not a proper decomposition");
  return {parts->down, parts->up};
}

// ---- law checkers ----

namespace {

Morphism iso_morphism(const Ofs& a, const Ofs& b, const LevelPerm& perm) {
  Morphism f{a, b, {}};
  f.map = perm;
  return f;
}

void require_iso(LawReport& rep, const Ofs& a, const Ofs& b,
                 const std::string& what) {
  if (!find_iso(a, b)) rep.failures.push_back(what + ": objects differ");
}

}  // namespace

LawReport check_dc_laws(const Ofs& s) {
  LawReport rep;
  for (int l = 0; l <= s.dim(); ++l) {
    Interface dl = k_domain(s, l), cl = k_codomain(s, l);
    for (int k = 0; k < l; ++k) {
      struct Case {
        const Interface& outer_src;
        bool outer_dom;
        const Interface& expect;
        const char* name;
      };
      Interface dk = k_domain(s, k), ck = k_codomain(s, k);
      Case cases[] = {
          {dl, true, dk, "d_k d_l = d_k"},
          {cl, true, dk, "d_k c_l = d_k"},
          {dl, false, ck, "c_k d_l = c_k"},
          {cl, false, ck, "c_k c_l = c_k"},
      };
      for (const auto& c : cases) {
        Interface inner = c.outer_dom ? k_domain(c.outer_src.structure, k)
                                      : k_codomain(c.outer_src.structure, k);
        auto iso = find_iso(inner.structure, c.expect.structure);
        if (!iso) {
          rep.failures.push_back(std::string(c.name) + " fails at k=" +
                                 std::to_string(k) + " l=" + std::to_string(l));
          continue;
        }
        // arrow level: composing the two inclusions must equal the direct
        // inclusion transported along the unique iso
        Morphism lhs = compose(inner.inclusion, c.outer_src.inclusion);
        Morphism rhs = compose(iso_morphism(inner.structure,
                                            c.expect.structure, *iso),
                               c.expect.inclusion);
        if (lhs.map != rhs.map)
          rep.failures.push_back(std::string(c.name) + " inclusion mismatch at k=" +
                                 std::to_string(k) + " l=" + std::to_string(l));
      }
    }
  }
  return rep;
}

LawReport check_unit_laws(const Ofs& s) {
  LawReport rep;
  for (int k = 0; k <= s.dim(); ++k) {
    try {
      TensorResult left = tensor(k_domain(s, k).structure, s, k);
      require_iso(rep, left.object, s,
                  "left unit at k=" + std::to_string(k));
    } catch (const OfsError& e) {
      rep.failures.push_back("left unit tensor failed at k=" +
                             std::to_string(k) + ": " + e.what());
    }
    try {
      TensorResult right = tensor(s, k_codomain(s, k).structure, k);
      require_iso(rep, right.object, s,
                  "right unit at k=" + std::to_string(k));
    } catch (const OfsError& e) {
      rep.failures.push_back("right unit tensor failed at k=" +
                             std::to_string(k) + ": " + e.what());
    }
  }
  return rep;
}

LawReport check_associativity(const Ofs& a, const Ofs& b, const Ofs& c,
                              int k) {
  LawReport rep;
  Ofs left = tensor(tensor(a, b, k).object, c, k).object;
  Ofs right = tensor(a, tensor(b, c, k).object, k).object;
  require_iso(rep, left, right, "associativity at k=" + std::to_string(k));
  return rep;
}

LawReport check_middle_exchange(const Ofs& r, const Ofs& rp, const Ofs& s,
                                const Ofs& sp, int k, int l) {
  LawReport rep;
  if (k >= l) {
    rep.failures.push_back("middle exchange requires k < l");
    return rep;
  }
  Ofs lhs = tensor(tensor(r, rp, l).object, tensor(s, sp, l).object, k).object;
  Ofs rhs = tensor(tensor(r, s, k).object, tensor(rp, sp, k).object, l).object;
  require_iso(rep, lhs, rhs,
              "middle exchange at k=" + std::to_string(k) +
                  " l=" + std::to_string(l));
  return rep;
}

LawReport check_dc_of_tensor(const Ofs& s, const Ofs& sp, int l) {
  LawReport rep;
  TensorResult t = tensor(s, sp, l);
  int d = t.object.dim();
  for (int k = 0; k <= d; ++k) {
    Ofs dk = k_domain(t.object, k).structure;
    Ofs ck = k_codomain(t.object, k).structure;
    if (k <= l) {
      require_iso(rep, dk, k_domain(s, k).structure,
                  "d_k of tensor (k<=l), k=" + std::to_string(k));
      require_iso(rep, ck, k_codomain(sp, k).structure,
                  "c_k of tensor (k<=l), k=" + std::to_string(k));
    } else {
      try {
        require_iso(rep, dk,
                    tensor(k_domain(s, k).structure,
                           k_domain(sp, k).structure, l)
                        .object,
                    "d_k of tensor (k>l), k=" + std::to_string(k));
        require_iso(rep, ck,
                    tensor(k_codomain(s, k).structure,
                           k_codomain(sp, k).structure, l)
                        .object,
                    "c_k of tensor (k>l), k=" + std::to_string(k));
      } catch (const OfsError& e) {
        rep.failures.push_back("component tensor failed at k=" +
                               std::to_string(k) + ": " + e.what());
      }
    }
  }
  return rep;
}

bool check_pushout(const TensorResult& square, const Ofs& probe,
                   MorphKind kind) {
  const Ofs& s = square.kappa1.source;
  const Ofs& sp = square.kappa2.source;
  const Ofs& t = square.object;
  // interface positions: faces of t hit by both injections
  std::vector<std::vector<std::pair<int, int>>> glue;  // (s-face, sp-face)
  for (int j = 0; j <= t.dim(); ++j) {
    std::vector<int> from1(t.count(j), -1), from2(t.count(j), -1);
    if (j <= s.dim())
      for (int i = 0; i < s.count(j); ++i) from1[square.kappa1.map[j][i]] = i;
    if (j <= sp.dim())
      for (int i = 0; i < sp.count(j); ++i) from2[square.kappa2.map[j][i]] = i;
    glue.emplace_back();
    for (int i = 0; i < t.count(j); ++i)
      if (from1[i] >= 0 && from2[i] >= 0)
        glue.back().emplace_back(from1[i], from2[i]);
  }
  auto homs1 = enumerate_homs(s, probe, kind);
  auto homs2 = enumerate_homs(sp, probe, kind);
  auto agree = [&](const Morphism& f, const Morphism& g) {
    for (int j = 0; j < static_cast<int>(glue.size()); ++j)
      for (auto [a, b] : glue[j])
        if (f.map[j][a] != g.map[j][b]) return false;
    return true;
  };
  long long n_pairs = 0;
  for (const auto& f : homs1)
    for (const auto& g : homs2)
      if (agree(f, g)) ++n_pairs;
  auto homsT = enumerate_homs(t, probe, kind);
  std::set<std::pair<std::vector<std::vector<int>>,
                     std::vector<std::vector<int>>>> images;
  for (const auto& h : homsT) {
    Morphism f = compose(square.kappa1, h), g = compose(square.kappa2, h);
    if (!agree(f, g)) return false;
    images.insert({f.map, g.map});
  }
  // injective and surjective onto agreeing pairs
  return static_cast<long long>(images.size()) ==
             static_cast<long long>(homsT.size()) &&
         static_cast<long long>(homsT.size()) == n_pairs;
}

LawReport check_factorization(const TensorResult& square,
                              const Ofs& principal) {
  LawReport rep;
  const Ofs& s = square.kappa1.source;
  const Ofs& sp = square.kappa2.source;
  const Ofs& t = square.object;
  Interface c = k_codomain(s, square.level);
  Morphism c_in_t = compose(c.inclusion, square.kappa1);
  auto via1 = enumerate_homs(principal, s, MorphKind::Local);
  auto via2 = enumerate_homs(principal, sp, MorphKind::Local);
  auto via_c = enumerate_homs(principal, c.structure, MorphKind::Local);
  for (const auto& f : enumerate_homs(principal, t, MorphKind::Local)) {
    int n1 = 0, n2 = 0, nc = 0;
    for (const auto& g : via1)
      if (compose(g, square.kappa1).map == f.map) ++n1;
    for (const auto& g : via2)
      if (compose(g, square.kappa2).map == f.map) ++n2;
    for (const auto& g : via_c)
      if (compose(g, c_in_t).map == f.map) ++nc;
    if (n1 + n2 == 0)
      rep.failures.push_back("no factorization through either injection");
    if (n1 > 1) rep.failures.push_back("kappa1 factorization not unique");
    if (n1 >= 1 && n2 >= 1 && nc == 0)
      rep.failures.push_back(
          "doubly factoring map misses the interface factorization");
    if (n2 >= 2 && n1 == 0)
      rep.failures.push_back(
          "repeated kappa2 factorization without a kappa1 factorization");
  }
  return rep;
}

}  // namespace ofs
