#include "ofs/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "ofs/calculus.hpp"
#include "ofs/canonical.hpp"

namespace ofs {

int Catalog::total() const {
  int n = 0;
  for (const auto& [key, v] : buckets) n += static_cast<int>(v.size());
  return n;
}

std::vector<Ofs> Catalog::all() const {
  std::vector<Ofs> out;
  for (const auto& [key, v] : buckets) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::map<std::pair<int, int>, int> Catalog::counts() const {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [key, v] : buckets) out[key] = static_cast<int>(v.size());
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Order reconstruction.  For a fixed set of gamma/delta tables the order
// relation at each level >= 1 is forced by the axioms up to the direction of
// "ties" (pairs demanded in both directions by the minus order):
//   - pairs whose real boundaries meet must be ordered unless already
//     separated by the plus order (boundary pencils);
//   - an empty-domain face must precede faces whose iota contains its tip
//     unless the plus order already places it below them;
//   - pairs with fully disjoint boundaries are ordered exactly as the minus
//     order dictates;
//   - no other pair may be ordered (any further pair either lacks the minus
//     comparability the order must refine, or is separated by plus).
// At level 0 the relation is empty in Strict mode; in Combined mode any
// strict partial order is a candidate and validation filters.

void closure_in_place(std::vector<char>& rel, int n) {
  auto cl = transitive_closure_dfs(rel, n);
  rel = cl;
}

// All strict partial orders on n elements, as sorted pair lists.
std::vector<TildePairs> strict_partial_orders(int n) {
  std::vector<TildePairs> out;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::vector<char> rel(n * n, 0);
  std::function<void(size_t)> rec = [&](size_t at) {
    if (at == slots.size()) {
      std::vector<char> cl = rel;
      closure_in_place(cl, n);
      if (cl != rel) return;  // keep only transitively closed relations
      TildePairs t;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rel[i * n + j]) t.push_back({i, j});
      out.push_back(std::move(t));
      return;
    }
    auto [i, j] = slots[at];
    rec(at + 1);
    rel[i * n + j] = 1;
    rec(at + 1);
    rel[i * n + j] = 0;
    rel[j * n + i] = 1;
    rec(at + 1);
    rel[j * n + i] = 0;
  };
  rec(0);
  return out;
}

// Candidate tilde relations for one level k >= 1, or empty if the demands
// are unsatisfiable.
std::vector<TildePairs> level_tilde_options(const Ofs& s,
                                            const DerivedRelations& r, int k) {
  int n = s.count(k);
  std::vector<char> forced(n * n, 0);
  std::vector<std::pair<int, int>> ties;

  auto demand_directed = [&](int a, int b) -> bool {
    if (!r.minus(k, a, b)) return false;  // no order can satisfy the demand
    forced[a * n + b] = 1;
    return true;
  };

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      // Empty-domain pencils give directed demands.
      if (s.delta[k][a].empty_dom && !r.plus(k, a, b)) {
        int gg = s.gamma[k - 1][s.gamma[k][a]];
        std::vector<int> in = iota(s, k, b);
        if (std::binary_search(in.begin(), in.end(), gg))
          if (!demand_directed(a, b)) return {};
      }
      // Disjoint boundaries: ordered exactly as the minus order.
      if (a < b && ext_intersect(theta(s, k, a), theta(s, k, b)).empty()) {
        if (r.minus(k, a, b)) forced[a * n + b] = 1;
        if (r.minus(k, b, a)) forced[b * n + a] = 1;
      }
    }
  }
  // Boundary pencils give undirected demands; refine them against the minus
  // order and record genuine ties for branching.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (r.perp_plus(k, a, b)) continue;
      std::vector<int> ta = dot_theta(s, k, a), tb = dot_theta(s, k, b);
      std::vector<int> common;
      std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      if (forced[a * n + b] || forced[b * n + a]) continue;
      bool ab = r.minus(k, a, b), ba = r.minus(k, b, a);
      if (ab && ba)
        ties.push_back({a, b});
      else if (ab)
        forced[a * n + b] = 1;
      else if (ba)
        forced[b * n + a] = 1;
      else
        return {};
    }
  }

  if (ties.size() > 24)
    throw OfsError("InvalidInput", "too many order ties during enumeration");
  std::set<TildePairs> seen;
  std::vector<TildePairs> out;
  for (unsigned mask = 0; mask < (1u << ties.size()); ++mask) {
    std::vector<char> rel = forced;
    for (size_t t = 0; t < ties.size(); ++t) {
      auto [a, b] = ties[t];
      if (mask & (1u << t))
        rel[a * n + b] = 1;
      else
        rel[b * n + a] = 1;
    }
    closure_in_place(rel, n);
    bool reflexive = false;
    for (int i = 0; i < n; ++i) reflexive |= (rel[i * n + i] != 0);
    if (reflexive) continue;
    TildePairs t;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[i * n + j]) t.push_back({i, j});
    if (seen.insert(t).second) out.push_back(std::move(t));
  }
  return out;
}

// All complete structures extending the given tables with an order relation
// consistent with the demands above (still subject to full validation).
std::vector<Ofs> tilde_variants(const Ofs& base, Dim0Linearity mode) {
  DerivedRelations r = derive(base);
  int d = base.dim();
  std::vector<std::vector<TildePairs>> options(d + 1);
  if (mode == Dim0Linearity::Combined && base.count(0) > 1)
    options[0] = strict_partial_orders(base.count(0));
  else
    options[0] = {TildePairs{}};
  for (int k = 1; k <= d; ++k) {
    options[k] = level_tilde_options(base, r, k);
    if (options[k].empty()) return {};
  }
  std::vector<Ofs> out;
  Ofs cand = base;
  std::function<void(int)> rec = [&](int k) {
    if (k > d) {
      out.push_back(cand);
      return;
    }
    for (const TildePairs& t : options[k]) {
      cand.tilde[k] = t;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Fast generator: backtracking over gamma/delta tables level by level, with
// per-face globularity pruning and per-level checks of the order-free
// axioms.  Faces within a level are kept in non-decreasing table order,
// which preserves one representative of every isomorphism class.

struct Cand {
  Delta delta;
  int gamma;
  friend auto operator<=>(const Cand&, const Cand&) = default;
};

std::vector<Cand> level_candidates(const std::vector<int>& profile, int j) {
  std::vector<Cand> out;
  int below = profile[j - 1];
  if (j == 1) {
    for (int d0 = 0; d0 < below; ++d0)
      for (int g = 0; g < below; ++g)
        out.push_back({Delta{false, -1, {d0}}, g});
  } else {
    for (int g = 0; g < below; ++g) {
      for (int base = 0; base < profile[j - 2]; ++base)
        out.push_back({Delta{true, base, {}}, g});
      for (unsigned mask = 1; mask < (1u << below); ++mask) {
        Delta del;
        for (int f = 0; f < below; ++f)
          if (mask & (1u << f)) del.faces.push_back(f);
        out.push_back({del, g});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Generator {
  std::vector<int> profile;
  Dim0Linearity mode;
  bool principal_only = false;
  std::function<void(const Ofs&)> emit;
  Ofs s;  // levels 0..current are materialized

  // reach_stack[i][v]: bitmask of 0-faces that v reaches through the plus
  // order induced by the first i edges (maintained incrementally while
  // level 1 is being assigned; loop edges do not contribute).
  std::vector<std::vector<uint32_t>> reach_stack;

  void run() {
    s = Ofs{};
    if (profile.size() >= 2)
      reach_stack.assign(profile[1] + 1,
                         std::vector<uint32_t>(profile[0], 0));
    push_level(0);
    assign_level(1);
  }

  void push_level(int j) {
    s.names.push_back({});
    for (int i = 0; i < profile[j]; ++i)
      s.names[j].push_back("f" + std::to_string(j) + "_" + std::to_string(i));
    s.gamma.push_back(std::vector<int>(j == 0 ? 0 : profile[j], 0));
    s.delta.push_back(
        std::vector<Delta>(j == 0 ? 0 : profile[j], Delta{false, -1, {0}}));
    s.tilde.push_back({});
  }
  void pop_level() {
    s.names.pop_back();
    s.gamma.pop_back();
    s.delta.pop_back();
    s.tilde.pop_back();
  }

  void assign_level(int j) {
    int d = static_cast<int>(profile.size()) - 1;
    if (j > d) {
      finish();
      return;
    }
    push_level(j);
    std::vector<Cand> cands = level_candidates(profile, j);
    if (principal_only && profile[j] == 1 && j >= 2) {
      // a single face must cover all but one of the faces below
      std::erase_if(cands, [&](const Cand& c) {
        bool loop = !c.delta.empty_dom && c.delta.faces.size() == 1 &&
                    c.delta.faces[0] == c.gamma;
        int covers = c.delta.empty_dom || loop
                         ? 0
                         : static_cast<int>(c.delta.faces.size());
        return covers != profile[j - 1] - 1;
      });
    }
    assign_face(j, 0, 0, cands);
    pop_level();
  }

  void assign_face(int j, int i, size_t min_c, const std::vector<Cand>& cands) {
    if (i == profile[j]) {
      if (level_ok(j)) assign_level(j + 1);
      return;
    }
    for (size_t c = min_c; c < cands.size(); ++c) {
      s.gamma[j][i] = cands[c].gamma;
      s.delta[j][i] = cands[c].delta;
      if (face_ok(j, i)) assign_face(j, i + 1, c, cands);
    }
  }

  // Checks that depend only on face (j, i) and the levels below it.
  bool face_ok(int j, int i) {
    if (j == 1) {
      // extend the reachability closure by edge i; it may not close a
      // cycle on the 0-faces
      int n0 = profile[0];
      const std::vector<uint32_t>& prev = reach_stack[i];
      std::vector<uint32_t>& cur = reach_stack[i + 1];
      cur = prev;
      int from = s.delta[1][i].faces[0], to = s.gamma[1][i];
      if (from != to) {
        uint32_t add = prev[to] | (uint32_t{1} << to);
        for (int v = 0; v < n0; ++v)
          if (v == from || (prev[v] & (uint32_t{1} << from))) cur[v] |= add;
        if (cur[from] & (uint32_t{1} << from)) return false;
      }
      if (principal_only) {
        // each remaining edge covers at most one 0-face
        uint32_t covered = 0;
        for (int a = 0; a <= i; ++a)
          if (!is_loop(s, 1, a))
            covered |= uint32_t{1} << s.delta[1][a].faces[0];
        int uncovered = n0 - std::popcount(covered);
        if (uncovered - 1 > profile[1] - 1 - i) return false;
      }
      return true;
    }
    if (j < 2) return true;
    return detail::clause_glob_gamma(s, j, i) &&
           detail::clause_glob_delta(s, j, i);
  }

  // Checks that become final once level j is completely assigned.
  bool level_ok(int j) {
    int d = static_cast<int>(profile.size()) - 1;
    if (j == 1) {
      // the general path below recomputes all derived relations; at level
      // one only acyclicity (checked per edge) and 0-face linearity matter
      if (mode == Dim0Linearity::Strict) {
        const std::vector<uint32_t>& reach = reach_stack[profile[1]];
        for (int a = 0; a < profile[0]; ++a)
          for (int b = a + 1; b < profile[0]; ++b)
            if (!(reach[a] & (uint32_t{1} << b)) &&
                !(reach[b] & (uint32_t{1} << a)))
              return false;
      }
      if (j == d)
        for (int a = 0; a < profile[j]; ++a)
          if (is_loop(s, j, a)) return false;
      return !principal_only || principal_level_ok(j);
    }
    DerivedRelations r = derive(s);
    for (int a = 0; a < profile[j]; ++a) {
      const auto& dd = s.delta[j][a].faces;
      for (size_t x = 0; x < dd.size(); ++x)
        for (size_t y = x + 1; y < dd.size(); ++y)
          if (!detail::clause_local_discrete(s, r, j, a, dd[x], dd[y]))
            return false;
    }
    for (int a = 0; a < profile[j - 1]; ++a) {
      if (r.plus(j - 1, a, a)) return false;
      if (!detail::clause_loop_filled(s, j - 1, a)) return false;
    }
    if (j == 1 && mode == Dim0Linearity::Strict)
      for (int a = 0; a < profile[0]; ++a)
        for (int b = a + 1; b < profile[0]; ++b)
          if (!detail::clause_dim0_linear(s, r, mode, a, b)) return false;
    if (j == d)
      for (int a = 0; a < profile[j]; ++a)
        if (is_loop(s, j, a)) return false;  // nothing above can fill it
    if (principal_only && !principal_level_ok(j)) return false;
    return true;
  }

  // size_(j-1) must be exactly one: level j's non-loop domains leave a
  // single uncovered (j-1)-face.
  bool principal_level_ok(int j) const {
    std::vector<char> covered(profile[j - 1], 0);
    for (int a = 0; a < profile[j]; ++a) {
      if (is_loop(s, j, a) || s.delta[j][a].empty_dom) continue;
      for (int f : s.delta[j][a].faces) covered[f] = 1;
    }
    int uncovered = 0;
    for (char c : covered) uncovered += !c;
    return uncovered == 1;
  }

  void finish() {
    for (const Ofs& cand : tilde_variants(s, mode))
      if (is_valid(cand, mode)) emit(cand);
  }
};

void for_each_profile(int max_dim, int max_faces,
                      const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> profile;
  std::function<void(int)> rec = [&](int used) {
    if (!profile.empty()) f(profile);
    if (static_cast<int>(profile.size()) > max_dim) return;
    for (int n = 1; used + n <= max_faces; ++n) {
      profile.push_back(n);
      rec(used + n);
      profile.pop_back();
    }
  };
  rec(0);
}

struct Collector {
  Catalog cat;
  std::set<std::string> seen;
  void add(const Ofs& s) {
    CanonicalForm cf = canonical_form(s);
    if (!seen.insert(cf.key).second) return;
    cat.buckets[{s.dim(), s.total_faces()}].push_back(cf.structure);
  }
};

}  // namespace

Catalog enumerate_valid(int max_dim, int max_faces, Dim0Linearity mode) {
  Collector col;
  for_each_profile(max_dim, max_faces, [&](const std::vector<int>& profile) {
    Generator gen;
    gen.profile = profile;
    gen.mode = mode;
    gen.emit = [&](const Ofs& s) { col.add(s); };
    gen.run();
  });
  return col.cat;
}

Catalog enumerate_principal(int dim, int max_faces, Dim0Linearity mode) {
  Collector col;
  for_each_profile(dim, max_faces, [&](const std::vector<int>& profile) {
    // A principal structure has size one at every level, so its top level
    // is a single face; only full-height profiles can reach the dimension.
    if (static_cast<int>(profile.size()) != dim + 1) return;
    if (profile.back() != 1) return;
    Generator gen;
    gen.profile = profile;
    gen.mode = mode;
    gen.principal_only = true;
    gen.emit = [&](const Ofs& s) {
      if (is_principal(s)) col.add(s);
    };
    gen.run();
  });
  return col.cat;
}

Catalog enumerate_valid_slow(int max_dim, int max_faces, Dim0Linearity mode) {
  Collector col;
  for_each_profile(max_dim, max_faces, [&](const std::vector<int>& profile) {
    int d = static_cast<int>(profile.size()) - 1;
    // Materialize the full skeleton, then sweep every table and every
    // relation with no pruning at all; validation is the only filter.
    Ofs s;
    for (int j = 0; j <= d; ++j) {
      s.names.push_back({});
      for (int i = 0; i < profile[j]; ++i)
        s.names[j].push_back("f" + std::to_string(j) + "_" + std::to_string(i));
      s.gamma.push_back(std::vector<int>(j == 0 ? 0 : profile[j], 0));
      s.delta.push_back(
          std::vector<Delta>(j == 0 ? 0 : profile[j], Delta{false, -1, {0}}));
      s.tilde.push_back({});
    }
    std::vector<std::vector<Cand>> cands(d + 1);
    for (int j = 1; j <= d; ++j) cands[j] = level_candidates(profile, j);

    std::function<void(int)> sweep_tilde = [&](int k) {
      if (k > d) {
        if (is_valid(s, mode)) col.add(s);
        return;
      }
      int n = profile[k];
      std::vector<std::pair<int, int>> slots;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != b) slots.push_back({a, b});
      std::function<void(size_t)> rec = [&](size_t at) {
        if (at == slots.size()) {
          sweep_tilde(k + 1);
          return;
        }
        rec(at + 1);
        s.tilde[k].push_back(slots[at]);
        rec(at + 1);
        s.tilde[k].pop_back();
      };
      rec(0);
    };
    std::function<void(int, int)> sweep_tables = [&](int j, int i) {
      if (j > d) {
        sweep_tilde(0);
        return;
      }
      if (i == profile[j]) {
        sweep_tables(j + 1, 0);
        return;
      }
      for (const Cand& c : cands[j]) {
        s.gamma[j][i] = c.gamma;
        s.delta[j][i] = c.delta;
        sweep_tables(j, i + 1);
      }
    };
    sweep_tables(1, 0);
  });
  return col.cat;
}

std::map<int, long long> tree_counts_dim3(int max_faces) {
  // t[n][f] = planar trees with n nodes and f free inputs; each node has an
  // ordered (possibly empty) list of inputs, each either free or a subtree.
  // t = x * sum_{r>=0} (y + t)^r, computed by iteration to a fixpoint.
  int max_n = std::max(0, (max_faces - 3) / 2);
  int max_f = std::max(0, (max_faces - 5) / 2);
  if (max_n == 0) return {};
  auto zero = std::vector<std::vector<long long>>(
      max_n + 1, std::vector<long long>(max_f + 1, 0));
  auto t = zero;
  for (int it = 0; it <= max_n; ++it) {
    // inner = y + t
    auto inner = t;
    if (max_f >= 1) inner[0][1] += 1;
    // geo = sum_r inner^r, truncated; inner has no constant term, so only
    // r <= max_n + max_f powers contribute.
    auto geo = zero;
    geo[0][0] = 1;
    auto pw = geo;
    for (int r = 1; r <= max_n + max_f; ++r) {
      auto next = zero;
      for (int n1 = 0; n1 <= max_n; ++n1)
        for (int f1 = 0; f1 <= max_f; ++f1) {
          if (pw[n1][f1] == 0) continue;
          for (int n2 = 0; n1 + n2 <= max_n; ++n2)
            for (int f2 = 0; f1 + f2 <= max_f; ++f2)
              next[n1 + n2][f1 + f2] += pw[n1][f1] * inner[n2][f2];
        }
      pw = next;
      for (int n = 0; n <= max_n; ++n)
        for (int f = 0; f <= max_f; ++f) geo[n][f] += pw[n][f];
    }
    // t = x * geo
    auto nt = zero;
    for (int n = 1; n <= max_n; ++n)
      for (int f = 0; f <= max_f; ++f) nt[n][f] = geo[n - 1][f];
    if (nt == t) break;
    t = nt;
  }
  std::map<int, long long> out;
  for (int n = 1; n <= max_n; ++n)
    for (int f = 0; f <= max_f; ++f) {
      int faces = 2 * n + 2 * f + 3;
      if (faces <= max_faces && t[n][f] > 0) out[faces] += t[n][f];
    }
  // Besides the tree family (top cells whose domain is a 2-cell pasting)
  // there is exactly one principal shape whose top cell has an empty domain
  // sitting on a 1-face: an endo 2-cell on an arrow, filled from the empty
  // face on that arrow.  Principality pins its context to the bare arrow,
  // so it contributes a single 5-face structure.
  if (max_faces >= 5) out[5] += 1;
  return out;
}

}  // namespace ofs
