#include "ofs/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ofs {

ExtSet ext_union(const ExtSet& a, const ExtSet& b) {
  ExtSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
ExtSet ext_intersect(const ExtSet& a, const ExtSet& b) {
  ExtSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
ExtSet ext_minus(const ExtSet& a, const ExtSet& b) {
  ExtSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
bool ext_contains(const ExtSet& a, Ext e) {
  return std::binary_search(a.begin(), a.end(), e);
}
void ext_insert(ExtSet& a, Ext e) {
  auto it = std::lower_bound(a.begin(), a.end(), e);
  if (it == a.end() || *it != e) a.insert(it, e);
}

int Ofs::total_faces() const {
  int n = 0;
  for (const auto& lvl : names) n += static_cast<int>(lvl.size());
  return n;
}

bool Ofs::tilde_has(int k, int a, int b) const {
  if (k < 0 || k >= static_cast<int>(tilde.size())) return false;
  return std::binary_search(tilde[k].begin(), tilde[k].end(), std::make_pair(a, b));
}

void Ofs::normalize() {
  while (!names.empty() && names.back().empty()) {
    names.pop_back();
    if (gamma.size() > names.size()) gamma.pop_back();
    if (delta.size() > names.size()) delta.pop_back();
  }
  gamma.resize(names.size());
  delta.resize(names.size());
  tilde.resize(names.size());
  for (auto& lvl : delta)
    for (auto& d : lvl) std::sort(d.faces.begin(), d.faces.end());
  for (auto& lvl : tilde) {
    std::sort(lvl.begin(), lvl.end());
    lvl.erase(std::unique(lvl.begin(), lvl.end()), lvl.end());
  }
}

namespace {

void check_face(const Ofs& s, int k, int i) {
  if (k < 0 || k > s.dim() || i < 0 || i >= s.count(k))
    throw OfsError("UnknownFace", "no face at level " + std::to_string(k) +
                                      " index " + std::to_string(i));
  if (k == 0)
    throw OfsError("UnknownOperationAtDim0",
                   "gamma/delta/theta are undefined on 0-faces");
}

}  // namespace

Ofs build(const RawStructure& raw) {
  Ofs s;
  s.relaxed_top = raw.relaxed_top;
  s.names = raw.faces;
  while (!s.names.empty() && s.names.back().empty()) s.names.pop_back();
  if (s.names.empty() || s.names[0].empty())
    throw OfsError("EmptyStructure", "S_0 must be non-empty");
  for (int k = 0; k + 1 < static_cast<int>(s.names.size()); ++k)
    if (s.names[k].empty())
      throw OfsError("EmptyLevel",
                     "level " + std::to_string(k) + " empty below non-empty level");

  std::map<std::string, FaceId> by_name;
  for (int k = 0; k <= s.dim(); ++k) {
    std::set<std::string> seen;
    for (int i = 0; i < s.count(k); ++i) {
      const std::string& n = s.names[k][i];
      if (!seen.insert(n).second)
        throw OfsError("DuplicateName", n + " repeated at dimension " + std::to_string(k));
      if (by_name.count(n))
        throw OfsError("DuplicateName", n + " repeated across dimensions");
      by_name[n] = {k, i};
    }
  }
  auto lookup = [&](const std::string& n) -> FaceId {
    auto it = by_name.find(n);
    if (it == by_name.end()) throw OfsError("DanglingName", "unknown face " + n);
    return it->second;
  };

  s.gamma.assign(s.names.size(), {});
  s.delta.assign(s.names.size(), {});
  s.tilde.assign(s.names.size(), {});
  for (int k = 1; k <= s.dim(); ++k) {
    s.gamma[k].assign(s.count(k), -1);
    s.delta[k].assign(s.count(k), {});
  }

  for (const auto& [name, target] : raw.gamma) {
    FaceId a = lookup(name);
    if (a.level == 0) throw OfsError("UnknownOperationAtDim0", "gamma of 0-face " + name);
    FaceId t = lookup(target);
    if (t.level != a.level - 1)
      throw OfsError("DimensionMismatch", "gamma(" + name + ") must live one level down");
    s.gamma[a.level][a.index] = t.index;
  }
  for (const auto& [name, d] : raw.delta) {
    FaceId a = lookup(name);
    if (a.level == 0) throw OfsError("UnknownOperationAtDim0", "delta of 0-face " + name);
    Delta out;
    if (d.empty_base) {
      if (!d.faces.empty())
        throw OfsError("DeltaMixedEmptyAndReal",
                       "delta(" + name + ") mixes an empty face with real faces");
      if (a.level < 2)
        throw OfsError("DimensionMismatch",
                       "delta of a 1-face must be a 0-face (no empty markers)");
      FaceId b = lookup(*d.empty_base);
      if (b.level != a.level - 2)
        throw OfsError("DimensionMismatch",
                       "empty-face base of " + name + " must live two levels down");
      out.empty_dom = true;
      out.base = b.index;
    } else {
      if (d.faces.empty()) throw OfsError("EmptyDelta", "delta(" + name + ") is empty");
      std::set<int> idx;
      for (const auto& fn : d.faces) {
        FaceId f = lookup(fn);
        if (f.level != a.level - 1)
          throw OfsError("DimensionMismatch", "delta(" + name + ") element " + fn);
        idx.insert(f.index);
      }
      if (a.level == 1 && idx.size() != 1)
        throw OfsError("DimensionMismatch", "delta of 1-face " + name + " must be a single 0-face");
      out.faces.assign(idx.begin(), idx.end());
    }
    s.delta[a.level][a.index] = out;
  }
  for (const auto& [an, bn] : raw.tilde) {
    FaceId a = lookup(an), b = lookup(bn);
    if (a.level != b.level)
      throw OfsError("DimensionMismatch", "tilde pair " + an + " <~ " + bn);
    s.tilde[a.level].emplace_back(a.index, b.index);
  }

  for (int k = 1; k <= s.dim(); ++k)
    for (int i = 0; i < s.count(k); ++i) {
      if (s.gamma[k][i] < 0)
        throw OfsError("MissingTable", "gamma undefined for " + s.names[k][i]);
      const Delta& d = s.delta[k][i];
      if (!d.empty_dom && d.faces.empty())
        throw OfsError("MissingTable", "delta undefined for " + s.names[k][i]);
    }
  s.normalize();
  return s;
}

std::optional<FaceId> find_face(const Ofs& s, const std::string& name) {
  for (int k = 0; k <= s.dim(); ++k)
    for (int i = 0; i < s.count(k); ++i)
      if (s.names[k][i] == name) return FaceId{k, i};
  return std::nullopt;
}

bool is_loop(const Ofs& s, int k, int i) {
  if (k < 1) return false;
  const Delta& d = s.delta[k][i];
  return !d.empty_dom && d.faces.size() == 1 && d.faces[0] == s.gamma[k][i];
}

ExtSet delta_ext(const Ofs& s, int k, int i) {
  check_face(s, k, i);
  const Delta& d = s.delta[k][i];
  ExtSet out;
  if (d.empty_dom) {
    out.push_back(empty_ext(d.base));
  } else {
    for (int f : d.faces) out.push_back(real_ext(f));
  }
  return out;
}

std::vector<int> dot_delta(const Ofs& s, int k, int i) {
  check_face(s, k, i);
  const Delta& d = s.delta[k][i];
  return d.empty_dom ? std::vector<int>{} : d.faces;
}

std::vector<int> dot_delta_nonloop(const Ofs& s, int k, int i) {
  std::vector<int> out;
  for (int f : dot_delta(s, k, i))
    if (!is_loop(s, k - 1, f)) out.push_back(f);
  return out;
}

ExtSet theta(const Ofs& s, int k, int i) {
  ExtSet out = delta_ext(s, k, i);
  ext_insert(out, real_ext(s.gamma[k][i]));
  return out;
}

std::vector<int> dot_theta(const Ofs& s, int k, int i) {
  std::vector<int> out = dot_delta(s, k, i);
  int g = s.gamma[k][i];
  auto it = std::lower_bound(out.begin(), out.end(), g);
  if (it == out.end() || *it != g) out.insert(it, g);
  return out;
}

std::vector<int> iota(const Ofs& s, int k, int i) {
  check_face(s, k, i);
  if (k < 2) return {};
  std::set<int> gammas, deltas;
  for (int f : dot_delta_nonloop(s, k, i)) {
    gammas.insert(s.gamma[k - 1][f]);
    for (int x : dot_delta(s, k - 1, f)) deltas.insert(x);
  }
  std::vector<int> out;
  std::set_intersection(gammas.begin(), gammas.end(), deltas.begin(), deltas.end(),
                        std::back_inserter(out));
  return out;
}

bool one_equal(const Ofs& s, int level, const ExtSet& a, const ExtSet& b) {
  auto pad = [&](const ExtSet& x) {
    ExtSet out = x;
    if (level >= 1) {
      for (Ext e : x) {
        if (is_empty_ext(e)) continue;
        for (Ext t : theta(s, level, ext_index(e)))
          if (!is_empty_ext(t)) ext_insert(out, empty_ext(ext_index(t)));
      }
    }
    return out;
  };
  return pad(a) == pad(b);
}

std::vector<char> transitive_closure_squaring(std::vector<char> rel, int n) {
  // repeated boolean squaring combined with the original relation
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> next = rel;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (next[i * n + j]) continue;
        for (int m = 0; m < n; ++m)
          if (rel[i * n + m] && rel[m * n + j]) {
            next[i * n + j] = 1;
            changed = true;
            break;
          }
      }
    rel.swap(next);
  }
  return rel;
}

std::vector<char> transitive_closure_dfs(const std::vector<char>& rel, int n) {
  std::vector<char> out(rel.size(), 0);
  std::vector<int> stack;
  for (int src = 0; src < n; ++src) {
    std::vector<char> seen(n, 0);
    stack.clear();
    stack.push_back(src);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (rel[v * n + w] && !seen[w]) {
          seen[w] = 1;
          out[src * n + w] = 1;
          stack.push_back(w);
        }
    }
  }
  return out;
}

bool DerivedRelations::minus(int k, int a, int b) const {
  if (k < 0 || k >= static_cast<int>(lt_minus.size())) return false;
  int n = static_cast<int>(loops[k].size());
  return lt_minus[k][a * n + b] != 0;
}
bool DerivedRelations::plus(int k, int a, int b) const {
  if (k < 0 || k >= static_cast<int>(lt_plus.size())) return false;
  int n = static_cast<int>(loops[k].size());
  return lt_plus[k][a * n + b] != 0;
}

DerivedRelations derive(const Ofs& s) {
  DerivedRelations r;
  int d = s.dim();
  r.lt_minus.resize(d + 1);
  r.lt_plus.resize(d + 1);
  r.loops.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    int n = s.count(k);
    r.loops[k].assign(n, 0);
    for (int i = 0; i < n; ++i) r.loops[k][i] = is_loop(s, k, i) ? 1 : 0;

    std::vector<char> step_minus(n * n, 0), step_plus(n * n, 0);
    if (k >= 1) {
      for (int a = 0; a < n; ++a) {
        int g = s.gamma[k][a];
        for (int b = 0; b < n; ++b) {
          if (a == b) {
            // a <⁻ a is possible for loops via the definition γ(a) ∈ δ(a)
          }
          const Delta& db = s.delta[k][b];
          if (!db.empty_dom &&
              std::binary_search(db.faces.begin(), db.faces.end(), g))
            step_minus[a * n + b] = 1;
        }
      }
    }
    if (k + 1 <= d) {
      for (int up = 0; up < s.count(k + 1); ++up) {
        if (is_loop(s, k + 1, up)) continue;
        int b = s.gamma[k + 1][up];
        for (int a : dot_delta(s, k + 1, up))
          if (a != b) step_plus[a * n + b] = 1;
      }
    }
    r.lt_minus[k] = transitive_closure_dfs(step_minus, n);
    r.lt_plus[k] = transitive_closure_dfs(step_plus, n);
  }
  return r;
}

}  // namespace ofs
