#include "ofs/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ofs {

namespace {

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

// Iso-invariant face colors by iterated partition refinement over the
// gamma/delta/tilde neighbourhoods.  Colors are small integers; equal
// colors mean "not yet distinguished".
std::vector<std::vector<int>> refine_colors(const Ofs& s) {
  int d = s.dim();
  std::vector<std::vector<int>> color(d + 1);
  for (int k = 0; k <= d; ++k) color[k].assign(s.count(k), 0);

  auto pass = [&]() {
    bool changed = false;
    for (int k = 0; k <= d; ++k) {
      int n = s.count(k);
      std::vector<std::string> sig(n);
      for (int i = 0; i < n; ++i) {
        std::string& g = sig[i];
        g = std::to_string(color[k][i]);
        if (k >= 1) {
          g += "|g" + std::to_string(color[k - 1][s.gamma[k][i]]);
          const Delta& del = s.delta[k][i];
          if (del.empty_dom) {
            g += "|E" + std::to_string(k >= 2 ? color[k - 2][del.base] : -1);
          } else {
            std::vector<int> ds;
            for (int f : del.faces) ds.push_back(color[k - 1][f]);
            std::sort(ds.begin(), ds.end());
            g += "|d";
            for (int c : ds) g += std::to_string(c) + ",";
          }
          g += is_loop(s, k, i) ? "|L" : "|l";
        }
        std::vector<int> up_g, up_d;
        for (int u = 0; u < s.count(k + 1); ++u) {
          if (s.gamma[k + 1][u] == i) up_g.push_back(color[k + 1][u]);
          const Delta& du = s.delta[k + 1][u];
          if (!du.empty_dom &&
              std::binary_search(du.faces.begin(), du.faces.end(), i))
            up_d.push_back(color[k + 1][u]);
        }
        std::sort(up_g.begin(), up_g.end());
        std::sort(up_d.begin(), up_d.end());
        g += "|ug";
        for (int c : up_g) g += std::to_string(c) + ",";
        g += "|ud";
        for (int c : up_d) g += std::to_string(c) + ",";
        std::vector<int> to, fr;
        for (auto [a, b] : s.tilde[k]) {
          if (a == i) to.push_back(color[k][b]);
          if (b == i) fr.push_back(color[k][a]);
        }
        std::sort(to.begin(), to.end());
        std::sort(fr.begin(), fr.end());
        g += "|t";
        for (int c : to) g += std::to_string(c) + ",";
        g += "|f";
        for (int c : fr) g += std::to_string(c) + ",";
      }
      std::map<std::string, int> order;
      for (const auto& g : sig) order.emplace(g, 0);
      int next = 0;
      for (auto& [_, v] : order) v = next++;
      // The old color is part of each signature, so classes can only split.
      // Stop once no class splits; comparing raw labels instead would loop,
      // because relabelling by signature order can permute labels forever.
      std::map<int, int> relabel;
      for (int i = 0; i < n; ++i) {
        int c = order[sig[i]];
        auto [it, inserted] = relabel.emplace(color[k][i], c);
        if (!inserted && it->second != c) changed = true;
        color[k][i] = c;
      }
    }
    return changed;
  };
  while (pass()) {
  }
  return color;
}

// Encoding of one level under an index translation of this level and the
// two below it.  new_this maps old->new on level k; faces are listed in
// new order.
std::string encode_level(const Ofs& s, int k, const std::vector<int>& new_this,
                         const std::vector<int>& new_below,
                         const std::vector<int>& new_below2) {
  int n = s.count(k);
  std::vector<int> old_of = inverse(new_this);
  std::string out = "[";
  for (int pos = 0; pos < n; ++pos) {
    int i = old_of[pos];
    if (k >= 1) {
      out += "g" + std::to_string(new_below[s.gamma[k][i]]);
      const Delta& d = s.delta[k][i];
      if (d.empty_dom) {
        out += "E" + std::to_string(k >= 2 ? new_below2[d.base] : -1);
      } else {
        std::vector<int> ds;
        for (int f : d.faces) ds.push_back(new_below[f]);
        std::sort(ds.begin(), ds.end());
        out += "d";
        for (int c : ds) out += std::to_string(c) + ",";
      }
    }
    out += ";";
  }
  std::vector<std::pair<int, int>> tp;
  for (auto [a, b] : s.tilde[k]) tp.emplace_back(new_this[a], new_this[b]);
  std::sort(tp.begin(), tp.end());
  out += "~";
  for (auto [a, b] : tp)
    out += std::to_string(a) + ">" + std::to_string(b) + ",";
  out += "]";
  return out;
}

// Enumerate all permutations of 0..n-1 that list color classes in
// increasing color order (candidates for the canonical order at one level).
void color_perms(const std::vector<int>& colors,
                 std::vector<std::vector<int>>& out) {
  int n = static_cast<int>(colors.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  // idx lists old indices in candidate new order; permute within classes.
  std::vector<std::pair<int, int>> spans;  // [begin,end) runs of equal color
  for (int b = 0; b < n;) {
    int e = b;
    while (e < n && colors[idx[e]] == colors[idx[b]]) ++e;
    spans.emplace_back(b, e);
    b = e;
  }
  std::vector<std::vector<int>> work{idx};
  for (auto [b, e] : spans) {
    if (e - b <= 1) continue;
    std::vector<std::vector<int>> next;
    for (auto& base : work) {
      std::vector<int> seg(base.begin() + b, base.begin() + e);
      std::sort(seg.begin(), seg.end());
      do {
        std::vector<int> cand = base;
        std::copy(seg.begin(), seg.end(), cand.begin() + b);
        next.push_back(cand);
      } while (std::next_permutation(seg.begin(), seg.end()));
    }
    work.swap(next);
  }
  for (auto& order : work) {
    std::vector<int> perm(n);  // old -> new
    for (int pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
    out.push_back(perm);
  }
}

struct Search {
  const Ofs& s;
  std::vector<std::vector<std::vector<int>>> options;  // per level
  std::string best;
  LevelPerm best_perm;
  LevelPerm current;

  void run(int k, const std::string& prefix) {
    if (k > s.dim()) {
      if (best.empty() || prefix < best) {
        best = prefix;
        best_perm = current;
      }
      return;
    }
    static const std::vector<int> none;
    const auto& below = k >= 1 ? current[k - 1] : none;
    const auto& below2 = k >= 2 ? current[k - 2] : none;
    // Keep only the options minimizing this level's encoding; distinct
    // lower-level choices are compared through the accumulated prefix.
    std::string local_best;
    std::vector<size_t> argmin;
    for (size_t oi = 0; oi < options[k].size(); ++oi) {
      std::string e = encode_level(s, k, options[k][oi], below, below2);
      if (local_best.empty() || e < local_best) {
        local_best = e;
        argmin = {oi};
      } else if (e == local_best) {
        argmin.push_back(oi);
      }
    }
    for (size_t oi : argmin) {
      current[k] = options[k][oi];
      run(k + 1, prefix + local_best);
    }
  }
};

}  // namespace

Ofs relabel(const Ofs& s, const LevelPerm& perm) {
  Ofs t;
  t.relaxed_top = s.relaxed_top;
  int d = s.dim();
  t.names.resize(d + 1);
  t.gamma.resize(d + 1);
  t.delta.resize(d + 1);
  t.tilde.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    int n = s.count(k);
    t.names[k].resize(n);
    if (k >= 1) {
      t.gamma[k].resize(n);
      t.delta[k].resize(n);
    }
    for (int i = 0; i < n; ++i) {
      int ni = perm[k][i];
      t.names[k][ni] = "f" + std::to_string(k) + "_" + std::to_string(ni);
      if (k >= 1) {
        t.gamma[k][ni] = perm[k - 1][s.gamma[k][i]];
        Delta d2;
        const Delta& d1 = s.delta[k][i];
        d2.empty_dom = d1.empty_dom;
        if (d1.empty_dom) {
          d2.base = k >= 2 ? perm[k - 2][d1.base] : d1.base;
        } else {
          for (int f : d1.faces) d2.faces.push_back(perm[k - 1][f]);
        }
        t.delta[k][ni] = d2;
      }
    }
    for (auto [a, b] : s.tilde[k])
      t.tilde[k].emplace_back(perm[k][a], perm[k][b]);
  }
  t.normalize();
  return t;
}

Ofs rename(const Ofs& s, const std::vector<std::vector<std::string>>& names) {
  Ofs t = s;
  t.names = names;
  return t;
}

CanonicalForm canonical_form(const Ofs& s) {
  auto colors = refine_colors(s);
  Search search{s, {}, {}, {}, {}};
  search.options.resize(s.dim() + 1);
  for (int k = 0; k <= s.dim(); ++k)
    color_perms(colors[k], search.options[k]);
  search.current.resize(s.dim() + 1);
  search.run(0, "");
  CanonicalForm cf;
  cf.perm = search.best_perm;
  cf.structure = relabel(s, cf.perm);
  cf.key = std::to_string(s.dim()) + "|" + search.best;
  if (s.relaxed_top) cf.key += "|relaxed";
  return cf;
}

std::string canonical_key(const Ofs& s) { return canonical_form(s).key; }

std::optional<LevelPerm> find_iso(const Ofs& s, const Ofs& t) {
  if (s.dim() != t.dim() || s.relaxed_top != t.relaxed_top)
    return std::nullopt;
  CanonicalForm cs = canonical_form(s), ct = canonical_form(t);
  if (cs.key != ct.key) return std::nullopt;
  LevelPerm iso(s.dim() + 1);
  for (int k = 0; k <= s.dim(); ++k) {
    std::vector<int> t_inv = [&] {
      std::vector<int> inv(ct.perm[k].size());
      for (size_t i = 0; i < ct.perm[k].size(); ++i) inv[ct.perm[k][i]] = int(i);
      return inv;
    }();
    iso[k].resize(s.count(k));
    for (int i = 0; i < s.count(k); ++i) iso[k][i] = t_inv[cs.perm[k][i]];
  }
  return iso;
}

namespace {

bool iso_respects(const Ofs& s, const Ofs& t, const LevelPerm& m, int upto) {
  for (int k = 1; k <= upto; ++k)
    for (int i = 0; i < s.count(k); ++i) {
      if (t.gamma[k][m[k][i]] != m[k - 1][s.gamma[k][i]]) return false;
      const Delta& ds = s.delta[k][i];
      const Delta& dt = t.delta[k][m[k][i]];
      if (ds.empty_dom != dt.empty_dom) return false;
      if (ds.empty_dom) {
        if (k >= 2 && dt.base != m[k - 2][ds.base]) return false;
      } else {
        std::vector<int> mapped;
        for (int f : ds.faces) mapped.push_back(m[k - 1][f]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != dt.faces) return false;
      }
    }
  for (int k = 0; k <= upto; ++k) {
    if (s.tilde[k].size() != t.tilde[k].size()) return false;
    for (auto [a, b] : s.tilde[k])
      if (!t.tilde_has(k, m[k][a], m[k][b])) return false;
  }
  return true;
}

}  // namespace

std::vector<LevelPerm> all_isos(const Ofs& s, const Ofs& t) {
  std::vector<LevelPerm> result;
  if (s.dim() != t.dim()) return result;
  for (int k = 0; k <= s.dim(); ++k)
    if (s.count(k) != t.count(k)) return result;
  int d = s.dim();
  LevelPerm m(d + 1);
  for (int k = 0; k <= d; ++k) {
    m[k].resize(s.count(k));
    std::iota(m[k].begin(), m[k].end(), 0);
  }
  // Nested level-wise permutation scan; sizes at desk scale keep this cheap.
  std::vector<std::vector<int>> perms_at(d + 1);
  (void)perms_at;
  std::vector<int> level(d + 1, 0);
  // Recursive lambda over levels.
  auto rec = [&](auto&& self, int k) -> void {
    if (k > d) {
      result.push_back(m);
      return;
    }
    std::sort(m[k].begin(), m[k].end());
    do {
      if (iso_respects(s, t, m, k)) self(self, k + 1);
    } while (std::next_permutation(m[k].begin(), m[k].end()));
  };
  rec(rec, 0);
  return result;
}

}  // namespace ofs
