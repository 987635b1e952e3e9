// SPDX-FileCopyrightText: (c) 2026 splitrel authors
//
// SPDX-License-Identifier: Apache-2.0

#include "splitrel/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "splitrel/error.hpp"

namespace splitrel {

namespace {

void append_u16(std::string& out, int value) {
  out.push_back(static_cast<char>(value & 0xff));
  out.push_back(static_cast<char>((value >> 8) & 0xff));
}

// Stable colour refinement. Colours are ranks of sorted signatures, so the
// result depends only on the isomorphism class of (g, terminal flags).
std::vector<int> refine_colours(int n, const std::vector<int>& mult, const std::vector<int>& flag) {
  using Signature = std::tuple<int, std::vector<std::pair<int, int>>>;
  std::vector<int> colour(n);
  {
    std::vector<std::pair<int, int>> initial(n);
    for (int v = 0; v < n; ++v) {
      int d = 0;
      for (int u = 0; u < n; ++u) d += mult[v * n + u];
      initial[v] = {flag[v], d};
    }
    std::vector<std::pair<int, int>> sorted = initial;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), initial[v]) -
                                   sorted.begin());
    }
  }
  int classes = *std::max_element(colour.begin(), colour.end()) + 1;
  for (;;) {
    std::vector<Signature> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u) {
        if (mult[v * n + u] > 0) nb.emplace_back(colour[u], mult[v * n + u]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v] = Signature{colour[v], std::move(nb)};
    }
    std::vector<Signature> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                   sorted.begin());
    }
    int next = static_cast<int>(sorted.size());
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

class OrderingSearch {
 public:
  OrderingSearch(int n, const std::vector<int>& mult, const std::vector<int>& colour)
      : n_(n), mult_(mult) {
    for (int v = 0; v < n; ++v) by_colour_[colour[v]].push_back(v);
    for (const auto& [c, members] : by_colour_) {
      for (std::size_t i = 0; i < members.size(); ++i) slot_colour_.push_back(c);
    }
    order_.assign(n, -1);
    used_.assign(n, false);
    // Code layout: column k holds mult(order[k], order[j]) for j < k.
    offset_.assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) offset_[k] = offset_[k - 1] + (k - 1);
    code_.assign(offset_[n], 0);
  }

  void run() { extend(0, false); }

  const std::vector<int>& best_code() const { return best_code_; }
  const std::vector<int>& best_order() const { return best_order_; }

 private:
  // `better` is true once the current prefix is already below the best.
  void extend(int k, bool better) {
    if (k == n_) {
      if (!have_best_ || better) {
        best_code_ = code_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    for (int v : by_colour_[slot_colour_[k]]) {
      if (used_[v]) continue;
      bool next_better = better;
      bool worse = false;
      for (int j = 0; j < k; ++j) {
        int value = mult_[v * n_ + order_[j]];
        code_[offset_[k] + j] = value;
        if (!have_best_ || next_better) continue;
        int ref = best_code_[offset_[k] + j];
        if (value < ref) {
          next_better = true;
        } else if (value > ref) {
          worse = true;
          break;
        }
      }
      if (worse) continue;
      used_[v] = true;
      order_[k] = v;
      extend(k + 1, next_better);
      used_[v] = false;
    }
  }

  int n_;
  const std::vector<int>& mult_;
  std::map<int, std::vector<int>> by_colour_;
  std::vector<int> slot_colour_;
  std::vector<int> order_;
  std::vector<bool> used_;
  std::vector<int> offset_;
  std::vector<int> code_;
  std::vector<int> best_code_;
  std::vector<int> best_order_;
  bool have_best_ = false;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

CanonicalForm canonical_form(const Multigraph& g, std::optional<TerminalPair> tp) {
  const int n = g.order();
  if (tp) validate_terminals(g, *tp);
  std::vector<int> mult(static_cast<std::size_t>(n) * n, 0);
  for (const Bundle& b : g.bundles()) {
    if (b.multiplicity > 0xffff) {
      throw Error(ErrorCode::kLimitExceeded, "multiplicity too large for canonical key");
    }
    mult[b.pair.u * n + b.pair.v] = b.multiplicity;
    mult[b.pair.v * n + b.pair.u] = b.multiplicity;
  }
  std::vector<int> flag(n, 0);
  if (tp) {
    flag[tp->s] = 1;
    flag[tp->t] = 1;
  }
  std::vector<int> colour = refine_colours(n, mult, flag);
  OrderingSearch search(n, mult, colour);
  search.run();

  std::string bytes;
  bytes.push_back(tp ? 'T' : 'G');
  append_u16(bytes, n);
  const std::vector<int>& order = search.best_order();
  for (int k = 0; k < n; ++k) bytes.push_back(static_cast<char>(flag[order[k]]));
  for (int value : search.best_code()) append_u16(bytes, value);

  CanonicalForm form;
  form.key = CanonicalKey(std::move(bytes));
  form.position.assign(n, 0);
  for (int k = 0; k < n; ++k) form.position[order[k]] = k;
  return form;
}

CanonicalKey canonical_key(const Multigraph& g, std::optional<TerminalPair> tp) {
  return canonical_form(g, tp).key;
}

Multigraph canonical_graph(const Multigraph& g) {
  CanonicalForm form = canonical_form(g);
  return g.relabeled(form.position);
}

std::pair<Multigraph, TerminalPair> canonical_graph(const Multigraph& g, TerminalPair tp) {
  CanonicalForm form = canonical_form(g, tp);
  Vertex s = form.position[tp.s];
  Vertex t = form.position[tp.t];
  return {g.relabeled(form.position), TerminalPair{std::min(s, t), std::max(s, t)}};
}

}  // namespace splitrel
