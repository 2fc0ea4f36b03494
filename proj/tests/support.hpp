#pragma once

// Test helpers: random generators and an oracle for the product that does
// not share code with multiply().

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pipn/canonical.hpp"
#include "pipn/diagram.hpp"
#include "pipn/perm.hpp"
#include "pipn/word.hpp"

namespace pipn::test {

  inline Diagram random_diagram(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 2 * n - 1);
    std::map<int, Block>               groups;
    for (int k = 1; k <= n; ++k) {
      groups[pick(rng)].push_back(k);
      groups[pick(rng)].push_back(-k);
    }
    std::vector<Block> blocks;
    for (auto& [id, b] : groups) {
      bool pos = std::any_of(b.begin(), b.end(), [](Label x) { return x > 0; });
      bool neg = std::any_of(b.begin(), b.end(), [](Label x) { return x < 0; });
      if (pos && neg) {
        blocks.push_back(b);
      } else {
        for (Label x : b) {
          blocks.push_back({x});
        }
      }
    }
    return Diagram(n, std::move(blocks));
  }

  inline Perm random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      v[static_cast<std::size_t>(i)] = i + 1;
    }
    std::shuffle(v.begin(), v.end(), rng);
    return Perm(std::move(v));
  }

  // A permutation preserving each of the given disjoint sets, fixing the rest.
  inline Perm random_perm_within(int n, std::vector<IndexSet> const& parts, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      v[static_cast<std::size_t>(i)] = i + 1;
    }
    for (auto const& s : parts) {
      std::vector<int> src(s.begin(), s.end()), dst = src;
      std::shuffle(dst.begin(), dst.end(), rng);
      for (std::size_t i = 0; i < src.size(); ++i) {
        v[static_cast<std::size_t>(src[i] - 1)] = dst[i];
      }
    }
    return Perm(std::move(v));
  }

  // A random valid canonical word built directly from the constraints.
  inline CanonicalWord random_canonical(int n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<int>            order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      order[static_cast<std::size_t>(i)] = i + 1;
    }
    std::shuffle(order.begin(), order.end(), rng);
    std::set<int>       used_c, used_d;
    std::vector<Factor> factors;
    std::size_t const   s = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(n) / 2)(rng);
    for (int t : order) {
      if (factors.size() == s) {
        break;
      }
      if (used_c.count(t) || used_d.count(t)) {
        continue;
      }
      Factor f{t, {t}, {t}};
      used_c.insert(t);
      used_d.insert(t);
      for (int x : order) {
        if (!used_c.count(x) && coin(rng) && coin(rng)) {
          f.C.insert(x);
          used_c.insert(x);
        }
        if (!used_d.count(x) && coin(rng) && coin(rng)) {
          f.D.insert(x);
          used_d.insert(x);
        }
      }
      if (f.C.size() == 1 && f.D.size() == 1) {
        used_c.erase(t);
        used_d.erase(t);
        continue;
      }
      factors.push_back(std::move(f));
    }
    IndexSet M;
    for (int x = 1; x <= n; ++x) {
      if (!used_c.count(x) && !used_d.count(x) && coin(rng)) {
        M.insert(x);
      }
    }
    return make_canonical(n, std::move(factors), std::move(M), random_perm(n, rng));
  }

  inline Word random_word_of(int n, std::size_t max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::vector<Letter>                        letters(len(rng));
    for (auto& x : letters) {
      auto g = static_cast<Gen>(std::uniform_int_distribution<int>(0, 3)(rng));
      x = {g, std::uniform_int_distribution<int>(1, g == Gen::e ? n : n - 1)(rng)};
    }
    return Word(n, std::move(letters));
  }

  // The product from the definition: embed both factors in the point free
  // monoid on n + 1 points, compose by graph search and strip the anchor.
  inline Diagram oracle_product(Diagram const& a, Diagram const& b) {
    int const n = a.degree();
    int const m = n + 1;
    // Node ids: top k -> k, middle k -> m + k, bottom k -> 2m + k.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(3 * m + 1));
    auto link = [&](int u, int v) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    };
    auto embed = [&](Diagram const& d, int upper, int lower) {
      std::vector<int> anchor{upper + m, lower + m};
      for (Block const& blk : d.blocks()) {
        std::vector<int> ids;
        for (Label x : blk) {
          ids.push_back(x > 0 ? upper + x : lower - x);
        }
        if (blk.size() == 1) {
          anchor.push_back(ids[0]);
          continue;
        }
        for (std::size_t i = 1; i < ids.size(); ++i) {
          link(ids[0], ids[i]);
        }
      }
      for (std::size_t i = 1; i < anchor.size(); ++i) {
        link(anchor[0], anchor[i]);
      }
    };
    embed(a, 0, m);
    embed(b, m, 2 * m);
    std::vector<int> comp(adj.size(), -1);
    int              count = 0;
    for (int s = 1; s <= 3 * m; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) {
        continue;
      }
      std::vector<int> stack{s};
      comp[static_cast<std::size_t>(s)] = count;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
          if (comp[static_cast<std::size_t>(v)] < 0) {
            comp[static_cast<std::size_t>(v)] = count;
            stack.push_back(v);
          }
        }
      }
      ++count;
    }
    int const               anchor = comp[static_cast<std::size_t>(m)];
    std::map<int, Block>    lines;
    std::vector<Block>      blocks;
    for (int k = 1; k <= n; ++k) {
      for (Label x : {k, -k}) {
        int c = comp[static_cast<std::size_t>(x > 0 ? k : 2 * m + k)];
        if (c == anchor) {
          blocks.push_back({x});
        } else {
          lines[c].push_back(x);
        }
      }
    }
    for (auto& [c, blk] : lines) {
      blocks.push_back(std::move(blk));
    }
    return Diagram(n, std::move(blocks));
  }

}  // namespace pipn::test
