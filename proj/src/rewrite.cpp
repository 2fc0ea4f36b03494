#include "pipn/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "pipn/errors.hpp"

namespace pipn {

  FactorForm FactorForm::identity(int n) {
    return {n, {}, {}, Perm::identity(n)};
  }

  namespace {

    std::vector<std::pair<int, int>> pairs_of(std::vector<PairFactor> const& fs, FactorKind k) {
      std::vector<std::pair<int, int>> out;
      for (auto const& f : fs) {
        if (f.kind == k) {
          out.emplace_back(f.p, f.q);
        }
      }
      return out;
    }

  }  // namespace

  std::vector<std::pair<int, int>> FactorForm::rho_factors() const {
    return pairs_of(factors, FactorKind::rho);
  }

  std::vector<std::pair<int, int>> FactorForm::lambda_factors() const {
    return pairs_of(factors, FactorKind::lambda);
  }

  Word FactorForm::to_word() const {
    Word w(n);
    for (auto const& f : factors) {
      w += f.kind == FactorKind::rho ? expand_rho_pq(n, f.p, f.q) : expand_lambda_pq(n, f.p, f.q);
    }
    return w + expand_E(n, e_set) + word_of_perm(tail);
  }

  Diagram FactorForm::value() const {
    Diagram d = Diagram::identity(n);
    for (auto const& f : factors) {
      d = d * (f.kind == FactorKind::rho ? generator_r(n, f.p, f.q) : generator_l(n, f.p, f.q));
    }
    for (int x : e_set) {
      d = d * generator_eps(n, x);
    }
    return d * perm_diagram(tail);
  }

  void Fuel::spend() {
    if (_left == 0) {
      throw FuelExhausted("rewrite fuel exhausted");
    }
    --_left;
  }

  std::uint64_t default_fuel(Word const& w) {
    std::uint64_t const k = w.size() + static_cast<std::uint64_t>(w.degree());
    return 10 * k * k;
  }

  namespace {

    using Index = std::ptrdiff_t;

    class Rewriter {
     public:
      Rewriter(FactorForm& f, Fuel& fuel) : _f(f), _fuel(fuel) {}

      std::vector<PairFactor>& fs() {
        return _f.factors;
      }

      void spend() {
        _fuel.spend();
      }

      // The e_x, x in pending, standing just before factors[pos] travel right
      // and join e_set.
      void push_e(Index pos, IndexSet pending) {
        auto& v = fs();
        Index i = pos;
        while (!pending.empty() && i < static_cast<Index>(v.size())) {
          PairFactor const f = v[static_cast<std::size_t>(i)];
          if (f.kind == FactorKind::lambda) {
            // e_q l_{p,q} = l_{p,q};  e_p l_{p,q} = l_{p,q} e_q
            pending.erase(f.q);
            if (pending.erase(f.p) != 0) {
              pending.insert(f.q);
            }
            ++i;
          } else if (pending.count(f.p) != 0 || pending.count(f.q) != 0) {
            // e_p r_{p,q} = e_q r_{p,q} = e_p e_q
            pending.insert(f.p);
            pending.insert(f.q);
            v.erase(v.begin() + i);
          } else {
            ++i;
          }
        }
        _f.e_set.insert(pending.begin(), pending.end());
      }

      // The transposition (a b) standing just before factors[pos] travels
      // right into the tail.
      void push_sigma(Index pos, int a, int b) {
        Perm const tau = Perm::transposition(_f.n, a, b);
        auto&      v = fs();
        for (auto it = v.begin() + pos; it != v.end(); ++it) {
          it->p = tau(it->p);
          it->q = tau(it->q);
        }
        IndexSet e;
        for (int x : _f.e_set) {
          e.insert(tau(x));
        }
        _f.e_set = std::move(e);
        _f.tail = tau * _f.tail;
      }

      void move(Index from, Index to) {
        auto& v = fs();
        if (from < to) {
          std::rotate(v.begin() + from, v.begin() + from + 1, v.begin() + to + 1);
        } else if (to < from) {
          std::rotate(v.begin() + to, v.begin() + from, v.begin() + from + 1);
        }
      }

      void erase(Index i) {
        fs().erase(fs().begin() + i);
      }

      Index rho_end() {
        auto& v = fs();
        return std::find_if(v.begin(), v.end(),
                            [](PairFactor const& f) { return f.kind == FactorKind::lambda; })
               - v.begin();
      }

     private:
      FactorForm& _f;
      Fuel&       _fuel;
    };

    PairFactor rho(int p, int q) {
      return {FactorKind::rho, p, q};
    }
    PairFactor lambda(int p, int q) {
      return {FactorKind::lambda, p, q};
    }

    [[maybe_unused]] std::size_t inversions(std::vector<PairFactor> const& v) {
      std::size_t out = 0, lambdas = 0;
      for (auto const& f : v) {
        if (f.kind == FactorKind::lambda) {
          ++lambdas;
        } else {
          out += lambdas;
        }
      }
      return out;
    }

    // Two factors of one kind that may not sit in the same group.
    bool clash(PairFactor const& a, PairFactor const& b) {
      bool const meet = a.p == b.p || a.p == b.q || a.q == b.p || a.q == b.q;
      return meet && !(a.p == b.p && a.q != b.q);
    }

  }  // namespace

  FactorForm to_factor_form(Word const& w, Fuel& fuel) {
    int const  n = w.degree();
    FactorForm f = FactorForm::identity(n);
    Rewriter   rw(f, fuel);
    Perm       beta = Perm::identity(n);
    for (Letter x : w.letters()) {
      rw.spend();
      Perm const inv = beta.inverse();
      switch (x.kind) {
        case Gen::sigma: beta = beta * Perm::transposition(n, x.index, x.index + 1); break;
        case Gen::e: f.e_set.insert(inv(x.index)); break;
        case Gen::lambda:
        case Gen::rho: {
          auto const kind = x.kind == Gen::rho ? FactorKind::rho : FactorKind::lambda;
          f.factors.push_back({kind, inv(x.index), inv(x.index + 1)});
          IndexSet pending;
          std::swap(pending, f.e_set);
          rw.push_e(static_cast<Index>(f.factors.size()) - 1, std::move(pending));
          break;
        }
      }
    }
    f.tail = beta;
    return f;
  }

  FactorForm sort_factors(FactorForm f, Fuel& fuel) {
    Rewriter rw(f, fuel);
    auto&    v = rw.fs();
    while (true) {
      Index i = 0;
      while (i + 1 < static_cast<Index>(v.size())
             && !(v[static_cast<std::size_t>(i)].kind == FactorKind::lambda
                  && v[static_cast<std::size_t>(i) + 1].kind == FactorKind::rho)) {
        ++i;
      }
      if (i + 1 >= static_cast<Index>(v.size())) {
        return f;
      }
      rw.spend();
      [[maybe_unused]] std::size_t const before = inversions(v);
      int const k = v[static_cast<std::size_t>(i)].p, l = v[static_cast<std::size_t>(i)].q;
      int const x = v[static_cast<std::size_t>(i) + 1].p, y = v[static_cast<std::size_t>(i) + 1].q;
      if (x != k && x != l && y != k && y != l) {
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
      } else if (x == k && y == l) {
        // l_{k,l} r_{k,l} = e_l
        v.erase(v.begin() + i, v.begin() + i + 2);
        rw.push_e(i, {l});
      } else if (x == l && y == k) {
        // l_{k,l} r_{l,k} = e_l s_{k,l}
        v.erase(v.begin() + i, v.begin() + i + 2);
        rw.push_sigma(i, k, l);
        rw.push_e(i, {l});
      } else if (x == k) {
        // l_{k,l} r_{k,y} = r_{k,y} l_{k,l}
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
      } else if (y == k) {
        // l_{k,l} r_{x,k} = r_{x,k} l_{x,k} e_l s_{k,l}
        v[static_cast<std::size_t>(i)] = rho(x, k);
        v[static_cast<std::size_t>(i) + 1] = lambda(x, k);
        rw.push_sigma(i + 2, k, l);
        rw.push_e(i + 2, {l});
      } else if (x == l) {
        // l_{k,l} r_{l,y} = s_{l,y} e_y r_{k,l} l_{k,l}
        v[static_cast<std::size_t>(i)] = rho(k, l);
        v[static_cast<std::size_t>(i) + 1] = lambda(k, l);
        rw.push_sigma(i, l, y);
        rw.push_e(i, {l});
      } else {
        // y == l: l_{k,l} r_{x,l} = s_{x,l} e_x r_{k,l} l_{k,l} s_{x,l}
        v[static_cast<std::size_t>(i)] = rho(k, l);
        v[static_cast<std::size_t>(i) + 1] = lambda(k, l);
        rw.push_sigma(i + 2, x, l);
        rw.push_sigma(i, x, l);
        rw.push_e(i, {l});
      }
      assert(inversions(v) < before);
    }
  }

  FactorForm dedupe_factors(FactorForm f, Fuel& fuel) {
    Rewriter rw(f, fuel);
    auto&    v = rw.fs();
    while (true) {
      Index m = 0, j = -1;
      for (; m < static_cast<Index>(v.size()) && j < 0; ++m) {
        for (Index t = 0; t < m; ++t) {
          auto const& a = v[static_cast<std::size_t>(t)];
          auto const& b = v[static_cast<std::size_t>(m)];
          if (a.kind == b.kind && clash(a, b)) {
            j = t;
            break;
          }
        }
      }
      if (j < 0) {
        return f;
      }
      --m;
      rw.spend();
      // Factors of one kind in a clash free prefix commute pairwise.
      rw.move(j, m - 1);
      PairFactor const Y = v[static_cast<std::size_t>(m) - 1], X = v[static_cast<std::size_t>(m)];
      int const        p = Y.p, q = Y.q, x = X.p, y = X.q;
      if ((x == p && y == q) || (x == q && y == p)) {
        v.erase(v.begin() + m - 1, v.begin() + m + 1);
        rw.push_e(m - 1, {p, q});
      } else if (Y.kind == FactorKind::rho) {
        if (y == p) {
          // r_{p,q} r_{x,p} = r_{x,p} r_{x,q}
          v[static_cast<std::size_t>(m) - 1] = rho(x, p);
          v[static_cast<std::size_t>(m)] = rho(x, q);
        } else if (y == q) {
          // r_{p,q} r_{x,q} = e_x r_{p,q}
          rw.erase(m);
          rw.push_e(m - 1, {x});
        } else {
          // x == q: r_{p,q} r_{q,y} = e_y r_{p,q}
          rw.erase(m);
          rw.push_e(m - 1, {y});
        }
      } else {
        if (x == q) {
          // l_{p,q} l_{q,y} = l_{p,q} l_{p,y}
          v[static_cast<std::size_t>(m)] = lambda(p, y);
        } else if (y == p) {
          // l_{p,q} l_{x,p} = e_q l_{x,p}
          rw.erase(m - 1);
          rw.push_e(m - 1, {q});
        } else {
          // y == q: l_{p,q} l_{x,q} = e_p l_{x,q}
          rw.erase(m - 1);
          rw.push_e(m - 1, {p});
        }
      }
    }
  }

  FactorForm enforce_disjointness(FactorForm f, Fuel& fuel) {
    Rewriter rw(f, fuel);
    auto&    v = rw.fs();
    auto     at = [&](Index i) -> PairFactor& { return v[static_cast<std::size_t>(i)]; };
    while (true) {
      Index const rb = rw.rho_end();
      Index const size = static_cast<Index>(v.size());
      Index       ri = -1, li = -1;
      for (Index i = 0; i < rb && ri < 0; ++i) {
        for (Index j = rb; j < size; ++j) {
          if (at(i).p == at(j).q || at(j).p == at(i).q) {
            ri = i;
            li = j;
            break;
          }
        }
      }
      if (ri >= 0) {
        rw.spend();
        rw.move(ri, rb - 1);
        rw.move(li, rb);
        int const k = at(rb - 1).p, l = at(rb - 1).q, x = at(rb).p, y = at(rb).q;
        if (x == l && y == k) {
          // r_{k,l} l_{l,k} = e_k e_l
          v.erase(v.begin() + rb - 1, v.begin() + rb + 1);
          rw.push_e(rb - 1, {k, l});
        } else if (y == k) {
          // r_{k,l} l_{x,k} = l_{x,k} e_l
          rw.erase(rb - 1);
          rw.push_e(rb, {l});
        } else {
          // x == l: r_{k,l} l_{l,y} = e_y r_{k,l}
          rw.erase(rb);
          rw.push_e(rb - 1, {y});
        }
        continue;
      }

      bool changed = false;
      for (int e : f.e_set) {
        auto lit = std::find_if(v.begin() + rb, v.end(),
                                [&](PairFactor const& g) { return g.p == e || g.q == e; });
        if (lit != v.end()) {
          // l_{q,b} e_q = l_{q,b} e_b = e_q e_b, with the lambda moved last
          rw.spend();
          f.e_set.insert(lit->p);
          f.e_set.insert(lit->q);
          v.erase(lit);
          changed = true;
          break;
        }
        auto rit = std::find_if(v.begin(), v.begin() + rb,
                                [&](PairFactor const& g) { return g.p == e || g.q == e; });
        if (rit != v.begin() + rb) {
          // e_x commutes leftward past every lambda; the rho moves last
          rw.spend();
          rw.move(rit - v.begin(), rb - 1);
          f.e_set.erase(e);
          if (at(rb - 1).p == e) {
            // r_{p,a} e_p = e_p e_a
            IndexSet pending{at(rb - 1).p, at(rb - 1).q};
            rw.erase(rb - 1);
            rw.push_e(rb - 1, std::move(pending));
          }
          // else r_{p,a} e_a = r_{p,a}
          changed = true;
          break;
        }
      }
      if (!changed) {
        return f;
      }
    }
  }

  CanonicalWord assemble(FactorForm const& f) {
    std::map<int, std::pair<IndexSet, IndexSet>> groups;
    bool                                         seen_lambda = false;
    for (auto const& g : f.factors) {
      if (g.kind == FactorKind::lambda) {
        seen_lambda = true;
        groups[g.p].second.insert(g.q);
      } else {
        if (seen_lambda) {
          throw std::logic_error("assemble: rho after lambda");
        }
        groups[g.p].first.insert(g.q);
      }
    }
    std::vector<Factor> factors;
    for (auto& [t, cd] : groups) {
      cd.first.insert(t);
      cd.second.insert(t);
      factors.push_back({t, std::move(cd.first), std::move(cd.second)});
    }
    try {
      return make_canonical(f.n, std::move(factors), f.e_set, f.tail);
    } catch (InvalidInput const& e) {
      throw std::logic_error(std::string("assemble: not reduced: ") + e.what());
    }
  }

  CanonicalWord normalize_symbolic(Word const& w, std::uint64_t budget) {
    if (w.degree() < 3) {
      throw InvalidInput("normalize needs rank at least 3");
    }
    Fuel       fuel(budget);
    FactorForm f = to_factor_form(w, fuel);
    f = sort_factors(std::move(f), fuel);
    f = dedupe_factors(std::move(f), fuel);
    f = enforce_disjointness(std::move(f), fuel);
    return assemble(f);
  }

  CanonicalWord normalize_symbolic(Word const& w) {
    return normalize_symbolic(w, default_fuel(w));
  }

  CanonicalWord normalize(Word const& w, std::uint64_t budget) {
    return standardize(normalize_symbolic(w, budget));
  }

  CanonicalWord normalize(Word const& w) {
    return normalize(w, default_fuel(w));
  }

}  // namespace pipn
