#include "pipn/presentation.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "pipn/errors.hpp"

namespace pipn {

  Diagram eval_letter(int n, Letter x) {
    switch (x.kind) {
      case Gen::sigma: return generator_s(n, x.index, x.index + 1);
      case Gen::lambda: return generator_l(n, x.index, x.index + 1);
      case Gen::rho: return generator_r(n, x.index, x.index + 1);
      case Gen::e: return generator_eps(n, x.index);
    }
    throw InvalidInput("bad generator kind");
  }

  Diagram eval_word(Word const& w) {
    int const n = w.degree();
    Diagram   result = Diagram::identity(n);
    for (Letter x : w.letters()) {
      result = result * eval_letter(n, x);
    }
    return result;
  }

  Word word_involution(Word const& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (Letter& x : out) {
      if (x.kind == Gen::lambda) {
        x.kind = Gen::rho;
      } else if (x.kind == Gen::rho) {
        x.kind = Gen::lambda;
      }
    }
    return Word(w.degree(), std::move(out));
  }

  Word word_of_perm(Perm const& p) {
    // p = s_i * g where g is p with positions i, i+1 of its one-line form
    // swapped; peel off descents until nothing is left.
    std::vector<int> v = p.images();
    Word             w(p.degree());
    for (std::size_t i = 0; i + 1 < v.size();) {
      if (v[i] > v[i + 1]) {
        w.push_back(Letter::sigma(static_cast<int>(i) + 1));
        std::swap(v[i], v[i + 1]);
        i = i == 0 ? 0 : i - 1;
      } else {
        ++i;
      }
    }
    return w;
  }

  namespace {

    void check_pq(int n, int p, int q) {
      if (p < 1 || p > n || q < 1 || q > n || p == q) {
        throw InvalidInput("need distinct indices in 1.." + std::to_string(n));
      }
    }

    Word reversed(Word const& w) {
      return Word(w.degree(), {w.letters().rbegin(), w.letters().rend()});
    }

    Word conjugate_first(Perm const& pi, Gen kind) {
      Word const pw = word_of_perm(pi);
      Word       out = reversed(pw);
      out.push_back({kind, 1});
      return out + pw;
    }

    // The permutation sending 1 -> p, 2 -> q and the rest increasingly.
    Perm lift(int n, int p, int q) {
      std::vector<int> v{p, q};
      for (int k = 1; k <= n; ++k) {
        if (k != p && k != q) {
          v.push_back(k);
        }
      }
      return Perm(std::move(v));
    }

    Word expand_pq(int n, int p, int q, Gen kind) {
      check_pq(n, p, q);
      if (q == p + 1) {
        return Word(n, {{kind, p}});
      }
      return conjugate_first(lift(n, p, q), kind);
    }

    Word expand_group(int n, int p, IndexSet const& A, Gen kind) {
      if (A.count(p) != 0) {
        throw InvalidInput("anchor must not belong to its set");
      }
      Word out(n);
      for (int a : A) {
        out += expand_pq(n, p, a, kind);
      }
      return out;
    }

  }  // namespace

  Word expand_sigma_pq(int n, int p, int q) {
    check_pq(n, p, q);
    int const i = std::min(p, q), j = std::max(p, q);
    Word      out(n);
    for (int k = i; k < j; ++k) {
      out.push_back(Letter::sigma(k));
    }
    for (int k = j - 2; k >= i; --k) {
      out.push_back(Letter::sigma(k));
    }
    return out;
  }

  Word expand_lambda_pq(int n, int p, int q) {
    return expand_pq(n, p, q, Gen::lambda);
  }

  Word expand_rho_pq(int n, int p, int q) {
    return expand_pq(n, p, q, Gen::rho);
  }

  Word conjugate_lambda_1(Perm const& pi) {
    return conjugate_first(pi, Gen::lambda);
  }

  Word conjugate_rho_1(Perm const& pi) {
    return conjugate_first(pi, Gen::rho);
  }

  Word expand_R(int n, int p, IndexSet const& A) {
    return expand_group(n, p, A, Gen::rho);
  }

  Word expand_L(int n, int p, IndexSet const& A) {
    return expand_group(n, p, A, Gen::lambda);
  }

  Word expand_E(int n, IndexSet const& M) {
    Word out(n);
    for (int m : M) {
      if (m < 1 || m > n) {
        throw InvalidInput("E index out of range");
      }
      out.push_back(Letter::e(m));
    }
    return out;
  }

  std::string RelationInstance::tag() const {
    return clause == 0 ? family : family + "." + std::to_string(clause);
  }

  std::string to_tsv(RelationInstance const& r) {
    return r.tag() + '\t' + to_string(r.lhs) + '\t' + to_string(r.rhs);
  }

  namespace {

    class Emitter {
     public:
      explicit Emitter(int n) : _n(n) {}

      Word id() const {
        return Word(_n);
      }
      Word s(int i) const {
        return Word(_n, {Letter::sigma(i)});
      }
      Word l(int i) const {
        return Word(_n, {Letter::lambda(i)});
      }
      Word r(int i) const {
        return Word(_n, {Letter::rho(i)});
      }
      Word e(int i) const {
        return Word(_n, {Letter::e(i)});
      }
      Word s(int p, int q) const {
        return expand_sigma_pq(_n, p, q);
      }
      Word l(int p, int q) const {
        return expand_lambda_pq(_n, p, q);
      }
      Word r(int p, int q) const {
        return expand_rho_pq(_n, p, q);
      }

      void family(std::string name) {
        _family = std::move(name);
      }

      void emit(int clause, std::vector<int> idx, Word lhs, Word rhs) {
        _out.push_back({_family, clause, std::move(idx), std::move(lhs), std::move(rhs)});
      }

      // a = b = c = ...: one instance per adjacent pair, numbered from
      // `first_clause`.
      void chain(int first_clause, std::vector<int> const& idx, std::vector<Word> words) {
        for (std::size_t k = 0; k + 1 < words.size(); ++k) {
          emit(first_clause + static_cast<int>(k), idx, words[k], words[k + 1]);
        }
      }

      std::vector<RelationInstance> take() {
        return std::move(_out);
      }

     private:
      int                           _n;
      std::string                   _family;
      std::vector<RelationInstance> _out;
    };

    // Calls fn on every tuple of `arity` pairwise distinct values in 1..n.
    void for_each_distinct(int n, int arity, std::function<void(std::vector<int> const&)> const& fn) {
      std::vector<int> t(static_cast<std::size_t>(arity), 0);
      std::function<void(int)> rec = [&](int depth) {
        if (depth == arity) {
          fn(t);
          return;
        }
        for (int v = 1; v <= n; ++v) {
          if (std::find(t.begin(), t.begin() + depth, v) != t.begin() + depth) {
            continue;
          }
          t[static_cast<std::size_t>(depth)] = v;
          rec(depth + 1);
        }
      };
      rec(0);
    }

  }  // namespace

  std::vector<RelationInstance> relation_instances(int n) {
    if (n < 3) {
      throw InvalidInput("the presentation needs rank at least 3");
    }
    Emitter E(n);

    E.family("c1");
    for (int i = 1; i < n; ++i) {
      E.emit(0, {i}, E.s(i) + E.s(i), E.id());
    }

    E.family("c2");
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        E.emit(0, {i, j}, E.s(i) + E.s(j), E.s(j) + E.s(i));
      }
    }

    E.family("c3");
    for (int i = 1; i + 1 < n; ++i) {
      int j = i + 1;
      E.emit(0, {i, j}, E.s(i) + E.s(j) + E.s(i), E.s(j) + E.s(i) + E.s(j));
    }

    E.family("lr1");
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) <= 1) {
          continue;
        }
        if (i < j) {
          E.emit(1, {i, j}, E.l(i) + E.l(j), E.l(j) + E.l(i));
          E.emit(2, {i, j}, E.r(i) + E.r(j), E.r(j) + E.r(i));
        }
        E.emit(3, {i, j}, E.r(i) + E.l(j), E.l(j) + E.r(i));
      }
    }

    E.family("neighb-lambda-rho");
    for (int i = 1; i + 1 < n; ++i) {
      E.chain(1, {i}, {E.l(i) + E.r(i + 1),
                       E.s(i + 1) + E.r(i) + E.l(i) + E.e(i + 2),
                       E.s(i) + E.r(i + 1) + E.s(i) + E.l(i)});
      E.chain(3, {i}, {E.l(i + 1) + E.r(i),
                       E.e(i + 2) + E.r(i) + E.l(i) + E.s(i + 1),
                       E.r(i) + E.s(i) + E.l(i + 1) + E.s(i)});
    }

    E.family("neighb-rho-lambda");
    for (int i = 1; i + 1 < n; ++i) {
      E.emit(1, {i}, E.r(i) + E.l(i + 1), E.r(i) + E.e(i + 2));
      E.emit(2, {i}, E.r(i + 1) + E.l(i), E.e(i + 2) + E.l(i));
    }

    E.family("inverse");
    for (int i = 1; i < n; ++i) {
      E.emit(1, {i}, E.l(i) + E.r(i) + E.l(i), E.l(i));
      E.emit(2, {i}, E.r(i) + E.l(i) + E.r(i), E.r(i));
    }

    E.family("slr1");
    for (int i = 1; i + 1 < n; ++i) {
      int j = i + 1;
      E.emit(1, {i, j}, E.s(i) + E.l(j) + E.s(i), E.s(j) + E.l(i) + E.s(j));
      E.emit(2, {i, j}, E.s(i) + E.r(j) + E.s(i), E.s(j) + E.r(i) + E.s(j));
    }

    E.family("slr2");
    for (int i = 1; i < n; ++i) {
      E.emit(1, {i}, E.l(i) + E.s(i), E.l(i));
      E.emit(2, {i}, E.s(i) + E.r(i), E.r(i));
    }

    E.family("slr3");
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) > 1) {
          E.emit(1, {i, j}, E.s(i) + E.l(j), E.l(j) + E.s(i));
          E.emit(2, {i, j}, E.s(i) + E.r(j), E.r(j) + E.s(i));
        }
      }
    }

    E.family("ghost");
    for (int i = 1; i + 1 < n; ++i) {
      E.chain(1, {i}, {E.l(i) + E.l(i + 1),
                       E.l(i) + E.l(i + 1) + E.s(i),
                       E.s(i + 1) + E.l(i) + E.l(i + 1)});
      E.chain(3, {i}, {E.r(i + 1) + E.r(i),
                       E.s(i) + E.r(i + 1) + E.r(i),
                       E.r(i + 1) + E.r(i) + E.s(i + 1)});
    }

    E.family("ghost1");
    for (int i = 1; i + 1 < n; ++i) {
      E.chain(1, {i}, {E.s(i + 1) + E.l(i + 1) + E.l(i),
                       E.l(i + 1) + E.l(i),
                       E.l(i) + E.e(i + 2)});
      E.chain(3, {i}, {E.r(i) + E.r(i + 1) + E.s(i + 1),
                       E.r(i) + E.r(i + 1),
                       E.e(i + 2) + E.r(i)});
    }

    E.family("df-e");
    for (int i = 2; i <= n; ++i) {
      E.emit(1, {i}, E.e(i), E.l(i - 1) + E.r(i - 1));
    }
    E.emit(2, {1}, E.e(1), E.s(1) + E.e(2) + E.s(1));

    E.family("squares");
    for (int i = 1; i <= n; ++i) {
      E.emit(1, {i}, E.e(i) + E.e(i), E.e(i));
    }
    for (int i = 1; i < n; ++i) {
      E.chain(2, {i}, {E.e(i) + E.e(i + 1),
                       E.e(i + 1) + E.e(i),
                       E.l(i) + E.l(i),
                       E.r(i) + E.r(i),
                       E.r(i) + E.s(i) + E.l(i)});
    }

    E.family("com-e-sigma");
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (j != i && j != i - 1) {
          E.emit(1, {i, j}, E.e(i) + E.s(j), E.s(j) + E.e(i));
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      E.emit(2, {i}, E.e(i) + E.s(i), E.s(i) + E.e(i + 1));
      E.emit(3, {i}, E.s(i) + E.e(i), E.e(i + 1) + E.s(i));
    }

    E.family("two-zeros-lambda");
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (j != i && j != i - 1) {
          E.emit(1, {i, j}, E.e(i) + E.l(j), E.l(j) + E.e(i));
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      E.emit(2, {i}, E.e(i + 1) + E.l(i), E.l(i));
      E.chain(3, {i}, {E.e(i) + E.l(i),
                       E.l(i) + E.e(i + 1),
                       E.l(i) + E.e(i),
                       E.e(i) + E.e(i + 1)});
    }

    E.family("two-zeros-rho");
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (j != i && j != i - 1) {
          E.emit(1, {i, j}, E.e(i) + E.r(j), E.r(j) + E.e(i));
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      E.emit(2, {i}, E.r(i) + E.e(i + 1), E.r(i));
      E.chain(3, {i}, {E.r(i) + E.e(i),
                       E.e(i + 1) + E.r(i),
                       E.e(i) + E.r(i),
                       E.e(i) + E.e(i + 1)});
    }

    return E.take();
  }

  std::vector<RelationInstance> derived_relation_instances(int n, std::uint64_t seed) {
    if (n < 3) {
      throw InvalidInput("the presentation needs rank at least 3");
    }
    Emitter      E(n);
    std::mt19937_64 rng(seed);

    E.family("r1-00");
    for (int p = 1; p <= n; ++p) {
      E.emit(1, {p}, E.e(p) + E.e(p), E.e(p));
    }
    for_each_distinct(n, 2, [&](auto const& t) {
      int p = t[0], q = t[1];
      E.emit(2, t, E.e(p) + E.e(q), E.e(q) + E.e(p));
    });

    E.family("r1-0");
    for_each_distinct(n, 3, [&](auto const& t) {
      int p = t[0], q = t[1], k = t[2];
      E.emit(1, t, E.e(k) + E.s(p, q), E.s(p, q) + E.e(k));
    });
    for_each_distinct(n, 2, [&](auto const& t) {
      int p = t[0], q = t[1];
      E.emit(2, t, E.e(p) + E.s(p, q), E.s(p, q) + E.e(q));
    });

    E.family("r1-1");
    for_each_distinct(n, 3, [&](auto const& t) {
      int p = t[0], q = t[1], k = t[2];
      E.emit(1, t, E.e(k) + E.l(p, q), E.l(p, q) + E.e(k));
    });
    for_each_distinct(n, 2, [&](auto const& t) {
      int p = t[0], q = t[1];
      E.emit(2, t, E.e(q) + E.l(p, q), E.l(p, q));
      E.chain(3, t, {E.e(p) + E.l(p, q), E.l(p, q) + E.e(q), E.l(p, q) + E.e(p),
                     E.e(p) + E.e(q)});
    });

    E.family("r1-2");
    for_each_distinct(n, 3, [&](auto const& t) {
      int p = t[0], q = t[1], k = t[2];
      E.emit(1, t, E.e(k) + E.r(p, q), E.r(p, q) + E.e(k));
    });
    for_each_distinct(n, 2, [&](auto const& t) {
      int p = t[0], q = t[1];
      E.emit(2, t, E.r(p, q) + E.e(q), E.r(p, q));
      E.chain(3, t, {E.r(p, q) + E.e(p), E.e(q) + E.r(p, q), E.e(p) + E.r(p, q),
                     E.e(p) + E.e(q)});
    });

    E.family("r1");
    for_each_distinct(n, 2, [&](auto const& t) {
      int p = t[0], q = t[1];
      E.chain(1, t, {E.l(p, q) + E.l(p, q), E.r(p, q) + E.r(p, q),
                     E.l(p, q) + E.l(q, p), E.r(p, q) + E.r(q, p), E.e(p) + E.e(q)});
    });

    E.family("r2");
    for_each_distinct(n, 4, [&](auto const& t) {
      int k = t[0], l = t[1], p = t[2], q = t[3];
      E.emit(1, t, E.l(k, l) + E.l(p, q), E.l(p, q) + E.l(k, l));
      E.emit(2, t, E.r(k, l) + E.r(p, q), E.r(p, q) + E.r(k, l));
      E.emit(3, t, E.l(k, l) + E.r(p, q), E.r(p, q) + E.l(k, l));
    });

    E.family("r3");
    for_each_distinct(n, 3, [&](auto const& t) {
      int k = t[0], q = t[1], l = t[2];
      E.chain(1, t, {E.l(k, q) + E.l(k, l), E.l(k, l) + E.l(k, q), E.l(k, q) + E.l(q, l)});
      E.chain(3, t, {E.r(k, l) + E.r(k, q), E.r(k, q) + E.r(k, l), E.r(l, q) + E.r(k, l)});
    });

    E.family("r4");
    for_each_distinct(n, 3, [&](auto const& t) {
      int k = t[0], l = t[1], p = t[2];
      E.emit(1, t, E.l(k, l) + E.l(p, k), E.e(l) + E.l(p, k));
      E.emit(2, t, E.r(p, k) + E.r(k, l), E.e(l) + E.r(p, k));
    });

    E.family("r5");
    for_each_distinct(n, 3, [&](auto const& t) {
      int k = t[0], l = t[1], p = t[2];
      E.emit(1, t, E.l(k, l) + E.l(p, l), E.e(k) + E.l(p, l));
      E.emit(2, t, E.r(p, l) + E.r(k, l), E.e(k) + E.r(p, l));
    });

    E.family("r6");
    for_each_distinct(n, 2, [&](auto const& t) {
      int k = t[0], l = t[1];
      E.emit(1, t, E.l(k, l) + E.r(l, k), E.e(l) + E.s(k, l));
      E.emit(2, t, E.l(k, l) + E.r(k, l), E.e(l));
      E.emit(3, t, E.r(k, l) + E.l(l, k), E.e(k) + E.e(l));
    });

    E.family("r7");
    for_each_distinct(n, 3, [&](auto const& t) {
      int k = t[0], l = t[1], q = t[2];
      E.chain(1, t, {E.l(k, l) + E.r(k, q), E.r(k, q) + E.l(k, l),
                     E.r(k, q) + E.l(k, q) + E.e(l) + E.s(q, l)});
      int p = t[2];
      E.emit(3, t, E.r(k, l) + E.l(p, k), E.l(p, k) + E.e(l));
    });

    E.family("r8");
    for_each_distinct(n, 3, [&](auto const& t) {
      int k = t[0], l = t[1], p = t[2];
      E.emit(1, t, E.l(k, l) + E.r(p, k), E.r(p, k) + E.l(p, k) + E.e(l) + E.s(k, l));
      E.emit(2, t, E.l(p, k) + E.r(k, l), E.s(k, l) + E.e(l) + E.r(p, k) + E.l(p, k));
      E.emit(3, t, E.r(p, k) + E.l(k, l), E.e(l) + E.r(p, k));
    });

    E.family("r10");
    for_each_distinct(n, 3, [&](auto const& t) {
      int k = t[0], l = t[1], p = t[2];
      E.emit(0, t, E.l(k, l) + E.r(p, l),
             E.s(p, l) + E.e(p) + E.r(k, l) + E.l(k, l) + E.s(p, l));
    });

    E.family("rr6");
    for_each_distinct(n, 2, [&](auto const& t) {
      int k = t[0], l = t[1];
      E.emit(0, t, E.r(k, l) + E.l(k, l), E.r(l, k) + E.l(l, k));
    });

    E.family("eat_lambda");
    for_each_distinct(n, 3, [&](auto const& t) {
      int q = t[0], i = t[1], j = t[2];
      Word const ll = E.l(q, i) + E.l(q, j);
      E.emit(0, t, ll + E.s(i, j), ll);
    });

    E.family("one_more");
    for_each_distinct(n, 3, [&](auto const& t) {
      int q = t[0], i = t[1], j = t[2];
      E.emit(0, t, E.l(q, i) + E.l(q, j) + E.s(q, j), E.l(q, i) + E.l(q, j));
    });

    E.family("esigma");
    for_each_distinct(n, 2, [&](auto const& t) {
      int i = t[0], j = t[1];
      E.emit(0, t, E.e(i) + E.e(j) + E.s(i, j), E.e(i) + E.e(j));
    });

    std::vector<Perm> const every = n <= 4 ? all_perms(n) : std::vector<Perm>{};
    auto sample = [&](auto const& accept) {
      std::vector<Perm> out;
      if (n <= 4) {
        std::copy_if(every.begin(), every.end(), std::back_inserter(out), accept);
        return out;
      }
      std::vector<int> v = Perm::identity(n).images();
      for (int tries = 0; out.size() < 100 && tries < 100000; ++tries) {
        std::shuffle(v.begin(), v.end(), rng);
        Perm pi(v);
        if (accept(pi)) {
          out.push_back(pi);
        }
      }
      return out;
    };
    auto conj = [&](Perm const& pi, Word const& w) {
      Word const pw = word_of_perm(pi);
      return Word(n, {pw.letters().rbegin(), pw.letters().rend()}) + w + pw;
    };

    // Independence of lambda_{p,q}, rho_{p,q} from the choice of pi.
    E.family("def-lambda");
    for_each_distinct(n, 2, [&](auto const& t) {
      int p = t[0], q = t[1];
      for (Perm const& pi : sample([&](Perm const& x) { return x(1) == p && x(2) == q; })) {
        E.emit(1, t, conjugate_lambda_1(pi), E.l(p, q));
        E.emit(2, t, conjugate_rho_1(pi), E.r(p, q));
      }
    });

    E.family("lemma-lr");
    for_each_distinct(n, 2, [&](auto const& t) {
      int p = t[0], q = t[1];
      for (Perm const& pi : sample([](Perm const&) { return true; })) {
        E.emit(1, t, conj(pi, E.l(p, q)), E.l(pi(p), pi(q)));
        E.emit(2, t, conj(pi, E.r(p, q)), E.r(pi(p), pi(q)));
      }
    });

    E.family("lemma-e");
    for (int p = 1; p <= n; ++p) {
      for (Perm const& pi : sample([](Perm const&) { return true; })) {
        E.emit(0, {p}, conj(pi, E.e(p)), E.e(pi(p)));
      }
    }

    E.family("stabilizer");
    auto fixes = [&](int clause, int i, Word const& g, Word const& x) {
      E.emit(clause, {i}, g + x + g, x);
    };
    for (int i = 2; i + 2 <= n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (j < i - 1 || j > i + 1) {
          fixes(1, i, E.s(j), E.l(i));
          fixes(1, i, E.s(j), E.r(i));
        }
      }
      fixes(1, i, E.s(i - 1, i + 2), E.l(i));
      fixes(1, i, E.s(i - 1, i + 2), E.r(i));
    }
    for (int j = 3; j < n; ++j) {
      fixes(2, 1, E.s(j), E.l(1));
      fixes(2, 1, E.s(j), E.r(1));
    }
    // The stabilizers of lambda_{n-1}, rho_{n-1} are sigma_1 .. sigma_{n-3}.
    for (int j = 1; j + 3 <= n; ++j) {
      fixes(2, n - 1, E.s(j), E.l(n - 1));
      fixes(2, n - 1, E.s(j), E.r(n - 1));
    }
    for (int i = 2; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (j != i - 1 && j != i) {
          fixes(3, i, E.s(j), E.e(i));
        }
      }
      fixes(3, i, E.s(i - 1, i + 1), E.e(i));
    }
    for (int j = 2; j < n; ++j) {
      fixes(4, 1, E.s(j), E.e(1));
    }
    for (int j = 1; j + 2 <= n; ++j) {
      fixes(4, n, E.s(j), E.e(n));
    }

    return E.take();
  }

}  // namespace pipn
