#include "pipn/canonical.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "pipn/errors.hpp"
#include "text.hpp"

namespace pipn {

  namespace {

    bool disjoint(IndexSet const& a, IndexSet const& b) {
      return std::none_of(a.begin(), a.end(), [&](int x) { return b.count(x) != 0; });
    }

    IndexSet union_of(std::vector<Factor> const& fs, IndexSet Factor::*part) {
      IndexSet out;
      for (auto const& f : fs) {
        out.insert((f.*part).begin(), (f.*part).end());
      }
      return out;
    }

    IndexSet minus(IndexSet a, IndexSet const& b) {
      for (int x : b) {
        a.erase(x);
      }
      return a;
    }

    void check_range(int n, IndexSet const& s) {
      if (!s.empty() && (*s.begin() < 1 || *s.rbegin() > n)) {
        throw InvalidInput("index out of range in canonical word");
      }
    }

  }  // namespace

  void CanonicalWord::validate() const {
    if (n < 3) {
      throw InvalidInput("canonical words need rank at least 3");
    }
    if (sigma.degree() != n) {
      throw InvalidInput("sigma has the wrong degree");
    }
    check_range(n, M);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      Factor const& f = factors[i];
      check_range(n, f.C);
      check_range(n, f.D);
      if (f.C.count(f.t) == 0 || f.D.count(f.t) == 0) {
        throw InvalidInput("t must lie in C and D");
      }
      if (f.C.size() < 2 && f.D.size() < 2) {
        throw InvalidInput("factor with |C| = |D| = 1");
      }
      if (!disjoint(M, f.C) || !disjoint(M, f.D)) {
        throw InvalidInput("M meets a factor");
      }
      if (i > 0 && *factors[i - 1].C.begin() > *f.C.begin()) {
        throw InvalidInput("factors not sorted by min(C)");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (!disjoint(factors[j].C, f.C) || !disjoint(factors[j].D, f.D)) {
          throw InvalidInput("C sets or D sets overlap");
        }
      }
    }
  }

  CanonicalWord make_canonical(int n, std::vector<Factor> factors, IndexSet M, Perm sigma) {
    for (auto const& f : factors) {
      if (f.C.empty()) {
        throw InvalidInput("empty C");
      }
    }
    std::sort(factors.begin(), factors.end(), [](Factor const& a, Factor const& b) {
      return *a.C.begin() < *b.C.begin();
    });
    CanonicalWord cw{n, std::move(factors), std::move(M), std::move(sigma)};
    cw.validate();
    return cw;
  }

  StabilizerSpec StabilizerSpec::of(CanonicalWord const& cw) {
    StabilizerSpec g;
    IndexSet       all_d;
    for (auto const& f : cw.factors) {
      g.D_list.push_back(f.D);
      all_d.insert(f.D.begin(), f.D.end());
    }
    IndexSet f = cw.M;
    for (auto const& x : cw.factors) {
      f.insert(x.C.begin(), x.C.end());
    }
    g.F = minus(std::move(f), all_d);
    return g;
  }

  bool StabilizerSpec::contains(Perm const& g) const {
    std::vector<int> part(static_cast<std::size_t>(g.degree()) + 1, -1);
    auto             mark = [&](IndexSet const& s, int id) {
      for (int x : s) {
        part[static_cast<std::size_t>(x)] = id;
      }
    };
    for (std::size_t i = 0; i < D_list.size(); ++i) {
      mark(D_list[i], static_cast<int>(i));
    }
    mark(F, static_cast<int>(D_list.size()));
    for (int x = 1; x <= g.degree(); ++x) {
      int const px = part[static_cast<std::size_t>(x)];
      if (px < 0 ? g(x) != x : part[static_cast<std::size_t>(g(x))] != px) {
        return false;
      }
    }
    return true;
  }

  Word canonical_to_word(CanonicalWord const& cw) {
    cw.validate();
    Word w(cw.n);
    for (auto const& f : cw.factors) {
      w += expand_R(cw.n, f.t, minus(f.C, {f.t}));
    }
    for (auto const& f : cw.factors) {
      w += expand_L(cw.n, f.t, minus(f.D, {f.t}));
    }
    w += expand_E(cw.n, cw.M);
    w += word_of_perm(cw.sigma);
    return w;
  }

  Diagram eval_canonical(CanonicalWord const& cw) {
    cw.validate();
    IndexSet const     all_c = union_of(cw.factors, &Factor::C);
    IndexSet const     all_d = union_of(cw.factors, &Factor::D);
    std::vector<Block> blocks;
    for (auto const& f : cw.factors) {
      Block b(f.C.begin(), f.C.end());
      for (int d : f.D) {
        b.push_back(-cw.sigma(d));
      }
      blocks.push_back(std::move(b));
    }
    IndexSet left = cw.M;
    left.insert(all_d.begin(), all_d.end());
    for (int x : minus(std::move(left), all_c)) {
      blocks.push_back({x});
    }
    IndexSet right = cw.M;
    right.insert(all_c.begin(), all_c.end());
    for (int x : minus(std::move(right), all_d)) {
      blocks.push_back({-cw.sigma(x)});
    }
    for (int x = 1; x <= cw.n; ++x) {
      if (all_c.count(x) == 0 && all_d.count(x) == 0 && cw.M.count(x) == 0) {
        blocks.push_back({x, -cw.sigma(x)});
      }
    }
    return Diagram(cw.n, std::move(blocks));
  }

  bool equivalent(CanonicalWord const& a, CanonicalWord const& b) {
    if (a.n != b.n) {
      throw InvalidInput("rank mismatch");
    }
    if (a.M != b.M || a.factors.size() != b.factors.size()) {
      return false;
    }
    using Pair = std::pair<IndexSet, IndexSet>;
    auto pairs = [](CanonicalWord const& cw) {
      std::vector<Pair> out;
      for (auto const& f : cw.factors) {
        out.emplace_back(f.C, f.D);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    if (pairs(a) != pairs(b)) {
      return false;
    }
    return StabilizerSpec::of(a).contains(a.sigma * b.sigma.inverse());
  }

  CanonicalWord canonical_of_diagram(Diagram const& a) {
    int const n = a.degree();
    if (n < 3) {
      throw InvalidInput("canonical words need rank at least 3");
    }
    struct Raw {
      IndexSet         C;
      std::vector<int> v;
    };
    std::vector<Raw> raw;
    IndexSet         P;
    std::vector<int> Q;
    std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
    for (Block const& b : a.blocks()) {
      if (b.size() == 1) {
        if (b[0] > 0) {
          P.insert(b[0]);
        } else {
          Q.push_back(-b[0]);
        }
        continue;
      }
      IndexSet         c;
      std::vector<int> v;
      for (Label x : b) {
        if (x > 0) {
          c.insert(x);
        } else {
          v.push_back(-x);
        }
      }
      if (c.size() == 1 && v.size() == 1) {
        image[static_cast<std::size_t>(*c.begin())] = v[0];
      } else {
        raw.push_back({std::move(c), std::move(v)});
      }
    }
    std::sort(Q.begin(), Q.end());

    IndexSet used;
    for (auto const& r : raw) {
      used.insert(*r.C.begin());
    }
    std::vector<Factor> factors;
    for (auto const& r : raw) {
      int const t = *r.C.begin();
      Factor    f{t, r.C, {t}};
      auto      take_from = [&](IndexSet const& pool) {
        for (int x : pool) {
          if (f.D.size() >= r.v.size()) {
            return;
          }
          if (used.insert(x).second) {
            f.D.insert(x);
          }
        }
      };
      take_from(r.C);
      take_from(P);
      for (auto const& other : raw) {
        take_from(other.C);
      }
      if (f.D.size() != r.v.size()) {
        throw std::logic_error("canonical_of_diagram: pool exhausted");
      }
      auto v = r.v;
      std::sort(v.begin(), v.end());
      auto it = v.begin();
      for (int d : f.D) {
        image[static_cast<std::size_t>(d)] = *it++;
      }
      factors.push_back(std::move(f));
    }
    IndexSet const all_d = union_of(factors, &Factor::D);
    IndexSet const M = minus(P, all_d);
    IndexSet       F = M;
    for (auto const& f : factors) {
      F.insert(f.C.begin(), f.C.end());
    }
    F = minus(std::move(F), all_d);
    if (F.size() != Q.size()) {
      throw std::logic_error("canonical_of_diagram: point counts disagree");
    }
    auto q = Q.begin();
    for (int x : F) {
      image[static_cast<std::size_t>(x)] = *q++;
    }
    image.erase(image.begin());
    return make_canonical(n, std::move(factors), M, Perm(std::move(image)));
  }

  CanonicalWord standardize(CanonicalWord const& cw) {
    return canonical_of_diagram(eval_canonical(cw));
  }

  std::string to_string(CanonicalWord const& cw) {
    std::string out = "s=" + std::to_string(cw.factors.size()) + ";";
    for (auto const& f : cw.factors) {
      out += "(" + std::to_string(f.t) + "|" + detail::join(f.C, ",") + "|"
             + detail::join(f.D, ",") + ");";
    }
    out += "M=" + detail::join(cw.M, ",") + ";sigma=" + to_string(cw.sigma);
    return out;
  }

  CanonicalWord parse_canonical(std::string_view text, int n) {
    std::string const s = detail::strip_spaces(text);
    auto              parts = detail::split(s, ';');
    if (parts.size() < 3) {
      throw InvalidInput("canonical word needs s=, M= and sigma= fields");
    }
    auto field = [](std::string_view part, std::string_view key) {
      if (part.substr(0, key.size()) != key) {
        throw InvalidInput("expected '" + std::string(key) + "'");
      }
      return part.substr(key.size());
    };
    auto to_set = [](std::string_view list) {
      auto     v = detail::parse_int_list(list);
      IndexSet out(v.begin(), v.end());
      if (out.size() != v.size()) {
        throw InvalidInput("repeated index");
      }
      return out;
    };
    int const s_count = detail::parse_int(field(parts[0], "s="));
    if (s_count < 0 || static_cast<std::size_t>(s_count) != parts.size() - 3) {
      throw InvalidInput("factor count does not match s=");
    }
    std::vector<Factor> factors;
    for (std::size_t i = 1; i + 2 < parts.size(); ++i) {
      std::string_view p = parts[i];
      if (p.size() < 2 || p.front() != '(' || p.back() != ')') {
        throw InvalidInput("factor must be (t|C|D)");
      }
      auto fields = detail::split(p.substr(1, p.size() - 2), '|');
      if (fields.size() != 3) {
        throw InvalidInput("factor must be (t|C|D)");
      }
      factors.push_back({detail::parse_int(fields[0]), to_set(fields[1]), to_set(fields[2])});
    }
    IndexSet M = to_set(field(parts[parts.size() - 2], "M="));
    Perm     sigma = parse_perm(field(parts.back(), "sigma="), n);
    return make_canonical(n, std::move(factors), std::move(M), std::move(sigma));
  }

  std::ostream& operator<<(std::ostream& os, CanonicalWord const& cw) {
    return os << to_string(cw);
  }

}  // namespace pipn
