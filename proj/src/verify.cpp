#include "pipn/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "pipn/errors.hpp"
#include "pipn/rewrite.hpp"
#include "text.hpp"

namespace pipn {

  namespace {

    using Clock = std::chrono::steady_clock;

    void guard(int n, int lo, int hi, char const* what) {
      if (n < lo || n > hi) {
        throw InvalidInput(std::string(what) + ": rank must lie in " + std::to_string(lo) + ".."
                           + std::to_string(hi));
      }
    }

    std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r = 0;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("count exceeds 64 bits");
      }
      return r;
    }

    std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r = 0;
      if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("count exceeds 64 bits");
      }
      return r;
    }

    std::vector<std::vector<std::uint64_t>> stirling2(int n) {
      std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1,
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
      s[0][0] = 1;
      for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
        for (std::size_t k = 1; k <= i; ++k) {
          s[i][k] = checked_add(checked_mul(k, s[i - 1][k]), s[i - 1][k - 1]);
        }
      }
      return s;
    }

    std::uint64_t binomial(int n, int k) {
      std::uint64_t r = 1;
      for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
      }
      return r;
    }

    std::uint64_t two_sided(std::vector<std::vector<std::uint64_t>> const& s, int a, int b) {
      std::uint64_t total = 0, fact = 1;
      for (int k = 0; k <= std::min(a, b); ++k) {
        if (k > 0) {
          fact = checked_mul(fact, static_cast<std::uint64_t>(k));
        }
        total = checked_add(total, checked_mul(fact, checked_mul(s[a][k], s[b][k])));
      }
      return total;
    }

    std::string join_ints(std::vector<int> const& v) {
      return detail::join(v, ",");
    }

  }  // namespace

  std::string VerificationReport::tsv() const {
    std::string out;
    for (auto const& f : failures) {
      out += f.family + '\t' + join_ints(f.indices) + '\t' + f.lhs + '\t' + f.rhs + '\n';
    }
    return out;
  }

  std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << suite << " n=" << n << ": " << families_checked << " families, " << instances_checked
       << " instances, " << failures.size() << " failures, " << std::fixed << std::setprecision(2)
       << elapsed.count() << "s " << (pass() ? "PASS" : "FAIL");
    return os.str();
  }

  std::vector<Diagram> enumerate_pip(int n) {
    guard(n, 1, 5, "enumerate_pip");
    std::vector<Diagram> out;
    for (unsigned left = 0; left < (1u << n); ++left) {
      for (unsigned right = 0; right < (1u << n); ++right) {
        std::vector<Label> support;
        std::vector<Block> points;
        for (int k = 1; k <= n; ++k) {
          if ((left >> (k - 1)) & 1u) {
            support.push_back(k);
          } else {
            points.push_back({k});
          }
        }
        for (int k = 1; k <= n; ++k) {
          if ((right >> (k - 1)) & 1u) {
            support.push_back(-k);
          } else {
            points.push_back({-k});
          }
        }
        // Restricted growth strings over the support.
        std::size_t const  m = support.size();
        std::vector<int>   rgs(m, 0);
        auto               emit = [&] {
          int                blocks = m == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
          std::vector<Block> bs(static_cast<std::size_t>(blocks));
          for (std::size_t i = 0; i < m; ++i) {
            bs[static_cast<std::size_t>(rgs[i])].push_back(support[i]);
          }
          for (auto const& b : bs) {
            bool pos = std::any_of(b.begin(), b.end(), [](Label x) { return x > 0; });
            bool neg = std::any_of(b.begin(), b.end(), [](Label x) { return x < 0; });
            if (!pos || !neg) {
              return;
            }
          }
          bs.insert(bs.end(), points.begin(), points.end());
          out.emplace_back(n, std::move(bs));
        };
        if (m == 0) {
          emit();
          continue;
        }
        std::vector<int> maxpref(m, 0);
        while (true) {
          emit();
          // Next restricted growth string.
          std::size_t i = m - 1;
          while (i > 0 && rgs[i] > maxpref[i - 1]) {
            --i;
          }
          if (i == 0) {
            break;
          }
          ++rgs[i];
          maxpref[i] = std::max(maxpref[i - 1], rgs[i]);
          for (std::size_t j = i + 1; j < m; ++j) {
            rgs[j] = 0;
            maxpref[j] = maxpref[i];
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t count_pip(int n) {
    if (n < 1) {
      throw InvalidInput("count_pip: rank must be positive");
    }
    auto const    s = stirling2(n);
    std::uint64_t total = 0;
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; b <= n; ++b) {
        total = checked_add(total, checked_mul(checked_mul(binomial(n, a), binomial(n, b)),
                                               two_sided(s, a, b)));
      }
    }
    return total;
  }

  std::uint64_t count_point_free(int n) {
    if (n < 1) {
      throw InvalidInput("count_point_free: rank must be positive");
    }
    return two_sided(stirling2(n), n, n);
  }

  std::vector<Diagram> closure(int n, std::vector<Diagram> const& gens) {
    guard(n, 1, 5, "closure");
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw InvalidInput("closure: generator of the wrong rank");
      }
    }
    std::unordered_set<Diagram, DiagramHash> seen;
    std::vector<Diagram>                     frontier{Diagram::identity(n)};
    seen.insert(frontier.front());
    for (auto const& g : gens) {
      if (seen.insert(g).second) {
        frontier.push_back(g);
      }
    }
    while (!frontier.empty()) {
      std::vector<Diagram> next;
      for (auto const& x : frontier) {
        for (auto const& g : gens) {
          Diagram y = x * g;
          if (seen.insert(y).second) {
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Diagram> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Diagram> standard_generators(int n) {
    std::vector<Diagram> gens;
    for (int i = 1; i < n; ++i) {
      gens.push_back(generator_s(n, i, i + 1));
    }
    gens.push_back(generator_r(n, 1, 2));
    gens.push_back(generator_l(n, 1, 2));
    return gens;
  }

  Word random_word(int n, std::size_t max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int>         kind(0, 3);
    std::vector<Letter>                        letters(len(rng));
    for (auto& x : letters) {
      Gen const g = static_cast<Gen>(kind(rng));
      int const hi = g == Gen::e ? n : n - 1;
      x = {g, std::uniform_int_distribution<int>(1, hi)(rng)};
    }
    return Word(n, std::move(letters));
  }

  std::vector<RelationInstance> stabilizer_instances(int n, std::uint64_t seed) {
    guard(n, 3, 6, "stabilizer_instances");
    std::vector<Diagram> sample;
    if (n <= 4) {
      sample = enumerate_pip(n);
    } else {
      std::mt19937_64 rng(seed);
      for (int i = 0; i < 300; ++i) {
        sample.push_back(eval_word(random_word(n, 20, rng)));
      }
    }
    std::set<std::string>         done;
    std::vector<RelationInstance> out;
    for (auto const& a : sample) {
      CanonicalWord cw = canonical_of_diagram(a);
      cw.sigma = Perm::identity(n);
      if (!done.insert(to_string(cw)).second) {
        continue;
      }
      Word const     alpha = canonical_to_word(cw);
      StabilizerSpec g = StabilizerSpec::of(cw);
      auto           sets = g.D_list;
      sets.push_back(g.F);
      for (auto const& s : sets) {
        for (auto i = s.begin(); i != s.end(); ++i) {
          for (auto j = std::next(i); j != s.end(); ++j) {
            out.push_back({"stabil_S", 0, {*i, *j},
                           alpha + word_of_perm(Perm::transposition(n, *i, *j)), alpha});
          }
        }
      }
    }
    return out;
  }

  VerificationReport check_instances(int n, std::string suite,
                                     std::vector<RelationInstance> const& instances) {
    auto const         start = Clock::now();
    VerificationReport r;
    r.suite = std::move(suite);
    r.n = n;
    std::set<std::string> families;
    for (auto const& inst : instances) {
      families.insert(inst.family);
      ++r.instances_checked;
      Diagram const a = eval_word(inst.lhs), b = eval_word(inst.rhs);
      if (a != b) {
        r.failures.push_back({inst.tag(), inst.indices, serialize(a), serialize(b)});
      }
    }
    r.families_checked = families.size();
    r.elapsed = Clock::now() - start;
    return r;
  }

  VerificationReport check_relations(int n) {
    guard(n, 3, 5, "check_relations");
    return check_instances(n, "relations", relation_instances(n));
  }

  VerificationReport check_derived(int n, std::uint64_t seed) {
    guard(n, 3, 5, "check_derived");
    auto insts = derived_relation_instances(n, seed);
    auto stab = stabilizer_instances(n, seed);
    insts.insert(insts.end(), stab.begin(), stab.end());
    return check_instances(n, "derived", insts);
  }

  VerificationReport isomorphism_report(int n, Extractor const& extract, std::size_t random_words,
                                        std::uint64_t seed) {
    guard(n, 3, 4, "isomorphism_report");
    auto const         start = Clock::now();
    VerificationReport r;
    r.suite = "iso";
    r.n = n;
    r.families_checked = 4;
    auto fail = [&](std::string what, std::string lhs, std::string rhs) {
      r.failures.push_back({std::move(what), {}, std::move(lhs), std::move(rhs)});
    };

    auto const          all = enumerate_pip(n);
    auto const          gen = closure(n, standard_generators(n));
    std::uint64_t const expected = count_pip(n);
    ++r.instances_checked;
    if (gen.size() != expected || all.size() != expected) {
      fail("generation", std::to_string(gen.size()), std::to_string(expected));
    }

    std::vector<CanonicalWord> words;
    words.reserve(all.size());
    for (auto const& a : all) {
      ++r.instances_checked;
      try {
        CanonicalWord cw = extract(a);
        cw.validate();
        if (eval_canonical(cw) != a) {
          fail("round-trip", serialize(a), to_string(cw));
        }
        words.push_back(std::move(cw));
      } catch (std::exception const& e) {
        fail("round-trip", serialize(a), e.what());
      }
    }

    if (n == 3 && words.size() == all.size()) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
          ++r.instances_checked;
          if (equivalent(words[i], words[j]) != (i == j)) {
            fail("equivalence", to_string(words[i]), to_string(words[j]));
          }
        }
      }
    }

    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < random_words; ++k) {
      ++r.instances_checked;
      Word const w = random_word(n, 20, rng);
      try {
        CanonicalWord const a = normalize(w);
        CanonicalWord const b = extract(eval_word(w));
        if (!equivalent(a, b)) {
          fail("normalize", to_string(w), to_string(a) + " vs " + to_string(b));
        }
      } catch (std::exception const& e) {
        fail("normalize", to_string(w), e.what());
      }
    }
    r.elapsed = Clock::now() - start;
    return r;
  }

}  // namespace pipn
