#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pipn/diagram.hpp"
#include "pipn/perm.hpp"
#include "pipn/presentation.hpp"
#include "pipn/word.hpp"

namespace pipn {

  // One factor R^t_C L^t_D: the product R_{t,C\{t}} ... L_{t,D\{t}}.
  struct Factor {
    int      t;
    IndexSet C;
    IndexSet D;

    friend bool operator==(Factor const&, Factor const&) = default;
    friend auto operator<=>(Factor const&, Factor const&) = default;
  };

  // R^{t_1}_{C_1} ... R^{t_s}_{C_s} L^{t_1}_{D_1} ... L^{t_s}_{D_s} E_M sigma.
  //
  // Valid when t_i is in C_i and D_i, the C_i are pairwise disjoint, the D_i
  // are pairwise disjoint, M misses every C_i and D_i, and no factor has
  // |C_i| = |D_i| = 1. C_i may meet D_j for i != j.
  struct CanonicalWord {
    int                 n = 3;
    std::vector<Factor> factors;  // sorted by min(C)
    IndexSet            M;
    Perm                sigma;

    // Throws InvalidInput.
    void validate() const;

    friend bool operator==(CanonicalWord const&, CanonicalWord const&) = default;
  };

  // Sorts the factors and validates.
  CanonicalWord make_canonical(int n, std::vector<Factor> factors, IndexSet M, Perm sigma);

  // The group S_{D_1} + ... + S_{D_s} + S_F with F = (M u U C_i) \ U D_i.
  struct StabilizerSpec {
    std::vector<IndexSet> D_list;
    IndexSet              F;

    static StabilizerSpec of(CanonicalWord const& cw);

    // g maps each D_i and F into itself and fixes every other point.
    bool contains(Perm const& g) const;
  };

  Word    canonical_to_word(CanonicalWord const& cw);
  Diagram eval_canonical(CanonicalWord const& cw);

  // Same (C, D) pairs, same M, and sigma_a * sigma_b^{-1} in G(a).
  bool equivalent(CanonicalWord const& a, CanonicalWord const& b);

  // A canonical word evaluating to a; deterministic.
  CanonicalWord canonical_of_diagram(Diagram const& a);

  // canonical_of_diagram(eval_canonical(cw)): the fixed representative of
  // the value of cw.
  CanonicalWord standardize(CanonicalWord const& cw);

  // "s=1;(1|1,2|1,2);M=;sigma=1,2,3"
  std::string   to_string(CanonicalWord const& cw);
  CanonicalWord parse_canonical(std::string_view text, int n);
  std::ostream& operator<<(std::ostream& os, CanonicalWord const& cw);

}  // namespace pipn
