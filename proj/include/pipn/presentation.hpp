#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pipn/diagram.hpp"
#include "pipn/perm.hpp"
#include "pipn/word.hpp"

namespace pipn {

  using IndexSet = std::set<int>;

  // The evaluation homomorphism into PIP_n:
  //   sigma_i -> s_i, lambda_i -> l_i, rho_i -> r_i, e_i -> eps_i.
  Diagram eval_letter(int n, Letter x);
  Diagram eval_word(Word const& w);

  // Anti-automorphism: reverses the word and swaps lambda <-> rho.
  // eval_word(word_involution(w)) == star(eval_word(w)).
  Word word_involution(Word const& w);

  // A word in the sigma_i whose value is p (leftmost letter acts first).
  Word word_of_perm(Perm const& p);

  // sigma_{p,q}: the palindrome sigma_i ... sigma_{j-1} ... sigma_i on
  // i = min(p,q), j = max(p,q).
  Word expand_sigma_pq(int n, int p, int q);

  // lambda_{p,q} and rho_{p,q}: pi^{-1} lambda_1 pi (resp. rho_1) for a fixed
  // permutation pi with pi(1) = p and pi(2) = q; lambda_i itself when
  // q == p + 1.
  Word expand_lambda_pq(int n, int p, int q);
  Word expand_rho_pq(int n, int p, int q);

  // Same as above, conjugating by a caller supplied pi.
  Word conjugate_lambda_1(Perm const& pi);
  Word conjugate_rho_1(Perm const& pi);

  // R_{p,A}, L_{p,A}, E_M with factors in ascending order of A (resp. M).
  Word expand_R(int n, int p, IndexSet const& A);
  Word expand_L(int n, int p, IndexSet const& A);
  Word expand_E(int n, IndexSet const& M);

  // One concrete equality asserted in the abstract monoid.
  struct RelationInstance {
    std::string      family;  // e.g. "c1", "ghost1", "r7"
    int              clause;  // 1-based position in a multi-equality display, else 0
    std::vector<int> indices;
    Word             lhs;
    Word             rhs;

    // "c1", or "r7.2" for families displaying several equalities.
    std::string tag() const;
  };

  // family-tag <TAB> lhs <TAB> rhs
  std::string to_tsv(RelationInstance const& r);

  // Every instance of the defining relations for rank n >= 3. Displays with
  // chains a = b = c are split into the adjacent pairs a = b, b = c.
  std::vector<RelationInstance> relation_instances(int n);

  // Consequences of the defining relations over pairwise distinct indices,
  // expanded into atomic words. Conjugation families use every permutation
  // for n <= 4 and 100 random permutations per index tuple above that.
  std::vector<RelationInstance> derived_relation_instances(int n,
                                                           std::uint64_t seed = 0x5eed);

}  // namespace pipn
