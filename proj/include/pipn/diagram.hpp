#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pipn/perm.hpp"

namespace pipn {

  // +k is the vertex k of X, -k is its primed copy k' in X'.
  using Label = int;
  using Block = std::vector<Label>;

  // An element of PIP_n: a decomposition of {1..n} u {1'..n'} into lines
  // (blocks meeting both sides) and points (singletons).
  //
  // Storage is canonical so that equality is structural: inside a block the
  // positive labels come first in ascending order, then the negative labels
  // by ascending absolute value; blocks are ordered by the smallest absolute
  // value they contain, +k before -k on a tie.
  class Diagram {
   public:
    // Validates and canonicalises; throws InvalidInput.
    Diagram(int n, std::vector<Block> blocks);

    static Diagram identity(int n);

    int degree() const noexcept {
      return _n;
    }
    std::vector<Block> const& blocks() const noexcept {
      return _blocks;
    }

    std::size_t number_of_points() const noexcept;
    bool        is_point_free() const noexcept {
      return number_of_points() == 0;
    }

    // Position in blocks() of the block containing label.
    std::size_t block_index(Label label) const;

    std::size_t hash_value() const noexcept;

    friend bool operator==(Diagram const&, Diagram const&) = default;
    friend auto operator<=>(Diagram const&, Diagram const&) = default;

   private:
    struct trusted_tag {};
    Diagram(int n, std::vector<Block> blocks, trusted_tag);
    void canonicalise();

    friend Diagram multiply(Diagram const&, Diagram const&);
    friend Diagram star(Diagram const&);

    int                _n;
    std::vector<Block> _blocks;
  };

  struct DiagramHash {
    std::size_t operator()(Diagram const& d) const noexcept {
      return d.hash_value();
    }
  };

  Diagram make_diagram(int n, std::vector<Block> blocks);

  // Product via the anchor embedding into the point-free monoid on
  // X u {anchor}: all points of an operand join the block of the anchor and
  // its primed copy. Throws InvalidInput on rank mismatch.
  Diagram multiply(Diagram const& a, Diagram const& b);
  inline Diagram operator*(Diagram const& a, Diagram const& b) {
    return multiply(a, b);
  }

  // Mirror image: swaps X and X'. An involutive anti-automorphism.
  Diagram star(Diagram const& a);

  // The elements s_{x,y}, r_{x,y}, l_{x,y} and eps_x.
  Diagram generator_s(int n, int x, int y);
  Diagram generator_r(int n, int x, int y);
  Diagram generator_l(int n, int x, int y);
  Diagram generator_eps(int n, int x);

  // Lines {k, p(k)'}; perm_diagram(p) * perm_diagram(q) == perm_diagram(p * q).
  Diagram perm_diagram(Perm const& p);

  // "[[1,2,-1],[-2],[3,-3]]"
  std::string serialize(Diagram const& a);
  Diagram     parse_diagram(std::string_view text, int n);

  std::ostream& operator<<(std::ostream& os, Diagram const& a);

}  // namespace pipn
