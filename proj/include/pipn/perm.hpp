#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pipn {

  // A permutation of {1, ..., n} stored in one-line form.
  //
  // Composition follows diagrams: a * b applies a first, then b, so
  // (a * b)(k) == b(a(k)). Under this convention the word
  // s_{i_1} s_{i_2} ... s_{i_k} of adjacent transpositions is the
  // permutation that applies s_{i_1} first.
  class Perm {
   public:
    Perm() = default;
    explicit Perm(std::vector<int> images);  // throws InvalidInput

    static Perm identity(int n);
    static Perm transposition(int n, int a, int b);

    int degree() const noexcept {
      return static_cast<int>(_images.size());
    }
    int operator()(int k) const {
      return _images[static_cast<std::size_t>(k - 1)];
    }
    std::vector<int> const& images() const noexcept {
      return _images;
    }

    Perm inverse() const;
    bool is_identity() const noexcept;

    friend Perm operator*(Perm const& a, Perm const& b);
    friend bool operator==(Perm const&, Perm const&) = default;
    friend auto operator<=>(Perm const&, Perm const&) = default;

   private:
    std::vector<int> _images;
  };

  // Comma separated one-line form, e.g. "2,1,3".
  std::string to_string(Perm const& p);
  Perm        parse_perm(std::string_view text, int n);

  // All permutations of degree n in lexicographic order of one-line form.
  std::vector<Perm> all_perms(int n);

}  // namespace pipn
