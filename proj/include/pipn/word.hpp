#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pipn {

  enum class Gen : std::uint8_t { sigma, lambda, rho, e };

  // One atomic generator: sigma_i, lambda_i, rho_i (1 <= i < n) or e_i
  // (1 <= i <= n).
  struct Letter {
    Gen kind;
    int index;

    static constexpr Letter sigma(int i) noexcept {
      return {Gen::sigma, i};
    }
    static constexpr Letter lambda(int i) noexcept {
      return {Gen::lambda, i};
    }
    static constexpr Letter rho(int i) noexcept {
      return {Gen::rho, i};
    }
    static constexpr Letter e(int i) noexcept {
      return {Gen::e, i};
    }

    friend bool operator==(Letter, Letter) = default;
  };

  // A word over the generators of the abstract monoid for rank n >= 3. The
  // empty word is the identity.
  class Word {
   public:
    explicit Word(int n, std::vector<Letter> letters = {});

    int degree() const noexcept {
      return _n;
    }
    std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    void  push_back(Letter x);
    Word& operator+=(Word const& other);

    friend Word operator+(Word a, Word const& b) {
      a += b;
      return a;
    }
    friend bool operator==(Word const&, Word const&) = default;

   private:
    int                 _n;
    std::vector<Letter> _letters;
  };

  // Tokens "s3", "l2", "r1", "e4" separated by whitespace.
  std::string   to_string(Letter x);
  std::string   to_string(Word const& w);
  Word          parse_word(std::string_view text, int n);
  std::ostream& operator<<(std::ostream& os, Word const& w);

}  // namespace pipn
