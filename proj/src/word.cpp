#include "pipn/word.hpp"

#include <ostream>
#include <sstream>

#include "pipn/errors.hpp"
#include "text.hpp"

namespace pipn {

  namespace {
    void validate(int n, Letter x) {
      int const hi = x.kind == Gen::e ? n : n - 1;
      if (x.index < 1 || x.index > hi) {
        throw InvalidInput("generator " + to_string(x) + " invalid for rank "
                           + std::to_string(n));
      }
    }
  }  // namespace

  Word::Word(int n, std::vector<Letter> letters)
      : _n(n), _letters(std::move(letters)) {
    if (n < 3) {
      throw InvalidInput("words need rank at least 3");
    }
    for (Letter x : _letters) {
      validate(n, x);
    }
  }

  void Word::push_back(Letter x) {
    validate(_n, x);
    _letters.push_back(x);
  }

  Word& Word::operator+=(Word const& other) {
    if (other._n != _n) {
      throw InvalidInput("rank mismatch in word concatenation");
    }
    _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
    return *this;
  }

  std::string to_string(Letter x) {
    static constexpr char tags[] = {'s', 'l', 'r', 'e'};
    return tags[static_cast<int>(x.kind)] + std::to_string(x.index);
  }

  std::string to_string(Word const& w) {
    std::string out;
    for (Letter x : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(x);
    }
    return out;
  }

  Word parse_word(std::string_view text, int n) {
    Word               w(n);
    std::istringstream in{std::string(text)};
    std::string        tok;
    while (in >> tok) {
      Gen kind;
      switch (tok[0]) {
        case 's': kind = Gen::sigma; break;
        case 'l': kind = Gen::lambda; break;
        case 'r': kind = Gen::rho; break;
        case 'e': kind = Gen::e; break;
        default: throw InvalidInput("unknown generator token '" + tok + "'");
      }
      if (tok.size() < 2 || tok[1] == '+' || tok[1] == '-') {
        throw InvalidInput("generator token '" + tok + "' lacks an index");
      }
      w.push_back({kind, detail::parse_int(std::string_view(tok).substr(1))});
    }
    return w;
  }

  std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << to_string(w);
  }

}  // namespace pipn
