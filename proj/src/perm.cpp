#include "pipn/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pipn/errors.hpp"
#include "text.hpp"

namespace pipn {

  Perm::Perm(std::vector<int> images) : _images(std::move(images)) {
    int const        n = degree();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : _images) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw InvalidInput("not a permutation of 1.." + std::to_string(n));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  Perm Perm::identity(int n) {
    if (n < 0) {
      throw InvalidInput("negative degree");
    }
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    Perm p;
    p._images = std::move(v);
    return p;
  }

  Perm Perm::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw InvalidInput("transposition index out of range");
    }
    Perm p = identity(n);
    std::swap(p._images[static_cast<std::size_t>(a - 1)],
              p._images[static_cast<std::size_t>(b - 1)]);
    return p;
  }

  Perm Perm::inverse() const {
    Perm p;
    p._images.resize(_images.size());
    for (std::size_t k = 0; k < _images.size(); ++k) {
      p._images[static_cast<std::size_t>(_images[k] - 1)]
          = static_cast<int>(k) + 1;
    }
    return p;
  }

  bool Perm::is_identity() const noexcept {
    for (std::size_t k = 0; k < _images.size(); ++k) {
      if (_images[k] != static_cast<int>(k) + 1) {
        return false;
      }
    }
    return true;
  }

  Perm operator*(Perm const& a, Perm const& b) {
    if (a.degree() != b.degree()) {
      throw InvalidInput("permutation degree mismatch");
    }
    Perm result;
    result._images.resize(a._images.size());
    for (std::size_t k = 0; k < a._images.size(); ++k) {
      result._images[k] = b(a._images[k]);
    }
    return result;
  }

  std::string to_string(Perm const& p) {
    return detail::join(p.images(), ",");
  }

  Perm parse_perm(std::string_view text, int n) {
    std::vector<int> v = detail::parse_int_list(text);
    if (static_cast<int>(v.size()) != n) {
      throw InvalidInput("permutation must list " + std::to_string(n)
                         + " images");
    }
    return Perm(std::move(v));
  }

  std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    std::vector<int>  v = Perm::identity(n).images();
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

}  // namespace pipn
