#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace pipn::detail {

  // Union by size with path halving.
  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n) : _parent(n), _size(n, 1) {
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
    }

    std::size_t find(std::size_t x) noexcept {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    void unite(std::size_t x, std::size_t y) noexcept {
      x = find(x);
      y = find(y);
      if (x == y) {
        return;
      }
      if (_size[x] < _size[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      _size[x] += _size[y];
    }

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
  };

}  // namespace pipn::detail
