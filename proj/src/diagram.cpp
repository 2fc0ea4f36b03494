#include "pipn/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <ostream>

#include "disjoint_sets.hpp"
#include "pipn/errors.hpp"
#include "text.hpp"

namespace pipn {

  namespace {

    bool label_less(Label x, Label y) {
      if ((x > 0) != (y > 0)) {
        return x > 0;
      }
      return std::abs(x) < std::abs(y);
    }

    // Smallest absolute value in the block, +k before -k.
    std::pair<int, int> block_key(Block const& b) {
      Label best = b.front();
      for (Label x : b) {
        if (std::abs(x) < std::abs(best)
            || (std::abs(x) == std::abs(best) && x > 0)) {
          best = x;
        }
      }
      return {std::abs(best), best > 0 ? 0 : 1};
    }

    std::size_t slot(int n, Label x) {
      return x > 0 ? static_cast<std::size_t>(x - 1)
                   : static_cast<std::size_t>(n - x - 1);
    }

    void check_pair(int n, int x, int y, char const* what) {
      if (x < 1 || x > n || y < 1 || y > n || x == y) {
        throw InvalidInput(std::string(what)
                           + " needs two distinct indices in 1.."
                           + std::to_string(n));
      }
    }

    std::vector<Block> strands_except(int n, std::initializer_list<int> skip) {
      std::vector<Block> out;
      for (int t = 1; t <= n; ++t) {
        if (std::find(skip.begin(), skip.end(), t) == skip.end()) {
          out.push_back({t, -t});
        }
      }
      return out;
    }

  }  // namespace

  Diagram::Diagram(int n, std::vector<Block> blocks)
      : _n(n), _blocks(std::move(blocks)) {
    if (n < 1) {
      throw InvalidInput("rank must be at least 1");
    }
    std::vector<bool> seen(2 * static_cast<std::size_t>(n), false);
    std::size_t       count = 0;
    for (Block const& b : _blocks) {
      if (b.empty()) {
        throw InvalidInput("empty block");
      }
      bool pos = false, neg = false;
      for (Label x : b) {
        if (x == 0 || std::abs(x) > n) {
          throw InvalidInput("label " + std::to_string(x) + " out of range");
        }
        if (seen[slot(n, x)]) {
          throw InvalidInput("label " + std::to_string(x) + " repeated");
        }
        seen[slot(n, x)] = true;
        ++count;
        (x > 0 ? pos : neg) = true;
      }
      if (b.size() > 1 && !(pos && neg)) {
        throw InvalidInput("block of size " + std::to_string(b.size())
                           + " is not a line");
      }
    }
    if (count != 2 * static_cast<std::size_t>(n)) {
      throw InvalidInput("blocks do not cover every label");
    }
    canonicalise();
  }

  Diagram::Diagram(int n, std::vector<Block> blocks, trusted_tag)
      : _n(n), _blocks(std::move(blocks)) {
    canonicalise();
  }

  void Diagram::canonicalise() {
    for (Block& b : _blocks) {
      std::sort(b.begin(), b.end(), label_less);
    }
    std::sort(_blocks.begin(), _blocks.end(), [](Block const& a, Block const& b) {
      return block_key(a) < block_key(b);
    });
  }

  Diagram Diagram::identity(int n) {
    return Diagram(n, strands_except(n, {}));
  }

  std::size_t Diagram::number_of_points() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        _blocks.begin(), _blocks.end(), [](Block const& b) { return b.size() == 1; }));
  }

  std::size_t Diagram::block_index(Label label) const {
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      if (std::find(_blocks[i].begin(), _blocks[i].end(), label)
          != _blocks[i].end()) {
        return i;
      }
    }
    throw InvalidInput("label " + std::to_string(label) + " not in diagram");
  }

  std::size_t Diagram::hash_value() const noexcept {
    std::size_t h = static_cast<std::size_t>(_n);
    for (Block const& b : _blocks) {
      for (Label x : b) {
        h = h * 1000003u ^ static_cast<std::size_t>(x + 64);
      }
      h = h * 1000003u ^ 0x9e37u;
    }
    return h;
  }

  Diagram make_diagram(int n, std::vector<Block> blocks) {
    return Diagram(n, std::move(blocks));
  }

  Diagram multiply(Diagram const& a, Diagram const& b) {
    if (a._n != b._n) {
      throw InvalidInput("rank mismatch in product");
    }
    int const         n = a._n;
    std::size_t const m = static_cast<std::size_t>(n) + 1;
    // Nodes: left 0..n, middle m..m+n, right 2m..2m+n; index n is the anchor.
    auto left   = [&](int k) { return static_cast<std::size_t>(k - 1); };
    auto middle = [&](int k) { return m + static_cast<std::size_t>(k - 1); };
    auto right  = [&](int k) { return 2 * m + static_cast<std::size_t>(k - 1); };
    std::size_t const anchor_l = left(n + 1), anchor_m = middle(n + 1),
                      anchor_r = right(n + 1);

    detail::DisjointSets uf(3 * m);
    uf.unite(anchor_l, anchor_m);
    uf.unite(anchor_m, anchor_r);

    auto glue = [&](Diagram const& d, auto top, auto bottom, std::size_t anchor) {
      for (Block const& blk : d._blocks) {
        std::size_t first = blk.front() > 0 ? top(blk.front()) : bottom(-blk.front());
        if (blk.size() == 1) {
          uf.unite(first, anchor);
          continue;
        }
        for (Label x : blk) {
          uf.unite(first, x > 0 ? top(x) : bottom(-x));
        }
      }
    };
    glue(a, left, middle, anchor_l);
    glue(b, middle, right, anchor_r);

    std::size_t const        anchor_class = uf.find(anchor_m);
    std::vector<Block>       blocks;
    std::vector<std::size_t> class_of_block;
    auto                     add = [&](std::size_t node, Label label) {
      std::size_t c = uf.find(node);
      if (c == anchor_class) {
        blocks.push_back({label});
        class_of_block.push_back(static_cast<std::size_t>(-1));
        return;
      }
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (class_of_block[i] == c) {
          blocks[i].push_back(label);
          return;
        }
      }
      blocks.push_back({label});
      class_of_block.push_back(c);
    };
    for (int k = 1; k <= n; ++k) {
      add(left(k), k);
    }
    for (int k = 1; k <= n; ++k) {
      add(right(k), -k);
    }
    return Diagram(n, std::move(blocks), Diagram::trusted_tag{});
  }

  Diagram star(Diagram const& a) {
    std::vector<Block> blocks = a._blocks;
    for (Block& b : blocks) {
      for (Label& x : b) {
        x = -x;
      }
    }
    return Diagram(a._n, std::move(blocks), Diagram::trusted_tag{});
  }

  Diagram generator_s(int n, int x, int y) {
    check_pair(n, x, y, "s");
    auto blocks = strands_except(n, {x, y});
    blocks.push_back({x, -y});
    blocks.push_back({y, -x});
    return Diagram(n, std::move(blocks));
  }

  Diagram generator_r(int n, int x, int y) {
    check_pair(n, x, y, "r");
    auto blocks = strands_except(n, {x, y});
    blocks.push_back({x, y, -x});
    blocks.push_back({-y});
    return Diagram(n, std::move(blocks));
  }

  Diagram generator_l(int n, int x, int y) {
    check_pair(n, x, y, "l");
    auto blocks = strands_except(n, {x, y});
    blocks.push_back({x, -x, -y});
    blocks.push_back({y});
    return Diagram(n, std::move(blocks));
  }

  Diagram generator_eps(int n, int x) {
    if (x < 1 || x > n) {
      throw InvalidInput("eps index out of range");
    }
    auto blocks = strands_except(n, {x});
    blocks.push_back({x});
    blocks.push_back({-x});
    return Diagram(n, std::move(blocks));
  }

  Diagram perm_diagram(Perm const& p) {
    int const          n = p.degree();
    std::vector<Block> blocks;
    for (int k = 1; k <= n; ++k) {
      blocks.push_back({k, -p(k)});
    }
    return Diagram(n, std::move(blocks));
  }

  std::string serialize(Diagram const& a) {
    std::string out = "[";
    for (std::size_t i = 0; i < a.blocks().size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += '[';
      out += detail::join(a.blocks()[i], ",");
      out += ']';
    }
    out += ']';
    return out;
  }

  Diagram parse_diagram(std::string_view text, int n) {
    std::string const s = detail::strip_spaces(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
      throw InvalidInput("diagram must be a bracketed list of blocks");
    }
    std::string_view   body(s.data() + 1, s.size() - 2);
    std::vector<Block> blocks;
    std::size_t        pos = 0;
    while (pos < body.size()) {
      if (body[pos] != '[') {
        throw InvalidInput("expected '[' at offset " + std::to_string(pos + 1));
      }
      std::size_t close = body.find(']', pos);
      if (close == std::string_view::npos) {
        throw InvalidInput("unterminated block");
      }
      std::string_view inner = body.substr(pos + 1, close - pos - 1);
      if (inner.find('[') != std::string_view::npos) {
        throw InvalidInput("nested brackets");
      }
      if (detail::trim(inner).empty()) {
        throw InvalidInput("empty block");
      }
      blocks.push_back(detail::parse_int_list(inner));
      pos = close + 1;
      if (pos < body.size()) {
        if (body[pos] != ',' || pos + 1 == body.size()) {
          throw InvalidInput("expected ',' between blocks");
        }
        ++pos;
      }
    }
    return Diagram(n, std::move(blocks));
  }

  std::ostream& operator<<(std::ostream& os, Diagram const& a) {
    return os << serialize(a);
  }

}  // namespace pipn
