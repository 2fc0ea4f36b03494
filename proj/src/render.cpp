#include "pipn/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <utility>
#include <vector>

#include "text.hpp"

namespace pipn {

  namespace {

    std::string block_name(std::size_t i) {
      std::string s;
      do {
        s.insert(s.begin(), static_cast<char>('a' + i % 26));
        i /= 26;
      } while (i-- > 0);
      return s;
    }

    using Pt = std::pair<double, double>;

    double cross(Pt const& o, Pt const& a, Pt const& b) {
      return (a.first - o.first) * (b.second - o.second)
             - (a.second - o.second) * (b.first - o.first);
    }

    // Andrew's monotone chain.
    std::vector<Pt> hull(std::vector<Pt> pts) {
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      if (pts.size() < 3) {
        return pts;
      }
      std::vector<Pt> h(2 * pts.size());
      std::size_t     k = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) {
          --k;
        }
        h[k++] = pts[i];
      }
      for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) {
          --k;
        }
        h[k++] = pts[i - 1];
      }
      h.resize(k - 1);
      return h;
    }

  }  // namespace

  std::string render_ascii(Diagram const& a) {
    int const                n = a.degree();
    std::vector<std::string> left(static_cast<std::size_t>(n) + 1, "o");
    std::vector<std::string> right(static_cast<std::size_t>(n) + 1, "o");
    std::ostringstream       legend;
    std::size_t              lines = 0;
    for (Block const& b : a.blocks()) {
      if (b.size() == 1) {
        continue;
      }
      std::string const name = block_name(lines++);
      legend << "  " << name << " = {";
      for (std::size_t i = 0; i < b.size(); ++i) {
        Label x = b[i];
        (x > 0 ? left : right)[static_cast<std::size_t>(std::abs(x))] = name;
        legend << (i ? "," : "") << std::abs(x) << (x < 0 ? "'" : "");
      }
      legend << "}\n";
    }
    int const          width = static_cast<int>(std::to_string(n).size());
    std::ostringstream os;
    for (int k = 1; k <= n; ++k) {
      os << std::setw(width) << k << ' ' << std::setw(2) << left[static_cast<std::size_t>(k)]
         << " ---- " << std::setw(2) << std::left << right[static_cast<std::size_t>(k)] << std::right
         << ' ' << k << "'\n";
    }
    os << legend.str();
    return os.str();
  }

  std::string render_svg(Diagram const& a) {
    int const    n = a.degree();
    double const gap = 40, lx = 40, rx = 200, r = 14;
    auto         pos = [&](Label x) -> Pt {
      return {x > 0 ? lx : rx, gap * std::abs(x)};
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << rx + lx << "\" height=\""
       << gap * (n + 1) << "\">\n";
    static char const* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                          "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    std::size_t              colour = 0;
    for (Block const& b : a.blocks()) {
      os << "  <g class=\"block\" data-labels=\"" << detail::join(b, ",") << "\">\n";
      if (b.size() == 1) {
        auto [x, y] = pos(b[0]);
        os << "    <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r
           << "\" fill=\"none\" stroke=\"#555\" stroke-dasharray=\"3,3\"/>\n";
      } else {
        std::vector<Pt> cloud;
        for (Label l : b) {
          auto [x, y] = pos(l);
          for (int k = 0; k < 12; ++k) {
            double const t = 2 * std::numbers::pi * k / 12;
            cloud.emplace_back(std::round((x + r * std::cos(t)) * 10) / 10,
                               std::round((y + r * std::sin(t)) * 10) / 10);
          }
        }
        os << "    <polygon fill=\"none\" stroke=\"" << palette[colour++ % 8]
           << "\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (auto const& [x, y] : hull(cloud)) {
          os << (first ? "" : " ") << x << ',' << y;
          first = false;
        }
        os << "\"/>\n";
      }
      os << "  </g>\n";
    }
    for (int k = 1; k <= n; ++k) {
      for (Label x : {k, -k}) {
        auto [cx, cy] = pos(x);
        os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"black\"/>\n";
        os << "  <text x=\"" << (x > 0 ? cx - 30 : cx + 20) << "\" y=\"" << cy + 4 << "\">" << k
           << (x < 0 ? "'" : "") << "</text>\n";
      }
    }
    os << "</svg>\n";
    return os.str();
  }

}  // namespace pipn
