#include "areaenum/lattice_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace areaenum {

LatticePath LatticePath::parse(std::string_view text) {
    LatticePath path;
    path.steps.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'R': case 'L': case 'U': case 'D':
                path.steps.push_back(static_cast<Step>(ch));
                break;
            default:
                throw std::invalid_argument(std::string("LatticePath::parse: invalid step '") +
                                            ch + "'");
        }
    }
    return path;
}

std::string LatticePath::to_string() const {
    std::string text;
    text.reserve(steps.size());
    for (Step s : steps) text.push_back(static_cast<char>(s));
    return text;
}

std::vector<std::pair<long, long>> LatticePath::vertices() const {
    std::vector<std::pair<long, long>> vs;
    vs.reserve(steps.size() + 1);
    long x = 0, y = 0;
    vs.emplace_back(x, y);
    for (Step s : steps) {
        switch (s) {
            case Step::Right: ++x; break;
            case Step::Left: --x; break;
            case Step::Up: ++y; break;
            case Step::Down: --y; break;
        }
        vs.emplace_back(x, y);
    }
    return vs;
}

bool LatticePath::closed() const {
    long x = 0, y = 0;
    for (Step s : steps) {
        switch (s) {
            case Step::Right: ++x; break;
            case Step::Left: --x; break;
            case Step::Up: ++y; break;
            case Step::Down: --y; break;
        }
    }
    return x == 0 && y == 0;
}

long algebraic_area(const LatticePath& path) {
    if (!path.closed()) throw std::invalid_argument("algebraic_area: path is not closed");
    // Line integral of x dy; equals the winding-weighted cell count.
    long x = 0, area = 0;
    for (Step s : path.steps) {
        switch (s) {
            case Step::Right: ++x; break;
            case Step::Left: --x; break;
            case Step::Up: area += x; break;
            case Step::Down: area -= x; break;
        }
    }
    return area;
}

std::map<int, long> winding_decomposition(const LatticePath& path) {
    if (!path.closed()) throw std::invalid_argument("winding_decomposition: path is not closed");

    // Each vertical step becomes a crossing record (x, lower y, sign).
    struct VerticalEdge {
        long x, y_low;
        int sign;
    };
    std::vector<VerticalEdge> edges;
    long x = 0, y = 0;
    long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (Step s : path.steps) {
        switch (s) {
            case Step::Right: ++x; break;
            case Step::Left: --x; break;
            case Step::Up: edges.push_back({x, y, +1}); ++y; break;
            case Step::Down: edges.push_back({x, y - 1, -1}); --y; break;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }

    // Winding number of the cell [cx,cx+1]x[cy,cy+1] by casting a ray from
    // its centre towards +x: upward crossings count +1, downward -1.
    std::map<int, long> sectors;
    for (long cy = min_y; cy < max_y; ++cy) {
        for (long cx = min_x; cx < max_x; ++cx) {
            int winding = 0;
            for (const auto& e : edges)
                if (e.y_low == cy && e.x > cx) winding += e.sign;
            if (winding != 0) ++sectors[winding];
        }
    }
    return sectors;
}

}  // namespace areaenum
