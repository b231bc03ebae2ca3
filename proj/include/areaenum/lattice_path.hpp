#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace areaenum {

enum class Step : char { Right = 'R', Left = 'L', Up = 'U', Down = 'D' };

/// Walk on the square lattice starting at the origin.
struct LatticePath {
    std::vector<Step> steps;

    /// Parse a string of R/L/U/D characters. Throws std::invalid_argument on
    /// any other character.
    static LatticePath parse(std::string_view text);

    std::string to_string() const;

    /// Vertices visited, starting at (0,0); size is steps.size() + 1.
    std::vector<std::pair<long, long>> vertices() const;

    bool closed() const;
};

/// Signed area enclosed by a closed path, counted with multiplicity: each
/// unit cell contributes its winding number. Counterclockwise is positive.
/// Throws std::invalid_argument if the path is not closed.
long algebraic_area(const LatticePath& path);

/// Number of unit cells at each nonzero winding number, keyed by the winding
/// number. Satisfies sum_m m * S_m == algebraic_area(path).
std::map<int, long> winding_decomposition(const LatticePath& path);

}  // namespace areaenum
