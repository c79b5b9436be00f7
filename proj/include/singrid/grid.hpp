#pragma once
/**
 * @file grid.hpp
 * @brief Singular grid diagrams: cell types, validation, derived tiling, strand tracing.
 *
 * A grid diagram of size n is an n-by-n board, rows indexed 1..n bottom-to-top and
 * columns 1..n left-to-right, carrying a sparse set of cells: oriented corners and
 * oriented singular tiles. Every nonempty row (column) holds exactly two corners;
 * the strand content of the line is the contiguous span between them, split into
 * maximal sub-segments by any singular tiles strictly inside the span. Crossings are
 * derived, never stored: wherever a horizontal span passes through a vertical span
 * the vertical strand crosses over. Arcs never reach the outer boundary.
 *
 * A singular tile occupies one cell with two arcs, (west side <-> north side) and
 * (south side <-> east side), meeting tangentially at one interior point. The tile's
 * orientation letter fixes the travel direction of both arcs; see `SingularCell`.
 *
 * Values are immutable in spirit: every operation is a pure function building new
 * diagrams, and nothing here mutates shared state.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace singrid {

/// Compass value, used both for cell sides and for travel headings.
enum class Dir : std::uint8_t { north = 0, east = 1, south = 2, west = 3 };

constexpr Dir opposite(Dir d) {
    switch (d) {
        case Dir::north: return Dir::south;
        case Dir::east: return Dir::west;
        case Dir::south: return Dir::north;
        case Dir::west: return Dir::east;
    }
    return Dir::north;
}

constexpr bool is_vertical(Dir d) { return d == Dir::north || d == Dir::south; }
constexpr char dir_char(Dir d) {
    switch (d) {
        case Dir::north: return 'n';
        case Dir::east: return 'e';
        case Dir::south: return 's';
        case Dir::west: return 'w';
    }
    return '?';
}

/// Board position, 1-based; row 1 is the bottom row.
struct Pos {
    int row = 0;
    int col = 0;
    friend constexpr bool operator==(const Pos&, const Pos&) = default;
    friend constexpr auto operator<=>(const Pos&, const Pos&) = default;
};

/**
 * An oriented corner: two perpendicular arms (one vertical, one horizontal) joined
 * by a quarter bend. `enters_horizontal` is the flow flag: true means the strand
 * arrives along the horizontal arm and leaves along the vertical arm (file flag
 * '+'), false the reverse ('-').
 */
struct CornerCell {
    Dir vertical_arm = Dir::north;   ///< north or south
    Dir horizontal_arm = Dir::east;  ///< east or west
    bool enters_horizontal = true;

    friend constexpr bool operator==(const CornerCell&, const CornerCell&) = default;
    friend constexpr auto operator<=>(const CornerCell&, const CornerCell&) = default;

    constexpr Dir entry_side() const { return enters_horizontal ? horizontal_arm : vertical_arm; }
    constexpr Dir exit_side() const { return enters_horizontal ? vertical_arm : horizontal_arm; }

    /// Arm class: which quadrant the two arms point into (ne, nw, se, sw).
    constexpr bool has_arm(Dir d) const { return vertical_arm == d || horizontal_arm == d; }
    /// Corners with arms {north, west} become right cusps under the 45-degree rotation.
    constexpr bool is_right_cusp_class() const {
        return vertical_arm == Dir::north && horizontal_arm == Dir::west;
    }
    /// Corners with arms {south, east} become left cusps; the other two classes smooth out.
    constexpr bool is_left_cusp_class() const {
        return vertical_arm == Dir::south && horizontal_arm == Dir::east;
    }
};

/// Orientation letter of a singular tile.
enum class TileOrient : std::uint8_t { N = 0, E = 1, W = 2, S = 3 };

constexpr char tile_orient_char(TileOrient o) {
    switch (o) {
        case TileOrient::N: return 'n';
        case TileOrient::E: return 'e';
        case TileOrient::W: return 'w';
        case TileOrient::S: return 's';
    }
    return '?';
}

/**
 * A singular tile. Arc routing is fixed: (west <-> north) and (south <-> east).
 * The orientation letter assigns travel directions to the two arcs:
 *
 *   E : west -> north and south -> east   (both forward;  in {W,S}, out {N,E})
 *   W : north -> west and east -> south   (both reversed; in {N,E}, out {W,S})
 *   N : north -> west and south -> east   (mixed;         in {N,S}, out {W,E})
 *   S : west -> north and east -> south   (mixed;         in {W,E}, out {N,S})
 *
 * Under the 45-degree rotation to fronts, E and W tiles have both strands running
 * the same way at the dot (the two positive tangency classes, both-rightward for E
 * and both-leftward for W); N and S carry the two mixed classes (negative).
 */
struct SingularCell {
    TileOrient orient = TileOrient::E;

    friend constexpr bool operator==(const SingularCell&, const SingularCell&) = default;
    friend constexpr auto operator<=>(const SingularCell&, const SingularCell&) = default;

    /// The arc partner of a side (independent of orientation).
    static constexpr Dir arc_partner(Dir side) {
        switch (side) {
            case Dir::west: return Dir::north;
            case Dir::north: return Dir::west;
            case Dir::south: return Dir::east;
            case Dir::east: return Dir::south;
        }
        return Dir::north;
    }

    /// True if the strand travels INTO the tile through `side`.
    constexpr bool is_in_side(Dir side) const {
        switch (orient) {
            case TileOrient::E: return side == Dir::west || side == Dir::south;
            case TileOrient::W: return side == Dir::north || side == Dir::east;
            case TileOrient::N: return side == Dir::north || side == Dir::south;
            case TileOrient::S: return side == Dir::west || side == Dir::east;
        }
        return false;
    }
    /// Front tangency census weight: +1 for the same-direction classes, -1 for mixed.
    constexpr int census_weight() const {
        return (orient == TileOrient::E || orient == TileOrient::W) ? 1 : -1;
    }
};

using Cell = std::variant<CornerCell, SingularCell>;

inline bool is_corner(const Cell& c) { return std::holds_alternative<CornerCell>(c); }
inline bool is_singular(const Cell& c) { return std::holds_alternative<SingularCell>(c); }

/// The central object: a size plus a sparse cell map.
struct GridDiagram {
    int n = 0;
    std::map<Pos, Cell> cells;

    friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

    std::optional<Cell> at(Pos p) const {
        auto it = cells.find(p);
        if (it == cells.end()) return std::nullopt;
        return it->second;
    }
    const CornerCell* corner_at(Pos p) const {
        auto it = cells.find(p);
        if (it == cells.end()) return nullptr;
        return std::get_if<CornerCell>(&it->second);
    }
    const SingularCell* singular_at(Pos p) const {
        auto it = cells.find(p);
        if (it == cells.end()) return nullptr;
        return std::get_if<SingularCell>(&it->second);
    }
    std::vector<Pos> singular_positions() const {
        std::vector<Pos> out;
        for (const auto& [p, c] : cells)
            if (is_singular(c)) out.push_back(p);
        return out;
    }
};

/**
 * One maximal horizontal sub-segment: endpoints (occupied cells) at columns
 * `c_lo` and `c_hi` of `row`; interior cells strictly between. `eastward` is the
 * travel direction along it.
 */
struct HPiece {
    int row = 0, c_lo = 0, c_hi = 0;
    bool eastward = true;
};
/// Vertical counterpart of HPiece.
struct VPiece {
    int col = 0, r_lo = 0, r_hi = 0;
    bool northward = true;
};

/**
 * A derived crossing: the vertical strand passes over the horizontal one.
 * Sign convention: headings (west,north) and (east,south) are positive,
 * (east,north) and (west,south) negative. Equivalently
 * sign = (eastward ? +1 : -1) * (northward ? -1 : +1).
 */
struct CrossingInfo {
    Pos at;
    bool h_eastward = true;
    bool v_northward = true;
    int sign() const { return (h_eastward ? 1 : -1) * (v_northward ? -1 : 1); }
};

/// Line-level skeleton of a valid diagram: directed pieces plus derived crossings.
struct Skeleton {
    std::vector<HPiece> hpieces;
    std::vector<VPiece> vpieces;
    std::vector<CrossingInfo> crossings;
};

/// Resolved per-cell content of the 17-element tileset plus singular tiles.
enum class TileKind : std::uint8_t {
    empty,
    hseg,
    vseg,
    corner_ne,
    corner_nw,
    corner_se,
    corner_sw,
    crossing,
    singular
};

struct DerivedTiling {
    int n = 0;
    std::vector<TileKind> kinds;  ///< row-major, index (row-1)*n + (col-1)
    std::vector<CrossingInfo> crossings;
    TileKind kind(Pos p) const { return kinds[static_cast<size_t>(p.row - 1) * n + (p.col - 1)]; }
};

/// One passage of a strand through a cell.
struct Passage {
    Pos cell;
    Dir entry_side = Dir::west;
    Dir exit_side = Dir::east;
    friend bool operator==(const Passage&, const Passage&) = default;
};
using Circuit = std::vector<Passage>;

namespace detail {

/// Per-line occupancy collected during validation and skeleton building.
struct LineContent {
    std::vector<int> corner_at;    ///< sorted positions (col for rows, row for cols) of corners
    std::vector<int> singular_at;  ///< sorted positions of singular tiles
    bool empty() const { return corner_at.empty() && singular_at.empty(); }
};

inline std::vector<LineContent> rows_of(const GridDiagram& g) {
    std::vector<LineContent> rows(static_cast<size_t>(g.n) + 1);
    for (const auto& [p, c] : g.cells) {
        if (p.row < 1 || p.row > g.n || p.col < 1 || p.col > g.n) continue;
        auto& lc = rows[static_cast<size_t>(p.row)];
        (is_corner(c) ? lc.corner_at : lc.singular_at).push_back(p.col);
    }
    return rows;
}
inline std::vector<LineContent> cols_of(const GridDiagram& g) {
    std::vector<LineContent> cols(static_cast<size_t>(g.n) + 1);
    for (const auto& [p, c] : g.cells) {
        if (p.row < 1 || p.row > g.n || p.col < 1 || p.col > g.n) continue;
        auto& lc = cols[static_cast<size_t>(p.col)];
        (is_corner(c) ? lc.corner_at : lc.singular_at).push_back(p.row);
    }
    return cols;
}

/**
 * Direction implied for a horizontal piece by the cell at one of its ends.
 * `cell_is_west_end` says which end the cell sits at. Returns eastward?
 * nullopt if the cell cannot terminate a horizontal piece on that side.
 */
inline std::optional<bool> h_dir_from_end(const Cell& c, bool cell_is_west_end) {
    // The piece attaches to the cell's east side if the cell is the west end.
    Dir attach = cell_is_west_end ? Dir::east : Dir::west;
    if (const auto* corner = std::get_if<CornerCell>(&c)) {
        if (corner->horizontal_arm != attach) return std::nullopt;
        // enters_horizontal: travel along the piece is toward the corner.
        bool toward_corner = corner->enters_horizontal;
        // toward a west-end cell means travelling westward.
        return cell_is_west_end ? !toward_corner : toward_corner;
    }
    const auto& tile = std::get<SingularCell>(c);
    bool inward = tile.is_in_side(attach);  // strand travels into the tile through `attach`
    // into a west-end cell's east side means travelling westward.
    return cell_is_west_end ? !inward : inward;
}

/// Vertical counterpart; returns northward?
inline std::optional<bool> v_dir_from_end(const Cell& c, bool cell_is_south_end) {
    Dir attach = cell_is_south_end ? Dir::north : Dir::south;
    if (const auto* corner = std::get_if<CornerCell>(&c)) {
        if (corner->vertical_arm != attach) return std::nullopt;
        bool toward_corner = !corner->enters_horizontal;  // enters via vertical arm
        return cell_is_south_end ? !toward_corner : toward_corner;
    }
    const auto& tile = std::get<SingularCell>(c);
    bool inward = tile.is_in_side(attach);
    return cell_is_south_end ? !inward : inward;
}

}  // namespace detail

/**
 * Check all diagram invariants. Returns the list of violations (empty means ok):
 *  - positions inside the board;
 *  - every nonempty line has exactly two corners, and no line is empty;
 *  - singular tiles lie strictly between their line's corners;
 *  - the two corners of a line face each other (arms point inward), so no arc
 *    meets the outer boundary;
 *  - every sub-segment's two endpoint cells imply one consistent travel direction.
 */
inline std::vector<std::string> validate(const GridDiagram& g) {
    std::vector<std::string> bad;
    if (g.n < 1) {
        bad.push_back("grid size must be positive");
        return bad;
    }
    for (const auto& [p, c] : g.cells) {
        (void)c;
        if (p.row < 1 || p.row > g.n || p.col < 1 || p.col > g.n)
            bad.push_back("cell (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                          ") outside the board");
    }
    if (!bad.empty()) return bad;

    auto rows = detail::rows_of(g);
    auto cols = detail::cols_of(g);
    for (auto* lines : {&rows, &cols}) {
        const bool is_rows = (lines == &rows);
        for (int i = 1; i <= g.n; ++i) {
            auto& lc = (*lines)[static_cast<size_t>(i)];
            std::sort(lc.corner_at.begin(), lc.corner_at.end());
            std::sort(lc.singular_at.begin(), lc.singular_at.end());
            const std::string line_name = (is_rows ? "row " : "column ") + std::to_string(i);
            if (lc.empty()) {
                bad.push_back(line_name + " is empty");
                continue;
            }
            if (lc.corner_at.size() != 2) {
                bad.push_back(line_name + " has " + std::to_string(lc.corner_at.size()) +
                              " corners");
                continue;
            }
            const int lo = lc.corner_at[0], hi = lc.corner_at[1];
            for (int s : lc.singular_at)
                if (s <= lo || s >= hi)
                    bad.push_back("singular cell at position " + std::to_string(s) + " of " +
                                  line_name + " is not interior to the span");
            // Arms of the two corners must face each other.
            Pos plo = is_rows ? Pos{i, lo} : Pos{lo, i};
            Pos phi = is_rows ? Pos{i, hi} : Pos{hi, i};
            const CornerCell* clo = g.corner_at(plo);
            const CornerCell* chi = g.corner_at(phi);
            if (is_rows) {
                if (clo && clo->horizontal_arm != Dir::east)
                    bad.push_back("corner at (" + std::to_string(i) + "," + std::to_string(lo) +
                                  ") must have its horizontal arm facing east");
                if (chi && chi->horizontal_arm != Dir::west)
                    bad.push_back("corner at (" + std::to_string(i) + "," + std::to_string(hi) +
                                  ") must have its horizontal arm facing west");
            } else {
                if (clo && clo->vertical_arm != Dir::north)
                    bad.push_back("corner at (" + std::to_string(lo) + "," + std::to_string(i) +
                                  ") must have its vertical arm facing north");
                if (chi && chi->vertical_arm != Dir::south)
                    bad.push_back("corner at (" + std::to_string(hi) + "," + std::to_string(i) +
                                  ") must have its vertical arm facing south");
            }
        }
    }
    if (!bad.empty()) return bad;

    // Direction consistency on every sub-segment.
    for (int r = 1; r <= g.n; ++r) {
        const auto& lc = rows[static_cast<size_t>(r)];
        std::vector<int> stops;
        stops.push_back(lc.corner_at[0]);
        for (int s : lc.singular_at) stops.push_back(s);
        stops.push_back(lc.corner_at[1]);
        for (size_t k = 0; k + 1 < stops.size(); ++k) {
            const Cell& wc = g.cells.at(Pos{r, stops[k]});
            const Cell& ec = g.cells.at(Pos{r, stops[k + 1]});
            auto dw = detail::h_dir_from_end(wc, true);
            auto de = detail::h_dir_from_end(ec, false);
            if (!dw || !de || *dw != *de)
                bad.push_back("row " + std::to_string(r) + " segment [" +
                              std::to_string(stops[k]) + ".." + std::to_string(stops[k + 1]) +
                              "] has inconsistent orientation");
        }
    }
    for (int c = 1; c <= g.n; ++c) {
        const auto& lc = cols[static_cast<size_t>(c)];
        std::vector<int> stops;
        stops.push_back(lc.corner_at[0]);
        for (int s : lc.singular_at) stops.push_back(s);
        stops.push_back(lc.corner_at[1]);
        for (size_t k = 0; k + 1 < stops.size(); ++k) {
            const Cell& sc = g.cells.at(Pos{stops[k], c});
            const Cell& nc = g.cells.at(Pos{stops[k + 1], c});
            auto ds = detail::v_dir_from_end(sc, true);
            auto dn = detail::v_dir_from_end(nc, false);
            if (!ds || !dn || *ds != *dn)
                bad.push_back("column " + std::to_string(c) + " segment [" +
                              std::to_string(stops[k]) + ".." + std::to_string(stops[k + 1]) +
                              "] has inconsistent orientation");
        }
    }
    return bad;
}

inline bool is_valid(const GridDiagram& g) { return validate(g).empty(); }

/// Directed pieces and derived crossings of a valid diagram.
inline Skeleton skeleton(const GridDiagram& g) {
    Skeleton sk;
    auto rows = detail::rows_of(g);
    auto cols = detail::cols_of(g);
    for (int r = 1; r <= g.n; ++r) {
        auto& lc = rows[static_cast<size_t>(r)];
        std::sort(lc.corner_at.begin(), lc.corner_at.end());
        std::sort(lc.singular_at.begin(), lc.singular_at.end());
        if (lc.corner_at.size() != 2) throw std::logic_error("skeleton: invalid diagram");
        std::vector<int> stops{lc.corner_at[0]};
        for (int s : lc.singular_at) stops.push_back(s);
        stops.push_back(lc.corner_at[1]);
        for (size_t k = 0; k + 1 < stops.size(); ++k) {
            auto d = detail::h_dir_from_end(g.cells.at(Pos{r, stops[k]}), true);
            if (!d) throw std::logic_error("skeleton: invalid diagram");
            sk.hpieces.push_back(HPiece{r, stops[k], stops[k + 1], *d});
        }
    }
    for (int c = 1; c <= g.n; ++c) {
        auto& lc = cols[static_cast<size_t>(c)];
        std::sort(lc.corner_at.begin(), lc.corner_at.end());
        std::sort(lc.singular_at.begin(), lc.singular_at.end());
        if (lc.corner_at.size() != 2) throw std::logic_error("skeleton: invalid diagram");
        std::vector<int> stops{lc.corner_at[0]};
        for (int s : lc.singular_at) stops.push_back(s);
        stops.push_back(lc.corner_at[1]);
        for (size_t k = 0; k + 1 < stops.size(); ++k) {
            auto d = detail::v_dir_from_end(g.cells.at(Pos{stops[k], c}), true);
            if (!d) throw std::logic_error("skeleton: invalid diagram");
            sk.vpieces.push_back(VPiece{c, stops[k], stops[k + 1], *d});
        }
    }
    for (const auto& hp : sk.hpieces)
        for (const auto& vp : sk.vpieces)
            if (hp.c_lo < vp.col && vp.col < hp.c_hi && vp.r_lo < hp.row && hp.row < vp.r_hi)
                sk.crossings.push_back(CrossingInfo{Pos{hp.row, vp.col}, hp.eastward, vp.northward});
    std::sort(sk.crossings.begin(), sk.crossings.end(),
              [](const CrossingInfo& a, const CrossingInfo& b) { return a.at < b.at; });
    return sk;
}

/// Full per-cell content. Requires a valid diagram.
inline DerivedTiling derive_tiling(const GridDiagram& g) {
    DerivedTiling t;
    t.n = g.n;
    t.kinds.assign(static_cast<size_t>(g.n) * g.n, TileKind::empty);
    auto set = [&](Pos p, TileKind k) {
        t.kinds[static_cast<size_t>(p.row - 1) * g.n + (p.col - 1)] = k;
    };
    Skeleton sk = skeleton(g);
    for (const auto& hp : sk.hpieces)
        for (int c = hp.c_lo + 1; c < hp.c_hi; ++c) set(Pos{hp.row, c}, TileKind::hseg);
    for (const auto& vp : sk.vpieces)
        for (int r = vp.r_lo + 1; r < vp.r_hi; ++r) {
            Pos p{r, vp.col};
            set(p, t.kind(p) == TileKind::hseg ? TileKind::crossing : TileKind::vseg);
        }
    for (const auto& [p, c] : g.cells) {
        if (const auto* corner = std::get_if<CornerCell>(&c)) {
            bool north = corner->vertical_arm == Dir::north;
            bool east = corner->horizontal_arm == Dir::east;
            set(p, north ? (east ? TileKind::corner_ne : TileKind::corner_nw)
                         : (east ? TileKind::corner_se : TileKind::corner_sw));
        } else {
            set(p, TileKind::singular);
        }
    }
    t.crossings = sk.crossings;
    return t;
}

/**
 * Trace all strands of a valid diagram into oriented circuits. Each circuit lists
 * one passage per cell traversed (segment and crossing cells included; a crossing
 * cell appears on two passages, as does a singular tile — one per arc). Circuits
 * start at the lexicographically least unvisited occupied cell, and the list is
 * deterministic.
 */
inline std::vector<Circuit> trace_strands(const GridDiagram& g) {
    if (!is_valid(g)) throw std::logic_error("trace_strands: invalid diagram");
    std::vector<Circuit> out;
    // Visited set over (cell, exit_side) of occupied cells only; segment/crossing
    // cells are implied.
    std::map<std::pair<Pos, Dir>, bool> visited;
    auto step = [&](Pos p, Dir heading) { // next cell in direction
        switch (heading) {
            case Dir::north: return Pos{p.row + 1, p.col};
            case Dir::south: return Pos{p.row - 1, p.col};
            case Dir::east: return Pos{p.row, p.col + 1};
            case Dir::west: return Pos{p.row, p.col - 1};
        }
        return p;
    };
    for (const auto& [start, c0] : g.cells) {
        std::vector<Dir> exits;
        if (const auto* corner = std::get_if<CornerCell>(&c0)) {
            exits.push_back(corner->exit_side());
        } else {
            const auto& tile = std::get<SingularCell>(c0);
            for (Dir d : {Dir::north, Dir::east, Dir::south, Dir::west})
                if (!tile.is_in_side(d)) exits.push_back(d);
        }
        for (Dir exit0 : exits) {
            if (visited[{start, exit0}]) continue;
            Circuit circ;
            Pos p = start;
            Dir exit = exit0;
            // entry side of the starting cell is recovered when the loop closes.
            while (true) {
                visited[{p, exit}] = true;
                Dir heading = exit;
                Pos q = step(p, heading);
                Dir q_entry = opposite(heading);
                // glide across unoccupied (segment/crossing) cells
                while (!g.cells.count(q)) {
                    circ.push_back(Passage{q, q_entry, heading});
                    q = step(q, heading);
                }
                const Cell& qc = g.cells.at(q);
                Dir q_exit;
                if (const auto* corner = std::get_if<CornerCell>(&qc)) {
                    if (corner->entry_side() != q_entry)
                        throw std::logic_error("trace_strands: flow mismatch at corner");
                    q_exit = corner->exit_side();
                } else {
                    const auto& tile = std::get<SingularCell>(qc);
                    if (!tile.is_in_side(q_entry))
                        throw std::logic_error("trace_strands: flow mismatch at singular cell");
                    q_exit = SingularCell::arc_partner(q_entry);
                }
                circ.push_back(Passage{q, q_entry, q_exit});
                p = q;
                exit = q_exit;
                if (p == start && exit == exit0) break;
            }
            // Rotate so the circuit starts with the passage at `start`.
            std::rotate(circ.begin(), circ.end() - 1, circ.end());
            out.push_back(std::move(circ));
        }
    }
    return out;
}

}  // namespace singrid
