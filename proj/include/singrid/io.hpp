#pragma once
/**
 * @file io.hpp
 * @brief Grid diagram file format and renderers.
 *
 * File format (bit-exact):
 *   line 1: `grid <n>`
 *   then n lines of n whitespace-separated tokens, rows listed top-to-bottom
 *   (the in-memory convention is bottom-to-top; the parser flips).
 * Tokens:
 *   `.`            empty cell
 *   `<v><h><f>`    corner; <v> in {n,s} vertical arm, <h> in {e,w} horizontal arm,
 *                  <f> in {+,-}; '+' means the strand enters through the horizontal
 *                  arm and exits through the vertical one, '-' the reverse
 *   `*n|*e|*w|*s`  singular tile with its orientation letter
 * Lines starting with `#` are comments.
 *
 * Parsing and validation are deliberately separate: `parse` only checks the format.
 */

#include <sstream>
#include <string>
#include <vector>

#include "grid.hpp"

namespace singrid {

/// Format-level failure in a diagram or braid file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        out.push_back(line);
    }
    return out;
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace detail

/// Parse a diagram file. Throws ParseError on malformed input; does not validate.
inline GridDiagram parse(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw ParseError("empty diagram file");
    auto header = detail::split_ws(lines[0]);
    if (header.size() != 2 || header[0] != "grid")
        throw ParseError("first line must be `grid <n>`");
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(header[1], &used);
        if (used != header[1].size()) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError("bad grid size `" + header[1] + "`");
    }
    if (n < 1) throw ParseError("grid size must be positive");
    if (static_cast<int>(lines.size()) - 1 != n)
        throw ParseError("expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1));

    GridDiagram g;
    g.n = n;
    for (int i = 1; i <= n; ++i) {
        auto toks = detail::split_ws(lines[static_cast<size_t>(i)]);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(toks.size()) +
                             " tokens, expected " + std::to_string(n));
        const int row = n - i + 1;  // file rows are top-to-bottom
        for (int col = 1; col <= n; ++col) {
            const std::string& t = toks[static_cast<size_t>(col - 1)];
            if (t == ".") continue;
            if (t.size() == 2 && t[0] == '*') {
                TileOrient o;
                switch (t[1]) {
                    case 'n': o = TileOrient::N; break;
                    case 'e': o = TileOrient::E; break;
                    case 'w': o = TileOrient::W; break;
                    case 's': o = TileOrient::S; break;
                    default: throw ParseError("bad singular token `" + t + "`");
                }
                g.cells.emplace(Pos{row, col}, SingularCell{o});
                continue;
            }
            if (t.size() == 3) {
                Dir v, h;
                if (t[0] == 'n') v = Dir::north;
                else if (t[0] == 's') v = Dir::south;
                else throw ParseError("bad corner token `" + t + "`");
                if (t[1] == 'e') h = Dir::east;
                else if (t[1] == 'w') h = Dir::west;
                else throw ParseError("bad corner token `" + t + "`");
                bool plus;
                if (t[2] == '+') plus = true;
                else if (t[2] == '-') plus = false;
                else throw ParseError("bad corner token `" + t + "`");
                g.cells.emplace(Pos{row, col}, CornerCell{v, h, plus});
                continue;
            }
            throw ParseError("malformed token `" + t + "` at file row " + std::to_string(i) +
                             ", column " + std::to_string(col));
        }
    }
    return g;
}

inline std::string cell_token(const Cell& c) {
    if (const auto* corner = std::get_if<CornerCell>(&c)) {
        std::string t;
        t += dir_char(corner->vertical_arm);
        t += dir_char(corner->horizontal_arm);
        t += corner->enters_horizontal ? '+' : '-';
        return t;
    }
    return std::string("*") + tile_orient_char(std::get<SingularCell>(c).orient);
}

/// Serialize to the file format; parse(serialize(g)) == g bit-exactly.
inline std::string serialize(const GridDiagram& g) {
    std::ostringstream out;
    out << "grid " << g.n << "\n";
    for (int row = g.n; row >= 1; --row) {
        for (int col = 1; col <= g.n; ++col) {
            if (col > 1) out << ' ';
            auto c = g.at(Pos{row, col});
            out << (c ? cell_token(*c) : ".");
        }
        out << "\n";
    }
    return out.str();
}

/**
 * Box-drawing picture: one glyph per cell, rows top-to-bottom. Crossing cells show
 * the vertical stroke unbroken and the horizontal one broken. Singular tiles render
 * as `┿`, with one legend line per tile appended below the picture.
 */
inline std::string render_ascii(const GridDiagram& g) {
    DerivedTiling t = derive_tiling(g);
    std::ostringstream out;
    for (int row = g.n; row >= 1; --row) {
        for (int col = 1; col <= g.n; ++col) {
            switch (t.kind(Pos{row, col})) {
                case TileKind::empty: out << "⋅"; break;
                case TileKind::hseg: out << "─"; break;        // ─
                case TileKind::vseg: out << "│"; break;        // │
                case TileKind::corner_ne: out << "└"; break;   // └
                case TileKind::corner_nw: out << "┘"; break;   // ┘
                case TileKind::corner_se: out << "┌"; break;   // ┌
                case TileKind::corner_sw: out << "┐"; break;   // ┐
                case TileKind::crossing: out << "│"; break;    // vertical crosses over
                case TileKind::singular: out << "┿"; break;    // ┿
            }
        }
        out << "\n";
    }
    for (const auto& p : g.singular_positions())
        out << "tile (" << p.row << "," << p.col << "): *"
            << tile_orient_char(g.singular_at(p)->orient) << "\n";
    return out.str();
}

}  // namespace singrid
