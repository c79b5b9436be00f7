#pragma once

/**
 * @file braid.hpp
 * @brief Singular braid monoid: words, relations, resolutions, bounded rewriting.
 *
 * Words are sequences of generators on a fixed number of strands:
 *   s<i>  crossing of strands i, i+1 (positive),
 *   S<i>  its inverse (negative crossing),
 *   t<i>  singular (transverse) double point of strands i, i+1,
 *   x<i>  singular tangency of strands i, i+1, definitionally x_i = s_i t_i.
 *
 * Two words are compared modulo the monoid relations (commutation at distance,
 * braid relations, the mixed singular braid relations, s_i t_i = t_i s_i, and
 * free cancellation of s_i S_i), optionally also modulo conjugation (cyclic
 * rotation), the exchange move on the top generator, and Markov stabilization.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace singrid {

enum class LetterKind : std::uint8_t { sigma, sigma_inv, tau, xi };

struct BraidLetter {
    LetterKind kind = LetterKind::sigma;
    int index = 1;  ///< 1-based generator index; acts on strands index, index+1.

    friend constexpr bool operator==(const BraidLetter&, const BraidLetter&) = default;
    friend constexpr auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

constexpr BraidLetter sigma(int i) { return {LetterKind::sigma, i}; }
constexpr BraidLetter sigma_inv(int i) { return {LetterKind::sigma_inv, i}; }
constexpr BraidLetter tau(int i) { return {LetterKind::tau, i}; }
constexpr BraidLetter xi(int i) { return {LetterKind::xi, i}; }

constexpr bool is_singular(BraidLetter l) {
    return l.kind == LetterKind::tau || l.kind == LetterKind::xi;
}

/// Does the letter swap the two strands it acts on?
constexpr bool swaps_strands(BraidLetter l) {
    // A tangency (xi = sigma tau) has trivial permutation; all others swap.
    return l.kind != LetterKind::xi;
}

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline char letter_char(LetterKind k) {
    switch (k) {
        case LetterKind::sigma: return 's';
        case LetterKind::sigma_inv: return 'S';
        case LetterKind::tau: return 't';
        case LetterKind::xi: return 'x';
    }
    return '?';
}

class BraidParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parse the textual format: header "braid <n>" then whitespace-separated letters.
inline BraidWord parse_braid(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    if (!(in >> tok)) throw BraidParseError("empty braid input");
    if (tok == "#") {
        // allow leading comment lines
        std::string line;
        std::getline(in, line);
        return parse_braid(std::string(std::istreambuf_iterator<char>(in), {}));
    }
    if (tok != "braid") throw BraidParseError("expected header 'braid <strands>'");
    BraidWord w;
    if (!(in >> w.strands) || w.strands < 1)
        throw BraidParseError("bad strand count in braid header");
    while (in >> tok) {
        if (tok[0] == '#') {  // comment to end of line
            std::string line;
            std::getline(in, line);
            continue;
        }
        LetterKind k;
        switch (tok[0]) {
            case 's': k = LetterKind::sigma; break;
            case 'S': k = LetterKind::sigma_inv; break;
            case 't': k = LetterKind::tau; break;
            case 'x': k = LetterKind::xi; break;
            default: throw BraidParseError("unknown letter '" + tok + "'");
        }
        char* end = nullptr;
        long idx = std::strtol(tok.c_str() + 1, &end, 10);
        if (end == tok.c_str() + 1 || *end != '\0')
            throw BraidParseError("bad letter index in '" + tok + "'");
        if (idx < 1 || idx >= w.strands)
            throw BraidParseError("letter '" + tok + "' out of range for " +
                                  std::to_string(w.strands) + " strands");
        w.letters.push_back({k, static_cast<int>(idx)});
    }
    return w;
}

inline std::string serialize_braid(const BraidWord& w) {
    std::ostringstream out;
    out << "braid " << w.strands;
    for (BraidLetter l : w.letters) out << ' ' << letter_char(l.kind) << l.index;
    out << '\n';
    return out.str();
}

/// One-line word display without the header, "e" for the empty word.
inline std::string word_string(const BraidWord& w) {
    if (w.letters.empty()) return "e";
    std::string out;
    for (BraidLetter l : w.letters) {
        if (!out.empty()) out += ' ';
        out += letter_char(l.kind);
        out += std::to_string(l.index);
    }
    return out;
}

/// The permutation taken by the word: result[p] = end position of the strand
/// starting at position p (0-based positions).
inline std::vector<int> permutation(const BraidWord& w) {
    std::vector<int> pos(static_cast<size_t>(w.strands));
    std::iota(pos.begin(), pos.end(), 0);
    for (BraidLetter l : w.letters)
        if (swaps_strands(l)) std::swap(pos[static_cast<size_t>(l.index - 1)],
                                        pos[static_cast<size_t>(l.index)]);
    std::vector<int> out(pos.size());
    for (size_t p = 0; p < pos.size(); ++p) out[static_cast<size_t>(pos[p])] = static_cast<int>(p);
    return out;
}

/// Number of components of the braid closure (= cycles of the permutation).
inline int closure_components(const BraidWord& w) {
    std::vector<int> perm = permutation(w);
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (size_t p = 0; p < perm.size(); ++p) {
        if (seen[p]) continue;
        ++cycles;
        for (size_t q = p; !seen[q]; q = static_cast<size_t>(perm[q])) seen[q] = true;
    }
    return cycles;
}

/// Exponent sum counting s as +1 and S as -1 (t, x count 0).
inline int writhe_exponent(const BraidWord& w) {
    int e = 0;
    for (BraidLetter l : w.letters) {
        if (l.kind == LetterKind::sigma) ++e;
        if (l.kind == LetterKind::sigma_inv) --e;
    }
    return e;
}

/// Rewrite every t_i as S_i x_i (using x_i = s_i t_i), eliminating tau letters.
inline BraidWord substitute_tau(const BraidWord& w) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.letters.size());
    for (BraidLetter l : w.letters) {
        if (l.kind == LetterKind::tau) {
            out.letters.push_back(sigma_inv(l.index));
            out.letters.push_back(xi(l.index));
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

/**
 * Resolve the singular letter at position `pos` with sign `eta` (+1, -1, 0):
 *   x_i:  +1 -> s_i s_i,   -1 -> (empty),   0 -> s_i
 *   t_i:  +1 -> s_i,       -1 -> S_i,       0 -> (empty)
 */
inline BraidWord resolve_braid(const BraidWord& w, size_t pos, int eta) {
    if (pos >= w.letters.size()) throw std::out_of_range("resolve_braid: position");
    BraidLetter l = w.letters[pos];
    if (!is_singular(l)) throw std::invalid_argument("resolve_braid: letter is not singular");
    std::vector<BraidLetter> repl;
    if (l.kind == LetterKind::xi) {
        if (eta > 0) repl = {sigma(l.index), sigma(l.index)};
        else if (eta == 0) repl = {sigma(l.index)};
    } else {
        if (eta > 0) repl = {sigma(l.index)};
        else if (eta < 0) repl = {sigma_inv(l.index)};
    }
    BraidWord out;
    out.strands = w.strands;
    out.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos));
    out.letters.insert(out.letters.end(), repl.begin(), repl.end());
    out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                       w.letters.end());
    return out;
}

struct RewriteOptions {
    bool conjugation = false;    ///< words compared as cyclic words
    bool exchange = false;       ///< exchange move on the top generator
    bool stabilization = false;  ///< Markov (de)stabilization, changes strand count
    std::size_t max_visited = 1'000'000;
    int length_slack = 4;  ///< how far beyond max(|a|,|b|) intermediate words may grow
};

enum class RewriteOutcome { equivalent, exhausted };

namespace detail {

inline std::string word_key(const BraidWord& w) {
    std::string k;
    k.reserve(2 + 2 * w.letters.size());
    k += static_cast<char>(w.strands);
    for (BraidLetter l : w.letters) {
        k += static_cast<char>(static_cast<int>(l.kind) + 1);
        k += static_cast<char>(l.index);
    }
    return k;
}

inline BraidWord rotate_word(const BraidWord& w, size_t by) {
    BraidWord out;
    out.strands = w.strands;
    out.letters.reserve(w.letters.size());
    for (size_t p = 0; p < w.letters.size(); ++p)
        out.letters.push_back(w.letters[(p + by) % w.letters.size()]);
    return out;
}

/// Lexicographically least rotation, so conjugate words share one representative.
inline BraidWord canonical_rotation(const BraidWord& w) {
    if (w.letters.size() < 2) return w;
    BraidWord best = w;
    std::string best_key = word_key(w);
    for (size_t by = 1; by < w.letters.size(); ++by) {
        BraidWord cand = rotate_word(w, by);
        std::string k = word_key(cand);
        if (k < best_key) {
            best_key = std::move(k);
            best = std::move(cand);
        }
    }
    return best;
}

/// All single-relation rewrites of the <b>linear</b> word (no rotation applied).
inline void linear_rewrites(const BraidWord& w, size_t max_len, bool exchange,
                            bool stabilization, std::vector<BraidWord>& out) {
    const auto& ls = w.letters;
    const size_t L = ls.size();
    auto push = [&](BraidWord&& c) { out.push_back(std::move(c)); };
    auto with_replaced = [&](size_t at, size_t count, std::initializer_list<BraidLetter> repl) {
        BraidWord c;
        c.strands = w.strands;
        c.letters.reserve(L - count + repl.size());
        c.letters.assign(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(at));
        c.letters.insert(c.letters.end(), repl.begin(), repl.end());
        c.letters.insert(c.letters.end(), ls.begin() + static_cast<std::ptrdiff_t>(at + count),
                         ls.end());
        push(std::move(c));
    };

    for (size_t p = 0; p + 1 < L; ++p) {
        BraidLetter a = ls[p], b = ls[p + 1];
        // free cancellation s S / S s -> e
        if (a.index == b.index &&
            ((a.kind == LetterKind::sigma && b.kind == LetterKind::sigma_inv) ||
             (a.kind == LetterKind::sigma_inv && b.kind == LetterKind::sigma)))
            with_replaced(p, 2, {});
        // distant commutation: any two letters with |i-j| >= 2
        if (std::abs(a.index - b.index) >= 2) with_replaced(p, 2, {b, a});
        // s_i t_i = t_i s_i (and the derived S_i t_i = t_i S_i)
        if (a.index == b.index) {
            bool st = (a.kind == LetterKind::sigma || a.kind == LetterKind::sigma_inv) &&
                      b.kind == LetterKind::tau;
            bool ts = a.kind == LetterKind::tau &&
                      (b.kind == LetterKind::sigma || b.kind == LetterKind::sigma_inv);
            if (st || ts) with_replaced(p, 2, {b, a});
        }
        // definition bridge: s_i t_i -> x_i and t_i s_i -> x_i
        if (a.index == b.index &&
            ((a.kind == LetterKind::sigma && b.kind == LetterKind::tau) ||
             (a.kind == LetterKind::tau && b.kind == LetterKind::sigma)))
            with_replaced(p, 2, {xi(a.index)});
    }
    for (size_t p = 0; p + 2 < L; ++p) {
        BraidLetter a = ls[p], b = ls[p + 1], c = ls[p + 2];
        if (std::abs(a.index - b.index) == 1) {
            // braid relation, positive and negative flavors
            if (a.kind == LetterKind::sigma && b.kind == LetterKind::sigma &&
                c.kind == LetterKind::sigma && c.index == a.index)
                with_replaced(p, 3, {sigma(b.index), sigma(a.index), sigma(b.index)});
            if (a.kind == LetterKind::sigma_inv && b.kind == LetterKind::sigma_inv &&
                c.kind == LetterKind::sigma_inv && c.index == a.index)
                with_replaced(p, 3, {sigma_inv(b.index), sigma_inv(a.index), sigma_inv(b.index)});
            // mixed singular braid relation s_i s_j t_i -> t_j s_i s_j (and xi flavor)
            if (a.kind == LetterKind::sigma && b.kind == LetterKind::sigma &&
                c.kind == LetterKind::tau && c.index == a.index)
                with_replaced(p, 3, {tau(b.index), sigma(a.index), sigma(b.index)});
            if (a.kind == LetterKind::sigma && b.kind == LetterKind::sigma &&
                c.kind == LetterKind::xi && c.index == a.index)
                with_replaced(p, 3, {xi(b.index), sigma(a.index), sigma(b.index)});
        }
        // their reversals: t_j s_i s_j -> s_i s_j t_i and x_j s_i s_j -> s_i s_j x_i
        if ((a.kind == LetterKind::tau || a.kind == LetterKind::xi) &&
            b.kind == LetterKind::sigma && c.kind == LetterKind::sigma && a.index == c.index &&
            std::abs(b.index - c.index) == 1) {
            BraidLetter repl = (a.kind == LetterKind::tau) ? tau(b.index) : xi(b.index);
            with_replaced(p, 3, {sigma(b.index), sigma(c.index), repl});
        }
        // inverse-conjugated mixed relation: S_j S_i t_j -> t_i S_j S_i (and xi flavor)
        if (a.kind == LetterKind::sigma_inv && b.kind == LetterKind::sigma_inv &&
            (c.kind == LetterKind::tau || c.kind == LetterKind::xi) && c.index == a.index &&
            std::abs(a.index - b.index) == 1) {
            BraidLetter repl = (c.kind == LetterKind::tau) ? tau(b.index) : xi(b.index);
            with_replaced(p, 3, {repl, sigma_inv(a.index), sigma_inv(b.index)});
        }
        if ((a.kind == LetterKind::tau || a.kind == LetterKind::xi) &&
            b.kind == LetterKind::sigma_inv && c.kind == LetterKind::sigma_inv &&
            a.index == c.index && std::abs(b.index - c.index) == 1) {
            BraidLetter repl = (a.kind == LetterKind::tau) ? tau(b.index) : xi(b.index);
            with_replaced(p, 3, {sigma_inv(b.index), sigma_inv(c.index), repl});
        }
    }
    // x_i -> s_i t_i and x_i -> t_i s_i
    if (L + 1 <= max_len) {
        for (size_t p = 0; p < L; ++p) {
            if (ls[p].kind == LetterKind::xi) {
                with_replaced(p, 1, {sigma(ls[p].index), tau(ls[p].index)});
                with_replaced(p, 1, {tau(ls[p].index), sigma(ls[p].index)});
            }
        }
    }
    // free insertion s_i S_i / S_i s_i
    if (L + 2 <= max_len) {
        for (size_t p = 0; p <= L; ++p) {
            for (int i = 1; i < w.strands; ++i) {
                with_replaced(p, 0, {sigma(i), sigma_inv(i)});
                with_replaced(p, 0, {sigma_inv(i), sigma(i)});
            }
        }
    }
    // exchange move on the top generator g = strands-1:
    // u s_g v S_g -> u S_g v s_g (and the reverse), provided u, v avoid index g.
    if (exchange && w.strands >= 3) {
        const int g = w.strands - 1;
        std::vector<size_t> tops;
        for (size_t p = 0; p < L; ++p)
            if (ls[p].index == g) tops.push_back(p);
        if (tops.size() == 2) {
            BraidLetter a = ls[tops[0]], b = ls[tops[1]];
            bool opposite =
                (a.kind == LetterKind::sigma && b.kind == LetterKind::sigma_inv) ||
                (a.kind == LetterKind::sigma_inv && b.kind == LetterKind::sigma);
            if (opposite) {
                BraidWord c = w;
                std::swap(c.letters[tops[0]], c.letters[tops[1]]);
                push(std::move(c));
            }
        }
    }
    // Markov stabilization: w on n strands <-> w s_n^{+-1} on n+1 strands.
    if (stabilization) {
        for (LetterKind k : {LetterKind::sigma, LetterKind::sigma_inv}) {
            BraidWord c = w;
            c.strands = w.strands + 1;
            c.letters.push_back({k, w.strands});
            if (c.letters.size() <= max_len) push(std::move(c));
        }
        if (w.strands >= 2 && !ls.empty()) {
            const int g = w.strands - 1;
            size_t uses = 0;
            for (BraidLetter l : ls)
                if (l.index == g) ++uses;
            if (uses == 1 && ls.back().index == g &&
                (ls.back().kind == LetterKind::sigma || ls.back().kind == LetterKind::sigma_inv)) {
                BraidWord c = w;
                c.strands = w.strands - 1;
                c.letters.pop_back();
                push(std::move(c));
            }
        }
    }
}

}  // namespace detail

/**
 * Bounded search for a chain of relations taking `a` to `b`.
 * Returns `equivalent` if one is found, `exhausted` when the budget runs out
 * (which does not certify inequivalence).
 */
inline RewriteOutcome rewrite_equivalent(const BraidWord& a, const BraidWord& b,
                                         const RewriteOptions& opts = {}) {
    if (!opts.stabilization && a.strands != b.strands) return RewriteOutcome::exhausted;
    auto canon = [&](const BraidWord& w) {
        return opts.conjugation ? detail::canonical_rotation(w) : w;
    };
    const size_t max_len =
        std::max(a.letters.size(), b.letters.size()) + static_cast<size_t>(opts.length_slack);

    // Every rewrite has its inverse in the generator, so search from both ends
    // and meet in the middle.
    struct Side {
        std::unordered_set<std::string> seen;
        std::deque<BraidWord> frontier;
    };
    Side sides[2];
    {
        BraidWord start = canon(a), goal = canon(b);
        std::string ka = detail::word_key(start), kb = detail::word_key(goal);
        if (ka == kb) return RewriteOutcome::equivalent;
        sides[0].seen.insert(std::move(ka));
        sides[0].frontier.push_back(std::move(start));
        sides[1].seen.insert(std::move(kb));
        sides[1].frontier.push_back(std::move(goal));
    }

    std::vector<BraidWord> nbrs;
    while ((!sides[0].frontier.empty() || !sides[1].frontier.empty()) &&
           sides[0].seen.size() + sides[1].seen.size() < opts.max_visited) {
        int which;
        if (sides[0].frontier.empty()) which = 1;
        else if (sides[1].frontier.empty()) which = 0;
        else which = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
        Side& mine = sides[which];
        Side& other = sides[1 - which];

        BraidWord w = std::move(mine.frontier.front());
        mine.frontier.pop_front();
        nbrs.clear();
        if (opts.conjugation && w.letters.size() >= 2) {
            for (size_t by = 0; by < w.letters.size(); ++by)
                detail::linear_rewrites(detail::rotate_word(w, by), max_len, opts.exchange,
                                        opts.stabilization, nbrs);
        } else {
            detail::linear_rewrites(w, max_len, opts.exchange, opts.stabilization, nbrs);
        }
        for (BraidWord& c : nbrs) {
            if (c.letters.size() > max_len) continue;
            BraidWord cc = canon(c);
            std::string k = detail::word_key(cc);
            if (other.seen.count(k)) return RewriteOutcome::equivalent;
            if (mine.seen.insert(std::move(k)).second) mine.frontier.push_back(std::move(cc));
        }
    }
    return RewriteOutcome::exhausted;
}

}  // namespace singrid
