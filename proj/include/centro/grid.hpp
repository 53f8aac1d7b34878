#pragma once

/**
 * @file grid.hpp
 * @brief Geometric grid classes Geom(A) for {-1,0,1} matrices.
 *
 * Conventions: row 0 is the TOP row of the displayed matrix, column 0 the
 * leftmost. Higher rows hold larger values, left columns earlier positions.
 *
 * Geom(A) is enumerated through words over the nonzero cells: after fixing a
 * consistent orientation (every segment gets a base endpoint, all segments in
 * a column run in the same horizontal direction and all segments in a row in
 * the same vertical direction), the i-th letter of a word puts a point on its
 * cell's segment at distance i from the base. The images of all words of
 * length n are exactly the A-gridded permutations of size n.
 */

#include "centro/error.hpp"
#include "centro/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace centro {

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class GridMatrix {
public:
    GridMatrix() = default;

    GridMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    GridMatrix(std::initializer_list<std::initializer_list<int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw FormatError("grid matrix rows have different lengths");
            for (int e : row) entries_.push_back(checked(e));
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    int at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    int at(Cell cell) const { return at(static_cast<std::size_t>(cell.row), static_cast<std::size_t>(cell.col)); }
    void set(std::size_t r, std::size_t c, int value) { entries_[r * cols_ + c] = checked(value); }

    // Nonzero cells in row-major order; their index is the cell's letter.
    std::vector<Cell> nonzero_cells() const {
        std::vector<Cell> out;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (at(r, c) != 0) out.push_back({static_cast<int>(r), static_cast<int>(c)});
        return out;
    }

    // Rows separated by ';', entries by ','. Example: "-1,1;1,-1".
    static GridMatrix parse(std::string_view text) {
        GridMatrix m;
        std::string cleaned;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '[' && ch != ']') cleaned += ch;
        if (cleaned.empty()) throw FormatError("empty grid matrix");
        std::stringstream rows(cleaned);
        std::string row;
        while (std::getline(rows, row, ';')) {
            std::stringstream entries(row);
            std::string tok;
            std::size_t count = 0;
            while (std::getline(entries, tok, ',')) {
                if (tok != "0" && tok != "1" && tok != "-1" && tok != "+1")
                    throw FormatError("invalid grid matrix entry '" + tok + "'");
                m.entries_.push_back(std::stoi(tok));
                ++count;
            }
            if (m.rows_ == 0) m.cols_ = count;
            if (count != m.cols_ || count == 0) throw FormatError("grid matrix row '" + row + "' has wrong length");
            ++m.rows_;
        }
        return m;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r) out += ';';
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) out += ',';
                out += std::to_string(at(r, c));
            }
        }
        return out;
    }

    friend bool operator==(const GridMatrix&, const GridMatrix&) = default;

private:
    static int checked(int e) {
        if (e < -1 || e > 1) throw FormatError("grid matrix entry " + std::to_string(e) + " not in {-1,0,1}");
        return e;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<int> entries_;
};

// Half-turn rotation; a +-1 segment keeps its slope under rotation.
inline GridMatrix matrix_rc(const GridMatrix& a) {
    GridMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(a.rows() - 1 - r, a.cols() - 1 - c, a.at(r, c));
    return out;
}

inline bool is_rc_matrix(const GridMatrix& a) { return matrix_rc(a) == a; }

inline Cell cell_rc(const GridMatrix& a, Cell c) {
    return {static_cast<int>(a.rows()) - 1 - c.row, static_cast<int>(a.cols()) - 1 - c.col};
}

// A^{x2}: 1 -> [0 1; 1 0], -1 -> [-1 0; 0 -1], 0 -> zeros. Same standard figure.
inline GridMatrix refine_x2(const GridMatrix& a) {
    GridMatrix out(2 * a.rows(), 2 * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const int e = a.at(r, c);
            if (e == 1) {
                out.set(2 * r, 2 * c + 1, 1);
                out.set(2 * r + 1, 2 * c, 1);
            } else if (e == -1) {
                out.set(2 * r, 2 * c, -1);
                out.set(2 * r + 1, 2 * c + 1, -1);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cell graph

struct CellGraph {
    std::vector<Cell> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into vertices

    std::size_t index_of(Cell c) const {
        return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), c) - vertices.begin());
    }

    // Component id per vertex; ids are assigned in order of first vertex.
    std::vector<std::size_t> components() const {
        std::vector<std::size_t> comp(vertices.size(), SIZE_MAX);
        std::vector<std::vector<std::size_t>> adj(vertices.size());
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::size_t next = 0;
        for (std::size_t s = 0; s < vertices.size(); ++s) {
            if (comp[s] != SIZE_MAX) continue;
            std::queue<std::size_t> q;
            q.push(s);
            comp[s] = next;
            while (!q.empty()) {
                const std::size_t u = q.front();
                q.pop();
                for (std::size_t v : adj[u])
                    if (comp[v] == SIZE_MAX) comp[v] = next, q.push(v);
            }
            ++next;
        }
        return comp;
    }

    std::size_t component_count() const {
        const auto comp = components();
        return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    }
};

// Vertices are the nonzero cells; two cells are adjacent when they share a
// row or column with no nonzero cell between them.
inline CellGraph cell_graph(const GridMatrix& a) {
    CellGraph g;
    g.vertices = a.nonzero_cells();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::optional<Cell> prev;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a.at(r, c) == 0) continue;
            const Cell cur{static_cast<int>(r), static_cast<int>(c)};
            if (prev) g.edges.emplace_back(g.index_of(*prev), g.index_of(cur));
            prev = cur;
        }
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
        std::optional<Cell> prev;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (a.at(r, c) == 0) continue;
            const Cell cur{static_cast<int>(r), static_cast<int>(c)};
            if (prev) g.edges.emplace_back(g.index_of(*prev), g.index_of(cur));
            prev = cur;
        }
    }
    return g;
}

inline bool is_forest(const CellGraph& g) { return g.edges.size() + g.component_count() == g.vertices.size(); }

struct ComponentPairingReport {
    GridMatrix checked;        // matrix the conditions were evaluated on
    bool normalized = false;   // true when refine_x2 was applied to reach even dimensions
    bool forest = false;       // condition (i)
    bool pairs_off = false;    // condition (ii)
    // Each pair lists the cells of two components swapped by rc; the first
    // component is the one holding the lexicographically least cell.
    std::vector<std::pair<std::vector<Cell>, std::vector<Cell>>> pairs;
    std::vector<std::vector<Cell>> self_mapped;
};

inline ComponentPairingReport rc_component_pairing(const GridMatrix& a) {
    if (!is_rc_matrix(a)) throw DomainError("component pairing requires a centrosymmetric matrix");
    ComponentPairingReport rep;
    rep.normalized = (a.rows() % 2 != 0) || (a.cols() % 2 != 0);
    rep.checked = rep.normalized ? refine_x2(a) : a;

    const CellGraph g = cell_graph(rep.checked);
    rep.forest = is_forest(g);
    const auto comp = g.components();
    const std::size_t ncomp = g.component_count();

    std::vector<std::vector<Cell>> cells_of(ncomp);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) cells_of[comp[v]].push_back(g.vertices[v]);

    std::vector<std::size_t> image(ncomp);
    for (std::size_t k = 0; k < ncomp; ++k)
        image[k] = comp[g.index_of(cell_rc(rep.checked, cells_of[k].front()))];

    rep.pairs_off = ncomp > 0;
    for (std::size_t k = 0; k < ncomp; ++k) {
        if (image[k] == k) {
            rep.pairs_off = false;
            rep.self_mapped.push_back(cells_of[k]);
        } else if (k < image[k]) {
            rep.pairs.emplace_back(cells_of[k], cells_of[image[k]]);
        }
    }
    return rep;
}

// A_X keeps one component of every rc-swapped pair, A_Y = rc(A_X).
inline std::pair<GridMatrix, GridMatrix> split_XY(const GridMatrix& a) {
    const auto rep = rc_component_pairing(a);
    if (!rep.pairs_off) throw DomainError("rc does not pair off the components of the cell graph");
    GridMatrix ax(rep.checked.rows(), rep.checked.cols());
    for (const auto& [keep, _] : rep.pairs)
        for (Cell c : keep) ax.set(c.row, c.col, rep.checked.at(c));
    return {ax, matrix_rc(ax)};
}

// ---------------------------------------------------------------------------
// Gridded permutations

struct GriddedPermutation {
    Permutation perm;
    std::vector<Cell> cells;  // cells[i] is the cell of the entry at position i

    friend bool operator==(const GriddedPermutation&, const GriddedPermutation&) = default;
    friend auto operator<=>(const GriddedPermutation&, const GriddedPermutation&) = default;
};

inline GriddedPermutation gridded_rc(const GriddedPermutation& g, const GridMatrix& a) {
    const std::size_t n = g.perm.size();
    GriddedPermutation out{reverse_complement(g.perm), std::vector<Cell>(n)};
    for (std::size_t i = 0; i < n; ++i) out.cells[n - 1 - i] = cell_rc(a, g.cells[i]);
    return out;
}

inline bool is_centrosymmetric_gridding(const GriddedPermutation& g, const GridMatrix& a) {
    return gridded_rc(g, a) == g;
}

// Monotone consistency: cells are nonzero, column/row blocks are ordered, and
// each cell's points are increasing (+1) or decreasing (-1). Every geometric
// gridding satisfies this; the converse fails for cyclic cell graphs.
inline bool is_consistent_gridding(const GriddedPermutation& g, const GridMatrix& a) {
    const std::size_t n = g.perm.size();
    if (g.cells.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Cell c = g.cells[i];
        if (c.row < 0 || c.col < 0 || c.row >= static_cast<int>(a.rows()) || c.col >= static_cast<int>(a.cols()))
            return false;
        if (a.at(c) == 0) return false;
        if (i && g.cells[i - 1].col > c.col) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (g.perm[i] < g.perm[j] && g.cells[i].row < g.cells[j].row) return false;
            if (i < j && g.cells[i] == g.cells[j]) {
                const bool up = g.perm[i] < g.perm[j];
                if (up != (a.at(g.cells[i]) == 1)) return false;
            }
        }
    }
    return true;
}

// Combine griddings on A_X and A_Y (no shared rows or columns) into the
// unique gridding on A = A_X + A_Y.
inline GriddedPermutation merge_griddings(const GriddedPermutation& gx, const GridMatrix& ax,
                                          const GriddedPermutation& gy, const GridMatrix& ay) {
    if (ax.rows() != ay.rows() || ax.cols() != ay.cols()) throw DomainError("A_X and A_Y differ in shape");
    for (Cell x : ax.nonzero_cells())
        for (Cell y : ay.nonzero_cells())
            if (x.row == y.row || x.col == y.col) throw DomainError("A_X and A_Y share a row or column");

    struct Pt {
        Cell cell;
        int src;    // 0 = X, 1 = Y
        int pos;    // position within its own permutation
        int value;  // value within its own permutation
    };
    std::vector<Pt> pts;
    for (std::size_t i = 0; i < gx.perm.size(); ++i) pts.push_back({gx.cells[i], 0, static_cast<int>(i), gx.perm[i]});
    for (std::size_t i = 0; i < gy.perm.size(); ++i) pts.push_back({gy.cells[i], 1, static_cast<int>(i), gy.perm[i]});

    const int rows = static_cast<int>(ax.rows());
    // Each column (row) is owned by one side, so ordering inside it is inherited.
    std::vector<std::size_t> by_x(pts.size()), by_y(pts.size());
    std::iota(by_x.begin(), by_x.end(), 0);
    std::iota(by_y.begin(), by_y.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(pts[a].cell.col, pts[a].pos) < std::tie(pts[b].cell.col, pts[b].pos);
    });
    std::sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) {
        const int ra = rows - 1 - pts[a].cell.row, rb = rows - 1 - pts[b].cell.row;
        return std::tie(ra, pts[a].value) < std::tie(rb, pts[b].value);
    });
    std::vector<int> rank(pts.size());
    for (std::size_t r = 0; r < by_y.size(); ++r) rank[by_y[r]] = static_cast<int>(r + 1);

    GriddedPermutation out;
    std::vector<int> values;
    for (std::size_t idx : by_x) {
        values.push_back(rank[idx]);
        out.cells.push_back(pts[idx].cell);
    }
    out.perm = Permutation::from_unchecked(std::move(values));
    return out;
}

// ---------------------------------------------------------------------------
// Word-image enumeration

// col_dir[c] = +1 when segments in column c have their base on the left;
// row_dir[r] = +1 when segments in row r have their base at the bottom.
struct Orientation {
    std::vector<int> col_dir;
    std::vector<int> row_dir;
};

// Each nonzero cell (r,c) with entry e forces row_dir[r] = e * col_dir[c];
// this is a parity constraint system on the bipartite row/column graph,
// solved by breadth-first propagation.
inline std::optional<Orientation> consistent_orientation(const GridMatrix& a) {
    const std::size_t R = a.rows(), C = a.cols();
    std::vector<int> dir(R + C, 0);  // rows first, then columns
    for (std::size_t start = 0; start < R + C; ++start) {
        if (dir[start] != 0) continue;
        dir[start] = 1;
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            if (u < R) {
                for (std::size_t c = 0; c < C; ++c) {
                    const int e = a.at(u, c);
                    if (e == 0) continue;
                    const int want = e * dir[u];
                    if (dir[R + c] == 0) dir[R + c] = want, q.push(R + c);
                    else if (dir[R + c] != want) return std::nullopt;
                }
            } else {
                const std::size_t c = u - R;
                for (std::size_t r = 0; r < R; ++r) {
                    const int e = a.at(r, c);
                    if (e == 0) continue;
                    const int want = e * dir[u];
                    if (dir[r] == 0) dir[r] = want, q.push(r);
                    else if (dir[r] != want) return std::nullopt;
                }
            }
        }
    }
    Orientation o;
    o.row_dir.assign(dir.begin(), dir.begin() + static_cast<std::ptrdiff_t>(R));
    o.col_dir.assign(dir.begin() + static_cast<std::ptrdiff_t>(R), dir.end());
    return o;
}

// Geom(A) with per-size caches of its gridded permutations. Thread-safe;
// returned references stay valid for the lifetime of the object.
class GeomClass {
public:
    static constexpr std::size_t max_size = 16;

    explicit GeomClass(GridMatrix a) : matrix_(std::move(a)) {
        cells_ = matrix_.nonzero_cells();
        if (cells_.empty()) throw DomainError("grid matrix has no nonzero entry");
        drawn_ = matrix_;
        auto orient = consistent_orientation(drawn_);
        if (!orient) {
            drawn_ = refine_x2(matrix_);
            orient = consistent_orientation(drawn_);
            refined_ = true;
        }
        if (!orient) throw CapabilityError("no consistent orientation for " + matrix_.to_string());
        orientation_ = *orient;
        drawn_cells_ = drawn_.nonzero_cells();
        if (drawn_cells_.size() > 16) throw CapabilityError("word enumeration supports at most 16 cells");
        for (Cell c : drawn_cells_) {
            const Cell home = refined_ ? Cell{c.row / 2, c.col / 2} : c;
            letter_home_.push_back(
                static_cast<int>(std::find(cells_.begin(), cells_.end(), home) - cells_.begin()));
        }
    }

    const GridMatrix& matrix() const noexcept { return matrix_; }
    // Matrix the words are drawn on: A itself or A^{x2} when A has no consistent orientation.
    const GridMatrix& drawing_matrix() const noexcept { return drawn_; }
    bool refined() const noexcept { return refined_; }

    // Geom(A)_n in lexicographic order.
    const std::vector<Permutation>& members(std::size_t n) const { return level(n).members; }

    bool contains(const Permutation& p) const {
        const auto& m = members(p.size());
        return std::binary_search(m.begin(), m.end(), p);
    }

    // All A-gridded permutations of size n, sorted.
    std::vector<GriddedPermutation> gridded(std::size_t n) const {
        const auto& lv = level(n);
        std::vector<GriddedPermutation> out;
        out.reserve(lv.keys.size());
        for (const auto& k : lv.keys) out.push_back(decode(k, n));
        return out;
    }

    std::size_t gridded_count(std::size_t n) const { return level(n).keys.size(); }

    std::vector<GriddedPermutation> griddings_of(const Permutation& p) const {
        const std::size_t n = p.size();
        if (n > max_size) throw CapabilityError("geometric grid enumeration limited to size 16");
        const auto& lv = level(n);
        const std::uint64_t packed = pack_perm(p);
        auto lo = std::lower_bound(lv.keys.begin(), lv.keys.end(), Key{packed, 0});
        std::vector<GriddedPermutation> out;
        for (auto it = lo; it != lv.keys.end() && it->first == packed; ++it) out.push_back(decode(*it, n));
        return out;
    }

    // Largest number of griddings of a single permutation of size n.
    std::size_t max_griddings(std::size_t n) const {
        const auto& lv = level(n);
        std::size_t best = 0, run = 0;
        for (std::size_t i = 0; i < lv.keys.size(); ++i) {
            run = (i && lv.keys[i].first == lv.keys[i - 1].first) ? run + 1 : 1;
            best = std::max(best, run);
        }
        return best;
    }

    // Points of one drawing of p on the drawing matrix, scaled to integers:
    // x in [0, cols*(n+1)], y (upwards) in [0, rows*(n+1)]. nullopt if p is
    // not a member.
    std::optional<std::vector<std::pair<long, long>>> drawing_of(const Permutation& p) const {
        const std::size_t n = p.size();
        if (!contains(p)) return std::nullopt;
        std::vector<int> word(n, 0);
        const int k = static_cast<int>(drawn_cells_.size());
        while (true) {
            const auto pts = place(word);
            if (image(pts) == p) return pts;
            std::size_t i = 0;
            while (i < n && ++word[i] == k) word[i++] = 0;
            if (i == n) return std::nullopt;
        }
    }

private:
    using Key = std::pair<std::uint64_t, std::uint64_t>;  // (packed perm, packed cell letters)

    struct Level {
        std::vector<Key> keys;
        std::vector<Permutation> members;
    };

    static std::uint64_t pack_perm(const Permutation& p) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < max_size; ++i)
            v = (v << 4) | (i < p.size() ? static_cast<std::uint64_t>(p[i] - 1) : 0u);
        return v;
    }

    GriddedPermutation decode(const Key& key, std::size_t n) const {
        std::vector<int> vals(n);
        GriddedPermutation g;
        for (std::size_t i = 0; i < n; ++i) {
            const unsigned shift = static_cast<unsigned>(4 * (max_size - 1 - i));
            vals[i] = static_cast<int>((key.first >> shift) & 0xF) + 1;
            g.cells.push_back(cells_[(key.second >> shift) & 0xF]);
        }
        g.perm = Permutation::from_unchecked(std::move(vals));
        return g;
    }

    std::vector<std::pair<long, long>> place(const std::vector<int>& word) const {
        const long n = static_cast<long>(word.size());
        const long rows = static_cast<long>(drawn_.rows());
        std::vector<std::pair<long, long>> pts(word.size());
        for (long i = 0; i < n; ++i) {
            const Cell c = drawn_cells_[word[i]];
            const long t = i + 1;
            const long dx = orientation_.col_dir[c.col] > 0 ? t : n + 1 - t;
            const long dy = orientation_.row_dir[c.row] > 0 ? t : n + 1 - t;
            pts[i] = {c.col * (n + 1) + dx, (rows - 1 - c.row) * (n + 1) + dy};
        }
        return pts;
    }

    static Permutation image(const std::vector<std::pair<long, long>>& pts) {
        std::vector<std::size_t> by_x(pts.size());
        std::iota(by_x.begin(), by_x.end(), 0);
        std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) { return pts[a].first < pts[b].first; });
        std::vector<int> ys;
        for (std::size_t i : by_x) ys.push_back(static_cast<int>(pts[i].second));
        return standardize(ys);
    }

    Level build(std::size_t n) const {
        if (n > max_size) throw CapabilityError("geometric grid enumeration limited to size 16");
        Level lv;
        const int k = static_cast<int>(drawn_cells_.size());
        std::vector<int> word(n, 0);
        std::vector<std::size_t> by_x(n);
        std::vector<int> ys(n);
        while (true) {
            const auto pts = place(word);
            std::iota(by_x.begin(), by_x.end(), 0);
            std::sort(by_x.begin(), by_x.end(),
                      [&](std::size_t a, std::size_t b) { return pts[a].first < pts[b].first; });
            for (std::size_t i = 0; i < n; ++i) ys[i] = static_cast<int>(pts[by_x[i]].second);
            const Permutation p = standardize(ys);
            std::uint64_t letters = 0;
            for (std::size_t i = 0; i < max_size; ++i)
                letters = (letters << 4) | (i < n ? static_cast<std::uint64_t>(letter_home_[word[by_x[i]]]) : 0u);
            lv.keys.emplace_back(pack_perm(p), letters);

            std::size_t i = 0;
            while (i < n && ++word[i] == k) word[i++] = 0;
            if (i == n) break;
        }
        std::sort(lv.keys.begin(), lv.keys.end());
        lv.keys.erase(std::unique(lv.keys.begin(), lv.keys.end()), lv.keys.end());
        for (std::size_t i = 0; i < lv.keys.size(); ++i) {
            if (i && lv.keys[i].first == lv.keys[i - 1].first) continue;
            lv.members.push_back(decode(lv.keys[i], n).perm);
        }
        return lv;
    }

    const Level& level(std::size_t n) const {
        {
            std::lock_guard lock(mutex_);
            if (auto it = levels_.find(n); it != levels_.end()) return *it->second;
        }
        auto built = std::make_unique<Level>(build(n));
        std::lock_guard lock(mutex_);
        auto [it, inserted] = levels_.emplace(n, std::move(built));
        return *it->second;
    }

    GridMatrix matrix_;
    GridMatrix drawn_;
    bool refined_ = false;
    Orientation orientation_;
    std::vector<Cell> cells_;
    std::vector<Cell> drawn_cells_;
    std::vector<int> letter_home_;  // drawing-matrix letter -> index into cells_
    mutable std::mutex mutex_;
    mutable std::map<std::size_t, std::unique_ptr<Level>> levels_;
};

inline std::vector<Permutation> enumerate_geom(const GridMatrix& a, std::size_t n) {
    return GeomClass(a).members(n);
}

inline std::vector<GriddedPermutation> enumerate_gridded(const GridMatrix& a, std::size_t n) {
    return GeomClass(a).gridded(n);
}

struct CentroGriddingResult {
    bool member = false;  // p in Geom(A)
    bool found = false;   // some gridding is fixed by rc
};

inline CentroGriddingResult has_centrosymmetric_gridding(const Permutation& p, const GeomClass& geom) {
    const GridMatrix& a = geom.matrix();
    if (!is_rc_matrix(a)) throw DomainError("centrosymmetric griddings need a centrosymmetric matrix");
    if (!is_centrosymmetric(p)) throw DomainError("permutation " + p.to_string() + " is not centrosymmetric");
    CentroGriddingResult res;
    const auto gs = geom.griddings_of(p);
    res.member = !gs.empty();
    res.found = std::any_of(gs.begin(), gs.end(), [&](const auto& g) { return is_centrosymmetric_gridding(g, a); });
    return res;
}

inline CentroGriddingResult has_centrosymmetric_gridding(const Permutation& p, const GridMatrix& a) {
    return has_centrosymmetric_gridding(p, GeomClass(a));
}

// |Geom(A)^rc_{2n}| for n = 0..max_n, by filtering the word images.
inline std::vector<std::uint64_t> centro_geom_counts(const GeomClass& geom, std::size_t max_n) {
    if (!is_rc_matrix(geom.matrix())) throw DomainError("centrosymmetric counts need a centrosymmetric matrix");
    std::vector<std::uint64_t> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        const auto& m = geom.members(2 * n);
        out.push_back(static_cast<std::uint64_t>(std::count_if(m.begin(), m.end(), is_centrosymmetric)));
    }
    return out;
}

inline std::vector<std::uint64_t> centro_geom_counts(const GridMatrix& a, std::size_t max_n) {
    return centro_geom_counts(GeomClass(a), max_n);
}

inline std::uint64_t centro_gridded_count(const GeomClass& geom, std::size_t size) {
    std::uint64_t count = 0;
    for (const auto& g : geom.gridded(size))
        if (is_centrosymmetric_gridding(g, geom.matrix())) ++count;
    return count;
}

// Compares |G#_n(A)| with the two candidate decompositions over A_X, A_Y.
struct GriddedCountIdentity {
    std::size_t n = 0;
    std::uint64_t direct = 0;
    std::uint64_t sum_of_squares = 0;  // sum_k |G#_k(A_X)|^2
    std::uint64_t convolution = 0;     // sum_k |G#_k(A_X)| |G#_{n-k}(A_Y)|
};

inline GriddedCountIdentity gridded_count_identity(const GridMatrix& a, std::size_t n) {
    const auto [ax, ay] = split_XY(a);
    const GeomClass whole(ax.rows() == a.rows() ? a : refine_x2(a));
    GriddedCountIdentity out;
    out.n = n;
    out.direct = whole.gridded_count(n);
    const GeomClass gx(ax), gy(ay);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::uint64_t xk = gx.gridded_count(k);
        out.sum_of_squares += xk * xk;
        out.convolution += xk * gy.gridded_count(n - k);
    }
    return out;
}

// Union of a drawing of sigma with its half-turn image, ties broken
// symmetrically. The result is centrosymmetric and contains sigma; membership
// in Geom(A) is for the caller to verify.
inline std::optional<Permutation> centrosymmetric_doubling(const GeomClass& geom, const Permutation& sigma) {
    if (!is_rc_matrix(geom.matrix())) throw DomainError("doubling needs a centrosymmetric matrix");
    const auto pts = geom.drawing_of(sigma);
    if (!pts) return std::nullopt;
    const long n = static_cast<long>(sigma.size());
    const long width = static_cast<long>(geom.drawing_matrix().cols()) * (n + 1);
    const long height = static_cast<long>(geom.drawing_matrix().rows()) * (n + 1);

    struct P {
        long x, y;
        int src;  // 0 original, 1 rotated
    };
    std::vector<P> all;
    for (auto [x, y] : *pts) all.push_back({x, y, 0});
    for (auto [x, y] : *pts) all.push_back({width - x, height - y, 1});

    std::vector<std::size_t> by_x(all.size()), by_y(all.size());
    std::iota(by_x.begin(), by_x.end(), 0);
    std::iota(by_y.begin(), by_y.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(all[a].x, all[a].y, all[a].src) < std::tie(all[b].x, all[b].y, all[b].src);
    });
    std::sort(by_y.begin(), by_y.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(all[a].y, all[a].x, all[a].src) < std::tie(all[b].y, all[b].x, all[b].src);
    });
    std::vector<int> rank(all.size());
    for (std::size_t r = 0; r < by_y.size(); ++r) rank[by_y[r]] = static_cast<int>(r + 1);
    std::vector<int> vals;
    for (std::size_t i : by_x) vals.push_back(rank[i]);
    return Permutation::from_unchecked(std::move(vals));
}

}  // namespace centro
