#include "ktq/braidknot.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ktq {

BraidWord BraidWord::parse(const std::string& text, std::optional<int> strands) {
    BraidWord word;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (!trimmed.empty()) {
        std::stringstream ss(trimmed);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("empty braid letter");
            std::size_t pos = 0;
            int g = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("malformed braid letter: " + item);
            word.letters.push_back(g);
        }
    }
    int needed = 1;
    for (int g : word.letters) needed = std::max(needed, std::abs(g) + 1);
    word.strands = strands.value_or(needed);
    word.validate();
    return word;
}

void BraidWord::validate() const {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int g : letters) {
        if (g == 0) throw std::invalid_argument("braid letters must be nonzero");
        if (std::abs(g) >= strands) {
            std::ostringstream os;
            os << "letter " << g << " needs at least " << std::abs(g) + 1 << " strands, have "
               << strands;
            throw std::invalid_argument(os.str());
        }
    }
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

ClosedBraidDiagram::ClosedBraidDiagram(BraidWord word, DiagramMode mode)
    : word_(std::move(word)), mode_(mode) {
    word_.validate();
    const int s = word_.strands;
    const int len = static_cast<int>(word_.letters.size());
    bands_ = std::max(len, 1);

    for (int c = 0; c < len; ++c) {
        const int g = word_.letters[c];
        crossings_.push_back(Crossing{c, std::abs(g), g > 0 ? 1 : -1});
    }

    // Crossing c sits between band c and band (c+1) mod bands; cells merge
    // across that seam except at the crossing's gap. The cyclic band index
    // realizes the closure identification.
    const int gaps = s + 1;
    UnionFind uf(bands_ * gaps);
    auto cell = [&](int band, int gap) { return band * gaps + gap; };
    for (int c = 0; c < len; ++c) {
        const int below = (c + 1) % bands_;
        for (int j = 0; j <= s; ++j)
            if (j != crossings_[c].position) uf.unite(cell(c, j), cell(below, j));
    }

    // Stable region ids: rank of the least cell in each class.
    cell_region_.assign(bands_ * gaps, -1);
    region_count_ = 0;
    for (int i = 0; i < bands_ * gaps; ++i)
        if (uf.find(i) == i) cell_region_[i] = region_count_++;
    for (int i = 0; i < bands_ * gaps; ++i) cell_region_[i] = cell_region_[uf.find(i)];

    std::set<std::pair<int, int>> seen;
    for (int t = 0; t < bands_; ++t)
        for (int i = 1; i <= s; ++i) {
            const int west = cell_region_[cell(t, i - 1)];
            const int east = cell_region_[cell(t, i)];
            if (seen.insert({west, east}).second) arcs_.push_back(Arc{west, east});
        }
}

int ClosedBraidDiagram::region_of_cell(int band, int gap) const {
    if (band < 0 || band >= bands_ || gap < 0 || gap > word_.strands)
        throw std::out_of_range("cell coordinates out of range");
    return cell_region_[band * (word_.strands + 1) + gap];
}

std::vector<std::vector<std::pair<int, int>>> ClosedBraidDiagram::region_cells() const {
    std::vector<std::vector<std::pair<int, int>>> out(region_count_);
    for (int t = 0; t < bands_; ++t)
        for (int j = 0; j <= word_.strands; ++j)
            out[region_of_cell(t, j)].emplace_back(t, j);
    return out;
}

ClosedBraidDiagram::Roles ClosedBraidDiagram::crossing_roles(int crossing_index) const {
    if (crossing_index < 0 || crossing_index >= static_cast<int>(crossings_.size()))
        throw std::out_of_range("crossing index out of range");
    const Crossing& cr = crossings_[crossing_index];
    const int below = (cr.level + 1) % bands_;
    const int west = region_of_cell(cr.level, cr.position - 1);
    const int east = region_of_cell(cr.level, cr.position + 1);
    const int north = region_of_cell(cr.level, cr.position);
    const int south = region_of_cell(below, cr.position);
    if (cr.sign > 0) return Roles{west, south, east, north, cr.sign};
    return Roles{west, north, east, south, cr.sign};
}

std::vector<Coloring> enumerate_colorings(const ClosedBraidDiagram& diagram,
                                          const TernaryQuasigroup& T,
                                          const RegionConstraints& constraints) {
    const int s = diagram.strands();
    const int gaps = s + 1;
    const int size = T.size();
    for (const auto& [region, color] : constraints) {
        if (region < 0 || region >= diagram.region_count())
            throw std::invalid_argument("constraint region does not exist");
        if (color < 0 || color >= size) throw std::invalid_argument("constraint color out of range");
    }

    std::vector<Coloring> out;
    std::vector<Elem> state(gaps, 0);
    std::vector<Elem> band_state;
    Coloring coloring(diagram.region_count());

    while (true) {
        // Sweep the braid downward; each crossing rewrites its gap entry.
        bool ok = true;
        band_state = state;
        std::vector<std::vector<Elem>> bands(diagram.bands());
        bands[0] = state;
        for (const Crossing& cr : diagram.crossings()) {
            const int m = cr.position;
            Elem w, n_color = band_state[m];
            if (cr.sign > 0) {
                // C(north) = [C(west) C(south) C(east)]
                w = T.divide(Division::middle, band_state[m - 1], n_color, band_state[m + 1]);
            } else {
                // C(south) = [C(west) C(north) C(east)]
                w = T.at(band_state[m - 1], n_color, band_state[m + 1]);
            }
            band_state[m] = w;
            const int below = (cr.level + 1) % diagram.bands();
            if (below != 0) bands[below] = band_state;
        }
        ok = band_state == state;

        if (ok) {
            for (int t = 0; t < diagram.bands(); ++t)
                for (int j = 0; j < gaps; ++j) coloring[diagram.region_of_cell(t, j)] = bands[t][j];
            bool admissible = true;
            for (const auto& [region, color] : constraints)
                if (coloring[region] != color) {
                    admissible = false;
                    break;
                }
            if (admissible) out.push_back(coloring);
        }

        int pos = gaps - 1;
        while (pos >= 0 && state[pos] == size - 1) state[pos--] = 0;
        if (pos < 0) break;
        ++state[pos];
    }
    return out;
}

Coloring extend(Side side, const ClosedBraidDiagram& diagram, const TernaryQuasigroup& T,
                const Coloring& base, int seed_region, Elem seed_color) {
    if (static_cast<int>(base.size()) != diagram.region_count())
        throw std::invalid_argument("base coloring size mismatch");
    if (seed_region < 0 || seed_region >= diagram.region_count())
        throw std::invalid_argument("seed region does not exist");
    if (seed_color < 0 || seed_color >= T.size())
        throw std::invalid_argument("seed color out of range");

    // Propagation rules across an arc west -> east, with a = base(west),
    // b = base(east):
    //   left layer:  C_L(east) = [C_L(west) a b],  C_L(west) = divide_L
    //   right layer: C_R(west) = [a b C_R(east)],  C_R(east) = divide_R
    std::vector<std::vector<std::pair<int, bool>>> adjacency(diagram.region_count());
    for (const auto& arc : diagram.arcs()) {
        adjacency[arc.west].emplace_back(arc.east, true);  // west -> east
        adjacency[arc.east].emplace_back(arc.west, false); // east -> west
    }

    Coloring out(diagram.region_count(), -1);
    out[seed_region] = seed_color;
    std::vector<int> queue{seed_region};
    while (!queue.empty()) {
        const int r = queue.back();
        queue.pop_back();
        for (const auto& [other, forward] : adjacency[r]) {
            const int west = forward ? r : other;
            const int east = forward ? other : r;
            const Elem a = base[west];
            const Elem b = base[east];
            Elem value;
            if (side == Side::L)
                value = forward ? T.at(out[r], a, b) : T.divide(Division::left, out[r], a, b);
            else
                value = forward ? T.divide(Division::right, a, b, out[r]) : T.at(a, b, out[r]);
            if (out[other] < 0) {
                out[other] = value;
                queue.push_back(other);
            } else if (out[other] != value) {
                throw InvariantViolation(
                    "coloring extension is inconsistent; the operation does not satisfy "
                    "the nesting axioms or the base coloring is invalid");
            }
        }
    }

    for (Elem v : out)
        if (v < 0)
            throw InvariantViolation("region adjacency graph is disconnected");
    return out;
}

std::vector<LayeredColoring> enumerate_layered(const ClosedBraidDiagram& diagram,
                                               const TernaryQuasigroup& T, int p, int k,
                                               const LayeredConstraints& constraints) {
    if (p < 0 || k < 0) throw std::invalid_argument("p and k must be nonnegative");
    const int seed_region = constraints.seed_region.value_or(diagram.unbounded_region());
    const int size = T.size();

    std::vector<Elem> left_choices, right_choices;
    if (constraints.left_seed) {
        if (*constraints.left_seed < 0 || *constraints.left_seed >= size)
            throw std::invalid_argument("left seed out of range");
        left_choices.push_back(*constraints.left_seed);
    } else {
        for (Elem v = 0; v < size; ++v) left_choices.push_back(v);
    }
    if (constraints.right_seed) {
        if (*constraints.right_seed < 0 || *constraints.right_seed >= size)
            throw std::invalid_argument("right seed out of range");
        right_choices.push_back(*constraints.right_seed);
    } else {
        for (Elem v = 0; v < size; ++v) right_choices.push_back(v);
    }

    std::vector<LayeredColoring> out;
    std::vector<Coloring> bases = enumerate_colorings(diagram, T, constraints.base);

    // Odometer over one seed per layer; left layers are built downward from
    // the base (each one a left coloring of the previous), right layers
    // upward.
    std::vector<std::size_t> pick(p + k, 0);
    for (const Coloring& base : bases) {
        while (true) {
            LayeredColoring lc;
            lc.p = p;
            lc.k = k;
            lc.layers.assign(p + 1 + k, {});
            lc.layers[p] = base;
            for (int j = p - 1; j >= 0; --j)
                lc.layers[j] = extend(Side::L, diagram, T, lc.layers[j + 1], seed_region,
                                      left_choices[pick[j]]);
            for (int j = p + 1; j <= p + k; ++j)
                lc.layers[j] = extend(Side::R, diagram, T, lc.layers[j - 1], seed_region,
                                      right_choices[pick[j - 1]]);
            out.push_back(std::move(lc));

            int pos = p + k - 1;
            while (pos >= 0) {
                const std::size_t width = pos < p ? left_choices.size() : right_choices.size();
                if (pick[pos] + 1 < width) {
                    ++pick[pos];
                    break;
                }
                pick[pos--] = 0;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

LayeredConstraints long_knot_constraints(const ClosedBraidDiagram& diagram, Elem a, Elem b,
                                         Elem left_seed, Elem right_seed) {
    if (diagram.mode() != DiagramMode::long_knot)
        throw std::invalid_argument("long-knot constraints require a long-knot diagram");
    LayeredConstraints out;
    out.base[diagram.unbounded_region()] = a;
    out.base[diagram.region_of_cell(0, 1)] = b;
    out.seed_region = diagram.unbounded_region();
    out.left_seed = left_seed;
    out.right_seed = right_seed;
    return out;
}

Tuple colored_path(const ClosedBraidDiagram& diagram, int crossing_index,
                   const LayeredColoring& lc) {
    const auto roles = diagram.crossing_roles(crossing_index);
    Tuple t;
    t.reserve(lc.p + lc.k + 3);
    for (int j = 0; j < lc.p; ++j) t.push_back(lc.layers[j][roles.r0]);
    t.push_back(lc.layers[lc.p][roles.r0]);
    t.push_back(lc.layers[lc.p][roles.r1]);
    t.push_back(lc.layers[lc.p][roles.r2]);
    for (int j = lc.p + 1; j <= lc.p + lc.k; ++j) t.push_back(lc.layers[j][roles.r2]);
    return t;
}

Chain diagram_cycle(const ClosedBraidDiagram& diagram, const LayeredColoring& lc) {
    Chain out;
    for (int i = 0; i < static_cast<int>(diagram.crossings().size()); ++i)
        out.add(colored_path(diagram, i, lc), diagram.crossings()[i].sign);
    return out;
}

} // namespace ktq
