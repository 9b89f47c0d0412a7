#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ktq/algebra.hpp"
#include "ktq/homology.hpp"

namespace ktq {

// A braid word on s strands: nonzero letters g with 1 <= |g| <= s-1. The sign
// is the crossing sign, the magnitude the position (the gap between strands
// |g| and |g|+1).
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    // Comma-separated integers, e.g. "1,1,2,-1,-3,2,-3". The strand count
    // defaults to max|letter|+1 (1 for the empty word).
    static BraidWord parse(const std::string& text, std::optional<int> strands = std::nullopt);

    void validate() const;
};

enum class DiagramMode { closed, long_knot };

struct Crossing {
    int level;    // which letter, 0-based
    int position; // gap index, 1..strands-1
    int sign;     // +1 or -1
};

// Assignment of one element to every region.
using Coloring = std::vector<Elem>;

// Combinatorial region structure of a braid closure. The diagram is sliced
// into horizontal bands between consecutive crossings (cyclically, band 0
// doubling as the band below the last crossing); a cell is (band, gap) with
// gap 0 left of strand 1 and gap s right of strand s. Cells in consecutive
// bands merge except at the gap occupied by the crossing between them.
//
// A long knot uses the same structure: opening the first strand splits the
// plane along the axis, leaving the gap-0 class (left of the axis) and the
// top gap-1 class as the two ends of the first arc. Only constraint helpers
// differ between the modes.
class ClosedBraidDiagram {
public:
    ClosedBraidDiagram(BraidWord word, DiagramMode mode);

    const BraidWord& word() const { return word_; }
    DiagramMode mode() const { return mode_; }
    int strands() const { return word_.strands; }
    int bands() const { return bands_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    int region_count() const { return region_count_; }
    int region_of_cell(int band, int gap) const;
    int unbounded_region() const { return region_of_cell(0, 0); }

    // Cells of every region, keyed by the stable region id (regions are
    // numbered by their least cell).
    std::vector<std::vector<std::pair<int, int>>> region_cells() const;

    // Role assignment around a crossing with strands running downward and
    // co-orientation pointing to the strand's left (east): r0 is the west
    // quadrant and r2 the east; for a positive letter the strand entering at
    // the crossing position passes over, putting r1 in the south quadrant and
    // r3 in the north. A negative letter mirrors r1 and r3.
    struct Roles {
        int r0, r1, r2, r3;
        int tau;
    };
    Roles crossing_roles(int crossing_index) const;

    // Deduplicated arc adjacency records; the co-orientation arrow points
    // from west to east across every strand.
    struct Arc {
        int west, east;
    };
    const std::vector<Arc>& arcs() const { return arcs_; }

private:
    BraidWord word_;
    DiagramMode mode_;
    int bands_ = 1;
    std::vector<Crossing> crossings_;
    std::vector<int> cell_region_;
    int region_count_ = 0;
    std::vector<Arc> arcs_;
};

// Partial region -> element constraints for base colorings.
using RegionConstraints = std::map<int, Elem>;

// All colorings satisfying C(r3) = [C(r0) C(r1) C(r2)] at every crossing plus
// the constraints, in slot-state order. Implemented by sweeping slot state
// vectors in X^{s+1} down the braid and keeping the wrap-around fixed points.
std::vector<Coloring> enumerate_colorings(const ClosedBraidDiagram& diagram,
                                          const TernaryQuasigroup& T,
                                          const RegionConstraints& constraints = {});

// The unique left (or right) coloring of `base` taking seed_color at
// seed_region, found by propagating across arcs and verifying the remaining
// ones. A verification failure throws InvariantViolation: it means the input
// operation does not satisfy the nesting axioms (or the base coloring is
// invalid).
Coloring extend(Side side, const ClosedBraidDiagram& diagram, const TernaryQuasigroup& T,
                const Coloring& base, int seed_region, Elem seed_color);

// p left colorings, the base, then k right colorings.
struct LayeredColoring {
    std::vector<Coloring> layers; // size p+1+k, layers[p] is the base
    int p = 0;
    int k = 0;

    const Coloring& base() const { return layers[p]; }
};

struct LayeredConstraints {
    RegionConstraints base;
    std::optional<int> seed_region;  // default: the unbounded region
    std::optional<Elem> left_seed;   // fixed seed for every left layer
    std::optional<Elem> right_seed;  // fixed seed for every right layer
};

// Every layered coloring over every admissible base: one seed color per layer
// at the seed region, unique extension per seed. Without seed constraints the
// count is (#bases) * |X|^{p+k}.
std::vector<LayeredColoring> enumerate_layered(const ClosedBraidDiagram& diagram,
                                               const TernaryQuasigroup& T, int p, int k,
                                               const LayeredConstraints& constraints = {});

// Constraint set for the long-knot computation: pins the base color of the
// unbounded region r0 to `a`, of the region across the first arc (top gap-1
// class) to `b`, and every layer seed at r0.
LayeredConstraints long_knot_constraints(const ClosedBraidDiagram& diagram, Elem a, Elem b,
                                         Elem left_seed, Elem right_seed);

// The colored path of a crossing under a layered coloring:
// (C_0(r0),...,C_{p-1}(r0), C_p(r0), C_p(r1), C_p(r2), C_{p+1}(r2),...,C_{p+k}(r2)).
Tuple colored_path(const ClosedBraidDiagram& diagram, int crossing_index,
                   const LayeredColoring& lc);

// Signed sum of colored paths over all crossings; a degree p+k+1 cycle in the
// truncated quotient complex.
Chain diagram_cycle(const ClosedBraidDiagram& diagram, const LayeredColoring& lc);

} // namespace ktq
