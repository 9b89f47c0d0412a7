#include "ktq/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <set>
#include <thread>

namespace ktq {

namespace {

// Backtracking state for one worker. Cells are filled in lexicographic
// (x,y,z) order; three bitmask families maintain the Latin constraints and a
// shrinking list of not-yet-determined axiom instances provides the LN/RN
// pruning. Instance determination is monotone along a branch, so a saved
// prefix length is enough to undo the list.
struct Search {
    int n;
    std::vector<std::int8_t> cube;       // -1 = unset
    std::vector<std::uint32_t> mask_xy;  // values used along the z line of (x,y)
    std::vector<std::uint32_t> mask_xz;  // along the y line of (x,z)
    std::vector<std::uint32_t> mask_yz;  // along the x line of (y,z)
    std::vector<int> undet;              // instance ids, live prefix [0, active)
    int active = 0;

    // quad = ((a*n+b)*n+c)*n+d, instance id = quad*2 + axiom (0 = LN, 1 = RN)
    explicit Search(int size) : n(size) {
        const std::size_t n2 = static_cast<std::size_t>(n) * n;
        cube.assign(n2 * n, -1);
        mask_xy.assign(n2, 0);
        mask_xz.assign(n2, 0);
        mask_yz.assign(n2, 0);
        const std::size_t quads = n2 * n2;
        undet.reserve(quads * 2);
        for (std::size_t q = 0; q < quads; ++q) {
            undet.push_back(static_cast<int>(q * 2));
            undet.push_back(static_cast<int>(q * 2 + 1));
        }
        active = static_cast<int>(undet.size());
    }

    std::int8_t at(int x, int y, int z) const {
        return cube[(static_cast<std::size_t>(x) * n + y) * n + z];
    }

    // -1 undetermined, 0 violated, 1 satisfied
    int eval(int id) const {
        const int axiom = id & 1;
        int q = id >> 1;
        const int d = q % n; q /= n;
        const int c = q % n; q /= n;
        const int b = q % n;
        const int a = q / n;
        if (axiom == 0) {
            const int bcd = at(b, c, d); if (bcd < 0) return -1;
            const int lhs = at(a, b, bcd); if (lhs < 0) return -1;
            const int abc = at(a, b, c); if (abc < 0) return -1;
            const int e = at(abc, c, d); if (e < 0) return -1;
            const int rhs = at(a, abc, e); if (rhs < 0) return -1;
            return lhs == rhs;
        }
        const int abc = at(a, b, c); if (abc < 0) return -1;
        const int lhs = at(abc, c, d); if (lhs < 0) return -1;
        const int bcd = at(b, c, d); if (bcd < 0) return -1;
        const int t = at(a, b, bcd); if (t < 0) return -1;
        const int rhs = at(t, bcd, d); if (rhs < 0) return -1;
        return lhs == rhs;
    }

    // Re-scans the live instances after an assignment. Newly satisfied ones
    // are swapped out; a violation rejects the assignment.
    bool propagate() {
        int i = 0;
        while (i < active) {
            const int res = eval(undet[i]);
            if (res < 0) {
                ++i;
            } else if (res == 1) {
                std::swap(undet[i], undet[active - 1]);
                --active;
            } else {
                return false;
            }
        }
        return true;
    }

    bool assign(int cell, int v) {
        const int z = cell % n;
        const int xy = cell / n;
        const int x = xy / n;
        const int y = xy % n;
        cube[cell] = static_cast<std::int8_t>(v);
        const std::uint32_t bit = 1u << v;
        mask_xy[xy] |= bit;
        mask_xz[x * n + z] |= bit;
        mask_yz[y * n + z] |= bit;
        return propagate();
    }

    void unassign(int cell, int v, int saved_active) {
        const int z = cell % n;
        const int xy = cell / n;
        const int x = xy / n;
        const int y = xy % n;
        cube[cell] = -1;
        const std::uint32_t bit = 1u << v;
        mask_xy[xy] &= ~bit;
        mask_xz[x * n + z] &= ~bit;
        mask_yz[y * n + z] &= ~bit;
        active = saved_active;
    }

    std::uint32_t used(int cell) const {
        const int z = cell % n;
        const int xy = cell / n;
        const int x = xy / n;
        const int y = xy % n;
        return mask_xy[xy] | mask_xz[x * n + z] | mask_yz[y * n + z];
    }

    // Runs the search from `cell` onward; emit returns false to abort.
    template <typename Emit>
    bool run(int cell, const Emit& emit) {
        const int total = n * n * n;
        if (cell == total) return emit(cube);
        const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
        std::uint32_t free = full & ~used(cell);
        while (free != 0) {
            const int v = __builtin_ctz(free);
            free &= free - 1;
            const int saved = active;
            if (assign(cell, v)) {
                if (!run(cell + 1, emit)) {
                    unassign(cell, v, saved);
                    return false;
                }
            }
            unassign(cell, v, saved);
        }
        return true;
    }
};

std::vector<Elem> to_cube(const std::vector<std::int8_t>& raw) {
    return std::vector<Elem>(raw.begin(), raw.end());
}

// Collects per-worker results; raw cubes stay in branch order so the merged
// list is lexicographic.
struct WorkerResult {
    std::set<std::vector<Elem>> canonical;
    std::vector<std::vector<Elem>> raw;
    long long emitted = 0;
};

} // namespace

CensusResult enumerate_ktq(int n, const CensusOptions& options) {
    if (n < 1) throw std::invalid_argument("census size must be at least 1");
    if (n > 16) throw CapExceeded("census size above 16 is not supported");

    const long long limit = options.limit.value_or(-1);
    std::atomic<long long> global_count{0};
    std::atomic<bool> stopped{false};

    auto make_emit = [&](WorkerResult& local) {
        return [&](const std::vector<std::int8_t>& raw) -> bool {
            std::vector<Elem> cube = to_cube(raw);
            if (options.up_to_iso) {
                auto T = TernaryQuasigroup::from_cube(n, cube);
                std::vector<Elem> canon = canonical_form(T);
                if (local.canonical.count(canon)) return true;
                if (limit >= 0 && global_count.load() >= limit) {
                    stopped = true;
                    return false;
                }
                local.canonical.insert(std::move(canon));
            } else {
                if (limit >= 0 && global_count.load() >= limit) {
                    stopped = true;
                    return false;
                }
                local.raw.push_back(std::move(cube));
            }
            ++global_count;
            return true;
        };
    };

    const int threads = std::max(1, options.threads);
    std::vector<WorkerResult> results;

    if (threads == 1 || n == 1) {
        results.emplace_back();
        Search s(n);
        auto emit = make_emit(results[0]);
        s.run(0, emit);
    } else {
        // Split on the assignments of the first (0,0,*) line; each branch is
        // replayed into a fresh worker state.
        std::vector<std::vector<int>> prefixes;
        {
            Search probe(n);
            std::vector<int> line(n);
            auto expand = [&](auto&& self, int cell) -> void {
                if (cell == n) {
                    prefixes.push_back(line);
                    return;
                }
                const std::uint32_t full = (1u << n) - 1u;
                std::uint32_t free = full & ~probe.used(cell);
                while (free != 0) {
                    const int v = __builtin_ctz(free);
                    free &= free - 1;
                    const int saved = probe.active;
                    if (probe.assign(cell, v)) {
                        line[cell] = v;
                        self(self, cell + 1);
                    }
                    probe.unassign(cell, v, saved);
                }
            };
            expand(expand, 0);
        }

        results.resize(prefixes.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (!stopped) {
                const std::size_t job = next.fetch_add(1);
                if (job >= prefixes.size()) break;
                Search s(n);
                bool alive = true;
                for (int cell = 0; cell < n && alive; ++cell)
                    alive = s.assign(cell, prefixes[job][cell]);
                if (!alive) continue;
                auto emit = make_emit(results[job]);
                s.run(n, emit);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CensusResult out;
    out.complete = !stopped.load();
    if (options.up_to_iso) {
        std::set<std::vector<Elem>> merged;
        for (auto& r : results) merged.merge(r.canonical);
        out.cubes.assign(merged.begin(), merged.end());
    } else {
        for (auto& r : results)
            out.cubes.insert(out.cubes.end(), std::make_move_iterator(r.raw.begin()),
                             std::make_move_iterator(r.raw.end()));
    }
    if (limit >= 0 && static_cast<long long>(out.cubes.size()) > limit) {
        out.cubes.resize(static_cast<std::size_t>(limit));
        out.complete = false;
    }
    out.count = static_cast<long long>(out.cubes.size());
    return out;
}

} // namespace ktq
