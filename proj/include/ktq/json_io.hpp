#pragma once

#include <string>
#include <vector>

#include "ktq/algebra.hpp"

namespace ktq {

// File format: {"size": n, "cube": [[[...]]]} where cube[x][y][z] holds the
// 1-based value of the bracket of (x+1, y+1, z+1).
struct RawCube {
    int size = 0;
    std::vector<Elem> cube; // already 0-based
};

RawCube load_raw_cube(const std::string& path);

// Validates the Latin property, and the nesting axioms unless told not to.
TernaryQuasigroup load_ktq(const std::string& path, bool check_axioms = true);

std::string cube_to_json(int size, const std::vector<Elem>& cube);
void save_ktq(const std::string& path, int size, const std::vector<Elem>& cube);

} // namespace ktq
