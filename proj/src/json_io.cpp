#include "ktq/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ktq {

using nlohmann::json;

RawCube load_raw_cube(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    if (!j.contains("size") || !j.contains("cube"))
        throw std::invalid_argument(path + ": missing \"size\" or \"cube\"");

    RawCube raw;
    raw.size = j["size"].get<int>();
    if (raw.size <= 0) throw std::invalid_argument(path + ": size must be positive");
    const auto& cube = j["cube"];
    if (!cube.is_array() || static_cast<int>(cube.size()) != raw.size)
        throw std::invalid_argument(path + ": cube must have `size` slices");
    raw.cube.reserve(static_cast<std::size_t>(raw.size) * raw.size * raw.size);
    for (const auto& slice : cube) {
        if (!slice.is_array() || static_cast<int>(slice.size()) != raw.size)
            throw std::invalid_argument(path + ": cube slice has wrong row count");
        for (const auto& row : slice) {
            if (!row.is_array() || static_cast<int>(row.size()) != raw.size)
                throw std::invalid_argument(path + ": cube row has wrong length");
            for (const auto& v : row) {
                if (!v.is_number_integer())
                    throw std::invalid_argument(path + ": cube entries must be integers");
                const int value = v.get<int>(); // file values are 1-based
                if (value < 1 || value > raw.size)
                    throw std::invalid_argument(path + ": cube entry out of range");
                raw.cube.push_back(value - 1);
            }
        }
    }
    return raw;
}

TernaryQuasigroup load_ktq(const std::string& path, bool check_axioms) {
    RawCube raw = load_raw_cube(path);
    TernaryQuasigroup T = TernaryQuasigroup::from_cube(raw.size, std::move(raw.cube));
    if (check_axioms) {
        if (auto v = check_ktq(T))
            throw std::invalid_argument(path + ": " + v->describe());
    }
    return T;
}

std::string cube_to_json(int size, const std::vector<Elem>& cube) {
    if (static_cast<std::size_t>(size) * size * size != cube.size())
        throw std::invalid_argument("cube has wrong number of entries");
    json slices = json::array();
    for (Elem x = 0; x < size; ++x) {
        json slice = json::array();
        for (Elem y = 0; y < size; ++y) {
            json row = json::array();
            for (Elem z = 0; z < size; ++z) row.push_back(cube[cube_index(size, x, y, z)] + 1);
            slice.push_back(std::move(row));
        }
        slices.push_back(std::move(slice));
    }
    json out{{"size", size}, {"cube", std::move(slices)}};
    return out.dump();
}

void save_ktq(const std::string& path, int size, const std::vector<Elem>& cube) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << cube_to_json(size, cube) << "\n";
}

} // namespace ktq
