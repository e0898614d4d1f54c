#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polymin/checker.hpp"
#include "polymin/complex.hpp"
#include "polymin/formula.hpp"
#include "polymin/generate.hpp"
#include "polymin/kripke.hpp"

namespace polymin::testing {

inline std::string fixture_path(const std::string& name) { return std::string(POLYMIN_FIXTURES) + "/" + name; }

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline PosetModel fixture_poset(const std::string& name) {
    return cell_poset(load_simplicial_model_file(fixture_path(name)));
}

/// Random poset model with at most `max_cells` elements and at most 3 atoms.
inline PosetModel random_poset(std::uint64_t seed, std::size_t max_cells = 12) {
    SplitMix64 rng(seed);
    while (true) {
        const std::size_t vertices = 1 + rng.below(5);
        const std::size_t dim = rng.below(3);
        const std::size_t atoms = 1 + rng.below(3);
        SimplicialModel m = random_simplicial_model(rng.next(), vertices, dim, atoms);
        if (m.size() <= max_cells) return cell_poset(m);
    }
}

inline std::vector<std::string> names_in(const ReflexiveKripkeModel& m, const Bitset& set) {
    return member_names(m, set);
}

inline Bitset set_of(const ReflexiveKripkeModel& m, const std::vector<std::string>& names) {
    Bitset out(m.size());
    for (const auto& n : names) out.set(m.index_of(n));
    return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace polymin::testing
