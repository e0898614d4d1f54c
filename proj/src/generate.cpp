#include "polymin/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polymin/error.hpp"
#include "polymin/formula.hpp"

namespace polymin {

namespace {

AtomSet random_valuation(SplitMix64& rng, std::size_t n_atoms) {
    AtomSet val{"p" + std::to_string(rng.below(n_atoms))};
    if (n_atoms > 1 && rng.below(4) == 0) val.push_back("p" + std::to_string(rng.below(n_atoms)));
    return normalize_atoms(std::move(val));
}

AtomSet atom_universe(std::size_t n_atoms) {
    AtomSet atoms;
    for (std::size_t i = 0; i < n_atoms; ++i) atoms.push_back("p" + std::to_string(i));
    return normalize_atoms(std::move(atoms));
}

}  // namespace

SimplicialModel random_simplicial_model(std::uint64_t seed, std::size_t n_vertices, std::size_t max_dim,
                                        std::size_t n_atoms) {
    if (n_vertices == 0) throw ArgumentError("gen-random: need at least one vertex");
    if (n_atoms == 0) throw ArgumentError("gen-random: need at least one atom");
    if (max_dim > 8) throw ArgumentError("gen-random: max_dim must be at most 8");
    SplitMix64 rng(seed);

    // Faces as sorted vertex-index lists; compare by size, then lexicographically.
    auto shorter_first = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    };
    std::set<std::vector<std::size_t>, decltype(shorter_first)> faces(shorter_first);
    for (std::size_t v = 0; v < n_vertices; ++v) faces.insert({v});

    const std::size_t n_facets = 1 + rng.below(n_vertices);
    std::vector<std::size_t> pool(n_vertices);
    for (std::size_t f = 0; f < n_facets; ++f) {
        const std::size_t k = std::min<std::size_t>(1 + rng.below(max_dim + 1), n_vertices);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n_vertices - i)]);
        std::vector<std::size_t> facet(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(facet.begin(), facet.end());
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
            std::vector<std::size_t> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::uint32_t{1} << b)) face.push_back(facet[b]);
            faces.insert(std::move(face));
        }
    }

    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < n_vertices; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<Cell> cells;
    for (const auto& face : faces) {
        Cell cell;
        for (std::size_t v : face) cell.vertices.push_back(vertices[v]);
        cell.atoms = random_valuation(rng, n_atoms);
        cells.push_back(std::move(cell));
    }
    return SimplicialModel(std::move(vertices), std::move(cells), atom_universe(n_atoms));
}

ReflexiveKripkeModel random_kripke_model(std::uint64_t seed, std::size_t n, std::size_t n_atoms,
                                         unsigned density_percent) {
    if (n_atoms == 0) throw ArgumentError("random_kripke_model: need at least one atom");
    SplitMix64 rng(seed);
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    std::vector<AtomSet> valuation;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("w" + std::to_string(i));
        valuation.push_back(random_valuation(rng, n_atoms));
        for (std::size_t j = 0; j < n; ++j)
            if (i == j || rng.below(100) < density_percent) rel.emplace_back(i, j);
    }
    return ReflexiveKripkeModel(std::move(names), rel, std::move(valuation), atom_universe(n_atoms));
}

}  // namespace polymin
