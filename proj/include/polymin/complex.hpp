#pragma once

// Abstract simplicial complexes with a per-cell valuation, and the face
// poset built from them.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polymin/bitset.hpp"

namespace polymin {

/// Sorted, duplicate-free set of atom names.
using AtomSet = std::vector<std::string>;

/// Sorts and deduplicates `atoms` in place and returns it.
AtomSet normalize_atoms(AtomSet atoms);

/// Canonical cell name: sorted vertex identifiers joined by "-".
std::string cell_name(const std::vector<std::string>& sorted_vertices);

/// Splits a canonical cell name back into its vertex identifiers.
std::vector<std::string> split_cell_name(std::string_view name);

struct Cell {
    std::vector<std::string> vertices;  // sorted, unique
    AtomSet atoms;
};

class SimplicialModel {
public:
    using Geometry = std::map<std::string, std::vector<double>>;

    /// Validates face closure, vertex membership and atom declarations.
    /// Throws ModelError naming the offending cell on violation.
    SimplicialModel(std::vector<std::string> vertices, std::vector<Cell> cells, AtomSet atoms,
                    std::optional<Geometry> geometry = std::nullopt);

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const AtomSet& atoms() const noexcept { return atoms_; }
    const std::optional<Geometry>& geometry() const noexcept { return geometry_; }

    std::size_t size() const noexcept { return cells_.size(); }
    std::string name(std::size_t cell) const { return cell_name(cells_[cell].vertices); }

private:
    std::vector<std::string> vertices_;
    std::vector<Cell> cells_;
    AtomSet atoms_;
    std::optional<Geometry> geometry_;
};

/// Parses a model document (JSON, see README for the schema).
SimplicialModel load_simplicial_model(std::string_view document);

/// Reads and parses a model file.
SimplicialModel load_simplicial_model_file(const std::string& path);

/// Serialises a model back into the document schema. Output is deterministic.
std::string to_json(const SimplicialModel& model);

/// Finite face poset of a simplicial complex with the valuation carried over.
/// Elements are indexed in the input cell order.
class PosetModel {
public:
    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::string>& vertex_set(std::size_t i) const { return vertex_sets_.at(i); }
    const AtomSet& valuation(std::size_t i) const { return valuation_.at(i); }
    const AtomSet& atoms() const noexcept { return atoms_; }

    /// Throws LookupError for unknown names.
    std::size_t index_of(std::string_view element) const;

    /// a ≼ b in the reflexive-transitive face order.
    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }

    /// {b : a ≼ b}
    const Bitset& up_set(std::size_t a) const { return up_[a]; }
    /// {a : a ≼ b}
    const Bitset& down_set(std::size_t b) const { return down_[b]; }

    /// Covering pairs (a, b) with a ≺ b and nothing strictly between.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }

private:
    friend PosetModel cell_poset(const SimplicialModel& model);

    std::vector<std::string> names_;
    std::vector<std::vector<std::string>> vertex_sets_;
    std::vector<AtomSet> valuation_;
    AtomSet atoms_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::unordered_map<std::string, std::size_t> index_;
};

PosetModel cell_poset(const SimplicialModel& model);

/// Face-order query by element name. Throws LookupError for unknown names.
bool leq(const PosetModel& poset, std::string_view a, std::string_view b);

}  // namespace polymin
