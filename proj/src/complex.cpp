#include "polymin/complex.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polymin/error.hpp"

namespace polymin {

using nlohmann::json;

AtomSet normalize_atoms(AtomSet atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

std::string cell_name(const std::vector<std::string>& sorted_vertices) {
    std::string out;
    for (std::size_t i = 0; i < sorted_vertices.size(); ++i) {
        if (i != 0) out += '-';
        out += sorted_vertices[i];
    }
    return out;
}

std::vector<std::string> split_cell_name(std::string_view name) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t dash = name.find('-', start);
        parts.emplace_back(name.substr(start, dash == std::string_view::npos ? std::string_view::npos : dash - start));
        if (dash == std::string_view::npos) break;
        start = dash + 1;
    }
    return parts;
}

namespace {

// Atom names that would collide with the encoding's reserved labels.
bool is_reserved_atom(const std::string& atom) { return atom == "tau" || atom == "c" || atom == "d"; }

bool valid_atom_text(const std::string& atom) {
    if (atom.empty()) return false;
    return std::none_of(atom.begin(), atom.end(), [](char ch) {
        return ch == '"' || ch == '{' || ch == '}' || ch == ',' || ch == '\n' || ch == '\r';
    });
}

}  // namespace

SimplicialModel::SimplicialModel(std::vector<std::string> vertices, std::vector<Cell> cells, AtomSet atoms,
                                 std::optional<Geometry> geometry)
    : vertices_(std::move(vertices)), cells_(std::move(cells)), atoms_(std::move(atoms)),
      geometry_(std::move(geometry)) {
    const std::set<std::string> known_vertices(vertices_.begin(), vertices_.end());
    if (known_vertices.size() != vertices_.size()) throw ModelError("duplicate vertex identifier");
    for (const std::string& v : vertices_)
        if (v.empty() || v.find('-') != std::string::npos)
            throw ModelError("vertex identifier '" + v + "' must be non-empty and must not contain '-'");

    const std::set<std::string> declared(atoms_.begin(), atoms_.end());
    for (const std::string& atom : atoms_) {
        if (!valid_atom_text(atom)) throw ModelError("invalid atom name '" + atom + "'");
        if (is_reserved_atom(atom)) throw ModelError("atom name '" + atom + "' is reserved");
    }

    std::set<std::vector<std::string>> listed;
    for (Cell& cell : cells_) {
        if (cell.vertices.empty()) throw ModelError("cell with no vertices");
        std::sort(cell.vertices.begin(), cell.vertices.end());
        if (std::adjacent_find(cell.vertices.begin(), cell.vertices.end()) != cell.vertices.end())
            throw ModelError("cell " + cell_name(cell.vertices) + " repeats a vertex");
        for (const std::string& v : cell.vertices)
            if (!known_vertices.contains(v))
                throw ModelError("cell " + cell_name(cell.vertices) + " uses unknown vertex '" + v + "'");
        cell.atoms = normalize_atoms(std::move(cell.atoms));
        for (const std::string& a : cell.atoms)
            if (!declared.contains(a))
                throw ModelError("cell " + cell_name(cell.vertices) + " uses undeclared atom '" + a + "'");
        if (!listed.insert(cell.vertices).second)
            throw ModelError("cell " + cell_name(cell.vertices) + " is listed twice");
    }

    // Face closure: every non-empty proper subset of a cell is itself a cell.
    for (const Cell& cell : cells_) {
        const std::size_t k = cell.vertices.size();
        if (k > 24) throw ModelError("cell " + cell_name(cell.vertices) + " has too many vertices");
        for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << k); ++mask) {
            std::vector<std::string> face;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::uint32_t{1} << b)) face.push_back(cell.vertices[b]);
            if (!listed.contains(face))
                throw ModelError("missing face " + cell_name(face) + " of cell " + cell_name(cell.vertices));
        }
    }

    if (geometry_) {
        for (const auto& [vertex, coords] : *geometry_)
            if (!known_vertices.contains(vertex))
                throw ModelError("geometry given for unknown vertex '" + vertex + "'");
    }
}

SimplicialModel load_simplicial_model(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("model document: top level must be an object");
    if (!doc.contains("cells") || !doc["cells"].is_array())
        throw ParseError("model document: missing \"cells\" array");

    auto string_list = [](const json& node, const std::string& what) {
        if (!node.is_array()) throw ParseError("model document: " + what + " must be an array of strings");
        std::vector<std::string> out;
        for (const json& item : node) {
            if (!item.is_string()) throw ParseError("model document: " + what + " must be an array of strings");
            out.push_back(item.get<std::string>());
        }
        return out;
    };

    std::vector<Cell> cells;
    std::vector<std::string> vertex_order;
    std::set<std::string> seen_vertices;
    std::set<std::string> used_atoms;
    for (const json& entry : doc["cells"]) {
        if (!entry.is_object() || !entry.contains("vertices"))
            throw ParseError("model document: each cell needs a \"vertices\" array");
        Cell cell;
        cell.vertices = string_list(entry["vertices"], "cell vertices");
        if (!entry.contains("atoms"))
            throw ModelError("cell " + cell_name([&] {
                                 auto v = cell.vertices;
                                 std::sort(v.begin(), v.end());
                                 return v;
                             }()) +
                             " has no valuation (missing \"atoms\")");
        cell.atoms = string_list(entry["atoms"], "cell atoms");
        for (const std::string& v : cell.vertices)
            if (seen_vertices.insert(v).second) vertex_order.push_back(v);
        used_atoms.insert(cell.atoms.begin(), cell.atoms.end());
        cells.push_back(std::move(cell));
    }

    std::vector<std::string> vertices;
    if (doc.contains("vertices")) {
        vertices = string_list(doc["vertices"], "\"vertices\"");
    } else {
        vertices = std::move(vertex_order);
    }

    AtomSet atoms;
    if (doc.contains("atoms")) {
        atoms = normalize_atoms(string_list(doc["atoms"], "\"atoms\""));
    } else {
        atoms.assign(used_atoms.begin(), used_atoms.end());
    }

    std::optional<SimplicialModel::Geometry> geometry;
    if (doc.contains("geometry")) {
        const json& g = doc["geometry"];
        if (!g.is_object()) throw ParseError("model document: \"geometry\" must be an object");
        SimplicialModel::Geometry coords;
        for (const auto& [vertex, point] : g.items()) {
            if (!point.is_array()) throw ParseError("model document: geometry of '" + vertex + "' must be an array");
            std::vector<double> xs;
            for (const json& x : point) {
                if (!x.is_number()) throw ParseError("model document: geometry of '" + vertex + "' must be numeric");
                xs.push_back(x.get<double>());
            }
            coords.emplace(vertex, std::move(xs));
        }
        geometry = std::move(coords);
    }

    return SimplicialModel(std::move(vertices), std::move(cells), std::move(atoms), std::move(geometry));
}

SimplicialModel load_simplicial_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_simplicial_model(buffer.str());
}

std::string to_json(const SimplicialModel& model) {
    json doc = json::object();
    doc["atoms"] = model.atoms();
    doc["vertices"] = model.vertices();
    json cells = json::array();
    for (const Cell& cell : model.cells()) cells.push_back({{"vertices", cell.vertices}, {"atoms", cell.atoms}});
    doc["cells"] = std::move(cells);
    if (model.geometry()) {
        json g = json::object();
        for (const auto& [vertex, coords] : *model.geometry()) g[vertex] = coords;
        doc["geometry"] = std::move(g);
    }
    return doc.dump(2) + "\n";
}

std::size_t PosetModel::index_of(std::string_view element) const {
    const auto it = index_.find(std::string(element));
    if (it == index_.end()) throw LookupError("unknown element '" + std::string(element) + "'");
    return it->second;
}

PosetModel cell_poset(const SimplicialModel& model) {
    PosetModel p;
    const std::size_t n = model.size();
    p.atoms_ = model.atoms();
    p.names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Cell& cell = model.cells()[i];
        p.names_.push_back(cell_name(cell.vertices));
        p.vertex_sets_.push_back(cell.vertices);
        p.valuation_.push_back(cell.atoms);
        p.index_.emplace(p.names_.back(), i);
    }

    // Face order is vertex-set inclusion; materialise both directions.
    p.up_.assign(n, Bitset(n));
    p.down_.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        const auto& va = p.vertex_sets_[a];
        for (std::size_t b = 0; b < n; ++b) {
            const auto& vb = p.vertex_sets_[b];
            if (va.size() <= vb.size() && std::includes(vb.begin(), vb.end(), va.begin(), va.end())) {
                p.up_[a].set(b);
                p.down_[b].set(a);
            }
        }
    }
    // In a face poset a ≺ b is a cover exactly when |b| = |a| + 1.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b : p.up_[a].members())
            if (p.vertex_sets_[b].size() == p.vertex_sets_[a].size() + 1) p.covers_.emplace_back(a, b);
    return p;
}

bool leq(const PosetModel& poset, std::string_view a, std::string_view b) {
    return poset.leq(poset.index_of(a), poset.index_of(b));
}

}  // namespace polymin
