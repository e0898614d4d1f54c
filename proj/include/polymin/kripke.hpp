#pragma once

// Finite reflexive Kripke models. Poset models embed with R = ≼; minimal
// models are produced directly in this form.

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polymin/bitset.hpp"
#include "polymin/complex.hpp"

namespace polymin {

class ReflexiveKripkeModel {
public:
    /// `relation` lists pairs (a, b) meaning R(a, b). Throws ModelError when R is
    /// not reflexive, an index is out of range, names repeat, or a valuation uses
    /// an undeclared atom.
    ReflexiveKripkeModel(std::vector<std::string> names, const std::vector<std::pair<std::size_t, std::size_t>>& relation,
                         std::vector<AtomSet> valuation, AtomSet atoms);

    static ReflexiveKripkeModel from_poset(const PosetModel& poset);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const AtomSet& valuation(std::size_t i) const { return valuation_.at(i); }
    const AtomSet& atoms() const noexcept { return atoms_; }
    bool declares(const std::string& atom) const;

    /// Throws LookupError for unknown names.
    std::size_t index_of(std::string_view element) const;

    bool related(std::size_t a, std::size_t b) const { return succ_[a].test(b); }
    /// {b : R(a, b)}
    const Bitset& successors(std::size_t a) const { return succ_[a]; }
    /// {a : R(a, b)}
    const Bitset& predecessors(std::size_t b) const { return pred_[b]; }
    /// {b : R(a, b) or R(b, a)}
    const Bitset& neighbours(std::size_t a) const { return undirected_[a]; }

    /// Elements whose valuation contains `atom`; empty for undeclared atoms.
    Bitset atom_extension(const std::string& atom) const;

    /// All pairs of R in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> relation_pairs() const;

private:
    std::vector<std::string> names_;
    std::vector<AtomSet> valuation_;
    AtomSet atoms_;
    std::vector<Bitset> succ_;
    std::vector<Bitset> pred_;
    std::vector<Bitset> undirected_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace polymin
