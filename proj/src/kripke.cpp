#include "polymin/kripke.hpp"

#include <algorithm>

#include "polymin/error.hpp"

namespace polymin {

ReflexiveKripkeModel::ReflexiveKripkeModel(std::vector<std::string> names,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& relation,
                                           std::vector<AtomSet> valuation, AtomSet atoms)
    : names_(std::move(names)), valuation_(std::move(valuation)), atoms_(normalize_atoms(std::move(atoms))) {
    const std::size_t n = names_.size();
    if (valuation_.size() != n) throw ModelError("valuation has " + std::to_string(valuation_.size()) +
                                                 " entries for " + std::to_string(n) + " elements");
    for (std::size_t i = 0; i < n; ++i) {
        if (!index_.emplace(names_[i], i).second) throw ModelError("duplicate element name '" + names_[i] + "'");
        valuation_[i] = normalize_atoms(std::move(valuation_[i]));
        for (const std::string& a : valuation_[i])
            if (!std::binary_search(atoms_.begin(), atoms_.end(), a))
                throw ModelError("element '" + names_[i] + "' uses undeclared atom '" + a + "'");
    }
    succ_.assign(n, Bitset(n));
    pred_.assign(n, Bitset(n));
    for (const auto& [a, b] : relation) {
        if (a >= n || b >= n) throw ModelError("relation pair out of range");
        succ_[a].set(b);
        pred_[b].set(a);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!succ_[i].test(i)) throw ModelError("relation is not reflexive at '" + names_[i] + "'");
    undirected_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) undirected_.push_back(succ_[i] | pred_[i]);
}

ReflexiveKripkeModel ReflexiveKripkeModel::from_poset(const PosetModel& poset) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < poset.size(); ++a)
        for (std::size_t b : poset.up_set(a).members()) pairs.emplace_back(a, b);
    std::vector<AtomSet> valuation;
    for (std::size_t i = 0; i < poset.size(); ++i) valuation.push_back(poset.valuation(i));
    return ReflexiveKripkeModel(poset.names(), pairs, std::move(valuation), poset.atoms());
}

bool ReflexiveKripkeModel::declares(const std::string& atom) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

std::size_t ReflexiveKripkeModel::index_of(std::string_view element) const {
    const auto it = index_.find(std::string(element));
    if (it == index_.end()) throw LookupError("unknown element '" + std::string(element) + "'");
    return it->second;
}

Bitset ReflexiveKripkeModel::atom_extension(const std::string& atom) const {
    Bitset out(size());
    for (std::size_t i = 0; i < size(); ++i)
        if (std::binary_search(valuation_[i].begin(), valuation_[i].end(), atom)) out.set(i);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ReflexiveKripkeModel::relation_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b : succ_[a].members()) out.emplace_back(a, b);
    return out;
}

}  // namespace polymin
