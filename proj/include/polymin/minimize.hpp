#pragma once

// Minimal Kripke models modulo weak ±-bisimilarity, back-mapping of answers,
// and distinguishing formulas.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polymin/bisim.hpp"
#include "polymin/kripke.hpp"

namespace polymin {

struct MinimalModel {
    ReflexiveKripkeModel kripke;  // element c is class c of `partition`
    Partition partition;          // over the source poset elements
    std::vector<std::string> source_names;
};

using ClassRelation = std::set<std::pair<std::size_t, std::size_t>>;

/// Classes from branching bisimilarity on the concrete encoding; R_min relates
/// two classes iff some members are ordered.
MinimalModel minimal_model(const PosetModel& p);

/// R_min read off the quotient LTS: (a, b) iff b -d-> a.
ClassRelation rmin_via_quotient_d(const PosetModel& p);

ClassRelation relation_of(const ReflexiveKripkeModel& m);

/// Per-cell truth values in source element order. Throws LookupError if the
/// set is not over the classes of mm.
std::vector<bool> map_back(const MinimalModel& mm, const Bitset& class_result);

/// An η-pure formula true at exactly one of a and b, or none when they are
/// logically equivalent. Throws LookupError for unknown element names.
std::optional<Formula> distinguishing_formula(const ReflexiveKripkeModel& m, std::size_t a, std::size_t b);
std::optional<Formula> distinguishing_formula(const PosetModel& p, std::string_view a, std::string_view b);

/// {"classes": [{"id", "name", "members", "atoms"}], "relation": [[i, j], ...]}
std::string minimal_model_to_json(const MinimalModel& mm);

/// {"model": path, "classes": [...], "cell_class": [class id per cell]}
std::string classes_to_json(const std::string& model_path, const MinimalModel& mm);

}  // namespace polymin
