#pragma once

// Global model checking on finite reflexive Kripke models. A satisfaction set
// is a Bitset over the model's element indices.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polymin/bitset.hpp"
#include "polymin/formula.hpp"
#include "polymin/kripke.hpp"
#include "polymin/parser.hpp"

namespace polymin {

struct CheckOptions {
    /// Undeclared atoms raise LookupError instead of evaluating to the empty set.
    bool strict_atoms = false;
};

/// Exact extension of f. Shared subformulas are evaluated once.
Bitset sat(const ReflexiveKripkeModel& m, const Formula& f, const CheckOptions& options = {});

/// Reference evaluator: every η node is decided by a breadth-first search over
/// explicit ±-paths of length at most `bound`. Exponentially less clever than
/// sat and meant only for cross-checking it. Throws ArgumentError if bound < 2.
Bitset sat_eta_path_oracle(const ReflexiveKripkeModel& m, const Formula& f, std::size_t bound);

/// Elements of A from which some element of `targets` is reachable by
/// undirected steps that stay inside A.
Bitset reach_within(const ReflexiveKripkeModel& m, const Bitset& inside, const Bitset& targets);

using ScriptResults = std::vector<std::pair<std::string, Bitset>>;

/// One satisfaction set per save directive, in script order.
ScriptResults check_script(const ReflexiveKripkeModel& m, const Script& s, const CheckOptions& options = {});

/// Names of the members of `set`, in element order.
std::vector<std::string> member_names(const ReflexiveKripkeModel& m, const Bitset& set);

/// {"model": path, "results": {name: [bool per element]}} with save order kept.
std::string results_to_json(const std::string& model_path, const std::vector<std::pair<std::string, std::vector<bool>>>& results);

std::vector<bool> to_bools(const Bitset& set);

}  // namespace polymin
