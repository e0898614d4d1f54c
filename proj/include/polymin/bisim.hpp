#pragma once

// LTS encodings of poset models, bisimulation partition refinement, and the
// direct weak ±-bisimilarity fixpoint.

#include <string>
#include <vector>

#include "polymin/complex.hpp"
#include "polymin/formula.hpp"
#include "polymin/kripke.hpp"
#include "polymin/lts.hpp"
#include "polymin/partition.hpp"

namespace polymin {

/// Label names used by the encodings besides atoms and valuation sets.
inline constexpr std::string_view kChangeLabel = "c";
inline constexpr std::string_view kDownLabel = "d";
inline constexpr std::string_view kStepLabel = "s";

/// States are the poset elements. Transitions: w -p-> w for p in V(w);
/// w -tau-> w' and w -c-> w' for comparable pairs with equal / different
/// valuation (self pairs included); w -d-> w' whenever w' ≼ w.
Lts encode_concrete(const PosetModel& p);

/// Connected components of comparability restricted to equal valuations.
Partition components_same_valuation(const PosetModel& p);

/// Renders a valuation as an abstract-encoding label, e.g. "{blue,red}".
std::string valuation_label(const AtomSet& atoms);

struct AbstractEncoding {
    Lts lts;             // state i is class i of `components`
    Partition components;
};

/// States are the classes of components_same_valuation. Transitions: each class
/// self-loops on its valuation label; [w] -s-> [w'] for comparable pairs and
/// [w] -d-> [w'] whenever w' ≼ w.
AbstractEncoding encode_abstract(const PosetModel& p);

/// Largest (divergence-blind) branching bisimulation, by signature refinement.
Partition branching_partition(const Lts& l);

/// Largest strong bisimulation, by signature refinement.
Partition strong_partition(const Lts& l);

/// One refinement round of the weak ±-bisimulation fixpoint, with a
/// characteristic η-formula for every class.
struct WeakPmRound {
    Partition partition;
    std::vector<Formula> characteristic;  // characteristic[c] holds exactly on class c
    /// Conjuncts added in this round, per class; each holds on its class.
    /// In round 0 these are the atom literals.
    std::vector<std::vector<Formula>> literals;
};

/// All rounds from the valuation partition to the fixpoint (last entry).
std::vector<WeakPmRound> weak_pm_refinement(const ReflexiveKripkeModel& m);

Partition weak_pm_partition(const ReflexiveKripkeModel& m);
Partition weak_pm_partition(const PosetModel& p);

/// Class c becomes state c, named after its least member; [s] -a-> [t] iff
/// some members are related.
/// With trim_self_tau, tau self-loops are left out.
/// Throws ArgumentError when the partition size differs from the state count.
Lts quotient_lts(const Lts& l, const Partition& part, bool trim_self_tau = false);

}  // namespace polymin
