#include "polymin/bisim.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "polymin/checker.hpp"
#include "polymin/error.hpp"

namespace polymin {

namespace {

Bitset comparable(const PosetModel& p, std::size_t w) { return p.up_set(w) | p.down_set(w); }

}  // namespace

Lts encode_concrete(const PosetModel& p) {
    Lts lts(p.names());
    for (std::size_t w = 0; w < p.size(); ++w) {
        for (const std::string& atom : p.valuation(w)) lts.add_transition(w, atom, w);
        for (std::size_t v : comparable(p, w).members())
            lts.add_transition(w, p.valuation(w) == p.valuation(v) ? Lts::kTau : kChangeLabel, v);
        for (std::size_t v : p.down_set(w).members()) lts.add_transition(w, kDownLabel, v);
    }
    return lts;
}

Partition components_same_valuation(const PosetModel& p) {
    const std::size_t n = p.size();
    std::vector<std::size_t> block(n, n);
    std::size_t next = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (block[root] != n) continue;
        block[root] = next;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t w = stack.back();
            stack.pop_back();
            for (std::size_t v : comparable(p, w).members()) {
                if (block[v] == n && p.valuation(v) == p.valuation(w)) {
                    block[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return Partition(block);
}

std::string valuation_label(const AtomSet& atoms) {
    std::string out = "{";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i != 0) out += ',';
        out += atoms[i];
    }
    return out + "}";
}

AbstractEncoding encode_abstract(const PosetModel& p) {
    Partition comp = components_same_valuation(p);
    Lts lts(class_names(comp, p.names()));
    for (std::size_t c = 0; c < comp.class_count(); ++c)
        lts.add_transition(c, valuation_label(p.valuation(comp.members(c).front())), c);
    for (std::size_t w = 0; w < p.size(); ++w) {
        const std::size_t cw = comp.class_of(w);
        for (std::size_t v : comparable(p, w).members()) lts.add_transition(cw, kStepLabel, comp.class_of(v));
        for (std::size_t v : p.down_set(w).members()) lts.add_transition(cw, kDownLabel, comp.class_of(v));
    }
    return {std::move(lts), std::move(comp)};
}

namespace {

using Signature = std::vector<std::pair<std::size_t, std::size_t>>;

Partition refine_by_signatures(const Lts& l, bool branching) {
    const std::size_t n = l.state_count();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(n);
    for (const Transition& t : l.transitions()) out[t.source].emplace_back(t.label, t.target);
    const auto tau = l.tau();

    std::vector<std::size_t> block(n, 0);
    std::size_t blocks = n == 0 ? 0 : 1;
    std::vector<char> seen(n, 0);
    while (true) {
        std::map<std::pair<std::size_t, Signature>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            Signature sig;
            std::vector<std::size_t> reach{s};
            seen[s] = 1;
            // Breadth-first over inert tau steps (tau moves that stay in the block).
            for (std::size_t head = 0; head < reach.size(); ++head) {
                for (const auto& [label, target] : out[reach[head]]) {
                    const bool inert = branching && tau && label == *tau && block[target] == block[s];
                    if (!inert) {
                        sig.emplace_back(label, block[target]);
                    } else if (!seen[target]) {
                        seen[target] = 1;
                        reach.push_back(target);
                    }
                }
            }
            for (std::size_t r : reach) seen[r] = 0;
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            next[s] = ids.emplace(std::make_pair(block[s], std::move(sig)), ids.size()).first->second;
        }
        if (ids.size() == blocks) break;
        blocks = ids.size();
        block = std::move(next);
    }
    return Partition(block);
}

}  // namespace

Partition branching_partition(const Lts& l) { return refine_by_signatures(l, true); }

Partition strong_partition(const Lts& l) { return refine_by_signatures(l, false); }

namespace {

Bitset members_bitset(const Partition& p, std::size_t cls) {
    Bitset out(p.size());
    for (std::size_t m : p.members(cls)) out.set(m);
    return out;
}

Formula conjunction(const std::vector<Formula>& parts) {
    if (parts.empty()) return Formula::top();
    Formula out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::conj(out, parts[i]);
    return out;
}

}  // namespace

std::vector<WeakPmRound> weak_pm_refinement(const ReflexiveKripkeModel& m) {
    const std::size_t n = m.size();
    std::vector<WeakPmRound> rounds;

    {
        std::map<AtomSet, std::size_t> by_valuation;
        std::vector<std::size_t> block(n);
        for (std::size_t w = 0; w < n; ++w) block[w] = by_valuation.emplace(m.valuation(w), by_valuation.size()).first->second;
        WeakPmRound first{Partition(block), {}, {}};
        for (std::size_t c = 0; c < first.partition.class_count(); ++c) {
            const AtomSet& val = m.valuation(first.partition.members(c).front());
            std::vector<Formula> lits;
            for (const std::string& atom : m.atoms()) {
                Formula a = Formula::atom(atom);
                lits.push_back(std::binary_search(val.begin(), val.end(), atom) ? a : Formula::negate(a));
            }
            first.characteristic.push_back(conjunction(lits));
            first.literals.push_back(std::move(lits));
        }
        rounds.push_back(std::move(first));
    }

    while (true) {
        const WeakPmRound& cur = rounds.back();
        const Partition& part = cur.partition;
        const std::size_t k = part.class_count();
        std::vector<Bitset> cls(k);
        for (std::size_t c = 0; c < k; ++c) cls[c] = members_bitset(part, c);

        // sig[w] lists (U, D): from w a ±-path leads through class(w) ∪ U into D.
        std::vector<Signature> sig(n);
        for (std::size_t c = 0; c < k; ++c) {
            std::set<std::size_t> adjacent;
            for (std::size_t x : part.members(c))
                for (std::size_t v : m.neighbours(x).members()) adjacent.insert(part.class_of(v));
            for (std::size_t u : adjacent) {
                const Bitset inside = cls[c] | cls[u];
                for (std::size_t d = 0; d < k; ++d) {
                    Bitset last(n);
                    for (std::size_t x : cls[d].members()) last |= m.successors(x);
                    last &= inside;
                    if (last.none()) continue;
                    const Bitset reach = reach_within(m, inside, last);
                    for (std::size_t w : part.members(c))
                        if ((m.successors(w) & reach).any()) sig[w].emplace_back(u, d);
                }
            }
        }

        std::map<std::pair<std::size_t, Signature>, std::size_t> ids;
        std::vector<std::size_t> block(n);
        for (std::size_t w = 0; w < n; ++w)
            block[w] = ids.emplace(std::make_pair(part.class_of(w), sig[w]), ids.size()).first->second;
        if (ids.size() == k) break;

        WeakPmRound next{Partition(block), {}, {}};
        const std::size_t k2 = next.partition.class_count();
        next.characteristic.resize(k2);
        next.literals.resize(k2);
        std::vector<std::vector<std::size_t>> children(k);
        for (std::size_t c2 = 0; c2 < k2; ++c2) children[part.class_of(next.partition.members(c2).front())].push_back(c2);

        for (std::size_t c = 0; c < k; ++c) {
            if (children[c].size() == 1) {
                next.characteristic[children[c].front()] = cur.characteristic[c];
                continue;
            }
            // The (U, D) requirements on which the subclasses of c disagree.
            std::set<std::pair<std::size_t, std::size_t>> all, common;
            bool first = true;
            for (std::size_t c2 : children[c]) {
                const Signature& s = sig[next.partition.members(c2).front()];
                all.insert(s.begin(), s.end());
                if (first) {
                    common.insert(s.begin(), s.end());
                    first = false;
                } else {
                    std::set<std::pair<std::size_t, std::size_t>> keep;
                    for (const auto& e : s)
                        if (common.contains(e)) keep.insert(e);
                    common = std::move(keep);
                }
            }
            for (const auto& [u, d] : all) {
                if (common.contains({u, d})) continue;
                const Formula& chi_c = cur.characteristic[c];
                const Formula through = u == c ? chi_c : Formula::disj(chi_c, cur.characteristic[u]);
                const Formula test = Formula::eta(through, cur.characteristic[d]);
                const Formula negated = Formula::negate(test);
                for (std::size_t c2 : children[c]) {
                    const Signature& s = sig[next.partition.members(c2).front()];
                    const bool has = std::binary_search(s.begin(), s.end(), std::make_pair(u, d));
                    next.literals[c2].push_back(has ? test : negated);
                }
            }
            for (std::size_t c2 : children[c]) {
                std::vector<Formula> parts{cur.characteristic[c]};
                parts.insert(parts.end(), next.literals[c2].begin(), next.literals[c2].end());
                next.characteristic[c2] = conjunction(parts);
            }
        }
        rounds.push_back(std::move(next));
    }
    return rounds;
}

Partition weak_pm_partition(const ReflexiveKripkeModel& m) { return weak_pm_refinement(m).back().partition; }

Partition weak_pm_partition(const PosetModel& p) { return weak_pm_partition(ReflexiveKripkeModel::from_poset(p)); }

Lts quotient_lts(const Lts& l, const Partition& part, bool trim_self_tau) {
    if (part.size() != l.state_count())
        throw ArgumentError("quotient_lts: partition covers " + std::to_string(part.size()) + " states, LTS has " +
                            std::to_string(l.state_count()));
    Lts q(class_names(part, l.states()));
    const auto tau = l.tau();
    for (const Transition& t : l.transitions()) {
        const std::size_t s = part.class_of(t.source), d = part.class_of(t.target);
        if (trim_self_tau && tau && t.label == *tau && s == d) continue;
        q.add_transition(s, l.labels()[t.label], d);
    }
    return q;
}

}  // namespace polymin
