#include "polymin/checker.hpp"

#include <unordered_map>

#include <json.hpp>

#include "polymin/error.hpp"

namespace polymin {

Bitset reach_within(const ReflexiveKripkeModel& m, const Bitset& inside, const Bitset& targets) {
    Bitset visited = targets & inside;
    std::vector<std::size_t> queue = visited.members();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Bitset fresh = m.neighbours(queue[head]) & inside;
        fresh.subtract(visited);
        for (std::size_t v : fresh.members()) queue.push_back(v);
        visited |= fresh;
    }
    return visited;
}

namespace {

Bitset image_under_predecessors(const ReflexiveKripkeModel& m, const Bitset& set) {
    Bitset out(m.size());
    for (std::size_t u : set.members()) out |= m.predecessors(u);
    return out;
}

Bitset image_under_successors(const ReflexiveKripkeModel& m, const Bitset& set) {
    Bitset out(m.size());
    for (std::size_t t : set.members()) out |= m.successors(t);
    return out;
}

// Elements of A with an R-predecessor in T: the possible penultimate points.
Bitset last_step_sources(const ReflexiveKripkeModel& m, const Bitset& a, const Bitset& t) {
    return image_under_successors(m, t) & a;
}

template <typename EtaRule>
Bitset evaluate(const ReflexiveKripkeModel& m, const Formula& root, const CheckOptions& options, EtaRule&& eta_rule) {
    std::unordered_map<const void*, Bitset> memo;
    auto rec = [&](auto&& self, const Formula& f) -> Bitset {
        if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
        Bitset out;
        switch (f.op()) {
        case Op::Top: out = Bitset::full(m.size()); break;
        case Op::Atom:
            if (options.strict_atoms && !m.declares(f.atom_name()))
                throw LookupError("atom '" + f.atom_name() + "' is not declared by the model");
            out = m.atom_extension(f.atom_name());
            break;
        case Op::Not: out = ~self(self, f.left()); break;
        case Op::And: out = self(self, f.left()) & self(self, f.right()); break;
        case Op::Or: out = self(self, f.left()) | self(self, f.right()); break;
        case Op::Eta: out = eta_rule(self(self, f.left()), self(self, f.right())); break;
        case Op::Gamma: {
            const Bitset a = self(self, f.left());
            const Bitset reach = reach_within(m, a, last_step_sources(m, a, self(self, f.right())));
            out = image_under_predecessors(m, reach);
            break;
        }
        case Op::Diamond: out = image_under_predecessors(m, self(self, f.left())); break;
        }
        memo.emplace(f.id(), out);
        return out;
    };
    return rec(rec, root);
}

}  // namespace

Bitset sat(const ReflexiveKripkeModel& m, const Formula& f, const CheckOptions& options) {
    return evaluate(m, f, options, [&](const Bitset& a, const Bitset& t) {
        return reach_within(m, a, last_step_sources(m, a, t));
    });
}

Bitset sat_eta_path_oracle(const ReflexiveKripkeModel& m, const Formula& f, std::size_t bound) {
    if (bound < 2) throw ArgumentError("sat_eta_path_oracle: bound must be at least 2");
    const std::size_t n = m.size();
    return evaluate(m, f, CheckOptions{}, [&](const Bitset& a, const Bitset& t) {
        Bitset out(n);
        for (std::size_t w : a.members()) {
            // layer = possible values of π(k); π(0) = w, π(1) ∈ R(w) ∩ A.
            Bitset layer = m.successors(w) & a;
            for (std::size_t k = 1; k < bound && layer.any(); ++k) {
                bool closes = false;
                for (std::size_t v : layer.members()) {
                    if ((m.predecessors(v) & t).any()) {
                        closes = true;
                        break;
                    }
                }
                if (closes) {
                    out.set(w);
                    break;
                }
                Bitset next(n);
                for (std::size_t v : layer.members()) next |= m.neighbours(v);
                layer = next & a;
            }
        }
        return out;
    });
}

ScriptResults check_script(const ReflexiveKripkeModel& m, const Script& s, const CheckOptions& options) {
    ScriptResults out;
    for (const SaveDirective& save : s.saves) out.emplace_back(save.name, sat(m, save.formula, options));
    return out;
}

std::vector<std::string> member_names(const ReflexiveKripkeModel& m, const Bitset& set) {
    std::vector<std::string> out;
    for (std::size_t i : set.members()) out.push_back(m.name(i));
    return out;
}

std::vector<bool> to_bools(const Bitset& set) {
    std::vector<bool> out(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) out[i] = set.test(i);
    return out;
}

std::string results_to_json(const std::string& model_path,
                            const std::vector<std::pair<std::string, std::vector<bool>>>& results) {
    nlohmann::ordered_json doc;
    doc["model"] = model_path;
    doc["results"] = nlohmann::ordered_json::object();
    for (const auto& [name, bits] : results) doc["results"][name] = bits;
    return doc.dump(2) + "\n";
}

}  // namespace polymin
