#include "polymin/minimize.hpp"

#include <algorithm>

#include <json.hpp>

#include "polymin/checker.hpp"
#include "polymin/error.hpp"

namespace polymin {

MinimalModel minimal_model(const PosetModel& p) {
    Partition part = branching_partition(encode_concrete(p));
    std::vector<std::pair<std::size_t, std::size_t>> relation;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b : p.up_set(a).members()) relation.emplace_back(part.class_of(a), part.class_of(b));
    std::sort(relation.begin(), relation.end());
    relation.erase(std::unique(relation.begin(), relation.end()), relation.end());
    std::vector<AtomSet> valuation;
    for (const auto& cls : part.classes()) valuation.push_back(p.valuation(cls.front()));
    ReflexiveKripkeModel kripke(class_names(part, p.names()), relation, std::move(valuation), p.atoms());
    return {std::move(kripke), std::move(part), p.names()};
}

ClassRelation rmin_via_quotient_d(const PosetModel& p) {
    const Lts concrete = encode_concrete(p);
    const Lts quotient = quotient_lts(concrete, branching_partition(concrete));
    ClassRelation out;
    const auto d = quotient.label_id(kDownLabel);
    if (!d) return out;
    for (const Transition& t : quotient.transitions())
        if (t.label == *d) out.emplace(t.target, t.source);
    return out;
}

ClassRelation relation_of(const ReflexiveKripkeModel& m) {
    const auto pairs = m.relation_pairs();
    return {pairs.begin(), pairs.end()};
}

std::vector<bool> map_back(const MinimalModel& mm, const Bitset& class_result) {
    if (class_result.size() != mm.partition.class_count())
        throw LookupError("class set has " + std::to_string(class_result.size()) + " entries, model has " +
                          std::to_string(mm.partition.class_count()) + " classes");
    std::vector<bool> out(mm.partition.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = class_result.test(mm.partition.class_of(i));
    return out;
}

std::optional<Formula> distinguishing_formula(const ReflexiveKripkeModel& m, std::size_t a, std::size_t b) {
    if (a >= m.size() || b >= m.size()) throw LookupError("element index out of range");
    const auto rounds = weak_pm_refinement(m);
    for (const WeakPmRound& round : rounds) {
        const Partition& part = round.partition;
        if (part.same_class(a, b)) continue;
        // Everything earlier agreed on a and b, so one of this round's conjuncts
        // for a's class must fail at b.
        for (const Formula& lit : round.literals[part.class_of(a)])
            if (!sat(m, lit).test(b)) return lit;
        return round.characteristic[part.class_of(a)];
    }
    return std::nullopt;
}

std::optional<Formula> distinguishing_formula(const PosetModel& p, std::string_view a, std::string_view b) {
    const std::size_t ia = p.index_of(a), ib = p.index_of(b);
    return distinguishing_formula(ReflexiveKripkeModel::from_poset(p), ia, ib);
}

namespace {

nlohmann::ordered_json class_entries(const MinimalModel& mm) {
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < mm.partition.class_count(); ++c) {
        nlohmann::ordered_json entry;
        entry["id"] = c;
        entry["name"] = mm.kripke.name(c);
        std::vector<std::string> members;
        for (std::size_t i : mm.partition.members(c)) members.push_back(mm.source_names[i]);
        entry["members"] = members;
        entry["atoms"] = mm.kripke.valuation(c);
        classes.push_back(std::move(entry));
    }
    return classes;
}

}  // namespace

std::string minimal_model_to_json(const MinimalModel& mm) {
    nlohmann::ordered_json doc;
    doc["classes"] = class_entries(mm);
    nlohmann::ordered_json rel = nlohmann::ordered_json::array();
    for (const auto& [a, b] : mm.kripke.relation_pairs()) rel.push_back({a, b});
    doc["relation"] = std::move(rel);
    return doc.dump(2) + "\n";
}

std::string classes_to_json(const std::string& model_path, const MinimalModel& mm) {
    nlohmann::ordered_json doc;
    doc["model"] = model_path;
    doc["classes"] = class_entries(mm);
    doc["cell_class"] = mm.partition.class_map();
    return doc.dump(2) + "\n";
}

}  // namespace polymin
