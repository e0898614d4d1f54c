#include "polymin/partition.hpp"

#include <algorithm>
#include <map>

#include "polymin/error.hpp"

namespace polymin {

Partition::Partition(const std::vector<std::size_t>& block_of) : class_of_(block_of.size()) {
    std::map<std::size_t, std::size_t> renumber;
    for (std::size_t i = 0; i < block_of.size(); ++i) {
        const auto [it, fresh] = renumber.emplace(block_of[i], members_.size());
        if (fresh) members_.emplace_back();
        class_of_[i] = it->second;
        members_[it->second].push_back(i);
    }
}

Partition Partition::identity(std::size_t n) {
    std::vector<std::size_t> blocks(n);
    for (std::size_t i = 0; i < n; ++i) blocks[i] = i;
    return Partition(blocks);
}

Partition Partition::single(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

bool Partition::refines(const Partition& coarser) const {
    if (coarser.size() != size()) return false;
    for (const auto& cls : members_)
        for (std::size_t m : cls)
            if (coarser.class_of(m) != coarser.class_of(cls.front())) return false;
    return true;
}

Partition Partition::pull_back(const std::vector<std::size_t>& element_to_state) const {
    std::vector<std::size_t> blocks;
    blocks.reserve(element_to_state.size());
    for (std::size_t s : element_to_state) {
        if (s >= size()) throw ArgumentError("pull_back: state index out of range");
        blocks.push_back(class_of_[s]);
    }
    return Partition(blocks);
}

std::vector<std::string> class_names(const Partition& p, const std::vector<std::string>& element_names) {
    std::vector<std::string> out;
    for (const auto& cls : p.classes()) {
        std::string best = element_names.at(cls.front());
        for (std::size_t m : cls) best = std::min(best, element_names.at(m));
        out.push_back(std::move(best));
    }
    return out;
}

std::string describe(const Partition& p, const std::vector<std::string>& element_names) {
    std::string out;
    for (const auto& cls : p.classes()) {
        if (!out.empty()) out += ' ';
        out += '{';
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (i != 0) out += ", ";
            out += element_names.at(cls[i]);
        }
        out += '}';
    }
    return out;
}

}  // namespace polymin
