#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace polymin {

/// Partition of {0, ..., n-1}. Classes are numbered in order of their least
/// member, so two partitions with the same blocks compare equal.
class Partition {
public:
    Partition() = default;
    /// `block_of[i]` is any label for the block of i; labels are renumbered.
    explicit Partition(const std::vector<std::size_t>& block_of);

    static Partition identity(std::size_t n);
    static Partition single(std::size_t n);

    std::size_t size() const noexcept { return class_of_.size(); }
    std::size_t class_count() const noexcept { return members_.size(); }
    std::size_t class_of(std::size_t element) const { return class_of_.at(element); }
    const std::vector<std::size_t>& class_map() const noexcept { return class_of_; }
    const std::vector<std::size_t>& members(std::size_t cls) const { return members_.at(cls); }
    const std::vector<std::vector<std::size_t>>& classes() const noexcept { return members_; }

    bool same_class(std::size_t a, std::size_t b) const { return class_of_.at(a) == class_of_.at(b); }

    /// Every class of *this lies inside a class of `coarser`.
    bool refines(const Partition& coarser) const;

    /// Partition of the underlying elements obtained by composing `element_to_state`
    /// with this partition of states.
    Partition pull_back(const std::vector<std::size_t>& element_to_state) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.class_of_ == b.class_of_; }

private:
    std::vector<std::size_t> class_of_;
    std::vector<std::vector<std::size_t>> members_;
};

/// Lexicographically least member name of each class.
std::vector<std::string> class_names(const Partition& p, const std::vector<std::string>& element_names);

/// "{A, B} {C}" style rendering, for diagnostics.
std::string describe(const Partition& p, const std::vector<std::string>& element_names);

}  // namespace polymin
