#pragma once

// Labelled transition systems with set semantics and Aldebaran (.aut) I/O.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polymin {

struct Transition {
    std::size_t source;
    std::size_t label;
    std::size_t target;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

class Lts {
public:
    static constexpr std::string_view kTau = "tau";

    Lts() = default;
    explicit Lts(std::vector<std::string> states) : states_(std::move(states)) {}

    std::size_t add_state(std::string name);
    /// Interns the label; duplicate transitions are ignored.
    void add_transition(std::size_t source, std::string_view label, std::size_t target);

    std::size_t state_count() const noexcept { return states_.size(); }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Sorted by (source, label id, target).
    const std::set<Transition>& transitions() const noexcept { return transitions_; }
    std::size_t transition_count() const noexcept { return transitions_.size(); }

    std::optional<std::size_t> label_id(std::string_view label) const;
    std::optional<std::size_t> tau() const { return label_id(kTau); }

    bool has(std::size_t source, std::string_view label, std::size_t target) const;
    std::size_t count_label(std::string_view label) const;

private:
    std::vector<std::string> states_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> label_index_;
    std::set<Transition> transitions_;
};

/// `des (0,<transitions>,<states>)` followed by `(src,"label",dst)` lines,
/// sorted by source, label text and target.
std::string to_aut(const Lts& lts);

/// Accepts quoted or unquoted labels. States are named by their number.
/// Throws ParseError with the line number on malformed input.
Lts from_aut(std::string_view text);

/// Same state count and the same set of (source, label name, target) triples.
bool same_transitions(const Lts& a, const Lts& b);

}  // namespace polymin
