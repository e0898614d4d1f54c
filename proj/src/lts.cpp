#include "polymin/lts.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "polymin/error.hpp"

namespace polymin {

std::size_t Lts::add_state(std::string name) {
    states_.push_back(std::move(name));
    return states_.size() - 1;
}

void Lts::add_transition(std::size_t source, std::string_view label, std::size_t target) {
    if (source >= states_.size() || target >= states_.size())
        throw ArgumentError("transition endpoint is not a state");
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) {
        it = label_index_.emplace(std::string(label), labels_.size()).first;
        labels_.emplace_back(label);
    }
    transitions_.insert({source, it->second, target});
}

std::optional<std::size_t> Lts::label_id(std::string_view label) const {
    const auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

bool Lts::has(std::size_t source, std::string_view label, std::size_t target) const {
    const auto id = label_id(label);
    return id && transitions_.contains({source, *id, target});
}

std::size_t Lts::count_label(std::string_view label) const {
    const auto id = label_id(label);
    if (!id) return 0;
    std::size_t n = 0;
    for (const Transition& t : transitions_) n += t.label == *id;
    return n;
}

std::string to_aut(const Lts& lts) {
    // Order by label text rather than label id so that the output does not
    // depend on the order in which labels were first used.
    std::vector<std::tuple<std::size_t, std::string_view, std::size_t>> rows;
    rows.reserve(lts.transition_count());
    for (const Transition& t : lts.transitions()) rows.emplace_back(t.source, lts.labels()[t.label], t.target);
    std::sort(rows.begin(), rows.end());
    std::string out = "des (0," + std::to_string(rows.size()) + "," + std::to_string(lts.state_count()) + ")\n";
    for (const auto& [src, label, dst] : rows) {
        out += '(';
        out += std::to_string(src);
        out += ",\"";
        out += label;
        out += "\",";
        out += std::to_string(dst);
        out += ")\n";
    }
    return out;
}

namespace {

class AutLine {
public:
    AutLine(std::string_view text, std::size_t line_no) : text_(text), line_(line_no) {}

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect_word(std::string_view w) {
        skip_space();
        if (text_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
        pos_ += w.size();
    }
    std::size_t number() {
        skip_space();
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc()) fail("expected a number");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
    std::string label() {
        skip_space();
        std::string out;
        if (pos_ < text_.size() && text_[pos_] == '"') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') out += text_[pos_++];
            if (pos_ >= text_.size()) fail("unterminated label");
            ++pos_;
        } else {
            while (pos_ < text_.size() && text_[pos_] != ',') out += text_[pos_++];
            while (!out.empty() && (out.back() == ' ' || out.back() == '\t')) out.pop_back();
            if (out.empty()) fail("empty label");
        }
        return out;
    }
    void finish() {
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(".aut: " + msg, line_, pos_ + 1); }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

Lts from_aut(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    std::size_t li = 0;
    auto blank = [](std::string_view l) { return l.find_first_not_of(" \t\r") == std::string_view::npos; };
    while (li < lines.size() && blank(lines[li])) ++li;
    if (li == lines.size()) throw ParseError(".aut: missing header");

    AutLine header(lines[li], li + 1);
    header.expect_word("des");
    header.expect('(');
    const std::size_t initial = header.number();
    header.expect(',');
    const std::size_t n_trans = header.number();
    header.expect(',');
    const std::size_t n_states = header.number();
    header.expect(')');
    header.finish();
    if (n_states == 0 || initial >= n_states) header.fail("initial state out of range");

    Lts lts;
    for (std::size_t s = 0; s < n_states; ++s) lts.add_state(std::to_string(s));
    std::size_t seen = 0;
    for (++li; li < lines.size(); ++li) {
        if (blank(lines[li])) continue;
        AutLine line(lines[li], li + 1);
        line.expect('(');
        const std::size_t src = line.number();
        line.expect(',');
        const std::string label = line.label();
        line.expect(',');
        const std::size_t dst = line.number();
        line.expect(')');
        line.finish();
        if (src >= n_states || dst >= n_states) line.fail("state out of range");
        lts.add_transition(src, label, dst);
        ++seen;
    }
    if (seen != n_trans)
        throw ParseError(".aut: header announces " + std::to_string(n_trans) + " transitions, found " +
                         std::to_string(seen));
    return lts;
}

bool same_transitions(const Lts& a, const Lts& b) {
    if (a.state_count() != b.state_count()) return false;
    auto named = [](const Lts& l) {
        std::set<std::tuple<std::size_t, std::string, std::size_t>> out;
        for (const Transition& t : l.transitions()) out.emplace(t.source, l.labels()[t.label], t.target);
        return out;
    };
    return named(a) == named(b);
}

}  // namespace polymin
