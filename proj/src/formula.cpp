#include "polymin/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <unordered_map>

#include "polymin/error.hpp"

namespace polymin {

Formula Formula::make(Op op, std::string name, std::vector<Formula> children) {
    return Formula(std::make_shared<const Node>(Node{op, std::move(name), std::move(children)}));
}

Formula Formula::top() { return make(Op::Top, {}, {}); }
Formula Formula::atom(std::string name) { return make(Op::Atom, std::move(name), {}); }
Formula Formula::negate(Formula f) { return make(Op::Not, {}, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::And, {}, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::Or, {}, {std::move(a), std::move(b)}); }
Formula Formula::eta(Formula a, Formula b) { return make(Op::Eta, {}, {std::move(a), std::move(b)}); }
Formula Formula::gamma(Formula a, Formula b) { return make(Op::Gamma, {}, {std::move(a), std::move(b)}); }
Formula Formula::diamond(Formula f) { return make(Op::Diamond, {}, {std::move(f)}); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.id() == b.id()) return true;
    if (a.op() != b.op() || a.arity() != b.arity()) return false;
    if (a.op() == Op::Atom) return a.atom_name() == b.atom_name();
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (!(a.node_->children[i] == b.node_->children[i])) return false;
    return true;
}

namespace {

template <typename Fn>
auto memo_fold(const Formula& root, Fn&& combine) {
    using Result = decltype(combine(root, std::vector<std::size_t>{}));
    std::unordered_map<const void*, Result> memo;
    auto rec = [&](auto&& self, const Formula& f) -> Result {
        if (auto it = memo.find(f.id()); it != memo.end()) return it->second;
        std::vector<Result> parts;
        for (std::size_t i = 0; i < f.arity(); ++i) parts.push_back(self(self, i == 0 ? f.left() : f.right()));
        Result r = combine(f, parts);
        memo.emplace(f.id(), r);
        return r;
    };
    return rec(rec, root);
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
    return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

}  // namespace

std::size_t Formula::tree_size() const {
    return memo_fold(*this, [](const Formula&, const std::vector<std::size_t>& parts) {
        std::size_t total = 1;
        for (std::size_t p : parts) total = saturating_add(total, p);
        return total;
    });
}

std::size_t Formula::depth() const {
    return memo_fold(*this, [](const Formula&, const std::vector<std::size_t>& parts) {
        std::size_t d = 0;
        for (std::size_t p : parts) d = std::max(d, p + 1);
        return d;
    });
}

namespace {

bool is_keyword(const std::string& s) {
    static const std::set<std::string> keywords{"true", "ap", "eta", "gamma", "diamond", "let", "save", "load", "model"};
    return keywords.contains(s);
}

bool is_plain_identifier(const std::string& s) {
    if (s.empty() || is_keyword(s)) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

void print(const Formula& f, bool quote, std::string& out) {
    switch (f.op()) {
    case Op::Top: out += "true"; return;
    case Op::Atom:
        if (!quote && is_plain_identifier(f.atom_name())) {
            out += f.atom_name();
        } else {
            out += "ap(\"";
            for (char c : f.atom_name()) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            out += "\")";
        }
        return;
    case Op::Not: out += '!'; print(f.left(), quote, out); return;
    case Op::And:
    case Op::Or:
        out += '(';
        print(f.left(), quote, out);
        out += f.op() == Op::And ? " & " : " | ";
        print(f.right(), quote, out);
        out += ')';
        return;
    case Op::Eta:
    case Op::Gamma:
        out += f.op() == Op::Eta ? "eta(" : "gamma(";
        print(f.left(), quote, out);
        out += ", ";
        print(f.right(), quote, out);
        out += ')';
        return;
    case Op::Diamond:
        out += "diamond(";
        print(f.left(), quote, out);
        out += ')';
        return;
    }
}

}  // namespace

std::string to_string(const Formula& f, bool quote_atoms) {
    std::string out;
    print(f, quote_atoms, out);
    return out;
}

bool is_eta_pure(const Formula& f) {
    return memo_fold(f, [](const Formula& g, const std::vector<std::size_t>& parts) -> std::size_t {
               if (g.op() == Op::Gamma || g.op() == Op::Diamond) return 0;
               return std::all_of(parts.begin(), parts.end(), [](std::size_t p) { return p != 0; }) ? 1 : 0;
           }) != 0;
}

std::vector<std::string> atoms_of(const Formula& f) {
    std::set<std::string> found;
    std::unordered_map<const void*, bool> seen;
    auto rec = [&](auto&& self, const Formula& g) -> void {
        if (!seen.emplace(g.id(), true).second) return;
        if (g.op() == Op::Atom) found.insert(g.atom_name());
        if (g.arity() >= 1) self(self, g.left());
        if (g.arity() == 2) self(self, g.right());
    };
    rec(rec, f);
    return {found.begin(), found.end()};
}

Formula encode_eta_to_gamma(const Formula& f) {
    if (!is_eta_pure(f)) throw ArgumentError("encode_eta_to_gamma: formula is not eta-pure: " + to_string(f));
    std::unordered_map<const void*, Formula> memo;
    auto rec = [&](auto&& self, const Formula& g) -> Formula {
        if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
        Formula out = g;
        switch (g.op()) {
        case Op::Top:
        case Op::Atom: break;
        case Op::Not: out = Formula::negate(self(self, g.left())); break;
        case Op::And: out = Formula::conj(self(self, g.left()), self(self, g.right())); break;
        case Op::Or: out = Formula::disj(self(self, g.left()), self(self, g.right())); break;
        case Op::Eta: {
            Formula through = self(self, g.left());
            out = Formula::conj(through, Formula::gamma(through, self(self, g.right())));
            break;
        }
        case Op::Gamma:
        case Op::Diamond: break;  // excluded above
        }
        memo.emplace(g.id(), out);
        return out;
    };
    return rec(rec, f);
}

Formula random_formula(std::uint64_t seed, int max_depth, const std::vector<std::string>& atoms) {
    if (atoms.empty()) throw ArgumentError("random_formula: empty atom list");
    if (max_depth < 0) throw ArgumentError("random_formula: negative depth");
    SplitMix64 rng(seed);
    auto leaf = [&]() {
        const std::uint64_t pick = rng.below(atoms.size() + 1);
        return pick == atoms.size() ? Formula::top() : Formula::atom(atoms[pick]);
    };
    auto rec = [&](auto&& self, int depth) -> Formula {
        if (depth == 0) return leaf();
        switch (rng.below(6)) {
        case 0: return leaf();
        case 1: return Formula::negate(self(self, depth - 1));
        case 2: {
            Formula a = self(self, depth - 1);
            return Formula::conj(std::move(a), self(self, depth - 1));
        }
        case 3: {
            Formula a = self(self, depth - 1);
            return Formula::disj(std::move(a), self(self, depth - 1));
        }
        default: {
            Formula a = self(self, depth - 1);
            return Formula::eta(std::move(a), self(self, depth - 1));
        }
        }
    };
    return rec(rec, max_depth);
}

}  // namespace polymin
