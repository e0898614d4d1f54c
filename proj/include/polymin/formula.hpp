#pragma once

// Formula AST for the η/γ reachability logics and the proximity modality.
// Formulas are immutable; subterms are shared, so a formula is a DAG.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace polymin {

enum class Op { Top, Atom, Not, And, Or, Eta, Gamma, Diamond };

class Formula {
public:
    /// The formula `true`.
    Formula() : Formula(top()) {}

    static Formula top();
    static Formula atom(std::string name);
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula eta(Formula reach_through, Formula target);
    static Formula gamma(Formula reach_through, Formula target);
    static Formula diamond(Formula f);

    Op op() const noexcept { return node_->op; }
    const std::string& atom_name() const noexcept { return node_->name; }
    /// First operand (the only one for Not / Diamond).
    const Formula& left() const noexcept { return node_->children[0]; }
    const Formula& right() const noexcept { return node_->children[1]; }
    std::size_t arity() const noexcept { return node_->children.size(); }

    /// Identity of the underlying node; equal ids imply equal formulas.
    const void* id() const noexcept { return node_.get(); }

    /// Size of the formula as a tree (shared subterms counted per use), saturating.
    std::size_t tree_size() const;
    std::size_t depth() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Op op;
        std::string name;
        std::vector<Formula> children;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Op op, std::string name, std::vector<Formula> children);

    std::shared_ptr<const Node> node_;
};

/// Concrete syntax accepted by parse_formula; fully parenthesised binaries.
/// With quote_atoms every atom is written ap("..."), which scripts also accept.
std::string to_string(const Formula& f, bool quote_atoms = false);

/// No Gamma and no Diamond nodes.
bool is_eta_pure(const Formula& f);

/// Atom names occurring in f, sorted and unique.
std::vector<std::string> atoms_of(const Formula& f);

/// η(a, b) ↦ E(a) ∧ γ(E(a), E(b)), homomorphic elsewhere.
/// Throws ArgumentError when f is not η-pure.
Formula encode_eta_to_gamma(const Formula& f);

/// Deterministic random η-pure formula of depth at most max_depth.
/// Throws ArgumentError for an empty atom list or negative depth.
Formula random_formula(std::uint64_t seed, int max_depth, const std::vector<std::string>& atoms);

/// splitmix64 stream; fixed output across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform-ish draw in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace polymin
