#pragma once

#include "sturmalg/word.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace sturmalg {

/// Basis element of the one-generated metabelian algebra: the generator a,
/// or a tail word a^2 u(L_a, R_a) with letter 0 = L_a and 1 = R_a.
class BasisWord {
public:
    static BasisWord gen() { return BasisWord(true, {}); }
    static BasisWord tail(FiniteWord u) { return BasisWord(false, std::move(u)); }

    bool is_gen() const { return gen_; }
    const FiniteWord& tail_word() const { return u_; }
    int degree() const { return gen_ ? 1 : static_cast<int>(u_.size()) + 2; }

    std::string str() const { return gen_ ? "a" : "a2:" + u_.str(); }

    std::strong_ordering operator<=>(const BasisWord& o) const {
        if (gen_ != o.gen_) return gen_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return u_ <=> o.u_;
    }
    bool operator==(const BasisWord& o) const = default;

private:
    BasisWord(bool gen, FiniteWord u) : gen_(gen), u_(std::move(u)) {}
    bool gen_;
    FiniteWord u_;
};

/// Raised when a product would exceed the context's degree cap.
class DegreeCapError : public std::domain_error {
public:
    DegreeCapError(const BasisWord& x, const BasisWord& y, int cap)
        : std::domain_error("product (" + x.str() + ")*(" + y.str() + ") of degree " +
                            std::to_string(x.degree() + y.degree()) +
                            " exceeds max_degree " + std::to_string(cap)) {}
};

/// The free algebra A or a quotient A_alpha. Quotients admit a tail word u
/// iff u is a factor of the underlying infinite word (the empty word
/// always). Factor sets are memoized behind an internal lock, so a context
/// may be shared by concurrent workers.
class AlgebraContext {
public:
    static AlgebraContext free_algebra(int max_degree);
    static AlgebraContext quotient(WordSpec spec, int max_degree);

    bool is_free() const { return free_; }
    const WordSpec& spec() const;
    int max_degree() const { return max_degree_; }

    bool admits(const FiniteWord& u) const;
    /// Comp(len) for quotients (Comp(0)=1), 2^len for the free algebra.
    Int factor_count(int len) const;
    const std::set<FiniteWord>& factor_set(int len) const; // quotient only, len >= 1

    std::string render() const;

private:
    AlgebraContext() = default;

    bool free_ = true;
    std::optional<WordSpec> spec_;
    int max_degree_ = 0;

    struct FactorCache {
        std::mutex lock;
        std::map<int, std::set<FiniteWord>> by_length;
    };
    std::shared_ptr<FactorCache> cache_;
};

/// Finitely supported rational combination of basis words, kept reduced:
/// no zero coefficients, no words outside the owning context.
class Element {
public:
    using Term = std::pair<BasisWord, Rat>;

    Element() = default;
    static Element basis(const AlgebraContext& ctx, const BasisWord& w, Rat coeff = Rat(1));

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    void add_term(const BasisWord& w, const Rat& coeff);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const;
    Element scaled(const Rat& c) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::vector<Term> terms_; // sorted by BasisWord
};

/// Bilinear product. Gen*Gen = a^2, Gen*Tail appends 0 (left multiplication
/// by a), Tail*Gen appends 1, Tail*Tail = 0. Results outside the quotient's
/// factor set are dropped; results over the degree cap raise DegreeCapError.
Element mul(const AlgebraContext& ctx, const Element& x, const Element& y);

struct CombForm;

/// Multilinear monomial: a planar binary tree whose leaves carry distinct
/// variable indices.
class Monomial {
public:
    static Monomial leaf(int var); // var >= 1
    static Monomial prod(const Monomial& a, const Monomial& b);

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::vector<int>& variables() const { return vars_; } // sorted

    bool is_leaf() const { return root_->leaf(); }
    int var() const;
    Monomial left() const;
    Monomial right() const;

    std::string str() const;

private:
    struct Node {
        int var = 0;
        std::shared_ptr<const Node> l, r;
        bool leaf() const { return !l; }
    };
    Monomial(std::shared_ptr<const Node> root, std::vector<int> vars)
        : root_(std::move(root)), vars_(std::move(vars)) {}

    friend std::optional<CombForm> comb_normal_form(const Monomial& m);
    friend Element evaluate(const AlgebraContext& ctx, const Monomial& m,
                            const std::map<int, Element>& subst);

    std::shared_ptr<const Node> root_;
    std::vector<int> vars_;
};

/// Comb decomposition of a monomial: a base pair of leaves and a spine of
/// one-leaf steps, listed in application order (innermost first). Side 0
/// means the leaf multiplies from the left, side 1 from the right.
struct CombForm {
    int base_left = 0;
    int base_right = 0;
    std::vector<std::pair<int, int>> spine; // (side, var)
};

std::optional<CombForm> comb_normal_form(const Monomial& m);

Element evaluate(const AlgebraContext& ctx, const Monomial& m,
                 const std::map<int, Element>& subst);

/// Dimension of the degree-n homogeneous component: 1 for n = 1, otherwise
/// 2^(n-2) in the free algebra and Comp(n-2) in a quotient.
Int graded_dimension(const AlgebraContext& ctx, int n);

} // namespace sturmalg
