#include "sturmalg/algebra.hpp"

#include <algorithm>

namespace sturmalg {

AlgebraContext AlgebraContext::free_algebra(int max_degree) {
    if (max_degree < 1) throw std::domain_error("max_degree must be positive");
    AlgebraContext ctx;
    ctx.free_ = true;
    ctx.max_degree_ = max_degree;
    return ctx;
}

AlgebraContext AlgebraContext::quotient(WordSpec spec, int max_degree) {
    if (max_degree < 1) throw std::domain_error("max_degree must be positive");
    AlgebraContext ctx;
    ctx.free_ = false;
    ctx.spec_ = std::move(spec);
    ctx.max_degree_ = max_degree;
    ctx.cache_ = std::make_shared<FactorCache>();
    return ctx;
}

const WordSpec& AlgebraContext::spec() const {
    if (free_) throw std::logic_error("spec() on the free algebra");
    return *spec_;
}

bool AlgebraContext::admits(const FiniteWord& u) const {
    if (free_ || u.empty()) return true;
    return factor_set(static_cast<int>(u.size())).count(u) > 0;
}

Int AlgebraContext::factor_count(int len) const {
    if (len < 0) throw std::domain_error("negative factor length");
    if (len == 0) return 1;
    if (free_) return Int(1) << len;
    return Int(factor_set(len).size());
}

const std::set<FiniteWord>& AlgebraContext::factor_set(int len) const {
    if (free_) throw std::logic_error("factor_set() on the free algebra");
    std::lock_guard<std::mutex> guard(cache_->lock);
    auto it = cache_->by_length.find(len);
    if (it == cache_->by_length.end())
        it = cache_->by_length.emplace(len, factors(*spec_, len).members).first;
    return it->second;
}

std::string AlgebraContext::render() const { return free_ ? "free" : spec_->render(); }

Element Element::basis(const AlgebraContext& ctx, const BasisWord& w, Rat coeff) {
    Element e;
    if (coeff == 0) return e;
    if (!w.is_gen() && !ctx.admits(w.tail_word())) return e;
    e.terms_.emplace_back(w, std::move(coeff));
    return e;
}

void Element::add_term(const BasisWord& w, const Rat& coeff) {
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const BasisWord& k) { return t.first < k; });
    if (it != terms_.end() && it->first == w) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term(w, coeff));
    }
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element Element::operator-() const { return scaled(Rat(-1)); }

Element Element::scaled(const Rat& c) const {
    Element out;
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [w, k] : terms_) out.terms_.emplace_back(w, k * c);
    return out;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        s += rat_str(c) + "*" + w.str();
        first = false;
    }
    return s;
}

Element mul(const AlgebraContext& ctx, const Element& x, const Element& y) {
    Element out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            FiniteWord w;
            if (bx.is_gen() && by.is_gen()) {
                // a*a = a^2, empty tail
            } else if (bx.is_gen()) {
                w = by.tail_word().appended(0);
            } else if (by.is_gen()) {
                w = bx.tail_word().appended(1);
            } else {
                continue; // product of two tails carries two a^2 subwords
            }
            const BasisWord prod = BasisWord::tail(w);
            if (prod.degree() > ctx.max_degree()) throw DegreeCapError(bx, by, ctx.max_degree());
            if (!ctx.admits(prod.tail_word())) continue;
            out.add_term(prod, cx * cy);
        }
    }
    return out;
}

Monomial Monomial::leaf(int var) {
    if (var < 1) throw std::domain_error("variable indices start at 1");
    auto node = std::make_shared<Node>();
    node->var = var;
    return Monomial(std::move(node), {var});
}

Monomial Monomial::prod(const Monomial& a, const Monomial& b) {
    std::vector<int> vars;
    vars.reserve(a.vars_.size() + b.vars_.size());
    std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
               std::back_inserter(vars));
    for (std::size_t i = 1; i < vars.size(); ++i)
        if (vars[i] == vars[i - 1])
            throw std::domain_error("monomial variables must be distinct");
    auto node = std::make_shared<Node>();
    node->l = a.root_;
    node->r = b.root_;
    return Monomial(std::move(node), std::move(vars));
}

int Monomial::var() const {
    if (!is_leaf()) throw std::logic_error("var() on an internal node");
    return root_->var;
}

Monomial Monomial::left() const {
    if (is_leaf()) throw std::logic_error("left() on a leaf");
    const Node* n = root_->l.get();
    std::vector<int> vars;
    // rebuild the sorted variable list of the subtree
    auto collect = [](const Node* node, std::vector<int>& out, auto&& self) -> void {
        if (node->leaf()) {
            out.push_back(node->var);
            return;
        }
        self(node->l.get(), out, self);
        self(node->r.get(), out, self);
    };
    collect(n, vars, collect);
    std::sort(vars.begin(), vars.end());
    return Monomial(root_->l, std::move(vars));
}

Monomial Monomial::right() const {
    if (is_leaf()) throw std::logic_error("right() on a leaf");
    std::vector<int> vars;
    auto collect = [](const Monomial::Node* node, std::vector<int>& out, auto&& self) -> void {
        if (node->leaf()) {
            out.push_back(node->var);
            return;
        }
        self(node->l.get(), out, self);
        self(node->r.get(), out, self);
    };
    collect(root_->r.get(), vars, collect);
    std::sort(vars.begin(), vars.end());
    return Monomial(root_->r, std::move(vars));
}

std::string Monomial::str() const {
    auto rec = [](const Node* n, auto&& self) -> std::string {
        if (n->leaf()) return "x" + std::to_string(n->var);
        return "(" + self(n->l.get(), self) + "*" + self(n->r.get(), self) + ")";
    };
    return rec(root_.get(), rec);
}

std::optional<CombForm> comb_normal_form(const Monomial& m) {
    if (m.arity() < 2) return std::nullopt;
    std::vector<std::pair<int, int>> outer_first;
    const auto* cur = m.root_.get();
    CombForm form;
    while (true) {
        const auto* l = cur->l.get();
        const auto* r = cur->r.get();
        if (l->leaf() && r->leaf()) {
            form.base_left = l->var;
            form.base_right = r->var;
            break;
        }
        if (l->leaf()) {
            outer_first.emplace_back(0, l->var);
            cur = r;
        } else if (r->leaf()) {
            outer_first.emplace_back(1, r->var);
            cur = l;
        } else {
            return std::nullopt; // two compound factors: identically zero on A
        }
    }
    form.spine.assign(outer_first.rbegin(), outer_first.rend());
    return form;
}

Element evaluate(const AlgebraContext& ctx, const Monomial& m,
                 const std::map<int, Element>& subst) {
    for (int v : m.variables())
        if (!subst.count(v))
            throw std::invalid_argument("substitution missing variable x" + std::to_string(v));
    auto rec = [&ctx, &subst](const auto* n, auto&& self) -> Element {
        if (n->leaf()) return subst.at(n->var);
        return mul(ctx, self(n->l.get(), self), self(n->r.get(), self));
    };
    return rec(m.root_.get(), rec);
}

Int graded_dimension(const AlgebraContext& ctx, int n) {
    if (n < 1) throw std::domain_error("degree must be positive");
    if (n == 1) return 1;
    return ctx.factor_count(n - 2);
}

} // namespace sturmalg
