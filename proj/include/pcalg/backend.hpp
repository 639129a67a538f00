#pragma once

#include "pcalg/pcpoly.hpp"
#include "pcalg/rational.hpp"

#include <concepts>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcalg {

/// Contract for a unital algebra over Q with a distinguished element v whose
/// inner derivation admits iterated preimages: solve_inner(y, k) returns x
/// with [v, ..., v, x] = y (k brackets; k = 0 is the identity). Equality may
/// be probe-based (shift backend), in which case every law is per probed
/// column.
template <class A>
concept EvaluationAlgebra = requires(const A& alg, const typename A::Element& x,
                                     const typename A::Element& y, const Rat& c, int k) {
    { alg.zero() } -> std::same_as<typename A::Element>;
    { alg.unit() } -> std::same_as<typename A::Element>;
    { alg.v() } -> std::same_as<typename A::Element>;
    { alg.add(x, y) } -> std::same_as<typename A::Element>;
    { alg.sub(x, y) } -> std::same_as<typename A::Element>;
    { alg.mul(x, y) } -> std::same_as<typename A::Element>;
    { alg.scale(c, x) } -> std::same_as<typename A::Element>;
    { alg.equal(x, y) } -> std::convertible_to<bool>;
    { alg.solve_inner(y, k) } -> std::same_as<typename A::Element>;
};

/// u in F[v] as a coefficient list: u = sum coeffs[i] * v^i. Empty list is 0.
using VPoly = std::vector<Rat>;

inline VPoly vpoly_one() { return {Rat(1)}; }

inline VPoly vpoly_v_power(int k) {
    VPoly u(static_cast<size_t>(k) + 1, Rat(0));
    u.back() = Rat(1);
    return u;
}

template <EvaluationAlgebra A>
typename A::Element eval_vpoly(const A& alg, const VPoly& u) {
    auto acc = alg.zero();
    for (size_t i = u.size(); i-- > 0;) {
        acc = alg.mul(alg.v(), acc);
        acc = alg.add(acc, alg.scale(u[i], alg.unit()));
    }
    return acc;
}

/// Witness for a target lying in the image of a polynomial: the assignment
/// x_1..x_n plus the U-value u, which stays in F[v] by construction.
template <EvaluationAlgebra A>
struct Witness {
    std::vector<typename A::Element> xs;
    VPoly u;
};

/// The evaluation homomorphism sending X_i to xs[i-1], U to u(v), V to v.
template <EvaluationAlgebra A>
typename A::Element evaluate(const A& alg, const PCPoly& f,
                             const std::vector<typename A::Element>& xs, const VPoly& u) {
    if (static_cast<int>(xs.size()) != f.vars())
        throw std::invalid_argument("evaluate: witness arity does not match polynomial");
    const auto u_elem = eval_vpoly(alg, u);
    const auto v_elem = alg.v();
    auto power = [&](const typename A::Element& base, int e) {
        auto acc = alg.unit();
        for (int i = 0; i < e; ++i) acc = alg.mul(acc, base);
        return acc;
    };
    auto result = alg.zero();
    for (const auto& [m, c] : f.terms()) {
        auto prod = alg.unit();
        for (const auto& seg : m) {
            if (std::holds_alternative<XWord>(seg)) {
                for (int j : std::get<XWord>(seg)) prod = alg.mul(prod, xs[static_cast<size_t>(j - 1)]);
            } else {
                const auto& blk = std::get<UVBlock>(seg);
                prod = alg.mul(prod, power(u_elem, blk.u));
                prod = alg.mul(prod, power(v_elem, blk.v));
            }
        }
        result = alg.add(result, alg.scale(c, prod));
    }
    return result;
}

template <EvaluationAlgebra A>
typename A::Element evaluate(const A& alg, const PCPoly& f, const Witness<A>& wit) {
    return evaluate(alg, f, wit.xs, wit.u);
}

/// Direct product of a nonempty family of algebras of the same type;
/// everything acts componentwise.
template <EvaluationAlgebra A>
class DirectProduct {
public:
    using Element = std::vector<typename A::Element>;
    static constexpr const char* name = "product";

    explicit DirectProduct(std::vector<A> components) : comps_(std::move(components)) {
        if (comps_.empty()) throw std::invalid_argument("DirectProduct: empty component list");
    }
    size_t size() const { return comps_.size(); }
    const A& component(size_t i) const { return comps_.at(i); }

    Element zero() const { return map([](const A& a) { return a.zero(); }); }
    Element unit() const { return map([](const A& a) { return a.unit(); }); }
    Element v() const { return map([](const A& a) { return a.v(); }); }
    Element add(const Element& x, const Element& y) const { return zip(x, y, [](const A& a, auto& p, auto& q) { return a.add(p, q); }); }
    Element sub(const Element& x, const Element& y) const { return zip(x, y, [](const A& a, auto& p, auto& q) { return a.sub(p, q); }); }
    Element mul(const Element& x, const Element& y) const { return zip(x, y, [](const A& a, auto& p, auto& q) { return a.mul(p, q); }); }
    Element scale(const Rat& c, const Element& x) const {
        Element out;
        out.reserve(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i].scale(c, x.at(i)));
        return out;
    }
    bool equal(const Element& x, const Element& y) const {
        for (size_t i = 0; i < comps_.size(); ++i)
            if (!comps_[i].equal(x.at(i), y.at(i))) return false;
        return true;
    }
    Element solve_inner(const Element& y, int k) const {
        Element out;
        out.reserve(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i].solve_inner(y.at(i), k));
        return out;
    }

private:
    template <class F>
    Element map(F f) const {
        Element out;
        out.reserve(comps_.size());
        for (const auto& a : comps_) out.push_back(f(a));
        return out;
    }
    template <class F>
    Element zip(const Element& x, const Element& y, F f) const {
        if (x.size() != comps_.size() || y.size() != comps_.size())
            throw std::invalid_argument("DirectProduct: component count mismatch");
        Element out;
        out.reserve(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) out.push_back(f(comps_[i], x[i], y[i]));
        return out;
    }
    std::vector<A> comps_;
};

/// Direct product of two algebras of possibly different types.
template <EvaluationAlgebra A, EvaluationAlgebra B>
class DirectPair {
public:
    using Element = std::pair<typename A::Element, typename B::Element>;
    static constexpr const char* name = "pair";

    DirectPair(A a, B b) : a_(std::move(a)), b_(std::move(b)) {}
    const A& first() const { return a_; }
    const B& second() const { return b_; }

    Element zero() const { return {a_.zero(), b_.zero()}; }
    Element unit() const { return {a_.unit(), b_.unit()}; }
    Element v() const { return {a_.v(), b_.v()}; }
    Element add(const Element& x, const Element& y) const { return {a_.add(x.first, y.first), b_.add(x.second, y.second)}; }
    Element sub(const Element& x, const Element& y) const { return {a_.sub(x.first, y.first), b_.sub(x.second, y.second)}; }
    Element mul(const Element& x, const Element& y) const { return {a_.mul(x.first, y.first), b_.mul(x.second, y.second)}; }
    Element scale(const Rat& c, const Element& x) const { return {a_.scale(c, x.first), b_.scale(c, x.second)}; }
    bool equal(const Element& x, const Element& y) const {
        return a_.equal(x.first, y.first) && b_.equal(x.second, y.second);
    }
    Element solve_inner(const Element& y, int k) const {
        return {a_.solve_inner(y.first, k), b_.solve_inner(y.second, k)};
    }

private:
    A a_;
    B b_;
};

} // namespace pcalg
