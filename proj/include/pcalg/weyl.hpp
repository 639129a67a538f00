#pragma once

#include "pcalg/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace pcalg {

/// Element of the first Weyl algebra A_1(Q): generators v, w with
/// [v, w] = vw - wv = 1, stored in normal order as a finite map
/// (v-degree, w-degree) -> nonzero rational.
class WeylElement {
public:
    using TermMap = std::map<std::pair<int, int>, Rat>;

    WeylElement() = default; // zero
    static WeylElement unit() { return monomial(0, 0, Rat(1)); }
    static WeylElement v() { return monomial(1, 0, Rat(1)); }
    static WeylElement w() { return monomial(0, 1, Rat(1)); }
    static WeylElement monomial(int vdeg, int wdeg, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(int vdeg, int wdeg) const;
    void add_term(int vdeg, int wdeg, const Rat& c);

    WeylElement& operator+=(const WeylElement& rhs);
    WeylElement& operator-=(const WeylElement& rhs);
    friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator*(const Rat& c, const WeylElement& a);
    WeylElement operator-() const { return Rat(-1) * *this; }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

/// ad_v(y) = v y - y v. In normal order this acts as d/dw:
/// v^k w^l -> l v^k w^{l-1}.
WeylElement weyl_ad_v(const WeylElement& y);

/// Termwise integration in w, iterated k times: the returned x satisfies
/// ad_v^k(x) = y exactly. solve_inner(1, k) = w^k / k!.
WeylElement weyl_solve_inner(const WeylElement& y, int k);

/// Rendering like "1/2*v^2*w - w"; "0" for zero.
std::string render(const WeylElement& a);

/// Backend facade used by evaluate() and the solver.
class WeylAlgebra {
public:
    using Element = WeylElement;
    static constexpr const char* name = "weyl";

    Element zero() const { return WeylElement(); }
    Element unit() const { return WeylElement::unit(); }
    Element v() const { return WeylElement::v(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element scale(const Rat& c, const Element& a) const { return c * a; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element solve_inner(const Element& y, int k) const { return weyl_solve_inner(y, k); }
};

} // namespace pcalg
