#pragma once

#include "pcalg/combinatorics.hpp"
#include "pcalg/rational.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pcalg {

/// One factor of an alternating monomial: either a nonempty word in the free
/// variables X_1..X_n, or a block U^u V^v with u + v > 0 (U and V commute).
struct UVBlock {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const UVBlock&, const UVBlock&) = default;
};

using XWord = std::vector<int>; // 1-based variable indices, nonempty
using Segment = std::variant<XWord, UVBlock>;

/// Alternating monomial: segments strictly alternate between XWord and
/// UVBlock. The empty sequence is the unit monomial 1. Together with 1 these
/// monomials form a linear basis of the coproduct.
using AltMonomial = std::vector<Segment>;

// Basis order: fewer segments first, then segmentwise (XWord before UVBlock,
// each compared lexicographically). Fixed so renderings and matrix layouts
// are reproducible.
int compare(const Segment& a, const Segment& b);
int compare(const AltMonomial& a, const AltMonomial& b);

struct AltMonomialLess {
    bool operator()(const AltMonomial& a, const AltMonomial& b) const { return compare(a, b) < 0; }
};

/// Element of the coproduct F<X_1..X_n> * F[U,V] in normal form: a finite
/// rational-weighted sum of alternating monomials. Zero coefficients are
/// never stored; the zero polynomial is the empty map. Values are immutable
/// in spirit: all operations return fresh polynomials.
class PCPoly {
public:
    using TermMap = std::map<AltMonomial, Rat, AltMonomialLess>;

    explicit PCPoly(int n);
    static PCPoly zero(int n) { return PCPoly(n); }
    static PCPoly unit(int n);
    static PCPoly monomial(int n, AltMonomial m, const Rat& c);
    static PCPoly x(int n, int j); // X_j
    static PCPoly u(int n);        // U
    static PCPoly v(int n);        // V

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const AltMonomial& m) const;

    void add_term(const AltMonomial& m, const Rat& c); // accumulates, drops zeros

    PCPoly& operator+=(const PCPoly& rhs);
    PCPoly& operator-=(const PCPoly& rhs);
    friend PCPoly operator+(PCPoly lhs, const PCPoly& rhs) { return lhs += rhs; }
    friend PCPoly operator-(PCPoly lhs, const PCPoly& rhs) { return lhs -= rhs; }
    friend PCPoly operator*(const PCPoly& lhs, const PCPoly& rhs);
    friend PCPoly operator*(const Rat& c, const PCPoly& f);
    PCPoly operator-() const;

    friend bool operator==(const PCPoly& a, const PCPoly& b);

private:
    int n_;
    TermMap terms_;
};

/// Rebuilds normal form from an arbitrary segment sequence: empty segments
/// are dropped, adjacent UVBlocks merge by exponent addition and adjacent
/// XWords concatenate.
AltMonomial normalize_segments(std::vector<Segment> raw);

/// Concatenation of two normal-form monomials, merging at the boundary.
AltMonomial concat_monomials(const AltMonomial& a, const AltMonomial& b);

PCPoly commutator(const PCPoly& f, const PCPoly& g);

/// [f, g]_k = [f, ..., f, g] with k copies of f; k = 0 returns g.
PCPoly ad_pow(const PCPoly& f, const PCPoly& g, int k);

/// The homomorphism fixing every X_i and V and sending U to V^k. For k = 0
/// each block U^a V^b collapses to V^b (deleted when b = 0, neighbors merged).
PCPoly pi_k(const PCPoly& f, int k);

/// X_j^b = [V, X_j]_{b_j}; the depth-0 convention gives X_j itself.
PCPoly x_power(int n, int j, const MultiIndex& b);

/// X_j^{b,j} = [U, X_j^b].
PCPoly x_power_marked(int n, int j, const MultiIndex& b);

/// (X_{w_1} ... X_{w_d})^b = product of per-variable powers.
PCPoly word_power(int n, std::span<const int> word, const MultiIndex& b);

/// Marked variant: the factor for variable `marked` is wrapped in [U, .].
/// Throws std::invalid_argument if `marked` does not occur in the word.
PCPoly word_power_marked(int n, std::span<const int> word, const MultiIndex& b, int marked);

/// Deterministic canonical text rendering, e.g. "3/2*V*X1*X2 - U^2*V*X1".
std::string render(const PCPoly& f);
std::string render(const AltMonomial& m);

} // namespace pcalg
