#pragma once

#include "pcalg/pcpoly.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace pcalg {

enum class Kind { one, two };

/// Generator index: (sigma, b) for type one, (sigma, b, i) for type two.
/// i is the 1-based position in the word X_{sigma(1)}..X_{sigma(n)} whose
/// factor carries the [U, .] mark (the marked variable is sigma(i)); i = 0
/// for type one.
struct GenKey {
    Perm sigma;
    MultiIndex b;
    int i = 0;
    friend bool operator<(const GenKey& a, const GenKey& b) {
        return std::tie(a.sigma, a.b, a.i) < std::tie(b.sigma, b.b, b.i);
    }
    friend bool operator==(const GenKey& a, const GenKey& b) {
        return std::tie(a.sigma, a.b, a.i) == std::tie(b.sigma, b.b, b.i);
    }
};

/// Admissible polynomial of order r in n variables, stored as its sparse
/// coefficient map over the generator basis. Only nonzero coefficients are
/// kept, so emptiness is a sound zero test (the generators are linearly
/// independent).
class AdmissiblePoly {
public:
    AdmissiblePoly(int n, int r, Kind kind);

    int vars() const { return n_; }
    int order() const { return r_; }
    Kind kind() const { return kind_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<GenKey, Rat>& coeffs() const { return coeffs_; }

    /// Accumulates c into the coefficient at (sigma, b) resp. (sigma, b, i).
    /// Validates the key: sigma a permutation of {1..n}, b in B_r, and the
    /// mark position in {1..n} for type two (absent for type one).
    void add_coeff(const Perm& sigma, const MultiIndex& b, const Rat& c);
    void add_coeff(const Perm& sigma, const MultiIndex& b, int i, const Rat& c);

    Rat coeff(const Perm& sigma, const MultiIndex& b, int i = 0) const;

    friend bool operator==(const AdmissiblePoly& a, const AdmissiblePoly& b);

private:
    void insert(GenKey key, const Rat& c);
    int n_;
    int r_;
    Kind kind_;
    std::map<GenKey, Rat> coeffs_;
};

/// Multilinear polynomial sum_sigma lambda_sigma X_{sigma(1)}..X_{sigma(n)}
/// as an order-0 type-one admissible polynomial.
AdmissiblePoly multilinear(int n, const std::map<Perm, Rat>& coeffs);

/// (X_{sigma(1)} ... X_{sigma(n)})^b and the marked variant ^{b, sigma(i)}.
PCPoly expand_generator(int n, const Perm& sigma, const MultiIndex& b);
PCPoly expand_generator_marked(int n, const Perm& sigma, const MultiIndex& b, int i);

/// Expands the defining sum into coproduct normal form.
PCPoly expand(const AdmissiblePoly& f);

/// All generator keys for (n, r, kind) in canonical order:
/// n! * |B_r| of them for type one, n! * |B_r| * n for type two.
std::vector<GenKey> generator_keys(int n, int r, Kind kind);

/// P^sigma_{b,i,t} = sum over c in C^sigma_{t,i} of mu^sigma_{c,i}
/// (X_{sigma(1)}..X_{sigma(n)})^{b+c}, a type-one polynomial of order
/// sum(b) + t.
AdmissiblePoly p_poly(int n, const Perm& sigma, const MultiIndex& b, int i, int t);

/// Rank over Q of the coefficient matrix of the given polynomials in the
/// alternating-monomial basis.
int independence_rank(const std::vector<PCPoly>& polys);

/// Inverse of expand: the unique coefficient map when f lies in the span of
/// the (n, r, kind) generators, std::nullopt otherwise. Solves an exact
/// linear system against the generator expansion matrix.
std::optional<AdmissiblePoly> as_admissible(const PCPoly& f, int n, int r, Kind kind);

} // namespace pcalg
