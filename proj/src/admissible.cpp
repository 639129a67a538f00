#include "pcalg/admissible.hpp"

#include "pcalg/exact_gauss.hpp"

#include <stdexcept>

namespace pcalg {

AdmissiblePoly::AdmissiblePoly(int n, int r, Kind kind) : n_(n), r_(r), kind_(kind) {
    if (n < 1) throw std::invalid_argument("AdmissiblePoly: n must be positive");
    if (r < 0) throw std::invalid_argument("AdmissiblePoly: negative order");
}

void AdmissiblePoly::insert(GenKey key, const Rat& c) {
    if (static_cast<int>(key.sigma.size()) != n_ || !is_permutation(key.sigma))
        throw std::invalid_argument("AdmissiblePoly: bad permutation");
    if (static_cast<int>(key.b.size()) != n_ || !all_nonnegative(key.b) || index_sum(key.b) != r_)
        throw std::invalid_argument("AdmissiblePoly: b not in B_r");
    if (c == 0) return;
    auto [it, fresh] = coeffs_.emplace(std::move(key), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

void AdmissiblePoly::add_coeff(const Perm& sigma, const MultiIndex& b, const Rat& c) {
    if (kind_ != Kind::one) throw std::invalid_argument("AdmissiblePoly: missing mark position for type two");
    insert(GenKey{sigma, b, 0}, c);
}

void AdmissiblePoly::add_coeff(const Perm& sigma, const MultiIndex& b, int i, const Rat& c) {
    if (kind_ != Kind::two) throw std::invalid_argument("AdmissiblePoly: mark position given for type one");
    if (i < 1 || i > n_) throw std::invalid_argument("AdmissiblePoly: mark position out of range");
    insert(GenKey{sigma, b, i}, c);
}

Rat AdmissiblePoly::coeff(const Perm& sigma, const MultiIndex& b, int i) const {
    auto it = coeffs_.find(GenKey{sigma, b, i});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

bool operator==(const AdmissiblePoly& a, const AdmissiblePoly& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.kind_ == b.kind_ && a.coeffs_ == b.coeffs_;
}

AdmissiblePoly multilinear(int n, const std::map<Perm, Rat>& coeffs) {
    AdmissiblePoly f(n, 0, Kind::one);
    MultiIndex zero(static_cast<size_t>(n), 0);
    for (const auto& [sigma, c] : coeffs) f.add_coeff(sigma, zero, c);
    return f;
}

PCPoly expand_generator(int n, const Perm& sigma, const MultiIndex& b) {
    return word_power(n, sigma, b);
}

PCPoly expand_generator_marked(int n, const Perm& sigma, const MultiIndex& b, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("expand_generator_marked: position out of range");
    return word_power_marked(n, sigma, b, sigma[static_cast<size_t>(i - 1)]);
}

PCPoly expand(const AdmissiblePoly& f) {
    PCPoly out(f.vars());
    for (const auto& [key, c] : f.coeffs()) {
        PCPoly gen = f.kind() == Kind::one
                         ? expand_generator(f.vars(), key.sigma, key.b)
                         : expand_generator_marked(f.vars(), key.sigma, key.b, key.i);
        out += c * gen;
    }
    return out;
}

std::vector<GenKey> generator_keys(int n, int r, Kind kind) {
    std::vector<GenKey> keys;
    for (const auto& sigma : all_permutations(n)) {
        for (const auto& b : compositions(n, r)) {
            if (kind == Kind::one) {
                keys.push_back(GenKey{sigma, b, 0});
            } else {
                for (int i = 1; i <= n; ++i) keys.push_back(GenKey{sigma, b, i});
            }
        }
    }
    return keys;
}

AdmissiblePoly p_poly(int n, const Perm& sigma, const MultiIndex& b, int i, int t) {
    if (t < 1) throw std::invalid_argument("p_poly: t must be >= 1");
    AdmissiblePoly out(n, index_sum(b) + t, Kind::one);
    for (const auto& c : c_set(sigma, t, i)) {
        Rat mu(multinomial_mu(sigma, c, i));
        out.add_coeff(sigma, add_index(b, c), mu);
    }
    return out;
}

namespace {

// Coefficient matrix of the polynomials in the alternating-monomial basis:
// one row per monomial, one column per polynomial.
RatMatrix coefficient_matrix(const std::vector<PCPoly>& polys) {
    std::map<AltMonomial, size_t, AltMonomialLess> row_of;
    for (const auto& f : polys)
        for (const auto& [m, c] : f.terms()) row_of.emplace(m, 0);
    size_t idx = 0;
    for (auto& [m, row] : row_of) row = idx++;
    RatMatrix mat(row_of.size(), std::vector<Rat>(polys.size(), Rat(0)));
    for (size_t col = 0; col < polys.size(); ++col)
        for (const auto& [m, c] : polys[col].terms()) mat[row_of.at(m)][col] = c;
    return mat;
}

} // namespace

int independence_rank(const std::vector<PCPoly>& polys) {
    if (polys.empty()) return 0;
    const int n = polys.front().vars();
    for (const auto& f : polys)
        if (f.vars() != n) throw std::invalid_argument("independence_rank: variable count mismatch");
    return rank(coefficient_matrix(polys));
}

std::optional<AdmissiblePoly> as_admissible(const PCPoly& f, int n, int r, Kind kind) {
    if (f.vars() != n) throw std::invalid_argument("as_admissible: variable count mismatch");
    auto keys = generator_keys(n, r, kind);
    std::vector<PCPoly> gens;
    gens.reserve(keys.size());
    for (const auto& key : keys)
        gens.push_back(kind == Kind::one ? expand_generator(n, key.sigma, key.b)
                                         : expand_generator_marked(n, key.sigma, key.b, key.i));

    // Rows span the monomials of the generators and of f; a monomial of f
    // outside every generator forces inconsistency via a zero row.
    std::map<AltMonomial, size_t, AltMonomialLess> row_of;
    for (const auto& g : gens)
        for (const auto& [m, c] : g.terms()) row_of.emplace(m, 0);
    for (const auto& [m, c] : f.terms()) row_of.emplace(m, 0);
    size_t idx = 0;
    for (auto& [m, row] : row_of) row = idx++;

    RatMatrix mat(row_of.size(), std::vector<Rat>(gens.size(), Rat(0)));
    for (size_t col = 0; col < gens.size(); ++col)
        for (const auto& [m, c] : gens[col].terms()) mat[row_of.at(m)][col] = c;
    std::vector<Rat> rhs(row_of.size(), Rat(0));
    for (const auto& [m, c] : f.terms()) rhs[row_of.at(m)] = c;

    auto sol = solve_exact(std::move(mat), std::move(rhs));
    if (!sol) return std::nullopt;
    AdmissiblePoly out(n, r, kind);
    for (size_t col = 0; col < keys.size(); ++col) {
        if ((*sol)[col] == 0) continue;
        if (kind == Kind::one)
            out.add_coeff(keys[col].sigma, keys[col].b, (*sol)[col]);
        else
            out.add_coeff(keys[col].sigma, keys[col].b, keys[col].i, (*sol)[col]);
    }
    return out;
}

} // namespace pcalg
