#include "pcalg/solver.hpp"

namespace pcalg {

namespace {

// sigma in S_n <-> (tau in S_{n-1}, j) with sigma(j) = n and tau the
// order-preserving restriction to the remaining positions.
std::pair<Perm, int> drop_last_variable(const Perm& sigma) {
    const int n = static_cast<int>(sigma.size());
    Perm tau;
    tau.reserve(static_cast<size_t>(n - 1));
    int j = 0;
    for (int pos = 1; pos <= n; ++pos) {
        int image = sigma[static_cast<size_t>(pos - 1)];
        if (image == n)
            j = pos;
        else
            tau.push_back(image);
    }
    return {tau, j};
}

Perm insert_last_variable(const Perm& tau, int j, int n) {
    Perm sigma;
    sigma.reserve(static_cast<size_t>(n));
    for (int pos = 1; pos <= n; ++pos) {
        if (pos == j)
            sigma.push_back(n);
        else
            sigma.push_back(tau[static_cast<size_t>(pos < j ? pos - 1 : pos - 2)]);
    }
    return sigma;
}

} // namespace

SplitCoeffs split_last_variable(const AdmissiblePoly& f) {
    if (f.kind() != Kind::one) throw std::invalid_argument("split_last_variable: type-one input required");
    if (f.vars() < 2) throw std::invalid_argument("split_last_variable: needs at least two variables");
    SplitCoeffs out;
    for (const auto& [key, c] : f.coeffs()) {
        auto [tau, j] = drop_last_variable(key.sigma);
        out.emplace(SplitKey{tau, key.b, j}, c);
    }
    return out;
}

AdmissiblePoly unsplit_last_variable(const SplitCoeffs& lam, int n, int r) {
    AdmissiblePoly f(n, r, Kind::one);
    for (const auto& [key, c] : lam) {
        const auto& [tau, b, j] = key;
        f.add_coeff(insert_last_variable(tau, j, n), b, c);
    }
    return f;
}

int min_last_exponent(const SplitCoeffs& lam) {
    if (lam.empty()) throw std::invalid_argument("min_last_exponent: empty coefficient map");
    int k = -1;
    for (const auto& [key, c] : lam) {
        int bn = std::get<1>(key).back();
        if (k < 0 || bn < k) k = bn;
    }
    return k;
}

SplitCoeffs restrict_last_exponent(const SplitCoeffs& lam, int k) {
    SplitCoeffs out;
    for (const auto& [key, c] : lam)
        if (std::get<1>(key).back() == k) out.emplace(key, c);
    return out;
}

PCPoly substitute_xn(const SplitCoeffs& lam_k, int n, int r, int k) {
    if (lam_k.empty()) throw std::invalid_argument("substitute_xn: empty coefficient set");
    PCPoly g(n - 1);
    for (const auto& [key, c] : lam_k) {
        const auto& [tau, b, j] = key;
        if (index_sum(b) != r || b.back() != k)
            throw std::invalid_argument("substitute_xn: coefficient outside B_r^k");
        // b' restricted to the first n-1 entries; X_n does not occur in g.
        MultiIndex b_head(b.begin(), b.end() - 1);
        std::span<const int> word(tau);
        PCPoly prefix = word_power(n - 1, word.subspan(0, static_cast<size_t>(j - 1)), b_head);
        PCPoly suffix = word_power(n - 1, word.subspan(static_cast<size_t>(j - 1)), b_head);
        g += c * (prefix * PCPoly::u(n - 1) * suffix);
    }
    return g;
}

AdmissiblePoly pi0_of_g(const SplitCoeffs& lam_k, int n, int r, int k) {
    AdmissiblePoly out(n - 1, r - k, Kind::one);
    for (const auto& [key, c] : lam_k) {
        const auto& [tau, b, j] = key;
        MultiIndex b_head(b.begin(), b.end() - 1);
        out.add_coeff(tau, b_head, c);
    }
    return out;
}

AdmissiblePoly type_two_from_g(const SplitCoeffs& lam_k, int n, int r, int k) {
    // Precondition: pi_0(g) = 0, i.e. the full sums over j vanish.
    if (!pi0_of_g(lam_k, n, r, k).is_zero())
        throw std::invalid_argument("type_two_from_g: pi_0(g) is nonzero");
    AdmissiblePoly out(n - 1, r - k, Kind::two);
    std::map<std::pair<Perm, MultiIndex>, std::vector<Rat>> by_word;
    for (const auto& [key, c] : lam_k) {
        const auto& [tau, b, j] = key;
        MultiIndex b_head(b.begin(), b.end() - 1);
        auto& sums = by_word[{tau, b_head}];
        if (sums.empty()) sums.assign(static_cast<size_t>(n), Rat(0));
        sums[static_cast<size_t>(j - 1)] = c;
    }
    for (const auto& [word, lams] : by_word) {
        Rat partial(0);
        for (int i = 1; i <= n - 1; ++i) {
            partial += lams[static_cast<size_t>(i - 1)];
            out.add_coeff(word.first, word.second, i, partial);
        }
    }
    return out;
}

AdmissiblePoly pi_k_coefficients(const AdmissiblePoly& f, int k) {
    if (f.kind() != Kind::two) throw std::invalid_argument("pi_k_coefficients: type-two input required");
    if (k < 1) throw std::invalid_argument("pi_k_coefficients: k must be >= 1");
    AdmissiblePoly out(f.vars(), f.order() + k, Kind::one);
    for (const auto& [key, lambda] : f.coeffs()) {
        for (const auto& c : c_set(key.sigma, k, key.i)) {
            Rat term = lambda * Rat(multinomial_mu(key.sigma, c, key.i));
            out.add_coeff(key.sigma, add_index(key.b, c), term);
        }
    }
    return out;
}

} // namespace pcalg
