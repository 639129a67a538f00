#include "pcalg/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pcalg {

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

bool is_permutation(const Perm& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)]) return false;
        seen[static_cast<size_t>(v - 1)] = true;
    }
    return true;
}

std::vector<Perm> all_permutations(int n) {
    Perm p = identity_perm(n);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

MultiIndex unit_index(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("unit_index: position out of range");
    MultiIndex e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(j - 1)] = 1;
    return e;
}

MultiIndex add_index(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
    MultiIndex out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

MultiIndex sub_index(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
    MultiIndex out(a);
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

int index_sum(const MultiIndex& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool all_nonnegative(const MultiIndex& a) {
    return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
}

namespace {

void compositions_rec(int slots, int remaining, MultiIndex& prefix, std::vector<MultiIndex>& out) {
    if (slots == 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = remaining; first >= 0; --first) {
        prefix.push_back(first);
        compositions_rec(slots - 1, remaining - first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> compositions(int n, int r) {
    if (n < 1) throw std::invalid_argument("compositions: n must be positive");
    if (r < 0) return {};
    std::vector<MultiIndex> out;
    MultiIndex prefix;
    prefix.reserve(static_cast<size_t>(n));
    compositions_rec(n, r, prefix, out);
    return out;
}

std::vector<MultiIndex> c_set(const Perm& sigma, int k, int i) {
    const int n = static_cast<int>(sigma.size());
    if (!is_permutation(sigma)) throw std::invalid_argument("c_set: not a permutation");
    if (k < 1) throw std::invalid_argument("c_set: k must be >= 1");
    if (i < 1 || i > n) throw std::invalid_argument("c_set: i out of range");
    std::vector<MultiIndex> out;
    for (const auto& c : compositions(n, k)) {
        bool ok = true;
        for (int pos = 1; pos < i; ++pos) {
            if (c[static_cast<size_t>(sigma[static_cast<size_t>(pos - 1)] - 1)] != 0) {
                ok = false;
                break;
            }
        }
        if (ok && c[static_cast<size_t>(sigma[static_cast<size_t>(i - 1)] - 1)] >= 1) out.push_back(c);
    }
    return out;
}

std::vector<MultiIndex> d_set(int t, int i, int n) {
    if (n < 1) throw std::invalid_argument("d_set: n must be positive");
    if (i < 1 || i > n) throw std::invalid_argument("d_set: i out of range");
    if (t < 0) return {};
    std::vector<MultiIndex> out;
    for (const auto& d : compositions(n, t)) {
        bool ok = true;
        for (int pos = 0; pos < i - 1; ++pos) {
            if (d[static_cast<size_t>(pos)] != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(d);
    }
    return out;
}

std::pair<int, MultiIndex> d_split(const MultiIndex& d, int i) {
    const int n = static_cast<int>(d.size());
    if (i < 1 || i > n) throw std::invalid_argument("d_split: i out of range");
    MultiIndex rest(d);
    int s = rest[static_cast<size_t>(i - 1)];
    rest[static_cast<size_t>(i - 1)] = 0;
    return {s, rest};
}

MultiIndex d_join(int s, int i, const MultiIndex& dprime) {
    const int n = static_cast<int>(dprime.size());
    if (i < 1 || i > n) throw std::invalid_argument("d_join: i out of range");
    if (dprime[static_cast<size_t>(i - 1)] != 0)
        throw std::invalid_argument("d_join: d' must vanish at position i");
    MultiIndex d(dprime);
    d[static_cast<size_t>(i - 1)] = s;
    return d;
}

Int multinomial_mu(const Perm& sigma, const MultiIndex& c, int i) {
    const int n = static_cast<int>(sigma.size());
    if (!is_permutation(sigma)) throw std::invalid_argument("multinomial_mu: not a permutation");
    if (c.size() != sigma.size()) throw std::invalid_argument("multinomial_mu: length mismatch");
    if (i < 1 || i > n) throw std::invalid_argument("multinomial_mu: i out of range");
    if (!all_nonnegative(c)) throw std::invalid_argument("multinomial_mu: negative entry");
    Int result = factorial(index_sum(c));
    for (int pos = i; pos <= n; ++pos)
        result /= factorial(c[static_cast<size_t>(sigma[static_cast<size_t>(pos - 1)] - 1)]);
    return result;
}

} // namespace pcalg
