#pragma once

#include "pcalg/rational.hpp"

#include <utility>
#include <vector>

namespace pcalg {

/// Multi-index over n variables. Entries are nonnegative in the composition
/// sets below; shifted contexts (b - c) may produce negative entries.
using MultiIndex = std::vector<int>;

/// Permutation of {1..n}, stored as the array of images: perm[j-1] = sigma(j).
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_permutation(const Perm& sigma);
std::vector<Perm> all_permutations(int n);

/// e_j in Z^n (1 at the jth place, j is 1-based).
MultiIndex unit_index(int n, int j);
MultiIndex add_index(const MultiIndex& a, const MultiIndex& b);
MultiIndex sub_index(const MultiIndex& a, const MultiIndex& b);
int index_sum(const MultiIndex& a);
bool all_nonnegative(const MultiIndex& a);

/// B_r: every b in N_0^n with sum(b) = r, each exactly once, in lexicographic
/// descending order. |compositions(n, r)| = C(r+n-1, n-1).
std::vector<MultiIndex> compositions(int n, int r);

/// C^sigma_{k,i}: c in N_0^n with c_{sigma(1)} = ... = c_{sigma(i-1)} = 0,
/// c_{sigma(i)} >= 1 and sum(c) = k. Same lexicographic descending order.
std::vector<MultiIndex> c_set(const Perm& sigma, int k, int i);

/// D_{t,i}: d in N_0^n with d_1 = ... = d_{i-1} = 0 and sum(d) = t.
std::vector<MultiIndex> d_set(int t, int i, int n);

/// The bijection D_{t,i} <-> disjoint union over s of D_{t-s, i+1},
/// d = s*e_i + d'. d_split peels s = d_i off; d_join reassembles.
std::pair<int, MultiIndex> d_split(const MultiIndex& d, int i);
MultiIndex d_join(int s, int i, const MultiIndex& dprime);

/// mu^sigma_{c,i} = (sum c)! / (c_{sigma(i)}! * ... * c_{sigma(n)}!).
/// Throws std::invalid_argument if c has a negative entry.
Int multinomial_mu(const Perm& sigma, const MultiIndex& c, int i);

} // namespace pcalg
