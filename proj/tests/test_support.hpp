#pragma once

#include "pcalg/admissible.hpp"
#include "pcalg/pcpoly.hpp"
#include "pcalg/shift.hpp"
#include "pcalg/weyl.hpp"

#include <random>

namespace pcalg::testing {

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Small nonzero-or-zero rational with numerator in [-bound, bound].
inline Rat rand_rat(Rng& rng, int bound = 3, int max_den = 2) {
    Rat q(rand_int(rng, -bound, bound), rand_int(rng, 1, max_den));
    q.canonicalize();
    return q;
}

/// Random polynomial with at most `terms` monomials built from X's, U, V.
inline PCPoly rand_pcpoly(Rng& rng, int n, int terms = 4, int word_len = 3) {
    PCPoly f(n);
    const int count = rand_int(rng, 0, terms);
    for (int t = 0; t < count; ++t) {
        PCPoly mono = PCPoly::unit(n);
        const int len = rand_int(rng, 0, word_len);
        for (int s = 0; s < len; ++s) {
            switch (rand_int(rng, 0, 2)) {
            case 0: mono = mono * PCPoly::x(n, rand_int(rng, 1, n)); break;
            case 1: mono = mono * PCPoly::u(n); break;
            default: mono = mono * PCPoly::v(n); break;
            }
        }
        f += rand_rat(rng) * mono;
    }
    return f;
}

inline WeylElement rand_weyl(Rng& rng, int max_deg = 4, int terms = 4) {
    WeylElement a;
    const int count = rand_int(rng, 1, terms);
    for (int t = 0; t < count; ++t)
        a += WeylElement::monomial(rand_int(rng, 0, max_deg), rand_int(rng, 0, max_deg), rand_rat(rng));
    return a;
}

/// Random admissible polynomial with a handful of nonzero coefficients.
inline AdmissiblePoly rand_admissible(Rng& rng, int n, int r, Kind kind, int entries = 4) {
    AdmissiblePoly f(n, r, kind);
    auto perms = all_permutations(n);
    auto bs = compositions(n, r);
    for (int t = 0; t < entries; ++t) {
        const auto& sigma = perms[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(perms.size()) - 1))];
        const auto& b = bs[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(bs.size()) - 1))];
        Rat c = rand_rat(rng);
        if (kind == Kind::one)
            f.add_coeff(sigma, b, c);
        else
            f.add_coeff(sigma, b, rand_int(rng, 1, n), c);
    }
    return f;
}

inline AdmissiblePoly rand_nonzero_admissible(Rng& rng, int n, int r, Kind kind, int entries = 4) {
    for (;;) {
        auto f = rand_admissible(rng, n, r, kind, entries);
        if (!f.is_zero()) return f;
    }
}

/// Random finite-column shift operator: a few explicitly listed columns.
inline ShiftOp rand_shift(Rng& rng, long max_col = 6, long max_row = 8) {
    std::map<long, ShiftOp::Column> cols;
    const int count = rand_int(rng, 1, static_cast<int>(max_col));
    for (int t = 0; t < count; ++t) {
        long col = rand_int(rng, 1, static_cast<int>(max_col));
        ShiftOp::Column column;
        const int entries = rand_int(rng, 0, 3);
        for (int e = 0; e < entries; ++e) {
            Rat c = rand_rat(rng);
            if (c != 0) column[rand_int(rng, 1, static_cast<int>(max_row))] = c;
        }
        cols[col] = std::move(column);
    }
    return ShiftOp::from_columns(std::move(cols));
}

} // namespace pcalg::testing
