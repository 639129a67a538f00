#pragma once

#include "pcalg/admissible.hpp"
#include "pcalg/backend.hpp"

#include <map>
#include <stdexcept>
#include <tuple>
#include <variant>
#include <vector>

namespace pcalg {

/// Key of the last-variable split of a type-one polynomial in n variables:
/// (tau in S_{n-1}, b in B_r of length n, insertion position j in {1..n}).
/// The word is X_{tau(1)} .. X_{tau(j-1)} X_n X_{tau(j)} .. X_{tau(n-1)}.
using SplitKey = std::tuple<Perm, MultiIndex, int>;
using SplitCoeffs = std::map<SplitKey, Rat>;

/// Re-indexes a type-one polynomial over S_n as coefficients over
/// S_{n-1} x {1..n}: sigma corresponds to (tau, j) with sigma(j) = n.
/// Bijective; expanding back reproduces f exactly. Throws for n = 1.
SplitCoeffs split_last_variable(const AdmissiblePoly& f);

/// Inverse re-indexing (used for round-trip checks).
AdmissiblePoly unsplit_last_variable(const SplitCoeffs& lam, int n, int r);

/// The least b_n with a nonzero split coefficient.
int min_last_exponent(const SplitCoeffs& lam);

/// Restriction of the split coefficients to { b : b_n = k }.
SplitCoeffs restrict_last_exponent(const SplitCoeffs& lam, int k);

/// g = sum lam'_{tau,b',j} (X_{tau(1)}..X_{tau(j-1)})^{b'} U
///     (X_{tau(j)}..X_{tau(n-1)})^{b'} over b' with b'_n = k.
/// Every monomial of g has U-degree exactly one.
PCPoly substitute_xn(const SplitCoeffs& lam_k, int n, int r, int k);

/// pi_0(g) as a type-one polynomial in n-1 variables of order r-k:
/// coefficient at (tau, b) is sum_j lam'_{tau, b + k e_n, j}.
AdmissiblePoly pi0_of_g(const SplitCoeffs& lam_k, int n, int r, int k);

/// When pi_0(g) = 0, g equals the type-two polynomial in n-1 variables of
/// order r-k whose coefficient at (tau, b, i) is the partial sum
/// sum_{j<=i} lam'_{tau, b + k e_n, j}. Throws std::invalid_argument when
/// the precondition (all full sums zero) fails.
AdmissiblePoly type_two_from_g(const SplitCoeffs& lam_k, int n, int r, int k);

/// h_k = sum over (sigma, b, i) of lambda_{sigma,b,i} P^sigma_{b,i,k},
/// a type-one polynomial of order r + k (summed as coefficient maps).
AdmissiblePoly pi_k_coefficients(const AdmissiblePoly& f, int k);

/// New last component of a lifted witness: x_n = z_k * u(v) with
/// z_k = solve_inner(1, k).
template <EvaluationAlgebra A>
typename A::Element lift_witness_xvy(const A& alg, const VPoly& u, int k) {
    auto z_k = alg.solve_inner(alg.unit(), k);
    return alg.mul(z_k, eval_vpoly(alg, u));
}

// ---- reduction trace ----

struct BaseCaseStep {
    Kind kind;
    int r;
    Rat lambda;
};
struct SplitLastVarStep {
    int k;
    SplitCoeffs lambda_prime;
};
struct TypeOneBranchStep {}; // pi_0(g) nonzero
struct TypeTwoBranchStep {
    std::map<GenKey, Rat> mu; // partial-sum coefficients
};
struct PiKSearchStep {
    int k; // first k with h_k nonzero
};

using TraceStep =
    std::variant<BaseCaseStep, SplitLastVarStep, TypeOneBranchStep, TypeTwoBranchStep, PiKSearchStep>;

struct ReductionTrace {
    std::vector<TraceStep> steps;
};

/// Signalled when the pi_k search exceeds its cap max(n, 8). The structure
/// of the linear system behind the construction guarantees some h_k != 0
/// with k <= n for nonzero input, so exhaustion means a bug, not bad input.
class InternalSoundnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <EvaluationAlgebra A>
struct SolveResult {
    Witness<A> witness;
    ReductionTrace trace;
};

namespace detail {

template <EvaluationAlgebra A>
std::pair<std::vector<typename A::Element>, VPoly> solve_rec(const AdmissiblePoly& f,
                                                             const typename A::Element& target,
                                                             const A& alg, ReductionTrace& trace);

// Base case n = 1. Type one f = lambda [V, X_1]_r: x_1 = solve_inner(a / lambda, r).
// Type two f = lambda [U, [V, X_1]_r]: x_1 = solve_inner(a, r+1) / lambda, u = v.
template <EvaluationAlgebra A>
std::pair<std::vector<typename A::Element>, VPoly> solve_base(const AdmissiblePoly& f,
                                                              const typename A::Element& target,
                                                              const A& alg, ReductionTrace& trace) {
    const Rat lambda = f.coeffs().begin()->second;
    trace.steps.push_back(BaseCaseStep{f.kind(), f.order(), lambda});
    if (f.kind() == Kind::one) {
        auto x1 = alg.solve_inner(alg.scale(Rat(1) / lambda, target), f.order());
        return {{x1}, vpoly_one()};
    }
    auto x1 = alg.scale(Rat(1) / lambda, alg.solve_inner(target, f.order() + 1));
    return {{x1}, vpoly_v_power(1)};
}

template <EvaluationAlgebra A>
std::pair<std::vector<typename A::Element>, VPoly> solve_type_one(const AdmissiblePoly& f,
                                                                  const typename A::Element& target,
                                                                  const A& alg, ReductionTrace& trace) {
    const int n = f.vars();
    const int r = f.order();
    auto lam = split_last_variable(f);
    const int k = min_last_exponent(lam);
    auto lam_k = restrict_last_exponent(lam, k);
    trace.steps.push_back(SplitLastVarStep{k, lam});

    auto pi0 = pi0_of_g(lam_k, n, r, k);
    std::vector<typename A::Element> xs;
    VPoly u_inner;
    if (!pi0.is_zero()) {
        trace.steps.push_back(TypeOneBranchStep{});
        auto [xs0, u0] = solve_rec(pi0, target, alg, trace);
        xs = std::move(xs0);
        u_inner = vpoly_one(); // type-one witness does not use U
    } else {
        auto h = type_two_from_g(lam_k, n, r, k);
        trace.steps.push_back(TypeTwoBranchStep{h.coeffs()});
        auto [xs0, u0] = solve_rec(h, target, alg, trace);
        xs = std::move(xs0);
        u_inner = std::move(u0);
    }
    xs.push_back(lift_witness_xvy(alg, u_inner, k));
    return {std::move(xs), vpoly_one()};
}

template <EvaluationAlgebra A>
std::pair<std::vector<typename A::Element>, VPoly> solve_type_two(const AdmissiblePoly& f,
                                                                  const typename A::Element& target,
                                                                  const A& alg, ReductionTrace& trace) {
    const int n = f.vars();
    const int cap = std::max(n, 8);
    for (int k = 1; k <= cap; ++k) {
        auto h_k = pi_k_coefficients(f, k);
        if (h_k.is_zero()) continue;
        trace.steps.push_back(PiKSearchStep{k});
        auto [xs, u0] = solve_rec(h_k, target, alg, trace);
        return {std::move(xs), vpoly_v_power(k)};
    }
    throw InternalSoundnessError("pi_k search exhausted cap " + std::to_string(cap) +
                                 " on a nonzero type-two polynomial");
}

template <EvaluationAlgebra A>
std::pair<std::vector<typename A::Element>, VPoly> solve_rec(const AdmissiblePoly& f,
                                                             const typename A::Element& target,
                                                             const A& alg, ReductionTrace& trace) {
    if (f.vars() == 1) return solve_base(f, target, alg, trace);
    if (f.kind() == Kind::one) return solve_type_one(f, target, alg, trace);
    return solve_type_two(f, target, alg, trace);
}

} // namespace detail

/// Produces a witness with evaluate(expand(f), witness) == target, exactly
/// for exact backends and on every probed column for the shift backend.
/// Rejects f = 0 with std::invalid_argument.
template <EvaluationAlgebra A>
SolveResult<A> solve(const AdmissiblePoly& f, const typename A::Element& target, const A& alg) {
    if (f.is_zero()) throw std::invalid_argument("solve: zero polynomial has empty image");
    SolveResult<A> res;
    auto [xs, u] = detail::solve_rec(f, target, alg, res.trace);
    res.witness.xs = std::move(xs);
    res.witness.u = std::move(u);
    return res;
}

} // namespace pcalg
