#pragma once
#include "gmact/polynomial.hpp"

#include <string>
#include <vector>

namespace gmact::charts {

struct CheckReport {
    bool passed = false;
    std::string detail;
};

/// Laurent monomial map: each target coordinate is a monomial with integer
/// (possibly negative) exponents in the source coordinates. Every transition
/// in the chart atlases here is of this shape.
struct MonomialMap {
    size_t source_dim = 0;
    std::vector<Exponents> exps; // one row per target coordinate

    size_t target_dim() const { return exps.size(); }
};

/// second after first (matrix product of exponent rows)
MonomialMap compose_maps(const MonomialMap& first, const MonomialMap& second);
MonomialMap identity_map(size_t dim);
bool operator==(const MonomialMap& a, const MonomialMap& b);

struct Chart {
    std::vector<std::string> coords;
};

struct Transition {
    size_t from = 0, to = 0;
    MonomialMap fwd; // coordinates of `to` as monomials in `from` coordinates
    MonomialMap bwd;
    std::vector<size_t> invertible_from; // `from` coordinates invertible on the overlap
    std::vector<size_t> invertible_to;
};

/// Chain-of-hyperbolas atlas: chart r has coordinates
/// t_1..t_{r-1}, tau1, tau2, t_{r+1}..t_n, with t_r = tau1*tau2 implicit.
struct ChartAtlas {
    long n = 0;
    std::vector<Chart> charts;
    std::vector<Transition> transitions; // adjacent pairs (r, r+1)
};

/// e_{n1} e_{n2} = t^{mu(n1,n2)} e_{n1+n2} in Q[t,tau1,tau2]/(tau1 tau2 - t),
/// where e_n = tau1^n for n >= 0 and tau2^{-n} for n <= 0. Symbolic, all
/// |n1|,|n2| <= bound.
CheckReport e_basis_identity(long bound);

ChartAtlas build_xn_atlas(long n);

/// Transition between arbitrary charts r < rp, straight from the projective
/// coordinate formulas (used for the cocycle checks).
Transition direct_transition(long n, size_t r, size_t rp);

/// Round trips of every stored transition and the cocycle condition on all
/// triples r < r' < r''. Failures name the offending pair.
CheckReport verify_transitions(const ChartAtlas& atlas);

/// u = xi_0, v = xi_n^{-1}: checks u*v = t_1...t_n in every chart and that
/// inverting u determines the chart coordinates (isomorphism away from the
/// resolution center), chart by chart.
CheckReport resolution_map_check(const ChartAtlas& atlas);

/// The two blow-up presentations of the plane: overlap agreement for both
/// gluings and point-fiber checks away from the center, one-dimensional
/// fiber over it.
CheckReport blowup_check();

/// Number of nodes of the fiber curve over (t_1..t_n): the count of zero
/// entries. The chart-level justification is that each degenerate hyperbola
/// contributes one gluing node.
long fiber_curve_type(long n, const std::vector<Rational>& t);

/// Independent arbiter: count connected components obtained by gluing the
/// per-chart hyperbola components along the overlaps; the chain C_m has
/// m+1 of them.
long component_count_oracle(long n, const std::vector<Rational>& t);

} // namespace gmact::charts
