#pragma once
#include "gmact/polynomial.hpp"

#include <optional>
#include <set>
#include <vector>

namespace gmact::gb {

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens; // zero generators dropped

    static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
};

struct Options {
    size_t spair_budget = 200000;
};

/// Reads GM_GB_BUDGET from the environment, if set.
Options default_options();

struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> basis; // reduced, monic, ascending by leading term
};

/// Buchberger with the product and chain criteria, sugar pair selection.
/// Deterministic: fixed input and order give the identical reduced basis.
/// Throws resource_limit when the S-pair budget is exceeded.
GroebnerBasis groebner(const Ideal& ideal, const Options& opts = default_options());

/// Full remainder of multivariate division by G (every term reduced).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);
bool ideal_member(const Polynomial& p, const Ideal& I, const Options& opts = default_options());
bool ideal_equal(const Ideal& I, const Ideal& J, const Options& opts = default_options());

/// True iff the ideal is the whole ring (its reduced basis is {1}).
bool is_unit_ideal(const GroebnerBasis& gb);

/// I ∩ k[remaining variables], via a block elimination order with the dropped
/// variables leading. The result lives in the subring of kept variables
/// (grevlex) and its generators form a reduced basis there.
Ideal eliminate(const Ideal& I, const std::set<std::string>& drop,
                const Options& opts = default_options());

/// I : f^∞, by adjoining an inverse variable w with relation 1 - w*f and
/// eliminating w. Result lives in the ring of I.
Ideal saturate(const Ideal& I, const Polynomial& f, const Options& opts = default_options());

/// Kernel of the ring map source -> target/J sending the i-th source variable
/// to images[i]. Computed from the graph ideal by eliminating target variables.
Ideal ring_map_kernel(const RingPtr& source, const std::vector<Polynomial>& images,
                      const Ideal& target_relations, const Options& opts = default_options());

} // namespace gmact::gb
