#pragma once
#include "gmact/groebner.hpp"
#include "gmact/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gmact::action {

/// Presentation of a Z-graded finitely generated commutative algebra over Q:
/// weighted variables plus homogeneous relations. Spec A carries the
/// multiplicative-group action whose weight-n functions scale by lambda^n.
struct GradedAlgebra {
    RingPtr ring;
    std::vector<Polynomial> relations;

    /// Validates that every relation is homogeneous for the weight grading;
    /// drops zero relations. Throws input_error with witness terms otherwise.
    static GradedAlgebra make(RingPtr ring, std::vector<Polynomial> relations);

    long relation_degree(size_t i) const; // weighted degree of relations[i]
    gb::Ideal relation_ideal() const { return gb::Ideal::make(ring, relations); }
    std::string describe() const; // "Q[x,y] / (x*y)" style, weights included
};

/// Ring map between presented algebras: one target polynomial per source
/// variable. Well-definedness (relations land in the target ideal) is a
/// checked property, not an assumed one.
struct AlgebraMap {
    GradedAlgebra source;
    GradedAlgebra target;
    std::vector<Polynomial> images;

    Polynomial apply(const Polynomial& p) const;
};

AlgebraMap compose(const AlgebraMap& first, const AlgebraMap& then);
bool map_well_defined(const AlgebraMap& m, const gb::Options& opts = gb::default_options());

/// Weight-shift law: every variable image is homogeneous for the target grading.
bool map_images_homogeneous(const AlgebraMap& m);
bool maps_equal_mod_relations(const AlgebraMap& f, const AlgebraMap& g,
                              const gb::Options& opts = gb::default_options());

/// Structural equality of presentations: same variables with same weights in
/// the same order, identical relation lists.
bool presentations_identical(const GradedAlgebra& a, const GradedAlgebra& b);

GradedAlgebra negate_weights(const GradedAlgebra& A);

struct QuotientResult {
    GradedAlgebra algebra;   // pruned presentation
    AlgebraMap projection;   // from the input algebra
};

/// A^0: kill every generator of nonzero weight, prune, rewrite relations.
QuotientResult fixed_subscheme(const GradedAlgebra& A);

struct AttractorResult {
    GradedAlgebra plus;   // A^+ (or A^- for the repeller)
    GradedAlgebra zero;   // A^0
    AlgebraMap p;         // A -> A^+        (evaluation at 1)
    AlgebraMap q;         // A^0 -> A^+      (limit at 0 / infinity)
    AlgebraMap i;         // A^+ -> A^0      (constant maps)
};

/// A^+: kill the strictly negative-weight generators. Killing generators
/// suffices because every monomial of negative total weight contains a
/// negative-weight variable. i∘q = id on A^0 is verified at construction.
AttractorResult attractor(const GradedAlgebra& A);

/// A^-: the attractor for the inverse action (weights negated), with the
/// sign convention restored in the output presentation.
AttractorResult repeller(const GradedAlgebra& A);

struct CheckReport {
    bool passed = false;
    std::string detail;
};

/// Verifies (ker A->A^+) + (ker A->A^-) = (ker A->A^0) as ideals of the
/// presentation ring: the affine form of "j : Z^0 -> Z^+ x_Z Z^- is an
/// isomorphism".
CheckReport cartesian_j_check(const GradedAlgebra& A,
                              const gb::Options& opts = gb::default_options());

using RationalPoint = std::map<std::string, Rational>;

struct TangentReport {
    std::map<long, long> dim_by_weight; // tangent dimension per weight
    long dim_tz0 = 0;                   // computed from the A^0 presentation
    long dim_tzplus = 0;                // computed from the A^+ presentation
    bool jacobian_blocks_vanish = false; // d r_k / d b_j (z) = 0 unless deg r_k = weight b_j
    bool tz0_matches = false;            // dim_tz0 == dim_by_weight[0]
    bool tzplus_matches = false;         // dim_tzplus == sum of nonnegative-weight dims
    bool passed() const { return jacobian_blocks_vanish && tz0_matches && tzplus_matches; }
};

/// Tangent-space weight decomposition at a rational fixed point.
/// Throws input_error if the point is not on Z or not fixed.
TangentReport tangent_weight_dims(const GradedAlgebra& A, const RationalPoint& z);

/// Localization lemma checks at a homogeneous f:
///  deg f > 0: (A_f)^+ is the zero ring; deg f < 0: (A_f)^- is the zero ring;
///  deg f = 0: (A_f)^+ and (A^+)_{p^+(f)} agree as presentations.
CheckReport localize_check(const GradedAlgebra& A, const Polynomial& f,
                           const gb::Options& opts = gb::default_options());

/// For a homogeneous closed subscheme ideal F: (A/F)^+ = A^+ / image of F.
CheckReport localize_closed_check(const GradedAlgebra& A, const std::vector<Polynomial>& F,
                                  const gb::Options& opts = gb::default_options());

struct ContractionReport {
    bool all_weights_nonneg = false;
    bool p_plus_iso = false;
    bool equivalence_holds = false;      // the two flags agree
    std::vector<std::string> extension;  // b_j -> s^{n_j} b_j when it exists
    bool extension_valid = false;        // relations stay relations under it
};

/// All weights >= 0 iff p^+ is an isomorphism iff the action extends to the
/// multiplicative monoid of the affine line.
ContractionReport contraction_check(const GradedAlgebra& A);

/// Adjoin an inverse of homogeneous f: variables + {inv of weight -deg f},
/// relations + (f * inv - 1).
GradedAlgebra localize(const GradedAlgebra& A, const Polynomial& f,
                       const std::string& inv_name = "");

} // namespace gmact::action
