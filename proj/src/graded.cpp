#include "gmact/graded.hpp"
#include "gmact/errors.hpp"

#include <algorithm>

namespace gmact::action {

using gb::Ideal;
using gb::groebner;
using gb::normal_form;

GradedAlgebra GradedAlgebra::make(RingPtr ring, std::vector<Polynomial> relations) {
    GradedAlgebra A;
    A.ring = std::move(ring);
    for (auto& r : relations) {
        if (r.is_zero())
            continue;
        if (r.ring() != A.ring && !r.ring()->same_variables(*A.ring))
            throw ring_mismatch("relation not in the algebra's ring");
        auto d = weighted_degree(r);
        if (d.kind == WeightedDegree::Kind::Mixed)
            throw input_error("relation '" + r.str() + "' is not homogeneous: terms " +
                              A.ring->monomial_string(d.witness_a) + " and " +
                              A.ring->monomial_string(d.witness_b) +
                              " have different weighted degrees");
        A.relations.push_back(std::move(r));
    }
    return A;
}

long GradedAlgebra::relation_degree(size_t i) const {
    return weighted_degree(relations.at(i)).degree;
}

std::string GradedAlgebra::describe() const {
    std::string out = "Q[";
    for (size_t i = 0; i < ring->nvars(); ++i) {
        if (i)
            out += ",";
        out += ring->var(i).name + ":" + std::to_string(ring->var(i).weight);
    }
    out += "]";
    if (!relations.empty()) {
        out += " / (";
        for (size_t i = 0; i < relations.size(); ++i) {
            if (i)
                out += ", ";
            out += relations[i].str();
        }
        out += ")";
    }
    return out;
}

Polynomial AlgebraMap::apply(const Polynomial& p) const {
    return p.substitute(target.ring, images);
}

AlgebraMap compose(const AlgebraMap& first, const AlgebraMap& then) {
    AlgebraMap out;
    out.source = first.source;
    out.target = then.target;
    for (const auto& img : first.images)
        out.images.push_back(img.substitute(then.target.ring, then.images));
    return out;
}

bool map_well_defined(const AlgebraMap& m, const gb::Options& opts) {
    auto gbT = groebner(m.target.relation_ideal(), opts);
    for (const auto& r : m.source.relations)
        if (!normal_form(m.apply(r), gbT).is_zero())
            return false;
    return true;
}

bool map_images_homogeneous(const AlgebraMap& m) {
    for (const auto& img : m.images)
        if (!is_homogeneous(img))
            return false;
    return true;
}

bool maps_equal_mod_relations(const AlgebraMap& f, const AlgebraMap& g, const gb::Options& opts) {
    if (!f.source.ring->same_variables(*g.source.ring) ||
        !f.target.ring->same_variables(*g.target.ring))
        return false;
    auto gbT = groebner(f.target.relation_ideal(), opts);
    for (size_t i = 0; i < f.images.size(); ++i)
        if (!normal_form(f.images[i] - g.images[i].transport(f.target.ring), gbT).is_zero())
            return false;
    return true;
}

bool presentations_identical(const GradedAlgebra& a, const GradedAlgebra& b) {
    if (!a.ring->same_variables(*b.ring))
        return false;
    if (a.relations.size() != b.relations.size())
        return false;
    for (size_t i = 0; i < a.relations.size(); ++i)
        if (a.relations[i] != b.relations[i].transport(a.ring))
            return false;
    return true;
}

GradedAlgebra negate_weights(const GradedAlgebra& A) {
    std::vector<Variable> vars;
    for (const auto& v : A.ring->vars())
        vars.push_back(Variable{v.name, -v.weight});
    auto ring = PolyRing::make(std::move(vars), A.ring->order());
    std::vector<Polynomial> rels;
    for (const auto& r : A.relations)
        rels.push_back(r.transport(ring));
    return GradedAlgebra::make(ring, std::move(rels));
}

namespace {

// Quotient by the variables selected by `kill`, pruned: killed variables leave
// the presentation and relations are rewritten by substituting zero.
QuotientResult quotient_killing(const GradedAlgebra& A, const std::vector<bool>& kill) {
    std::vector<Variable> kept;
    for (size_t j = 0; j < A.ring->nvars(); ++j)
        if (!kill[j])
            kept.push_back(A.ring->var(j));
    TermOrder order = A.ring->order();
    if (order.kind == OrderKind::Block)
        order = TermOrder{OrderKind::GrevLex, 0};
    auto ring = PolyRing::make(kept, order);

    std::vector<Polynomial> rels;
    for (const auto& r : A.relations) {
        std::vector<Term> survivors;
        for (const auto& t : r.terms()) {
            bool dies = false;
            for (size_t j = 0; j < kill.size() && !dies; ++j)
                if (kill[j] && t.mono[j] > 0)
                    dies = true;
            if (!dies) {
                Exponents e;
                e.reserve(kept.size());
                for (size_t j = 0; j < kill.size(); ++j)
                    if (!kill[j])
                        e.push_back(t.mono[j]);
                survivors.push_back({std::move(e), t.coeff});
            }
        }
        Polynomial image = Polynomial::from_terms(ring, std::move(survivors));
        if (image.is_zero())
            continue;
        if (image.leading_term().coeff != 1)
            image = image * (Rational(1) / image.leading_term().coeff);
        bool duplicate = false;
        for (const auto& seen : rels)
            if (seen == image) {
                duplicate = true;
                break;
            }
        if (!duplicate)
            rels.push_back(std::move(image));
    }
    QuotientResult out;
    out.algebra = GradedAlgebra::make(ring, std::move(rels));
    out.projection.source = A;
    out.projection.target = out.algebra;
    for (size_t j = 0; j < A.ring->nvars(); ++j)
        out.projection.images.push_back(kill[j] ? Polynomial::zero(ring)
                                                : Polynomial::variable(ring, A.ring->var(j).name));
    return out;
}

std::vector<bool> weights_matching(const GradedAlgebra& A, bool negatives) {
    std::vector<bool> kill(A.ring->nvars(), false);
    for (size_t j = 0; j < A.ring->nvars(); ++j) {
        int w = A.ring->var(j).weight;
        kill[j] = negatives ? (w < 0) : (w > 0);
    }
    return kill;
}

} // namespace

QuotientResult fixed_subscheme(const GradedAlgebra& A) {
    std::vector<bool> kill(A.ring->nvars(), false);
    for (size_t j = 0; j < A.ring->nvars(); ++j)
        kill[j] = A.ring->var(j).weight != 0;
    return quotient_killing(A, kill);
}

AttractorResult attractor(const GradedAlgebra& A) {
    AttractorResult out;
    auto plus = quotient_killing(A, weights_matching(A, /*negatives=*/true));
    out.plus = plus.algebra;
    out.p = plus.projection;

    auto zero = fixed_subscheme(A);
    out.zero = zero.algebra;

    // i: A^+ ->> A^0 kills the remaining nonzero-weight generators
    std::vector<bool> kill_pos(out.plus.ring->nvars(), false);
    for (size_t j = 0; j < out.plus.ring->nvars(); ++j)
        kill_pos[j] = out.plus.ring->var(j).weight != 0;
    auto i_quot = quotient_killing(out.plus, kill_pos);
    if (!presentations_identical(i_quot.algebra, out.zero))
        throw error("internal: A^0 computed through A^+ differs from the direct quotient");
    out.i = i_quot.projection;
    out.i.target = out.zero;

    // q: A^0 -> A^+ sends each weight-0 generator to its class
    out.q.source = out.zero;
    out.q.target = out.plus;
    for (const auto& v : out.zero.ring->vars())
        out.q.images.push_back(Polynomial::variable(out.plus.ring, v.name));

    // i after q must be the identity on A^0
    AlgebraMap iq = compose(out.q, out.i);
    AlgebraMap id;
    id.source = out.zero;
    id.target = out.zero;
    for (const auto& v : out.zero.ring->vars())
        id.images.push_back(Polynomial::variable(out.zero.ring, v.name));
    if (!maps_equal_mod_relations(iq, id))
        throw error("internal: i∘q is not the identity on A^0");
    return out;
}

AttractorResult repeller(const GradedAlgebra& A) {
    AttractorResult out;
    auto minus = quotient_killing(A, weights_matching(A, /*negatives=*/false));
    out.plus = minus.algebra;
    out.p = minus.projection;

    auto zero = fixed_subscheme(A);
    out.zero = zero.algebra;

    std::vector<bool> kill_nonzero(out.plus.ring->nvars(), false);
    for (size_t j = 0; j < out.plus.ring->nvars(); ++j)
        kill_nonzero[j] = out.plus.ring->var(j).weight != 0;
    auto i_quot = quotient_killing(out.plus, kill_nonzero);
    if (!presentations_identical(i_quot.algebra, out.zero))
        throw error("internal: A^0 computed through A^- differs from the direct quotient");
    out.i = i_quot.projection;
    out.i.target = out.zero;

    out.q.source = out.zero;
    out.q.target = out.plus;
    for (const auto& v : out.zero.ring->vars())
        out.q.images.push_back(Polynomial::variable(out.plus.ring, v.name));

    AlgebraMap iq = compose(out.q, out.i);
    AlgebraMap id;
    id.source = out.zero;
    id.target = out.zero;
    for (const auto& v : out.zero.ring->vars())
        id.images.push_back(Polynomial::variable(out.zero.ring, v.name));
    if (!maps_equal_mod_relations(iq, id))
        throw error("internal: i∘q is not the identity on A^0");
    return out;
}

CheckReport cartesian_j_check(const GradedAlgebra& A, const gb::Options& opts) {
    std::vector<Polynomial> lhs = A.relations;
    std::vector<Polynomial> rhs = A.relations;
    for (const auto& v : A.ring->vars()) {
        if (v.weight < 0)
            lhs.push_back(Polynomial::variable(A.ring, v.name));
        if (v.weight > 0)
            lhs.push_back(Polynomial::variable(A.ring, v.name));
        if (v.weight != 0)
            rhs.push_back(Polynomial::variable(A.ring, v.name));
    }
    CheckReport report;
    report.passed = gb::ideal_equal(Ideal::make(A.ring, lhs), Ideal::make(A.ring, rhs), opts);
    if (report.passed) {
        auto basis = groebner(Ideal::make(A.ring, rhs), opts);
        std::string witness;
        for (const auto& g : basis.basis)
            witness += (witness.empty() ? "" : ", ") + g.str();
        report.detail = "ker(A->A+) + ker(A->A-) = ker(A->A0) = (" + witness + ")";
    } else {
        report.detail = "ideal mismatch between A+ (x) A- and A0 presentations";
    }
    return report;
}

namespace {

long matrix_rank(std::vector<std::vector<Rational>> M) {
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    long rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && M[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(M[pivot], M[r]);
        Rational inv = Rational(1) / M[r][c];
        for (size_t cc = c; cc < cols; ++cc)
            M[r][cc] *= inv;
        for (size_t rr = 0; rr < rows; ++rr) {
            if (rr == r || M[rr][c] == 0)
                continue;
            Rational f = M[rr][c];
            for (size_t cc = c; cc < cols; ++cc)
                M[rr][cc] -= f * M[r][cc];
        }
        ++r;
        ++rank;
    }
    return rank;
}

std::vector<Rational> point_vector(const GradedAlgebra& A, const RationalPoint& z) {
    std::vector<Rational> coords;
    for (const auto& v : A.ring->vars()) {
        auto it = z.find(v.name);
        if (it == z.end())
            throw input_error("point does not assign variable " + v.name);
        coords.push_back(it->second);
    }
    return coords;
}

long tangent_dim_at(const GradedAlgebra& A, const RationalPoint& z) {
    auto coords = point_vector(A, z);
    std::vector<std::vector<Rational>> J;
    for (const auto& r : A.relations) {
        std::vector<Rational> row;
        for (size_t j = 0; j < A.ring->nvars(); ++j)
            row.push_back(r.derivative(j).evaluate(coords));
        J.push_back(std::move(row));
    }
    return static_cast<long>(A.ring->nvars()) - matrix_rank(std::move(J));
}

} // namespace

TangentReport tangent_weight_dims(const GradedAlgebra& A, const RationalPoint& z) {
    auto coords = point_vector(A, z);
    for (const auto& r : A.relations)
        if (r.evaluate(coords) != 0)
            throw input_error("point is not on Z: relation " + r.str() + " does not vanish");
    for (size_t j = 0; j < A.ring->nvars(); ++j)
        if (A.ring->var(j).weight != 0 && coords[j] != 0)
            throw input_error("not a fixed point: variable " + A.ring->var(j).name +
                              " has nonzero weight and nonzero coordinate");

    TangentReport report;

    // Jacobian at the fixed point, with the block-vanishing structure checked
    std::vector<std::vector<Rational>> J;
    for (const auto& r : A.relations) {
        std::vector<Rational> row;
        for (size_t j = 0; j < A.ring->nvars(); ++j)
            row.push_back(r.derivative(j).evaluate(coords));
        J.push_back(std::move(row));
    }
    report.jacobian_blocks_vanish = true;
    for (size_t k = 0; k < A.relations.size(); ++k) {
        long dk = A.relation_degree(k);
        for (size_t j = 0; j < A.ring->nvars(); ++j)
            if (dk != A.ring->var(j).weight && J[k][j] != 0)
                report.jacobian_blocks_vanish = false;
    }

    std::vector<long> weights_present;
    for (const auto& v : A.ring->vars())
        if (std::find(weights_present.begin(), weights_present.end(), (long)v.weight) ==
            weights_present.end())
            weights_present.push_back(v.weight);
    std::sort(weights_present.begin(), weights_present.end());

    for (long w : weights_present) {
        std::vector<size_t> cols;
        for (size_t j = 0; j < A.ring->nvars(); ++j)
            if (A.ring->var(j).weight == w)
                cols.push_back(j);
        std::vector<std::vector<Rational>> block;
        for (size_t k = 0; k < A.relations.size(); ++k) {
            if (A.relation_degree(k) != w)
                continue;
            std::vector<Rational> row;
            for (size_t c : cols)
                row.push_back(J[k][c]);
            block.push_back(std::move(row));
        }
        report.dim_by_weight[w] =
            static_cast<long>(cols.size()) - matrix_rank(std::move(block));
    }

    auto zero = fixed_subscheme(A).algebra;
    RationalPoint z0;
    for (const auto& v : zero.ring->vars())
        z0[v.name] = z.at(v.name);
    report.dim_tz0 = tangent_dim_at(zero, z0);

    auto plus = attractor(A).plus;
    RationalPoint zp;
    for (const auto& v : plus.ring->vars())
        zp[v.name] = z.at(v.name); // fixed point: nonzero-weight coordinates are 0
    report.dim_tzplus = tangent_dim_at(plus, zp);

    long dim0 = report.dim_by_weight.count(0) ? report.dim_by_weight[0] : 0;
    report.tz0_matches = report.dim_tz0 == dim0;
    long nonneg = 0;
    for (const auto& [w, d] : report.dim_by_weight)
        if (w >= 0)
            nonneg += d;
    report.tzplus_matches = report.dim_tzplus == nonneg;
    return report;
}

GradedAlgebra localize(const GradedAlgebra& A, const Polynomial& f, const std::string& name) {
    auto d = weighted_degree(f);
    if (d.kind == WeightedDegree::Kind::Mixed)
        throw input_error("localization requires a homogeneous element");
    if (d.kind == WeightedDegree::Kind::Zero)
        throw input_error("cannot invert zero");
    std::string inv = name;
    if (inv.empty())
        inv = "_inv";
    while (A.ring->has_var(inv))
        inv += "_";
    std::vector<Variable> vars = A.ring->vars();
    vars.push_back(Variable{inv, static_cast<int>(-d.degree)});
    auto ring = PolyRing::make(std::move(vars), A.ring->order());
    std::vector<Polynomial> rels;
    for (const auto& r : A.relations)
        rels.push_back(r.transport(ring));
    rels.push_back(f.transport(ring) * Polynomial::variable(ring, inv) -
                   Polynomial::constant(ring, Rational(1)));
    return GradedAlgebra::make(ring, std::move(rels));
}

CheckReport localize_check(const GradedAlgebra& A, const Polynomial& f, const gb::Options& opts) {
    auto d = weighted_degree(f);
    if (d.kind == WeightedDegree::Kind::Mixed)
        throw input_error("localize_check: f must be homogeneous");
    if (d.kind == WeightedDegree::Kind::Zero)
        throw input_error("localize_check: f must be nonzero");

    CheckReport report;
    GradedAlgebra Af = localize(A, f);
    if (d.degree > 0) {
        auto plus = attractor(Af).plus;
        bool zero_ring = gb::is_unit_ideal(groebner(plus.relation_ideal(), opts));
        report.passed = zero_ring;
        report.detail = zero_ring ? "(A_f)+ is the zero ring for deg f > 0"
                                  : "(A_f)+ unexpectedly nonzero";
        return report;
    }
    if (d.degree < 0) {
        auto minus = repeller(Af).plus;
        bool zero_ring = gb::is_unit_ideal(groebner(minus.relation_ideal(), opts));
        report.passed = zero_ring;
        report.detail = zero_ring ? "(A_f)- is the zero ring for deg f < 0"
                                  : "(A_f)- unexpectedly nonzero";
        return report;
    }

    // deg f = 0: (A_f)^+ against (A^+)_{p^+(f)}
    auto lhs = attractor(Af).plus;
    auto ar = attractor(A);
    Polynomial f_plus = ar.p.apply(f);
    GradedAlgebra rhs = localize(ar.plus, f_plus);
    if (!lhs.ring->same_variables(*rhs.ring)) {
        report.passed = false;
        report.detail = "presentation rings differ";
        return report;
    }
    std::vector<Polynomial> rhs_rels;
    for (const auto& r : rhs.relations)
        rhs_rels.push_back(r.transport(lhs.ring));
    report.passed = gb::ideal_equal(lhs.relation_ideal(),
                                    Ideal::make(lhs.ring, std::move(rhs_rels)), opts);
    report.detail = report.passed ? "(A_f)+ = (A+)_{p+(f)} for deg f = 0"
                                  : "localization does not commute with the attractor";
    return report;
}

CheckReport localize_closed_check(const GradedAlgebra& A, const std::vector<Polynomial>& F,
                                  const gb::Options& opts) {
    std::vector<Polynomial> extended = A.relations;
    for (const auto& g : F)
        extended.push_back(g);
    GradedAlgebra AF = GradedAlgebra::make(A.ring, std::move(extended));
    auto lhs = attractor(AF).plus;

    auto ar = attractor(A);
    std::vector<Polynomial> rhs_rels = ar.plus.relations;
    for (const auto& g : F)
        rhs_rels.push_back(ar.p.apply(g));

    CheckReport report;
    report.passed = gb::ideal_equal(lhs.relation_ideal(),
                                    Ideal::make(lhs.ring, std::move(rhs_rels)), opts);
    report.detail = report.passed ? "(A/F)+ = A+/(image of F)"
                                  : "closed-subscheme attractor mismatch";
    return report;
}

ContractionReport contraction_check(const GradedAlgebra& A) {
    ContractionReport report;
    report.all_weights_nonneg = true;
    for (const auto& v : A.ring->vars())
        if (v.weight < 0)
            report.all_weights_nonneg = false;

    auto ar = attractor(A);
    report.p_plus_iso = ar.plus.ring->nvars() == A.ring->nvars();
    report.equivalence_holds = report.all_weights_nonneg == report.p_plus_iso;

    if (report.all_weights_nonneg) {
        // the affine-line action: b_j -> s^{n_j} b_j, a polynomial substitution
        std::vector<Variable> vars = A.ring->vars();
        vars.push_back(Variable{"_s", 0});
        auto ext = PolyRing::make(std::move(vars), TermOrder{OrderKind::GrevLex, 0});
        auto s = Polynomial::variable(ext, "_s");
        std::vector<Polynomial> images;
        for (const auto& v : A.ring->vars()) {
            auto img = Polynomial::variable(ext, v.name) * s.pow(v.weight);
            report.extension.push_back(v.name + " -> " + img.str());
            images.push_back(img);
        }
        report.extension_valid = true;
        for (size_t k = 0; k < A.relations.size(); ++k) {
            auto image = A.relations[k].substitute(ext, images);
            auto expected = A.relations[k].transport(ext) * s.pow(A.relation_degree(k));
            if (image != expected)
                report.extension_valid = false;
        }
    }
    return report;
}

} // namespace gmact::action
