#include "gmact/interpolation.hpp"
#include "gmact/errors.hpp"

#include <algorithm>

namespace gmact::interp {

using gb::groebner;
using gb::GroebnerBasis;
using gb::Ideal;
using gb::normal_form;

long mu(long n1, long n2) {
    return (std::labs(n1) + std::labs(n2) - std::labs(n1 + n2)) / 2;
}

long c_exponent(const Exponents& e, const std::vector<int>& weights) {
    long abs_sum = 0, sum = 0;
    for (size_t j = 0; j < e.size(); ++j) {
        abs_sum += static_cast<long>(e[j]) * std::labs(weights[j]);
        sum += static_cast<long>(e[j]) * weights[j];
    }
    return (abs_sum - std::labs(sum)) / 2;
}

Bidegree InterpolationAlgebra::variable_bidegree(size_t ring_index) const {
    const auto& v = ring->var(ring_index);
    if (v.name == t_name)
        return {-1, 1};
    int n = v.weight;
    return n >= 0 ? Bidegree{n, 0} : Bidegree{0, static_cast<long>(n)};
}

namespace {

Bidegree monomial_bidegree(const InterpolationAlgebra& IA, const Exponents& mono) {
    Bidegree total;
    for (size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0)
            continue;
        Bidegree b = IA.variable_bidegree(i);
        total.first += b.first * mono[i];
        total.second += b.second * mono[i];
    }
    return total;
}

bool bihomogeneous_of(const InterpolationAlgebra& IA, const Polynomial& p, Bidegree expected) {
    for (const auto& t : p.terms())
        if (!(monomial_bidegree(IA, t.mono) == expected))
            return false;
    return true;
}

} // namespace

InterpolationAlgebra build_interpolation(const GradedAlgebra& A) {
    InterpolationAlgebra IA;
    IA.base = A;
    IA.t_name = "t";
    while (A.ring->has_var(IA.t_name))
        IA.t_name = "_" + IA.t_name;

    std::vector<Variable> vars;
    vars.push_back(Variable{IA.t_name, 0});
    for (const auto& v : A.ring->vars())
        vars.push_back(v);
    IA.ring = PolyRing::make(std::move(vars), TermOrder{OrderKind::GrevLex, 0});

    std::vector<int> weights;
    for (const auto& v : A.ring->vars()) {
        weights.push_back(v.weight);
        IA.pi1_exponents.push_back(std::max(0, -v.weight));
        IA.pi2_exponents.push_back(std::max(0, v.weight));
    }

    for (size_t k = 0; k < A.relations.size(); ++k) {
        const Polynomial& r = A.relations[k];
        std::vector<Term> lifted;
        for (const auto& term : r.terms()) {
            long c = c_exponent(term.mono, weights);
            Exponents e(IA.ring->nvars(), 0);
            e[0] = static_cast<int>(c);
            for (size_t j = 0; j < term.mono.size(); ++j)
                e[j + 1] = term.mono[j];
            lifted.push_back({std::move(e), term.coeff});
        }
        Polynomial lift = Polynomial::from_terms(IA.ring, std::move(lifted));

        long d = A.relation_degree(k);
        Bidegree expected = d >= 0 ? Bidegree{d, 0} : Bidegree{0, d};
        if (!bihomogeneous_of(IA, lift, expected))
            throw error("internal: lifted relation is not bihomogeneous: " + lift.str());

        // specialization at t = 1 must return the original relation
        std::vector<Polynomial> images;
        images.push_back(Polynomial::constant(A.ring, Rational(1)));
        for (const auto& v : A.ring->vars())
            images.push_back(Polynomial::variable(A.ring, v.name));
        if (lift.substitute(A.ring, images) != r)
            throw error("internal: lifted relation does not specialize at t=1: " + lift.str());

        IA.lifted_relations.push_back(std::move(lift));
    }
    return IA;
}

EmbeddingIdeal embedding_ideal(const InterpolationAlgebra& IA, const gb::Options& opts) {
    EmbeddingIdeal E;
    std::vector<Variable> vars;
    vars.push_back(Variable{IA.t_name, 0});
    for (const auto& v : IA.base.ring->vars())
        vars.push_back(Variable{"u_" + v.name, v.weight});
    for (const auto& v : IA.base.ring->vars())
        vars.push_back(Variable{"v_" + v.name, v.weight});
    E.ring = PolyRing::make(std::move(vars), TermOrder{OrderKind::GrevLex, 0});

    std::vector<Polynomial> images;
    images.push_back(IA.t());
    for (size_t j = 0; j < IA.nbase(); ++j)
        images.push_back(IA.t().pow(IA.pi1_exponents[j]) * IA.y(j));
    for (size_t j = 0; j < IA.nbase(); ++j)
        images.push_back(IA.t().pow(IA.pi2_exponents[j]) * IA.y(j));

    E.ideal = gb::ring_map_kernel(E.ring, images, IA.relation_ideal(), opts);
    return E;
}

EmbeddingReport embedding_checks(const InterpolationAlgebra& IA, const EmbeddingIdeal& E,
                                 const gb::Options& opts) {
    EmbeddingReport report;

    // kernel ∩ Q[t] = 0: eliminating u and v must leave nothing
    std::set<std::string> drop;
    for (const auto& v : E.ring->vars())
        if (v.name != IA.t_name)
            drop.insert(v.name);
    report.no_t_torsion_in_kernel = gb::eliminate(E.ideal, drop, opts).gens.empty();

    // t = 1, u_j = v_j = b_j lands in the relation ideal of A
    auto gbA = groebner(IA.base.relation_ideal(), opts);
    std::vector<Polynomial> images;
    images.push_back(Polynomial::constant(IA.base.ring, Rational(1)));
    for (const auto& v : IA.base.ring->vars())
        images.push_back(Polynomial::variable(IA.base.ring, v.name));
    for (const auto& v : IA.base.ring->vars())
        images.push_back(Polynomial::variable(IA.base.ring, v.name));
    report.specializes_at_one = true;
    for (const auto& g : E.ideal.gens)
        if (!normal_form(g.substitute(IA.base.ring, images), gbA).is_zero())
            report.specializes_at_one = false;

    // one of the two twists is trivial for every generator
    report.surjective = true;
    for (size_t j = 0; j < IA.nbase(); ++j)
        if (IA.pi1_exponents[j] != 0 && IA.pi2_exponents[j] != 0)
            report.surjective = false;
    return report;
}

namespace {

struct Presentation {
    RingPtr ring;
    std::vector<Polynomial> rels;
};

/// fwd maps p.ring variables into q's ring, bwd the other way; checks that
/// both are well defined on the quotients and mutually inverse modulo the
/// relation ideals.
bool mutually_inverse(const Presentation& p, const Presentation& q,
                      const std::vector<Polynomial>& fwd, const std::vector<Polynomial>& bwd,
                      const gb::Options& opts, std::string* why) {
    auto gbp = groebner(Ideal::make(p.ring, p.rels), opts);
    auto gbq = groebner(Ideal::make(q.ring, q.rels), opts);
    for (const auto& r : p.rels) {
        if (!normal_form(r.substitute(q.ring, fwd), gbq).is_zero()) {
            if (why)
                *why = "relation " + r.str() + " not preserved by the forward map";
            return false;
        }
    }
    for (const auto& r : q.rels) {
        if (!normal_form(r.substitute(p.ring, bwd), gbp).is_zero()) {
            if (why)
                *why = "relation " + r.str() + " not preserved by the backward map";
            return false;
        }
    }
    for (size_t i = 0; i < p.ring->nvars(); ++i) {
        Polynomial roundtrip = fwd[i].substitute(p.ring, bwd);
        if (!normal_form(roundtrip - Polynomial::variable(p.ring, i), gbp).is_zero()) {
            if (why)
                *why = "backward∘forward is not the identity on " + p.ring->var(i).name;
            return false;
        }
    }
    for (size_t i = 0; i < q.ring->nvars(); ++i) {
        Polynomial roundtrip = bwd[i].substitute(q.ring, fwd);
        if (!normal_form(roundtrip - Polynomial::variable(q.ring, i), gbq).is_zero()) {
            if (why)
                *why = "forward∘backward is not the identity on " + q.ring->var(i).name;
            return false;
        }
    }
    return true;
}

std::vector<Polynomial> fiber_relations_at(const InterpolationAlgebra& IA, const RingPtr& fiber,
                                           const Rational& c) {
    std::vector<Polynomial> images;
    images.push_back(Polynomial::constant(fiber, c));
    for (const auto& v : IA.base.ring->vars())
        images.push_back(Polynomial::variable(fiber, v.name));
    std::vector<Polynomial> rels;
    for (const auto& r : IA.lifted_relations) {
        auto img = r.substitute(fiber, images);
        if (!img.is_zero())
            rels.push_back(std::move(img));
    }
    return rels;
}

} // namespace

FiberReport fiber_at(const InterpolationAlgebra& IA, const Rational& c, const gb::Options& opts) {
    FiberReport report;
    report.fiber_ring = PolyRing::make(IA.base.ring->vars(), TermOrder{OrderKind::GrevLex, 0});
    report.fiber_relations = fiber_relations_at(IA, report.fiber_ring, c);

    Presentation fiber{report.fiber_ring, report.fiber_relations};

    if (c != 0) {
        // graph of the action of c: b_j -> c^{max(0,-n_j)} y_j
        Presentation base{IA.base.ring, IA.base.relations};
        std::vector<Polynomial> fwd, bwd;
        for (size_t j = 0; j < IA.nbase(); ++j) {
            Rational s = rational_pow(c, IA.pi1_exponents[j]);
            fwd.push_back(Polynomial::variable(report.fiber_ring, j) * s);
            bwd.push_back(Polynomial::variable(IA.base.ring, j) * (Rational(1) / s));
        }
        std::string why;
        report.iso_ok = mutually_inverse(base, fiber, fwd, bwd, opts, &why);
        report.detail = report.iso_ok ? "fiber at t=" + to_string(c) + " is the graph of the action"
                                      : why;
        return report;
    }

    // t = 0: compare with the fiber product of the attractor and repeller over
    // the fixed points: p-variables for n_j >= 0, m-variables for n_j <= 0,
    // identified on weight 0.
    auto plus = action::attractor(IA.base).plus;
    auto minus = action::repeller(IA.base).plus;

    std::vector<Variable> pvars;
    for (const auto& v : plus.ring->vars())
        pvars.push_back(Variable{"p_" + v.name, v.weight});
    std::vector<Variable> mvars;
    for (const auto& v : minus.ring->vars())
        mvars.push_back(Variable{"m_" + v.name, v.weight});
    report.product_ring = concat_rings(pvars, mvars, TermOrder{OrderKind::GrevLex, 0});

    auto rename = [&](const Polynomial& r, const RingPtr& from, const std::string& prefix) {
        std::vector<Polynomial> images;
        for (const auto& v : from->vars())
            images.push_back(Polynomial::variable(report.product_ring, prefix + v.name));
        return r.substitute(report.product_ring, images);
    };
    for (const auto& r : plus.relations)
        report.product_relations.push_back(rename(r, plus.ring, "p_"));
    for (const auto& r : minus.relations)
        report.product_relations.push_back(rename(r, minus.ring, "m_"));
    for (const auto& v : IA.base.ring->vars())
        if (v.weight == 0)
            report.product_relations.push_back(
                Polynomial::variable(report.product_ring, "p_" + v.name) -
                Polynomial::variable(report.product_ring, "m_" + v.name));

    Presentation product{report.product_ring, report.product_relations};

    std::vector<Polynomial> fwd; // fiber -> product
    for (const auto& v : IA.base.ring->vars())
        fwd.push_back(Polynomial::variable(report.product_ring,
                                           (v.weight >= 0 ? "p_" : "m_") + v.name));
    std::vector<Polynomial> bwd; // product -> fiber
    for (const auto& v : report.product_ring->vars())
        bwd.push_back(Polynomial::variable(report.fiber_ring, v.name.substr(2)));

    std::string why;
    report.iso_ok = mutually_inverse(fiber, product, fwd, bwd, opts, &why);
    report.detail = report.iso_ok ? "zero fiber is the fiber product of attractor and repeller"
                                  : why;
    return report;
}

FiberReport fiber_generic_symbolic(const InterpolationAlgebra& IA, const gb::Options& opts) {
    FiberReport report;
    std::string c_name = "c", ci_name = "ci";
    while (IA.base.ring->has_var(c_name))
        c_name = "_" + c_name;
    while (IA.base.ring->has_var(ci_name))
        ci_name = "_" + ci_name;

    std::vector<Variable> params = {{c_name, 0}, {ci_name, 0}};
    RingPtr fiber = concat_rings(params, IA.base.ring->vars(), TermOrder{OrderKind::GrevLex, 0});
    RingPtr base = fiber; // same coordinates model A (x) Q[c,1/c] on the other side

    auto c = Polynomial::variable(fiber, c_name);
    auto ci = Polynomial::variable(fiber, ci_name);
    auto unit = c * ci - Polynomial::constant(fiber, Rational(1));

    std::vector<Polynomial> fiber_rels = {unit};
    {
        std::vector<Polynomial> images;
        images.push_back(c);
        for (const auto& v : IA.base.ring->vars())
            images.push_back(Polynomial::variable(fiber, v.name));
        for (const auto& r : IA.lifted_relations) {
            auto img = r.substitute(fiber, images);
            if (!img.is_zero())
                fiber_rels.push_back(img);
        }
    }
    std::vector<Polynomial> base_rels = {unit};
    for (const auto& r : IA.base.relations)
        base_rels.push_back(r.transport(base));

    // b_j -> c^{max(0,-n_j)} y_j with the inverse scaling by 1/c
    std::vector<Polynomial> fwd, bwd;
    fwd.push_back(c);
    fwd.push_back(ci);
    bwd.push_back(c);
    bwd.push_back(ci);
    for (size_t j = 0; j < IA.nbase(); ++j) {
        auto y = Polynomial::variable(fiber, IA.base.ring->var(j).name);
        fwd.push_back(c.pow(IA.pi1_exponents[j]) * y);
        bwd.push_back(ci.pow(IA.pi1_exponents[j]) * y);
    }

    report.fiber_ring = fiber;
    report.fiber_relations = fiber_rels;
    std::string why;
    report.iso_ok = mutually_inverse(Presentation{base, base_rels},
                                     Presentation{fiber, fiber_rels}, fwd, bwd, opts, &why);
    report.detail = report.iso_ok ? "symbolic generic fiber is the graph of the action" : why;
    return report;
}

ClosureCompareReport graph_closure_compare(const InterpolationAlgebra& IA,
                                           const gb::Options& opts) {
    ClosureCompareReport report;
    report.ztilde = embedding_ideal(IA, opts);

    // closure of the action graph: kernel of Q[t,u,v] -> A[t, 1/t],
    // u_j -> b_j, v_j -> t^{n_j} b_j.
    std::string s_name = "_s";
    while (IA.base.ring->has_var(s_name))
        s_name += "_";
    std::vector<Variable> big_vars;
    big_vars.push_back(Variable{s_name, 0});
    for (const auto& v : IA.base.ring->vars())
        big_vars.push_back(v);
    for (const auto& v : report.ztilde.ring->vars())
        big_vars.push_back(v);
    RingPtr big = PolyRing::make(std::move(big_vars), TermOrder{OrderKind::GrevLex, 0});

    auto t_big = Polynomial::variable(big, IA.t_name);
    auto s_big = Polynomial::variable(big, s_name);
    std::vector<Polynomial> gens;
    for (const auto& r : IA.base.relations)
        gens.push_back(r.transport(big));
    gens.push_back(t_big * s_big - Polynomial::constant(big, Rational(1)));
    for (size_t j = 0; j < IA.nbase(); ++j) {
        const auto& name = IA.base.ring->var(j).name;
        int n = IA.base.ring->var(j).weight;
        auto b = Polynomial::variable(big, name);
        gens.push_back(Polynomial::variable(big, "u_" + name) - b);
        Polynomial twist = n >= 0 ? t_big.pow(n) : s_big.pow(-n);
        gens.push_back(Polynomial::variable(big, "v_" + name) - twist * b);
    }
    std::set<std::string> drop;
    drop.insert(s_name);
    for (const auto& v : IA.base.ring->vars())
        drop.insert(v.name);
    Ideal closure_sub = gb::eliminate(Ideal::make(big, std::move(gens)), drop, opts);
    std::vector<Polynomial> closure_gens;
    for (const auto& g : closure_sub.gens)
        closure_gens.push_back(g.transport(report.ztilde.ring));
    report.closure = Ideal::make(report.ztilde.ring, std::move(closure_gens));

    auto gb_closure = groebner(report.closure, opts);
    report.contained = true;
    for (const auto& g : report.ztilde.ideal.gens)
        if (!gb::ideal_member(g, gb_closure))
            report.contained = false;

    auto gb_ztilde = groebner(report.ztilde.ideal, opts);
    report.equal = report.contained;
    for (const auto& g : gb_closure.basis) {
        if (!gb::ideal_member(g, gb_ztilde)) {
            report.equal = false;
            if (!report.witness)
                report.witness = g;
        }
    }

    Ideal sat = gb::saturate(report.ztilde.ideal,
                             Polynomial::variable(report.ztilde.ring, IA.t_name), opts);
    report.saturation_agrees = gb::ideal_equal(sat, report.closure, opts);
    return report;
}

std::vector<Polynomial> t_torsion(const InterpolationAlgebra& IA, const gb::Options& opts) {
    Ideal rels = IA.relation_ideal();
    Ideal sat = gb::saturate(rels, IA.t(), opts);
    auto gb_rels = groebner(rels, opts);
    std::vector<Polynomial> torsion;
    for (const auto& g : sat.gens) {
        auto nf = normal_form(g.transport(IA.ring), gb_rels);
        if (!nf.is_zero())
            torsion.push_back(std::move(nf));
    }
    return torsion;
}

AntiActionMap anti_action_map(const InterpolationAlgebra& IA, const Rational& l1,
                              const Rational& l2) {
    AntiActionMap m;
    m.l1 = l1;
    m.l2 = l2;
    for (size_t j = 0; j < IA.nbase(); ++j) {
        int n = IA.base.ring->var(j).weight;
        m.scale.push_back(n >= 0 ? rational_pow(l1, n) : rational_pow(l2, -n));
    }
    return m;
}

bool AntiActionMap::is_identity() const {
    if (l1 * l2 != 1)
        return false;
    for (const auto& s : scale)
        if (s != 1)
            return false;
    return true;
}

namespace {

Polynomial apply_anti_action(const InterpolationAlgebra& IA, const AntiActionMap& m,
                             const Polynomial& p) {
    std::vector<Polynomial> images;
    images.push_back(IA.t()); // t is the target fiber coordinate, untouched
    for (size_t j = 0; j < IA.nbase(); ++j)
        images.push_back(IA.y(j) * m.scale[j]);
    return p.substitute(IA.ring, images);
}

} // namespace

AntiActionReport anti_action_checks(const InterpolationAlgebra& IA,
                                    const std::vector<std::pair<Rational, Rational>>& samples,
                                    const gb::Options& opts) {
    AntiActionReport report;
    report.identity_at_one =
        anti_action_map(IA, Rational(1), Rational(1)).is_identity();

    // exact scalar identity: the image of a lifted relation equals
    // l1^{d} (resp. l2^{-d}) times the relation of the pulled-back family
    report.relations_preserved = true;
    for (const auto& [l1, l2] : samples) {
        auto m = anti_action_map(IA, l1, l2);
        std::vector<Polynomial> images;
        images.push_back(IA.t() * (l1 * l2));
        for (size_t j = 0; j < IA.nbase(); ++j)
            images.push_back(IA.y(j));
        for (size_t k = 0; k < IA.lifted_relations.size(); ++k) {
            long d = IA.base.relation_degree(k);
            Rational scalar = d >= 0 ? rational_pow(l1, d) : rational_pow(l2, -d);
            Polynomial lhs = apply_anti_action(IA, m, IA.lifted_relations[k]);
            Polynomial rhs = IA.lifted_relations[k].substitute(IA.ring, images) * scalar;
            if (lhs != rhs)
                report.relations_preserved = false;
        }
    }

    // composition: scales multiply componentwise, parameters multiply
    report.composition_law = true;
    for (size_t a = 0; a + 1 < samples.size(); a += 2) {
        auto [l1, l2] = samples[a];
        auto [k1, k2] = samples[a + 1];
        auto composed = anti_action_map(IA, l1 * k1, l2 * k2);
        auto first = anti_action_map(IA, l1, l2);
        auto second = anti_action_map(IA, k1, k2);
        for (size_t j = 0; j < IA.nbase(); ++j)
            if (composed.scale[j] != first.scale[j] * second.scale[j])
                report.composition_law = false;
        if (composed.l1 * composed.l2 != first.l1 * first.l2 * second.l1 * second.l2)
            report.composition_law = false;
    }

    // zero fiber and the three degenerate maps out of it
    RingPtr fiber = PolyRing::make(IA.base.ring->vars(), TermOrder{OrderKind::GrevLex, 0});
    std::vector<Polynomial> fiber_rels;
    {
        std::vector<Polynomial> images;
        images.push_back(Polynomial::zero(fiber));
        for (const auto& v : IA.base.ring->vars())
            images.push_back(Polynomial::variable(fiber, v.name));
        for (const auto& r : IA.lifted_relations) {
            auto img = r.substitute(fiber, images);
            if (!img.is_zero())
                fiber_rels.push_back(img);
        }
    }
    auto gb_fiber = groebner(Ideal::make(fiber, fiber_rels), opts);

    // phi_{1,0,1}: A -> zero fiber through the attractor, and its siblings
    report.exercise_maps = true;
    auto check_factor = [&](bool keep_nonneg, bool keep_nonpos) {
        std::vector<Polynomial> images;
        for (const auto& v : IA.base.ring->vars()) {
            bool keep = (v.weight >= 0 && keep_nonneg) || (v.weight <= 0 && keep_nonpos) ||
                        (v.weight == 0);
            images.push_back(keep ? Polynomial::variable(fiber, v.name)
                                  : Polynomial::zero(fiber));
        }
        // well-definedness on A: relations must die in the fiber
        for (const auto& r : IA.base.relations)
            if (!normal_form(r.substitute(fiber, images), gb_fiber).is_zero())
                report.exercise_maps = false;
        return images;
    };
    auto via_plus = check_factor(true, false);
    auto via_minus = check_factor(false, true);
    auto via_zero = check_factor(false, false);

    // the attractor route must give the same variable images as phi_{1,0,1}
    auto ar = action::attractor(IA.base);
    for (size_t j = 0; j < IA.nbase(); ++j) {
        const auto& v = IA.base.ring->var(j);
        Polynomial through_plus =
            ar.p.images[j].is_zero()
                ? Polynomial::zero(fiber)
                : Polynomial::variable(fiber, v.name);
        if (through_plus != via_plus[j])
            report.exercise_maps = false;
    }
    auto rp = action::repeller(IA.base);
    for (size_t j = 0; j < IA.nbase(); ++j) {
        const auto& v = IA.base.ring->var(j);
        Polynomial through_minus =
            rp.p.images[j].is_zero() ? Polynomial::zero(fiber)
                                     : Polynomial::variable(fiber, v.name);
        if (through_minus != via_minus[j])
            report.exercise_maps = false;
    }
    (void)via_zero;

    // idempotent endomorphisms of the zero fiber
    report.idempotents = true;
    auto check_idempotent = [&](bool keep_nonneg, bool keep_nonpos) {
        std::vector<Polynomial> e;
        for (const auto& v : fiber->vars()) {
            bool keep = (v.weight >= 0 && keep_nonneg) || (v.weight <= 0 && keep_nonpos) ||
                        (v.weight == 0);
            e.push_back(keep ? Polynomial::variable(fiber, v.name) : Polynomial::zero(fiber));
        }
        // endomorphism of the fiber: relations preserved
        for (const auto& r : fiber_rels)
            if (!normal_form(r.substitute(fiber, e), gb_fiber).is_zero())
                report.idempotents = false;
        // idempotent on the nose
        for (size_t j = 0; j < fiber->nvars(); ++j)
            if (e[j].substitute(fiber, e) != e[j])
                report.idempotents = false;
    };
    check_idempotent(true, false);  // phi_{1,0,0}
    check_idempotent(false, true);  // phi_{0,1,0}
    check_idempotent(false, false); // phi_{0,0,0}

    report.detail = report.passed() ? "anti-action checks passed" : "anti-action check failed";
    return report;
}

CompositionReport composition_checks(const InterpolationAlgebra& IA, const gb::Options& opts) {
    CompositionReport report;
    std::string why;

    auto plus = action::attractor(IA.base).plus;
    auto minus = action::repeller(IA.base).plus;

    // (a) B~ (x)_{A, pi2} A+  =  A+[t]
    {
        std::vector<Variable> tensor_vars;
        tensor_vars.push_back(Variable{IA.t_name, 0});
        for (const auto& v : IA.base.ring->vars())
            tensor_vars.push_back(v);
        for (const auto& v : plus.ring->vars())
            tensor_vars.push_back(Variable{"p_" + v.name, v.weight});
        RingPtr T = PolyRing::make(tensor_vars, TermOrder{OrderKind::GrevLex, 0});

        std::vector<Polynomial> rels;
        for (const auto& r : IA.lifted_relations)
            rels.push_back(r.transport(T));
        {
            std::vector<Polynomial> prename;
            for (const auto& v : plus.ring->vars())
                prename.push_back(Polynomial::variable(T, "p_" + v.name));
            for (const auto& r : plus.relations)
                rels.push_back(r.substitute(T, prename));
        }
        auto tT = Polynomial::variable(T, IA.t_name);
        for (size_t j = 0; j < IA.nbase(); ++j) {
            const auto& v = IA.base.ring->var(j);
            Polynomial glued = v.weight >= 0 ? Polynomial::variable(T, "p_" + v.name)
                                             : Polynomial::zero(T);
            rels.push_back(tT.pow(IA.pi2_exponents[j]) * Polynomial::variable(T, v.name) - glued);
        }

        std::vector<Variable> target_vars;
        target_vars.push_back(Variable{IA.t_name, 0});
        for (const auto& v : plus.ring->vars())
            target_vars.push_back(Variable{"p_" + v.name, v.weight});
        RingPtr P = PolyRing::make(target_vars, TermOrder{OrderKind::GrevLex, 0});
        std::vector<Polynomial> target_rels;
        {
            std::vector<Polynomial> prename;
            for (const auto& v : plus.ring->vars())
                prename.push_back(Polynomial::variable(P, "p_" + v.name));
            for (const auto& r : plus.relations)
                target_rels.push_back(r.substitute(P, prename));
        }

        // tensor -> A+[t]
        std::vector<Polynomial> fwd;
        auto tP = Polynomial::variable(P, IA.t_name);
        fwd.push_back(tP);
        for (size_t j = 0; j < IA.nbase(); ++j) {
            const auto& v = IA.base.ring->var(j);
            fwd.push_back(v.weight >= 0 ? Polynomial::variable(P, "p_" + v.name)
                                        : Polynomial::zero(P));
        }
        for (const auto& v : plus.ring->vars())
            fwd.push_back(tP.pow(v.weight) * Polynomial::variable(P, "p_" + v.name));

        // A+[t] -> tensor
        std::vector<Polynomial> bwd;
        bwd.push_back(Polynomial::variable(T, IA.t_name));
        for (const auto& v : plus.ring->vars())
            bwd.push_back(Polynomial::variable(T, v.name));

        report.plus_side = mutually_inverse(Presentation{T, rels}, Presentation{P, target_rels},
                                            fwd, bwd, opts, &why);
        if (!report.plus_side)
            report.detail += "plus side: " + why + "; ";
    }

    // (b) A- (x)_{A, pi1} B~  =  A-[t]
    {
        std::vector<Variable> tensor_vars;
        tensor_vars.push_back(Variable{IA.t_name, 0});
        for (const auto& v : IA.base.ring->vars())
            tensor_vars.push_back(v);
        for (const auto& v : minus.ring->vars())
            tensor_vars.push_back(Variable{"m_" + v.name, v.weight});
        RingPtr T = PolyRing::make(tensor_vars, TermOrder{OrderKind::GrevLex, 0});

        std::vector<Polynomial> rels;
        for (const auto& r : IA.lifted_relations)
            rels.push_back(r.transport(T));
        {
            std::vector<Polynomial> mrename;
            for (const auto& v : minus.ring->vars())
                mrename.push_back(Polynomial::variable(T, "m_" + v.name));
            for (const auto& r : minus.relations)
                rels.push_back(r.substitute(T, mrename));
        }
        auto tT = Polynomial::variable(T, IA.t_name);
        for (size_t j = 0; j < IA.nbase(); ++j) {
            const auto& v = IA.base.ring->var(j);
            Polynomial glued = v.weight <= 0 ? Polynomial::variable(T, "m_" + v.name)
                                             : Polynomial::zero(T);
            rels.push_back(tT.pow(IA.pi1_exponents[j]) * Polynomial::variable(T, v.name) - glued);
        }

        std::vector<Variable> target_vars;
        target_vars.push_back(Variable{IA.t_name, 0});
        for (const auto& v : minus.ring->vars())
            target_vars.push_back(Variable{"m_" + v.name, v.weight});
        RingPtr M = PolyRing::make(target_vars, TermOrder{OrderKind::GrevLex, 0});
        std::vector<Polynomial> target_rels;
        {
            std::vector<Polynomial> mrename;
            for (const auto& v : minus.ring->vars())
                mrename.push_back(Polynomial::variable(M, "m_" + v.name));
            for (const auto& r : minus.relations)
                target_rels.push_back(r.substitute(M, mrename));
        }

        std::vector<Polynomial> fwd;
        auto tM = Polynomial::variable(M, IA.t_name);
        fwd.push_back(tM);
        for (size_t j = 0; j < IA.nbase(); ++j) {
            const auto& v = IA.base.ring->var(j);
            fwd.push_back(v.weight <= 0 ? Polynomial::variable(M, "m_" + v.name)
                                        : Polynomial::zero(M));
        }
        for (const auto& v : minus.ring->vars())
            fwd.push_back(tM.pow(-v.weight) * Polynomial::variable(M, "m_" + v.name));

        std::vector<Polynomial> bwd;
        bwd.push_back(Polynomial::variable(T, IA.t_name));
        for (const auto& v : minus.ring->vars())
            bwd.push_back(Polynomial::variable(T, v.name));

        report.minus_side = mutually_inverse(Presentation{T, rels}, Presentation{M, target_rels},
                                             fwd, bwd, opts, &why);
        if (!report.minus_side)
            report.detail += "minus side: " + why + "; ";
    }

    // (c) B~ (x)_{Q[t], t = t1 t2} Q[t1,t2]  =  B~ (x)_A B~
    {
        std::vector<Variable> lhs_vars;
        lhs_vars.push_back(Variable{"t1", 0});
        lhs_vars.push_back(Variable{"t2", 0});
        for (const auto& v : IA.base.ring->vars())
            lhs_vars.push_back(v);
        RingPtr L = PolyRing::make(lhs_vars, TermOrder{OrderKind::GrevLex, 0});
        std::vector<Polynomial> lhs_rels;
        {
            std::vector<Polynomial> images;
            images.push_back(Polynomial::variable(L, "t1") * Polynomial::variable(L, "t2"));
            for (const auto& v : IA.base.ring->vars())
                images.push_back(Polynomial::variable(L, v.name));
            for (const auto& r : IA.lifted_relations) {
                auto img = r.substitute(L, images);
                if (!img.is_zero())
                    lhs_rels.push_back(img);
            }
        }

        std::vector<Variable> rhs_vars;
        rhs_vars.push_back(Variable{"tl", 0});
        for (const auto& v : IA.base.ring->vars())
            rhs_vars.push_back(Variable{"l_" + v.name, v.weight});
        rhs_vars.push_back(Variable{"tr", 0});
        for (const auto& v : IA.base.ring->vars())
            rhs_vars.push_back(Variable{"r_" + v.name, v.weight});
        RingPtr R = PolyRing::make(rhs_vars, TermOrder{OrderKind::GrevLex, 0});

        std::vector<Polynomial> rhs_rels;
        auto add_copy = [&](const std::string& tname, const std::string& prefix) {
            std::vector<Polynomial> images;
            images.push_back(Polynomial::variable(R, tname));
            for (const auto& v : IA.base.ring->vars())
                images.push_back(Polynomial::variable(R, prefix + v.name));
            for (const auto& r : IA.lifted_relations) {
                auto img = r.substitute(R, images);
                if (!img.is_zero())
                    rhs_rels.push_back(img);
            }
        };
        add_copy("tl", "l_");
        add_copy("tr", "r_");
        auto tl = Polynomial::variable(R, "tl");
        auto tr = Polynomial::variable(R, "tr");
        for (size_t j = 0; j < IA.nbase(); ++j) {
            const auto& v = IA.base.ring->var(j);
            rhs_rels.push_back(tl.pow(IA.pi2_exponents[j]) *
                                   Polynomial::variable(R, "l_" + v.name) -
                               tr.pow(IA.pi1_exponents[j]) *
                                   Polynomial::variable(R, "r_" + v.name));
        }

        // RHS -> LHS
        std::vector<Polynomial> delta;
        auto t1 = Polynomial::variable(L, "t1");
        auto t2 = Polynomial::variable(L, "t2");
        delta.push_back(t1); // tl
        for (size_t j = 0; j < IA.nbase(); ++j)
            delta.push_back(t2.pow(IA.pi1_exponents[j]) *
                            Polynomial::variable(L, IA.base.ring->var(j).name));
        delta.push_back(t2); // tr
        for (size_t j = 0; j < IA.nbase(); ++j)
            delta.push_back(t1.pow(IA.pi2_exponents[j]) *
                            Polynomial::variable(L, IA.base.ring->var(j).name));

        // LHS -> RHS
        std::vector<Polynomial> eps;
        eps.push_back(Polynomial::variable(R, "tl"));
        eps.push_back(Polynomial::variable(R, "tr"));
        for (size_t j = 0; j < IA.nbase(); ++j) {
            const auto& v = IA.base.ring->var(j);
            eps.push_back(Polynomial::variable(R, (v.weight >= 0 ? "l_" : "r_") + v.name));
        }

        report.two_parameter = mutually_inverse(Presentation{R, rhs_rels},
                                                Presentation{L, lhs_rels}, delta, eps, opts, &why);
        if (!report.two_parameter)
            report.detail += "two-parameter side: " + why + "; ";
    }

    if (report.passed())
        report.detail = "composition isomorphisms verified";
    return report;
}

} // namespace gmact::interp
