#include "gmact/groebner.hpp"
#include "gmact/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace gmact::gb {

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
    Ideal I;
    I.ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        if (g.ring() != I.ring && !g.ring()->same_variables(*I.ring))
            throw ring_mismatch("ideal generator not in the stated ring");
        I.gens.push_back(std::move(g));
    }
    return I;
}

Options default_options() {
    Options opts;
    if (const char* env = std::getenv("GM_GB_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            opts.spair_budget = v;
    }
    return opts;
}

namespace {

void make_monic(Polynomial& f) {
    if (f.is_zero())
        return;
    const Rational& lc = f.leading_term().coeff;
    if (lc != 1)
        f = f * (Rational(1) / lc);
}

struct CriticalPair {
    size_t i, j;
    long sugar;
    Exponents lcm;
};

// Total order on pairs: sugar, then lcm by the ring's term order, then indices.
struct PairLess {
    const PolyRing* ring;
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        int c = ring->compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.j != b.j)
            return a.j < b.j;
        return a.i < b.i;
    }
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const auto& ltf = f.leading_term();
    const auto& ltg = g.leading_term();
    Exponents l = exp_lcm(ltf.mono, ltg.mono);
    Polynomial a = f.times_term(Rational(1) / ltf.coeff, exp_div(l, ltf.mono));
    Polynomial b = g.times_term(Rational(1) / ltg.coeff, exp_div(l, ltg.mono));
    return a - b;
}

Polynomial full_division(const Polynomial& f, const std::vector<Polynomial>& G,
                                      const std::vector<long>* sugar_of, long* f_sugar) {
    // complete remainder: every term ends up irreducible against G
    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        bool divided = false;
        for (size_t i = 0; i < G.size(); ++i) {
            if (G[i].is_zero())
                continue;
            const Term& ltg = G[i].leading_term();
            if (!exp_divides(ltg.mono, lt.mono))
                continue;
            Exponents q = exp_div(lt.mono, ltg.mono);
            Rational c = lt.coeff / ltg.coeff;
            if (sugar_of && f_sugar)
                *f_sugar = std::max(*f_sugar,
                                    (*sugar_of)[i] + exp_total_degree(q));
            h = h - G[i].times_term(c, q);
            divided = true;
            break;
        }
        if (!divided) {
            remainder.push_back(lt);
            h = h - Polynomial::monomial(h.ring(), lt.mono, lt.coeff);
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(remainder));
}

// Gebauer-Moller style pair update: chain criterion against old pairs,
// lcm-minimal filtering and the product criterion for the new ones.
void update_pairs(std::vector<Polynomial>& G, std::vector<long>& sugar,
                  std::vector<CriticalPair>& pairs, Polynomial h, long h_sugar) {
    const size_t new_idx = G.size();
    const Exponents& lm_h = h.leading_term().mono;
    const auto* ring = h.ring().get();

    std::vector<CriticalPair> fresh;
    for (size_t k = 0; k < G.size(); ++k) {
        const Exponents& lm_k = G[k].leading_term().mono;
        Exponents l = exp_lcm(lm_k, lm_h);
        long s = std::max(sugar[k] + exp_total_degree(l) - exp_total_degree(lm_k),
                          h_sugar + exp_total_degree(l) - exp_total_degree(lm_h));
        fresh.push_back({k, new_idx, s, std::move(l)});
    }

    // chain criterion: drop old (i,j) whose lcm is a proper multiple through h
    std::vector<CriticalPair> kept;
    for (auto& cp : pairs) {
        const Exponents& li = G[cp.i].leading_term().mono;
        const Exponents& lj = G[cp.j].leading_term().mono;
        if (exp_divides(lm_h, cp.lcm) && exp_lcm(li, lm_h) != cp.lcm &&
            exp_lcm(lj, lm_h) != cp.lcm)
            continue;
        kept.push_back(std::move(cp));
    }
    pairs = std::move(kept);

    // among new pairs keep one representative per minimal lcm
    std::stable_sort(fresh.begin(), fresh.end(), [&](const CriticalPair& a, const CriticalPair& b) {
        int c = ring->compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        return a.i < b.i;
    });
    std::vector<CriticalPair> minimal;
    for (auto& cp : fresh) {
        bool redundant = false;
        for (const auto& m : minimal) {
            if (exp_divides(m.lcm, cp.lcm)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            minimal.push_back(std::move(cp));
    }

    // product criterion
    for (auto& cp : minimal) {
        const Exponents& lm_k = G[cp.i].leading_term().mono;
        if (!exp_is_one(exp_gcd(lm_k, lm_h)))
            pairs.push_back(std::move(cp));
    }

    G.push_back(std::move(h));
    sugar.push_back(h_sugar);
}

void interreduce(std::vector<Polynomial>& G) {
    // drop generators whose leading term another one divides
    size_t i = 0;
    while (i < G.size()) {
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (j == i)
                continue;
            if (exp_divides(G[j].leading_term().mono, G[i].leading_term().mono)) {
                // on equal leading monomials keep the earlier element
                if (G[j].leading_term().mono == G[i].leading_term().mono && j > i)
                    continue;
                redundant = true;
                break;
            }
        }
        if (redundant)
            G.erase(G.begin() + i);
        else
            ++i;
    }
    // fully reduce each element against the others
    for (size_t k = 0; k < G.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(G.size() - 1);
        for (size_t j = 0; j < G.size(); ++j)
            if (j != k)
                others.push_back(G[j]);
        G[k] = full_division(G[k], others, nullptr, nullptr);
        make_monic(G[k]);
    }
}

} // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G) {
    if (!G.empty()) {
        if (p.ring() != G.front().ring() && !p.ring()->same_variables(*G.front().ring()))
            throw ring_mismatch("normal_form: polynomial and basis in different rings");
    }
    return full_division(p, G, nullptr, nullptr);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb.basis);
}

GroebnerBasis groebner(const Ideal& ideal, const Options& opts) {
    GroebnerBasis result;
    result.ring = ideal.ring;

    std::vector<Polynomial> G;
    for (auto g : ideal.gens) {
        make_monic(g);
        G.push_back(std::move(g));
    }
    if (G.empty())
        return result;

    std::vector<Polynomial> staged;
    std::vector<long> sugar;
    std::vector<CriticalPair> pairs;
    for (auto& g : G) {
        long s = exp_total_degree(g.leading_term().mono); // classical sugar seed
        update_pairs(staged, sugar, pairs, std::move(g), s);
    }
    G = std::move(staged);

    PairLess less{ideal.ring.get()};
    size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > opts.spair_budget)
            throw resource_limit("Groebner S-pair budget exceeded (" +
                                 std::to_string(opts.spair_budget) + ")");
        auto it = std::min_element(pairs.begin(), pairs.end(), less);
        CriticalPair cp = *it;
        pairs.erase(it);

        Polynomial s = s_polynomial(G[cp.i], G[cp.j]);
        long h_sugar = cp.sugar;
        Polynomial h = full_division(s, G, &sugar, &h_sugar);
        if (h.is_zero())
            continue;
        make_monic(h);
        update_pairs(G, sugar, pairs, std::move(h), h_sugar);
    }

    interreduce(G);
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ideal.ring->compare(a.leading_term().mono, b.leading_term().mono) < 0;
    });
    result.basis = std::move(G);
    return result;
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

bool ideal_member(const Polynomial& p, const Ideal& I, const Options& opts) {
    return ideal_member(p, groebner(I, opts));
}

bool ideal_equal(const Ideal& I, const Ideal& J, const Options& opts) {
    if (I.ring != J.ring && !I.ring->same_variables(*J.ring))
        throw ring_mismatch("ideal_equal: different rings");
    GroebnerBasis gi = groebner(I, opts);
    GroebnerBasis gj = groebner(J, opts);
    for (const auto& g : J.gens)
        if (!ideal_member(g, gi))
            return false;
    for (const auto& g : I.gens)
        if (!ideal_member(g, gj))
            return false;
    return true;
}

bool is_unit_ideal(const GroebnerBasis& gb) {
    return gb.basis.size() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero();
}

Ideal eliminate(const Ideal& I, const std::set<std::string>& drop, const Options& opts) {
    for (const auto& name : drop)
        I.ring->index_of(name); // validate

    std::vector<Variable> dropped, kept;
    for (const auto& v : I.ring->vars()) {
        if (drop.count(v.name))
            dropped.push_back(v);
        else
            kept.push_back(v);
    }
    RingPtr elim_ring = concat_rings(dropped, kept,
                                     TermOrder{OrderKind::Block, dropped.size()});
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens)
        gens.push_back(g.transport(elim_ring));
    GroebnerBasis gb = groebner(Ideal::make(elim_ring, std::move(gens)), opts);

    std::vector<std::string> kept_names;
    for (const auto& v : kept)
        kept_names.push_back(v.name);
    RingPtr out_ring = subring(elim_ring, kept_names, TermOrder{OrderKind::GrevLex, 0});

    std::vector<Polynomial> out;
    for (const auto& g : gb.basis) {
        bool pure = true;
        for (const auto& t : g.terms()) {
            for (size_t i = 0; i < dropped.size() && pure; ++i)
                if (t.mono[i] != 0)
                    pure = false;
            if (!pure)
                break;
        }
        if (pure)
            out.push_back(g.transport(out_ring));
    }
    return Ideal::make(out_ring, std::move(out));
}

Ideal saturate(const Ideal& I, const Polynomial& f, const Options& opts) {
    if (f.is_zero())
        throw input_error("saturate: f must be nonzero");
    std::string inv = "_sat";
    while (I.ring->has_var(inv))
        inv += "_";
    RingPtr ext = concat_rings({Variable{inv, 0}}, I.ring->vars(), TermOrder{OrderKind::Block, 1});
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens)
        gens.push_back(g.transport(ext));
    Polynomial w = Polynomial::variable(ext, inv);
    gens.push_back(Polynomial::constant(ext, Rational(1)) - w * f.transport(ext));
    Ideal elim = eliminate(Ideal::make(ext, std::move(gens)), {inv}, opts);

    std::vector<Polynomial> out;
    for (const auto& g : elim.gens)
        out.push_back(g.transport(I.ring));
    return Ideal::make(I.ring, std::move(out));
}

Ideal ring_map_kernel(const RingPtr& source, const std::vector<Polynomial>& images,
                      const Ideal& target_relations, const Options& opts) {
    if (images.size() != source->nvars())
        throw input_error("ring_map_kernel: one image per source variable required");
    const RingPtr& target = target_relations.ring;

    // source variables may clash with target names; rename them internally
    std::vector<Variable> src_vars;
    for (const auto& v : source->vars()) {
        std::string name = v.name;
        while (target->has_var(name))
            name = "_" + name;
        src_vars.push_back(Variable{name, v.weight});
    }
    RingPtr big = concat_rings(target->vars(), src_vars,
                               TermOrder{OrderKind::Block, target->nvars()});
    std::vector<Polynomial> gens;
    for (const auto& g : target_relations.gens)
        gens.push_back(g.transport(big));
    for (size_t i = 0; i < images.size(); ++i) {
        Polynomial u = Polynomial::variable(big, src_vars[i].name);
        gens.push_back(u - images[i].transport(big));
    }
    std::set<std::string> drop;
    for (const auto& v : target->vars())
        drop.insert(v.name);
    Ideal elim = eliminate(Ideal::make(big, std::move(gens)), drop, opts);

    // map back positionally: kept variables appear in source order
    std::vector<Polynomial> out;
    for (const auto& g : elim.gens) {
        std::vector<Term> terms;
        for (const auto& t : g.terms())
            terms.push_back({t.mono, t.coeff});
        out.push_back(Polynomial::from_terms(source, std::move(terms)));
    }
    return Ideal::make(source, std::move(out));
}

} // namespace gmact::gb
