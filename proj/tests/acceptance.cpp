// Acceptance suite: one line per criterion, executed end to end against the
// bundled fixture corpus. Exit code is the number of failing criteria.
#include "gmact/catkit.hpp"
#include "gmact/charts.hpp"
#include "gmact/cli.hpp"
#include "gmact/interpolation.hpp"
#include "gmact/parse.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gmact;
using Clock = std::chrono::steady_clock;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& label, long budget_ms,
                   const std::function<bool(std::string&)>& body) {
        std::string note;
        auto start = Clock::now();
        bool ok = false;
        try {
            ok = body(note);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        long ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
        if (ms > budget_ms) {
            ok = false;
            note += (note.empty() ? "" : "; ") + std::string("over time budget: ") +
                    std::to_string(ms) + " > " + std::to_string(budget_ms) + " ms";
        }
        if (!ok)
            ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " ["
                  << ms << " ms]";
        if (!note.empty())
            std::cout << "  -- " << note;
        std::cout << "\n";
    }
};

action::GradedAlgebra algebra(std::vector<Variable> vars, std::vector<std::string> rels) {
    auto ring = PolyRing::make(std::move(vars));
    std::vector<Polynomial> ps;
    for (const auto& s : rels)
        ps.push_back(parse_polynomial(ring, s));
    return action::GradedAlgebra::make(ring, std::move(ps));
}

// deterministic generator: <= 4 variables, weights in [-3,3], <= 2 relations
struct Rng {
    uint64_t state = 0x2545f4914f6cdd1dull;
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

void all_monomials(size_t nvars, int bound, Exponents& cur, size_t pos,
                   std::vector<Exponents>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    int used = 0;
    for (size_t i = 0; i < pos; ++i)
        used += cur[i];
    for (int e = 0; e + used <= bound; ++e) {
        cur[pos] = e;
        all_monomials(nvars, bound, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

action::GradedAlgebra random_graded_algebra(Rng& rng) {
    long nv = rng.range(1, 4);
    std::vector<Variable> vars;
    for (long i = 0; i < nv; ++i)
        vars.push_back({"v" + std::to_string(i), static_cast<int>(rng.range(-3, 3))});
    auto ring = PolyRing::make(std::move(vars));
    std::vector<Exponents> monos;
    Exponents cur(ring->nvars(), 0);
    all_monomials(ring->nvars(), 3, cur, 0, monos);
    std::vector<Polynomial> rels;
    long nrel = rng.range(0, 2);
    for (long k = 0; k < nrel; ++k) {
        const auto& seed = monos[rng.next() % monos.size()];
        long d = ring->weighted_degree(seed);
        std::vector<Term> terms{{seed, Rational(1)}};
        for (const auto& m : monos)
            if (ring->weighted_degree(m) == d && rng.range(0, 3) == 0)
                terms.push_back({m, Rational(rng.range(-4, 4))});
        auto p = Polynomial::from_terms(ring, std::move(terms));
        if (!p.is_zero() && !p.is_constant())
            rels.push_back(p);
    }
    return action::GradedAlgebra::make(ring, rels);
}

std::vector<cli::AlgebraSpec> load_corpus() {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(GMACT_FIXTURES_DIR))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<cli::AlgebraSpec> specs;
    for (const auto& p : paths)
        specs.push_back(cli::load_spec(p));
    return specs;
}

} // namespace

int main() {
    Harness h;
    auto corpus = load_corpus();

    // 1. weight-n line: the family is cut out by exactly one binomial
    for (int n = -3; n <= 3; ++n) {
        h.criterion(1, "line of weight " + std::to_string(n) + ": embedding ideal", 1000,
                    [&](std::string& note) {
                        auto A = algebra({{"x", n}}, {});
                        auto IA = interp::build_interpolation(A);
                        auto E = interp::embedding_ideal(IA);
                        std::string expected =
                            n >= 0 ? "v_x - t^" + std::to_string(n) + "*u_x"
                                   : "u_x - t^" + std::to_string(-n) + "*v_x";
                        if (n == 0)
                            expected = "v_x - u_x";
                        if (n == 1)
                            expected = "v_x - t*u_x";
                        if (n == -1)
                            expected = "u_x - t*v_x";
                        auto target = gb::Ideal::make(
                            E.ring, {parse_polynomial(E.ring, expected)});
                        bool ok = gb::ideal_equal(E.ideal, target);
                        if (!ok)
                            note = "got " + (E.ideal.gens.empty() ? std::string("(0)")
                                                                  : E.ideal.gens[0].str());
                        return ok;
                    });
    }

    // 2. degenerate hyperbola package
    h.criterion(2, "degenerate hyperbola: family, fibers, torsion", 2000, [&](std::string& note) {
        auto A = algebra({{"x", 1}, {"y", -1}}, {"x*y"});
        auto IA = interp::build_interpolation(A);
        bool ok = true;
        auto expected = gb::Ideal::make(IA.ring, {parse_polynomial(IA.ring, "t*x*y")});
        if (!gb::ideal_equal(IA.relation_ideal(), expected)) {
            ok = false;
            note += "family ideal mismatch; ";
        }
        auto f1 = interp::fiber_at(IA, Rational(1));
        if (!f1.iso_ok || f1.fiber_relations.size() != 1 ||
            f1.fiber_relations[0] != parse_polynomial(f1.fiber_ring, "x*y")) {
            ok = false;
            note += "fiber at 1 is not A; ";
        }
        auto f0 = interp::fiber_at(IA, Rational(0));
        if (!f0.iso_ok || !f0.fiber_relations.empty() || f0.product_ring->nvars() != 2 ||
            !f0.product_relations.empty()) {
            ok = false;
            note += "fiber at 0 is not the free fiber product; ";
        }
        auto torsion = interp::t_torsion(IA);
        if (torsion.size() != 1 || torsion[0] != parse_polynomial(IA.ring, "x*y")) {
            ok = false;
            note += "torsion is not (x*y); ";
        }
        return ok;
    });

    // 3. singular counterexample and smooth controls
    h.criterion(3, "hypersurface closure: strict inclusion with witness", 30000,
                [&](std::string& note) {
                    auto A = algebra({{"x1", 1}, {"x2", 1}, {"y1", -1}, {"y2", -1}},
                                     {"x1*y1 + x2*y2"});
                    auto IA = interp::build_interpolation(A);
                    auto rep = interp::graph_closure_compare(IA);
                    bool ok = rep.contained && !rep.equal && rep.witness.has_value();
                    auto w = parse_polynomial(rep.ztilde.ring, "u_x1*v_y1 + u_x2*v_y2");
                    if (!gb::ideal_member(w, gb::groebner(rep.closure))) {
                        ok = false;
                        note += "expected witness not in the closure; ";
                    }
                    if (gb::ideal_member(w, gb::groebner(rep.ztilde.ideal))) {
                        ok = false;
                        note += "expected witness lies in the family ideal; ";
                    }
                    return ok;
                });
    {
        std::vector<action::GradedAlgebra> controls = {
            algebra({{"x", 1}, {"y", -1}}, {}),
            algebra({{"x", 1}, {"y", 0}, {"z", -1}}, {}),
            algebra({{"x1", 1}, {"x2", 2}, {"y", -1}}, {}),
            algebra({{"a", 2}, {"b", 1}, {"c", -1}, {"d", -2}}, {}),
        };
        for (size_t i = 0; i < controls.size(); ++i) {
            h.criterion(3, "smooth control " + std::to_string(i + 1) + ": closure equality",
                        30000, [&](std::string&) {
                            auto IA = interp::build_interpolation(controls[i]);
                            auto rep = interp::graph_closure_compare(IA);
                            return rep.contained && rep.equal;
                        });
        }
    }

    // 4. random graded-algebra suite
    h.criterion(4, "random suite (50 instances): cartesian, fibers, containment", 300000,
                [&](std::string& note) {
                    Rng rng;
                    for (int i = 0; i < 50; ++i) {
                        auto A = random_graded_algebra(rng);
                        if (!action::cartesian_j_check(A).passed) {
                            note = "cartesian_j failed on instance " + std::to_string(i);
                            return false;
                        }
                        auto IA = interp::build_interpolation(A); // asserts bihomogeneity
                        if (!interp::fiber_at(IA, Rational(1)).iso_ok) {
                            note = "fiber at 1 failed on instance " + std::to_string(i);
                            return false;
                        }
                        if (!interp::fiber_at(IA, Rational(0)).iso_ok) {
                            note = "fiber at 0 failed on instance " + std::to_string(i);
                            return false;
                        }
                        if (!interp::graph_closure_compare(IA).contained) {
                            note = "containment failed on instance " + std::to_string(i);
                            return false;
                        }
                    }
                    return true;
                });

    // 5. exponent laws
    h.criterion(5, "mu cocycle and e-basis identities, bound 5", 5000, [&](std::string&) {
        for (long a = -5; a <= 5; ++a)
            for (long b = -5; b <= 5; ++b)
                for (long c = -5; c <= 5; ++c)
                    if (interp::mu(a, b) + interp::mu(a + b, c) !=
                        interp::mu(b, c) + interp::mu(a, b + c))
                        return false;
        return charts::e_basis_identity(5).passed;
    });

    // 6. tangent weights across the corpus
    h.criterion(6, "tangent weight decompositions on the corpus", 5000, [&](std::string& note) {
        int used = 0;
        for (const auto& spec : corpus) {
            if (!spec.point)
                continue;
            ++used;
            auto rep = action::tangent_weight_dims(spec.algebra, *spec.point);
            if (!rep.passed()) {
                note = "failure on " + spec.algebra.describe();
                return false;
            }
        }
        if (used < 5) {
            note = "corpus has too few pointed fixtures";
            return false;
        }
        return true;
    });

    // 7. anti-action package
    h.criterion(7, "anti-action: identity, composition, relations, idempotents", 10000,
                [&](std::string& note) {
                    std::vector<std::pair<Rational, Rational>> samples;
                    Rng rng;
                    for (int i = 0; i < 20; ++i)
                        samples.push_back({Rational(rng.range(-6, 6)),
                                           make_rational(Integer(rng.range(-6, 6)),
                                                         Integer(rng.range(1, 4)))});
                    for (const auto& spec : corpus) {
                        auto IA = interp::build_interpolation(spec.algebra);
                        auto rep = interp::anti_action_checks(IA, samples);
                        if (!rep.passed()) {
                            note = "failure on " + spec.algebra.describe();
                            return false;
                        }
                    }
                    return true;
                });

    // 8. composition isomorphisms
    h.criterion(8, "composition isomorphisms on the corpus", 120000, [&](std::string& note) {
        for (const auto& spec : corpus) {
            auto IA = interp::build_interpolation(spec.algebra);
            auto rep = interp::composition_checks(IA);
            if (!rep.passed()) {
                note = "failure on " + spec.algebra.describe() + ": " + rep.detail;
                return false;
            }
        }
        return true;
    });

    // 9. chart atlases
    h.criterion(9, "X_n atlases: cocycles, resolution, curve types, blow-up", 30000,
                [&](std::string& note) {
                    for (long n = 1; n <= 5; ++n) {
                        auto atlas = charts::build_xn_atlas(n);
                        if (!charts::verify_transitions(atlas).passed) {
                            note = "transitions failed at n=" + std::to_string(n);
                            return false;
                        }
                        if (!charts::resolution_map_check(atlas).passed) {
                            note = "resolution failed at n=" + std::to_string(n);
                            return false;
                        }
                        Rng rng;
                        for (int trial = 0; trial < 30; ++trial) {
                            std::vector<Rational> t;
                            for (long i = 0; i < n; ++i)
                                t.push_back(rng.range(0, 2) == 0 ? Rational(0)
                                                                 : Rational(rng.range(1, 9)));
                            if (charts::component_count_oracle(n, t) !=
                                charts::fiber_curve_type(n, t) + 1) {
                                note = "curve type disagrees with the component oracle";
                                return false;
                            }
                        }
                    }
                    return charts::blowup_check().passed;
                });

    // 10. finite category kernel
    h.criterion(10, "P_M structure, Tw equivalence, lax coherence", 10000,
                [&](std::string& note) {
                    auto M = cat::FiniteMonoidWithZero::make({"1", "0"}, 0, 1, {{0, 1}, {1, 1}});
                    auto C = cat::p_category(M);
                    if (C.n_morphisms() != 5) {
                        note = "P_{1,0} morphism count";
                        return false;
                    }
                    size_t ap = 0, am = 0, id_s = 0;
                    for (size_t m = 0; m < C.n_morphisms(); ++m) {
                        if (C.morphisms[m].name == cat::kAlphaPlus)
                            ap = m;
                        if (C.morphisms[m].name == cat::kAlphaMinus)
                            am = m;
                        if (C.morphisms[m].name == cat::kIdSmall)
                            id_s = m;
                    }
                    if (C.compose(am, ap) != id_s || C.morphisms[C.compose(ap, am)].name != "0") {
                        note = "alpha composites wrong";
                        return false;
                    }
                    auto bz2 = cat::FiniteCategory::make(
                        {"*"}, {{"e", 0, 0}, {"s", 0, 0}}, {0}, {{0, 1}, {1, 0}});
                    if (!cat::groupoid_equiv_check(bz2).passed) {
                        note = "Tw(BZ/2) equivalence";
                        return false;
                    }
                    // exhaustive lax coherence over small functors: the
                    // constant singleton, the two-point trivial model, and
                    // every representable of both twisted arrow categories
                    auto T = cat::twisted_arrow(C);
                    cat::SetFunctor singleton;
                    singleton.set_size.assign(T.tw.n_objects(), 1);
                    singleton.fn.assign(T.tw.n_morphisms(), {0});
                    cat::SetFunctor twopoint;
                    twopoint.set_size.assign(T.tw.n_objects(), 2);
                    twopoint.fn.assign(T.tw.n_morphisms(), {0, 1});
                    std::vector<std::pair<const cat::FiniteCategory*, cat::SetFunctor>> cases;
                    cases.push_back({&C, singleton});
                    cases.push_back({&C, twopoint});
                    auto Tb = cat::twisted_arrow(bz2);
                    for (size_t W = 0; W < Tb.tw.n_objects(); ++W) {
                        cat::SetFunctor F;
                        std::vector<std::vector<size_t>> homs(Tb.tw.n_objects());
                        for (size_t m = 0; m < Tb.tw.n_morphisms(); ++m)
                            if (Tb.tw.morphisms[m].src == W)
                                homs[Tb.tw.morphisms[m].tgt].push_back(m);
                        for (const auto& hs : homs)
                            F.set_size.push_back(hs.size());
                        for (size_t m = 0; m < Tb.tw.n_morphisms(); ++m) {
                            size_t x = Tb.tw.morphisms[m].src, y = Tb.tw.morphisms[m].tgt;
                            std::vector<size_t> img;
                            for (size_t hm : homs[x]) {
                                size_t comp = Tb.tw.compose(m, hm);
                                size_t idx = 0;
                                while (homs[y][idx] != comp)
                                    ++idx;
                                img.push_back(idx);
                            }
                            F.fn.push_back(img);
                        }
                        cases.push_back({&bz2, F});
                    }
                    for (auto& [base, F] : cases) {
                        auto Tw = cat::twisted_arrow(*base);
                        auto data = cat::lax_from_tw(*base, Tw, F);
                        if (!data.coherent || !data.unital) {
                            note = "lax coherence failed";
                            return false;
                        }
                        for (const auto& cmp : data.comparisons)
                            if (cmp.bijective !=
                                cat::square_is_pullback(*base, Tw, F, cmp.g, cmp.f)) {
                                note = "pullback criterion mismatch";
                                return false;
                            }
                    }
                    return true;
                });

    // 11. projective line demo
    h.criterion(11, "two-chart projective line demo", 1000, [&](std::string& note) {
        auto report = cli::demo_p1();
        if (!report.all_passed()) {
            std::ostringstream os;
            os << report.to_text();
            note = os.str();
        }
        return report.all_passed();
    });

    // 12. engine hygiene
    h.criterion(12, "engine hygiene: reductions, elimination, saturation, determinism", 120000,
                [&](std::string& note) {
                    Rng rng;
                    auto ring = PolyRing::make({{"x", 0}, {"y", 0}, {"z", 0}, {"w", 0}});
                    std::vector<Exponents> monos;
                    Exponents cur(4, 0);
                    all_monomials(4, 3, cur, 0, monos);
                    for (int i = 0; i < 100; ++i) {
                        std::vector<Polynomial> gens;
                        long n = rng.range(1, 3);
                        for (long k = 0; k < n; ++k) {
                            std::vector<Term> terms;
                            long nt = rng.range(1, 4);
                            for (long t = 0; t < nt; ++t)
                                terms.push_back({monos[rng.next() % monos.size()],
                                                 Rational(rng.range(-5, 5))});
                            auto p = Polynomial::from_terms(ring, std::move(terms));
                            if (!p.is_zero())
                                gens.push_back(p);
                        }
                        auto basis = gb::groebner(gb::Ideal::make(ring, gens));
                        for (size_t a = 0; a < basis.basis.size(); ++a)
                            for (size_t b = a + 1; b < basis.basis.size(); ++b) {
                                const auto& f = basis.basis[a];
                                const auto& g = basis.basis[b];
                                Exponents l =
                                    exp_lcm(f.leading_term().mono, g.leading_term().mono);
                                auto s = f.times_term(Rational(1) / f.leading_term().coeff,
                                                      exp_div(l, f.leading_term().mono)) -
                                         g.times_term(Rational(1) / g.leading_term().coeff,
                                                      exp_div(l, g.leading_term().mono));
                                if (!gb::normal_form(s, basis).is_zero()) {
                                    note = "an S-polynomial of a reduced basis does not vanish";
                                    return false;
                                }
                            }
                    }
                    // twisted cubic elimination
                    auto r3 = PolyRing::make({{"x", 0}, {"y", 0}, {"z", 0}});
                    auto E = gb::eliminate(
                        gb::Ideal::make(r3, {parse_polynomial(r3, "y - x^2"),
                                             parse_polynomial(r3, "z - x^3")}),
                        {"x"});
                    auto target = parse_polynomial(E.ring, "y^3 - z^2");
                    if (!gb::ideal_member(target, gb::groebner(E))) {
                        note = "twisted cubic elimination misses y^3 - z^2";
                        return false;
                    }
                    // saturation oracle
                    auto rt = PolyRing::make({{"t", 0}, {"a", 0}, {"b", 0}});
                    auto S = gb::saturate(gb::Ideal::make(rt, {parse_polynomial(rt, "t*a*b")}),
                                          Polynomial::variable(rt, "t"));
                    if (!gb::ideal_equal(S, gb::Ideal::make(rt, {parse_polynomial(rt, "a*b")}))) {
                        note = "(tab):t^inf != (ab)";
                        return false;
                    }
                    // determinism across repeated runs
                    auto I = gb::Ideal::make(
                        r3, {parse_polynomial(r3, "x^2 + y*z - 1"),
                             parse_polynomial(r3, "x*z - y^2"),
                             parse_polynomial(r3, "y^5 - z^3 + x")});
                    auto g1 = gb::groebner(I);
                    auto g2 = gb::groebner(I);
                    if (g1.basis.size() != g2.basis.size()) {
                        note = "nondeterministic basis size";
                        return false;
                    }
                    for (size_t k = 0; k < g1.basis.size(); ++k)
                        if (g1.basis[k] != g2.basis[k]) {
                            note = "nondeterministic basis";
                            return false;
                        }
                    return true;
                });

    std::cout << (h.failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " + std::to_string(h.failures) +
                                        " criteria failed")
              << "\n";
    return h.failures;
}
