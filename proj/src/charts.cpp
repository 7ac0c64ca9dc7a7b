#include "gmact/charts.hpp"
#include "gmact/errors.hpp"
#include "gmact/groebner.hpp"
#include "gmact/interpolation.hpp"
#include "gmact/parse.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gmact::charts {

MonomialMap compose_maps(const MonomialMap& first, const MonomialMap& second) {
    if (second.source_dim != first.target_dim())
        throw input_error("monomial map composition: dimension mismatch");
    MonomialMap out;
    out.source_dim = first.source_dim;
    for (const auto& row : second.exps) {
        Exponents acc(first.source_dim, 0);
        for (size_t j = 0; j < row.size(); ++j)
            for (size_t i = 0; i < first.source_dim; ++i)
                acc[i] += row[j] * first.exps[j][i];
        out.exps.push_back(std::move(acc));
    }
    return out;
}

MonomialMap identity_map(size_t dim) {
    MonomialMap m;
    m.source_dim = dim;
    for (size_t i = 0; i < dim; ++i) {
        Exponents e(dim, 0);
        e[i] = 1;
        m.exps.push_back(std::move(e));
    }
    return m;
}

bool operator==(const MonomialMap& a, const MonomialMap& b) {
    return a.source_dim == b.source_dim && a.exps == b.exps;
}

namespace {

Polynomial e_element(const RingPtr& ring, long n) {
    if (n >= 0)
        return Polynomial::variable(ring, "tau1").pow(n);
    return Polynomial::variable(ring, "tau2").pow(-n);
}

} // namespace

CheckReport e_basis_identity(long bound) {
    if (bound < 1)
        throw input_error("e_basis_identity: bound must be >= 1");
    auto ring = PolyRing::make({{"t", 0}, {"tau1", 1}, {"tau2", -1}},
                               TermOrder{OrderKind::Lex, 0});
    auto tvar = Polynomial::variable(ring, "t");
    auto rel = Polynomial::variable(ring, "tau1") * Polynomial::variable(ring, "tau2") - tvar;
    auto gb = gb::groebner(gb::Ideal::make(ring, {rel}));

    CheckReport report;
    for (long n1 = -bound; n1 <= bound; ++n1) {
        for (long n2 = -bound; n2 <= bound; ++n2) {
            auto lhs = e_element(ring, n1) * e_element(ring, n2);
            auto rhs = tvar.pow(interp::mu(n1, n2)) * e_element(ring, n1 + n2);
            if (!gb::normal_form(lhs - rhs, gb).is_zero()) {
                report.detail = "identity fails at (" + std::to_string(n1) + "," +
                                std::to_string(n2) + ")";
                return report;
            }
        }
    }
    report.passed = true;
    report.detail = "e_{n1} e_{n2} = t^mu e_{n1+n2} for all |n| <= " + std::to_string(bound);
    return report;
}

// chart r (1-based) of the X_n atlas: coordinates
// t_1..t_{r-1}, tau1, tau2, t_{r+1}..t_n
static std::vector<std::string> chart_coords(long n, size_t r) {
    std::vector<std::string> names;
    for (size_t i = 1; i + 0 <= static_cast<size_t>(n); ++i) {
        if (i == r) {
            names.push_back("tau1");
            names.push_back("tau2");
        } else {
            names.push_back("t" + std::to_string(i));
        }
    }
    return names;
}

ChartAtlas build_xn_atlas(long n) {
    if (n < 1)
        throw input_error("build_xn_atlas: n must be >= 1");
    ChartAtlas atlas;
    atlas.n = n;
    for (size_t r = 1; r <= static_cast<size_t>(n); ++r)
        atlas.charts.push_back({chart_coords(n, r)});
    for (size_t r = 1; r + 1 <= static_cast<size_t>(n); ++r)
        atlas.transitions.push_back(direct_transition(n, r, r + 1));
    return atlas;
}

Transition direct_transition(long n, size_t r, size_t rp) {
    if (!(1 <= r && r < rp && rp <= static_cast<size_t>(n)))
        throw input_error("direct_transition: need 1 <= r < r' <= n");
    auto from = chart_coords(n, r);
    auto to = chart_coords(n, rp);
    auto index_of = [](const std::vector<std::string>& names, const std::string& s) {
        return static_cast<size_t>(
            std::find(names.begin(), names.end(), s) - names.begin());
    };

    Transition tr;
    tr.from = r;
    tr.to = rp;

    // forward: coordinates of chart r' as Laurent monomials in chart-r coords
    //   tau1' = (tau2 * t_{r+1} ... t_{r'-1})^{-1}
    //   tau2' = tau2 * t_{r+1} ... t_{r'}
    //   t_r   = tau1 * tau2, other t_i unchanged
    tr.fwd.source_dim = from.size();
    for (const auto& name : to) {
        Exponents e(from.size(), 0);
        if (name == "tau1") {
            e[index_of(from, "tau2")] = -1;
            for (size_t i = r + 1; i < rp; ++i)
                e[index_of(from, "t" + std::to_string(i))] = -1;
        } else if (name == "tau2") {
            e[index_of(from, "tau2")] = 1;
            for (size_t i = r + 1; i <= rp; ++i)
                e[index_of(from, "t" + std::to_string(i))] = 1;
        } else if (name == "t" + std::to_string(r)) {
            e[index_of(from, "tau1")] = 1;
            e[index_of(from, "tau2")] = 1;
        } else {
            e[index_of(from, name)] = 1;
        }
        tr.fwd.exps.push_back(std::move(e));
    }

    // backward:
    //   tau1 = t_r * t_{r+1} ... t_{r'-1} * tau1'
    //   tau2 = (tau1' * t_{r+1} ... t_{r'-1})^{-1}
    //   t_{r'} = tau1' * tau2', other t_i unchanged
    tr.bwd.source_dim = to.size();
    for (const auto& name : from) {
        Exponents e(to.size(), 0);
        if (name == "tau1") {
            e[index_of(to, "tau1")] = 1;
            e[index_of(to, "t" + std::to_string(r))] = 1;
            for (size_t i = r + 1; i < rp; ++i)
                e[index_of(to, "t" + std::to_string(i))] = 1;
        } else if (name == "tau2") {
            e[index_of(to, "tau1")] = -1;
            for (size_t i = r + 1; i < rp; ++i)
                e[index_of(to, "t" + std::to_string(i))] = -1;
        } else if (name == "t" + std::to_string(rp)) {
            e[index_of(to, "tau1")] = 1;
            e[index_of(to, "tau2")] = 1;
        } else {
            e[index_of(to, name)] = 1;
        }
        tr.bwd.exps.push_back(std::move(e));
    }

    // overlap: xi_r ... xi_{r'-1} invertible, i.e. tau2 and the t's between
    tr.invertible_from.push_back(index_of(from, "tau2"));
    for (size_t i = r + 1; i < rp; ++i)
        tr.invertible_from.push_back(index_of(from, "t" + std::to_string(i)));
    tr.invertible_to.push_back(index_of(to, "tau1"));
    for (size_t i = r + 1; i < rp; ++i)
        tr.invertible_to.push_back(index_of(to, "t" + std::to_string(i)));
    return tr;
}

CheckReport verify_transitions(const ChartAtlas& atlas) {
    CheckReport report;
    for (const auto& tr : atlas.transitions) {
        if (!(compose_maps(tr.fwd, tr.bwd) == identity_map(tr.fwd.source_dim))) {
            report.detail = "transition " + std::to_string(tr.from) + "->" +
                            std::to_string(tr.to) + ": backward∘forward is not the identity";
            return report;
        }
        if (!(compose_maps(tr.bwd, tr.fwd) == identity_map(tr.bwd.source_dim))) {
            report.detail = "transition " + std::to_string(tr.from) + "->" +
                            std::to_string(tr.to) + ": forward∘backward is not the identity";
            return report;
        }
    }
    // cocycle on triples r < r' < r'': composite of the two direct maps
    // equals the direct map (the middle chart contains the triple overlap)
    for (size_t r = 1; r + 2 <= static_cast<size_t>(atlas.n); ++r) {
        for (size_t rp = r + 1; rp + 1 <= static_cast<size_t>(atlas.n); ++rp) {
            for (size_t rpp = rp + 1; rpp <= static_cast<size_t>(atlas.n); ++rpp) {
                auto ab = direct_transition(atlas.n, r, rp);
                auto bc = direct_transition(atlas.n, rp, rpp);
                auto ac = direct_transition(atlas.n, r, rpp);
                if (!(compose_maps(ab.fwd, bc.fwd) == ac.fwd)) {
                    report.detail = "cocycle failure on charts (" + std::to_string(r) + "," +
                                    std::to_string(rp) + "," + std::to_string(rpp) + ")";
                    return report;
                }
            }
        }
    }
    report.passed = true;
    report.detail = "round trips and cocycles hold";
    return report;
}

CheckReport resolution_map_check(const ChartAtlas& atlas) {
    CheckReport report;
    long n = atlas.n;
    for (size_t r = 1; r <= static_cast<size_t>(n); ++r) {
        // polynomial model of chart r
        std::vector<Variable> vars;
        for (const auto& name : chart_coords(n, r))
            vars.push_back({name, 0});
        auto ring = PolyRing::make(vars);

        auto monomial_of = [&](const std::vector<std::pair<std::string, int>>& factors) {
            Exponents e(ring->nvars(), 0);
            for (const auto& [name, k] : factors)
                e[ring->index_of(name)] += k;
            return Polynomial::monomial(ring, e);
        };

        // u = t_1...t_{r-1} tau1,  v = tau2 t_{r+1}...t_n
        std::vector<std::pair<std::string, int>> uf{{"tau1", 1}};
        for (size_t i = 1; i < r; ++i)
            uf.push_back({"t" + std::to_string(i), 1});
        std::vector<std::pair<std::string, int>> vf{{"tau2", 1}};
        for (size_t i = r + 1; i <= static_cast<size_t>(n); ++i)
            vf.push_back({"t" + std::to_string(i), 1});
        Polynomial u = monomial_of(uf);
        Polynomial v = monomial_of(vf);

        std::vector<std::pair<std::string, int>> prod{{"tau1", 1}, {"tau2", 1}};
        for (size_t i = 1; i <= static_cast<size_t>(n); ++i)
            if (i != r)
                prod.push_back({"t" + std::to_string(i), 1});
        if (u * v != monomial_of(prod)) {
            report.detail = "chart " + std::to_string(r) + ": u*v != t_1...t_n";
            return report;
        }

        // away from the center: u invertible recovers tau1 and tau2, as the
        // Laurent identities tau1 = u / (t_1...t_{r-1}),
        // tau2 = t_r t_1...t_{r-1} / u  composed with the chart formulas
        // u -> t_1..t_{r-1} tau1, t_r -> tau1 tau2
        {
            Exponents acc(ring->nvars(), 0);
            // u substituted
            acc[ring->index_of("tau1")] += 1;
            for (size_t i = 1; i < r; ++i)
                acc[ring->index_of("t" + std::to_string(i))] += 1;
            // divide by t_1..t_{r-1}
            for (size_t i = 1; i < r; ++i)
                acc[ring->index_of("t" + std::to_string(i))] -= 1;
            Exponents tau1_only(ring->nvars(), 0);
            tau1_only[ring->index_of("tau1")] = 1;
            if (acc != tau1_only) {
                report.detail = "chart " + std::to_string(r) + ": tau1 recovery fails";
                return report;
            }
        }
        {
            Exponents acc(ring->nvars(), 0);
            // t_r substituted = tau1 tau2
            acc[ring->index_of("tau1")] += 1;
            acc[ring->index_of("tau2")] += 1;
            // times t_1..t_{r-1}, divided by u = t_1..t_{r-1} tau1
            acc[ring->index_of("tau1")] -= 1;
            Exponents tau2_only(ring->nvars(), 0);
            tau2_only[ring->index_of("tau2")] = 1;
            if (acc != tau2_only) {
                report.detail = "chart " + std::to_string(r) + ": tau2 recovery fails";
                return report;
            }
        }
    }
    report.passed = true;
    report.detail = "u*v = t_1...t_n in every chart; u invertible determines the chart";
    return report;
}

namespace {

// With the fiber variables leading a lex order, a single reduced point over
// the (partially inverted) parameter ring shows up as a triangular basis:
// one element x - g(params) per fiber variable x.
bool single_point_fiber(const std::vector<std::string>& fiber_vars,
                        const std::vector<std::string>& param_vars,
                        const std::vector<std::string>& generators) {
    std::vector<Variable> vars;
    for (const auto& name : fiber_vars)
        vars.push_back({name, 0});
    for (const auto& name : param_vars)
        vars.push_back({name, 0});
    auto ring = PolyRing::make(vars, TermOrder{OrderKind::Lex, 0});
    std::vector<Polynomial> gens;
    for (const auto& s : generators)
        gens.push_back(parse_polynomial(ring, s));
    auto gb = gb::groebner(gb::Ideal::make(ring, gens));

    auto param_only = [&](const Exponents& mono) {
        for (const auto& v : fiber_vars)
            if (mono[ring->index_of(v)] != 0)
                return false;
        return true;
    };
    for (const auto& name : fiber_vars) {
        bool solved = false;
        for (const auto& g : gb.basis) {
            Exponents wanted(ring->nvars(), 0);
            wanted[ring->index_of(name)] = 1;
            if (g.leading_term().mono != wanted)
                continue;
            bool tail_ok = true;
            for (size_t i = 1; i < g.terms().size(); ++i)
                if (!param_only(g.terms()[i].mono))
                    tail_ok = false;
            if (tail_ok) {
                solved = true;
                break;
            }
        }
        if (!solved)
            return false;
    }
    return true;
}

} // namespace

CheckReport blowup_check() {
    CheckReport report;

    // sigma+: chart A = (t, l) -> (t, l t); chart B = (tau1, tau2) -> (tau1 tau2, tau1);
    // gluing (t, l) -> (tau1, tau2) = (l t, l^{-1}) on l invertible.
    {
        MonomialMap chartB;
        chartB.source_dim = 2;
        chartB.exps = {{1, 1}, {1, 0}};
        MonomialMap glue;
        glue.source_dim = 2;
        glue.exps = {{1, 1}, {0, -1}}; // tau1 = l t? rows: tau1 = t^1 l^1, tau2 = l^{-1}
        MonomialMap chartA;
        chartA.source_dim = 2;
        chartA.exps = {{1, 0}, {1, 1}};
        if (!(compose_maps(glue, chartB) == chartA)) {
            report.detail = "sigma+ overlap disagreement";
            return report;
        }
    }
    // sigma-: in the affine coordinate mu on the backwards line, chart A' =
    // (t, mu) -> (t, mu t); chart B' = (tau1, tau2) -> (tau1 tau2, tau2);
    // gluing (t, mu) -> (mu^{-1}, mu t).
    {
        MonomialMap chartB;
        chartB.source_dim = 2;
        chartB.exps = {{1, 1}, {0, 1}};
        MonomialMap glue;
        glue.source_dim = 2;
        glue.exps = {{0, -1}, {1, 1}};
        MonomialMap chartA;
        chartA.source_dim = 2;
        chartA.exps = {{1, 0}, {1, 1}};
        if (!(compose_maps(glue, chartB) == chartA)) {
            report.detail = "sigma- overlap disagreement";
            return report;
        }
    }

    // fibers over (a,b) with a invertible: one point, and it lies in chart A;
    // chart B contributes nothing new (tau2 = 0 is impossible there)
    {
        if (!single_point_fiber({"t", "l"}, {"a", "ai", "b"},
                                {"a*ai - 1", "t - a", "t*l - b"})) {
            report.detail = "sigma+ fiber over invertible a is not a single chart-A point";
            return report;
        }
        auto ringB = PolyRing::make({{"a", 0}, {"ai", 0}, {"b", 0}, {"tau1", 0}, {"tau2", 0}});
        auto q = [&](const std::string& s) { return parse_polynomial(ringB, s); };
        std::vector<Polynomial> fiberB = {q("a*ai - 1"), q("tau1*tau2 - a"), q("tau1 - b"),
                                          q("tau2")};
        if (!gb::is_unit_ideal(gb::groebner(gb::Ideal::make(ringB, fiberB)))) {
            report.detail = "sigma+: unglued chart-B points over invertible a";
            return report;
        }
    }
    // fibers over (a,b) with b invertible: one point, in chart B; chart-A
    // points with l = 0 (outside the gluing locus) are impossible
    {
        if (!single_point_fiber({"tau1", "tau2"}, {"a", "b", "bi"},
                                {"b*bi - 1", "tau1*tau2 - a", "tau1 - b"})) {
            report.detail = "sigma+ fiber over invertible b is not a single chart-B point";
            return report;
        }
        auto ringA = PolyRing::make({{"a", 0}, {"b", 0}, {"bi", 0}, {"t", 0}, {"l", 0}});
        auto q = [&](const std::string& s) { return parse_polynomial(ringA, s); };
        std::vector<Polynomial> fiberA = {q("b*bi - 1"), q("t - a"), q("t*l - b"), q("l")};
        if (!gb::is_unit_ideal(gb::groebner(gb::Ideal::make(ringA, fiberA)))) {
            report.detail = "sigma+: unglued chart-A points over invertible b";
            return report;
        }
    }
    // fiber over (0,0): a full coordinate line in each chart
    {
        auto ringA = PolyRing::make({{"t", 0}, {"l", 0}});
        auto gbA = gb::groebner(
            gb::Ideal::make(ringA, {parse_polynomial(ringA, "t"), parse_polynomial(ringA, "t*l")}));
        bool lineA = gbA.basis.size() == 1 && gbA.basis[0] == Polynomial::variable(ringA, "t");
        auto ringB = PolyRing::make({{"tau1", 0}, {"tau2", 0}});
        auto gbB = gb::groebner(gb::Ideal::make(
            ringB, {parse_polynomial(ringB, "tau1*tau2"), parse_polynomial(ringB, "tau1")}));
        bool lineB = gbB.basis.size() == 1 && gbB.basis[0] == Polynomial::variable(ringB, "tau1");
        if (!lineA || !lineB) {
            report.detail = "sigma+ exceptional fiber is not a line in each chart";
            return report;
        }
    }

    report.passed = true;
    report.detail = "blow-up gluings agree; fibers: points away from the center, a line over it";
    return report;
}

long fiber_curve_type(long n, const std::vector<Rational>& t) {
    if (static_cast<long>(t.size()) != n)
        throw input_error("fiber_curve_type: expected " + std::to_string(n) + " values");
    long zeros = 0;
    for (const auto& v : t)
        if (v == 0)
            ++zeros;
    return zeros;
}

long component_count_oracle(long n, const std::vector<Rational>& t) {
    if (static_cast<long>(t.size()) != n)
        throw input_error("component_count_oracle: expected " + std::to_string(n) + " values");
    // per chart: a nondegenerate hyperbola is one component; the cross has the
    // tau2=0 branch (meeting the previous overlap) and the tau1=0 branch
    // (meeting the next overlap)
    std::vector<long> left(n), right(n);
    long next_id = 0;
    for (long r = 0; r < n; ++r) {
        if (t[r] != 0) {
            left[r] = right[r] = next_id++;
        } else {
            left[r] = next_id++;
            right[r] = next_id++;
        }
    }
    std::vector<long> parent(next_id);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long(long)> find = [&](long x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    // the overlap between charts r and r+1 is connected and meets exactly the
    // tau1=0 branch on the left chart and the tau2=0 branch on the right one
    for (long r = 0; r + 1 < n; ++r)
        parent[find(right[r])] = find(left[r + 1]);
    std::set<long> roots;
    for (long x = 0; x < next_id; ++x)
        roots.insert(find(x));
    return static_cast<long>(roots.size());
}

} // namespace gmact::charts
