#include "gmact/cli.hpp"
#include "gmact/catkit.hpp"
#include "gmact/charts.hpp"
#include "gmact/errors.hpp"
#include "gmact/parse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>

namespace gmact::cli {

using nlohmann::json;

namespace {

long elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

// run one named check, recording status, witness and wall time
void timed(Report& report, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    auto start = std::chrono::steady_clock::now();
    auto [ok, witness] = body();
    report.checks.push_back({name, ok ? "pass" : "fail", witness, elapsed_ms(start)});
}

std::string describe_relations(const std::vector<Polynomial>& rels) {
    if (rels.empty())
        return "(0)";
    std::string out = "(";
    for (size_t i = 0; i < rels.size(); ++i) {
        if (i)
            out += ", ";
        out += rels[i].str();
    }
    return out + ")";
}

action::RationalPoint parse_point_option(const action::GradedAlgebra& A,
                                         const std::string& text) {
    // "x=0,y=1/2"
    action::RationalPoint pt;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw input_error("--point expects name=value pairs separated by commas");
        std::string name = item.substr(0, eq);
        if (!A.ring->has_var(name))
            throw input_error("--point assigns unknown variable " + name);
        pt[name] = rational_from_string(item.substr(eq + 1));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    for (const auto& v : A.ring->vars())
        if (!pt.count(v.name))
            throw input_error("--point does not assign variable " + v.name);
    return pt;
}

// ------------------------ algebra subcommands ------------------------

std::string describe_map(const action::AlgebraMap& m) {
    std::string out;
    for (size_t i = 0; i < m.images.size(); ++i) {
        if (i)
            out += ", ";
        out += m.source.ring->var(i).name + " -> " + m.images[i].str();
    }
    return out;
}

Report cmd_fixed(const AlgebraSpec& spec) {
    Report report;
    report.command = "fixed";
    auto F = action::fixed_subscheme(spec.algebra);
    report.output("A", spec.algebra.describe());
    report.output("A0", F.algebra.describe());
    report.output("projection", describe_map(F.projection));
    report.add("fixed_projection_well_defined", action::map_well_defined(F.projection));
    return report;
}

Report cmd_attractor(const AlgebraSpec& spec, bool repel) {
    Report report;
    report.command = repel ? "repeller" : "attractor";
    auto R = repel ? action::repeller(spec.algebra) : action::attractor(spec.algebra);
    report.output("A", spec.algebra.describe());
    report.output(repel ? "A-" : "A+", R.plus.describe());
    report.output("A0", R.zero.describe());
    report.output("p", describe_map(R.p));
    report.output("q", describe_map(R.q));
    report.output("i", describe_map(R.i));
    report.add("p_well_defined", action::map_well_defined(R.p));
    report.add("q_well_defined", action::map_well_defined(R.q));
    report.add("i_well_defined", action::map_well_defined(R.i));
    return report;
}

Report cmd_tangent(const AlgebraSpec& spec, const std::string& point_text) {
    Report report;
    report.command = "tangent";
    action::RationalPoint pt;
    if (!point_text.empty())
        pt = parse_point_option(spec.algebra, point_text);
    else if (spec.point)
        pt = *spec.point;
    else
        throw input_error("tangent: no point given (use --point or the spec's \"point\")");
    auto rep = action::tangent_weight_dims(spec.algebra, pt);
    std::string dims;
    for (const auto& [w, d] : rep.dim_by_weight)
        dims += (dims.empty() ? "" : ", ") + std::to_string(w) + ":" + std::to_string(d);
    report.output("dims_by_weight", "{" + dims + "}");
    report.output("dim_T_Z0", std::to_string(rep.dim_tz0));
    report.output("dim_T_Zplus", std::to_string(rep.dim_tzplus));
    report.add("jacobian_blocks_vanish", rep.jacobian_blocks_vanish);
    report.add("tz0_matches_weight_zero", rep.tz0_matches);
    report.add("tzplus_matches_nonnegative", rep.tzplus_matches);
    return report;
}

Report cmd_interp(const AlgebraSpec& spec) {
    Report report;
    report.command = "interp";
    auto IA = interp::build_interpolation(spec.algebra);
    report.output("A", spec.algebra.describe());
    std::string ring = "Q[" + IA.t_name;
    for (const auto& v : spec.algebra.ring->vars())
        ring += "," + v.name;
    ring += "]";
    report.output("Btilde_ring", ring);
    report.output("Btilde_relations", describe_relations(IA.lifted_relations));
    std::string bidegs;
    for (size_t i = 0; i < IA.ring->nvars(); ++i) {
        auto b = IA.variable_bidegree(i);
        bidegs += (bidegs.empty() ? "" : ", ") + IA.ring->var(i).name + ":(" +
                  std::to_string(b.first) + "," + std::to_string(b.second) + ")";
    }
    report.output("bidegrees", bidegs);
    report.add("lift_bihomogeneous_and_specializes", true,
               "validated during construction");
    return report;
}

Report cmd_fiber(const AlgebraSpec& spec, const std::string& t_text, const gb::Options& opts) {
    Report report;
    report.command = "fiber --t " + t_text;
    Rational c = rational_from_string(t_text);
    auto IA = interp::build_interpolation(spec.algebra);
    auto rep = interp::fiber_at(IA, c, opts);
    report.output("fiber_relations", describe_relations(rep.fiber_relations));
    if (c == 0) {
        report.output("fiber_product_relations", describe_relations(rep.product_relations));
        report.add("isomorphic_to_attractor_x_repeller", rep.iso_ok, rep.detail);
    } else {
        report.add("isomorphic_to_A", rep.iso_ok, rep.detail);
    }
    return report;
}

Report cmd_closure(const AlgebraSpec& spec, const gb::Options& opts) {
    Report report;
    report.command = "closure --compare";
    auto IA = interp::build_interpolation(spec.algebra);
    auto rep = interp::graph_closure_compare(IA, opts);
    report.output("family_ideal", describe_relations(rep.ztilde.ideal.gens));
    report.output("closure_ideal", describe_relations(rep.closure.gens));
    report.add("family_contained_in_closure", rep.contained);
    report.output("equal", rep.equal ? "yes" : "no");
    if (rep.witness)
        report.output("witness", rep.witness->str());
    if (spec.smooth.has_value()) {
        if (*spec.smooth)
            report.add("smooth_implies_equality", rep.equal,
                       rep.equal ? "" : "spec asserts smooth but the inclusion is strict");
        else
            report.skip("smooth_implies_equality", "spec does not assert smoothness");
    }
    return report;
}

Report cmd_torsion(const AlgebraSpec& spec, const gb::Options& opts) {
    Report report;
    report.command = "torsion";
    auto IA = interp::build_interpolation(spec.algebra);
    auto torsion = interp::t_torsion(IA, opts);
    report.output("torsion_generators", describe_relations(torsion));
    report.output("flat_over_line", torsion.empty() ? "yes" : "no");
    report.add("torsion_computed", true);
    return report;
}

Report cmd_antiaction(const AlgebraSpec& spec, const std::string& l1s, const std::string& l2s,
                      const gb::Options& opts) {
    Report report;
    report.command = "antiaction --l1 " + l1s + " --l2 " + l2s;
    Rational l1 = rational_from_string(l1s);
    Rational l2 = rational_from_string(l2s);
    auto IA = interp::build_interpolation(spec.algebra);
    auto m = interp::anti_action_map(IA, l1, l2);
    std::string images = IA.t_name + " -> " + to_string(l1 * l2) + "*" + IA.t_name;
    for (size_t j = 0; j < IA.nbase(); ++j)
        images += ", " + spec.algebra.ring->var(j).name + " -> " + to_string(m.scale[j]) + "*" +
                  spec.algebra.ring->var(j).name;
    report.output("substitution", images);
    std::vector<std::pair<Rational, Rational>> samples = {{l1, l2}, {l1 * l1, l2 * l2}};
    auto rep = interp::anti_action_checks(IA, samples, opts);
    report.add("identity_at_one", rep.identity_at_one);
    report.add("relations_preserved", rep.relations_preserved);
    report.add("composition_law", rep.composition_law);
    report.add("exercise_factorizations", rep.exercise_maps);
    report.add("zero_fiber_idempotents", rep.idempotents);
    return report;
}

Report cmd_compose_check(const AlgebraSpec& spec, const gb::Options& opts) {
    Report report;
    report.command = "compose-check";
    auto IA = interp::build_interpolation(spec.algebra);
    auto rep = interp::composition_checks(IA, opts);
    report.add("plus_side_iso", rep.plus_side);
    report.add("minus_side_iso", rep.minus_side);
    report.add("two_parameter_iso", rep.two_parameter, rep.passed() ? "" : rep.detail);
    return report;
}

// ------------------------ charts subcommands ------------------------

Report cmd_charts_xn(long n) {
    Report report;
    report.command = "charts xn --n " + std::to_string(n);
    auto atlas = charts::build_xn_atlas(n);
    json desc;
    desc["n"] = n;
    desc["charts"] = json::array();
    for (const auto& c : atlas.charts)
        desc["charts"].push_back(c.coords);
    desc["transitions"] = json::array();
    for (const auto& t : atlas.transitions) {
        json tj;
        tj["from"] = t.from;
        tj["to"] = t.to;
        tj["forward_exponents"] = t.fwd.exps;
        tj["backward_exponents"] = t.bwd.exps;
        tj["invertible_from"] = t.invertible_from;
        desc["transitions"].push_back(tj);
    }
    report.output("atlas", desc.dump());
    auto tr = charts::verify_transitions(atlas);
    report.add("transitions_and_cocycles", tr.passed, tr.detail);
    auto res = charts::resolution_map_check(atlas);
    report.add("resolution_uv_identity", res.passed, res.detail);
    // curve type against the component-count arbiter on a few sample fibers
    bool agree = true;
    std::vector<std::vector<Rational>> samples;
    samples.push_back(std::vector<Rational>(n, Rational(1)));
    samples.push_back(std::vector<Rational>(n, Rational(0)));
    for (long i = 0; i < n; ++i) {
        std::vector<Rational> t(n, Rational(2));
        t[i] = 0;
        samples.push_back(t);
    }
    for (const auto& t : samples)
        if (charts::component_count_oracle(n, t) != charts::fiber_curve_type(n, t) + 1)
            agree = false;
    report.add("curve_type_matches_component_oracle", agree);
    return report;
}

Report cmd_charts_blowup() {
    Report report;
    report.command = "charts blowup";
    auto rep = charts::blowup_check();
    report.add("blowup_charts", rep.passed, rep.detail);
    return report;
}

// ------------------------ cat subcommands ------------------------

cat::FiniteMonoidWithZero monoid_from_json(const json& j) {
    if (!j.contains("elements") || !j["elements"].is_array())
        throw input_error("monoid needs an \"elements\" array");
    std::vector<std::string> elems = j["elements"].get<std::vector<std::string>>();
    auto index_of = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == name)
                return i;
        throw input_error("monoid: unknown element " + name);
    };
    size_t unit = index_of(j.value("unit", std::string("1")));
    size_t zero = index_of(j.value("zero", std::string("0")));
    if (!j.contains("table") || !j["table"].is_array())
        throw input_error("monoid needs a \"table\"");
    std::vector<std::vector<size_t>> mul;
    for (const auto& row : j["table"]) {
        std::vector<size_t> r;
        for (const auto& cell : row)
            r.push_back(index_of(cell.get<std::string>()));
        mul.push_back(r);
    }
    return cat::FiniteMonoidWithZero::make(elems, unit, zero, mul);
}

cat::FiniteCategory category_from_json(const json& j) {
    if (j.contains("monoid"))
        return cat::p_category(monoid_from_json(j["monoid"]));
    if (!j.contains("objects") || !j.contains("morphisms"))
        throw input_error("category needs \"objects\" and \"morphisms\"");
    std::vector<std::string> objects = j["objects"].get<std::vector<std::string>>();
    auto obj_index = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == name)
                return i;
        throw input_error("category: unknown object " + name);
    };
    std::vector<cat::FiniteCategory::Mor> mors;
    for (const auto& m : j["morphisms"])
        mors.push_back({m["name"].get<std::string>(), obj_index(m["src"].get<std::string>()),
                        obj_index(m["tgt"].get<std::string>())});
    auto mor_index = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < mors.size(); ++i)
            if (mors[i].name == name)
                return i;
        throw input_error("category: unknown morphism " + name);
    };
    std::vector<size_t> ids;
    for (const auto& o : objects) {
        if (!j["identities"].contains(o))
            throw input_error("category: missing identity for " + o);
        ids.push_back(mor_index(j["identities"][o].get<std::string>()));
    }
    std::vector<std::vector<long>> table(mors.size(), std::vector<long>(mors.size(), -1));
    for (const auto& triple : j["composition"]) {
        size_t g = mor_index(triple[0].get<std::string>());
        size_t f = mor_index(triple[1].get<std::string>());
        table[g][f] = static_cast<long>(mor_index(triple[2].get<std::string>()));
    }
    return cat::FiniteCategory::make(objects, mors, ids, table);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

Report cmd_cat_pm(const std::string& path) {
    Report report;
    report.command = "cat pm --file " + path;
    auto j = load_json_file(path);
    auto M = monoid_from_json(j.contains("monoid") ? j["monoid"] : j);
    auto C = cat::p_category(M);
    report.output("objects", std::to_string(C.n_objects()));
    report.output("morphisms", std::to_string(C.n_morphisms()));
    size_t ap = 0, am = 0;
    for (size_t m = 0; m < C.n_morphisms(); ++m) {
        if (C.morphisms[m].name == cat::kAlphaPlus)
            ap = m;
        if (C.morphisms[m].name == cat::kAlphaMinus)
            am = m;
    }
    report.add("inward_composite_is_id_s",
               C.morphisms[C.compose(am, ap)].name == cat::kIdSmall);
    report.add("outward_composite_is_zero", C.compose(ap, am) == M.zero);
    return report;
}

Report cmd_cat_tw(const std::string& path) {
    Report report;
    report.command = "cat tw --file " + path;
    auto C = category_from_json(load_json_file(path));
    auto T = cat::twisted_arrow(C);
    report.output("base_morphisms", std::to_string(C.n_morphisms()));
    report.output("tw_objects", std::to_string(T.tw.n_objects()));
    report.output("tw_morphisms", std::to_string(T.tw.n_morphisms()));
    auto sq = cat::twisted_square_check(C, T);
    report.add("squares_commute", sq.passed, sq.detail);
    if (C.is_groupoid()) {
        auto eq = cat::groupoid_equiv_check(C);
        report.add("groupoid_equivalence", eq.passed, eq.detail);
    } else {
        report.skip("groupoid_equivalence", "base category is not a groupoid");
    }
    return report;
}

Report cmd_cat_lax(const std::string& path) {
    Report report;
    report.command = "cat lax --file " + path;
    auto j = load_json_file(path);
    auto C = category_from_json(j);
    auto T = cat::twisted_arrow(C);

    cat::SetFunctor F;
    if (j.contains("functor") && j["functor"].value("constant_singleton", false)) {
        F.set_size.assign(T.tw.n_objects(), 1);
        F.fn.assign(T.tw.n_morphisms(), {0});
    } else if (j.contains("functor")) {
        const auto& fj = j["functor"];
        F.set_size.assign(T.tw.n_objects(), 0);
        F.fn.assign(T.tw.n_morphisms(), {});
        for (size_t o = 0; o < T.tw.n_objects(); ++o) {
            const auto& name = T.tw.objects[o];
            if (!fj.contains("sets") || !fj["sets"].contains(name))
                throw input_error("functor: missing set size for object " + name);
            F.set_size[o] = fj["sets"][name].get<size_t>();
        }
        for (size_t m = 0; m < T.tw.n_morphisms(); ++m) {
            const auto& name = T.tw.morphisms[m].name;
            if (fj.contains("maps") && fj["maps"].contains(name))
                F.fn[m] = fj["maps"][name].get<std::vector<size_t>>();
            else if (T.tw.identity[T.tw.morphisms[m].src] == m) {
                F.fn[m].resize(F.set_size[T.tw.morphisms[m].src]);
                for (size_t x = 0; x < F.fn[m].size(); ++x)
                    F.fn[m][x] = x;
            } else {
                throw input_error("functor: missing map for morphism " + name);
            }
        }
    } else {
        throw input_error("cat lax: file needs a \"functor\" section");
    }

    auto valid = cat::functor_valid(T, F);
    report.add("functorial", valid.passed, valid.detail);
    if (valid.passed) {
        auto data = cat::lax_from_tw(C, T, F);
        report.add("coherent", data.coherent);
        report.add("unital", data.unital);
        size_t bij = 0;
        for (const auto& cmp : data.comparisons)
            if (cmp.bijective)
                ++bij;
        report.output("comparisons", std::to_string(data.comparisons.size()));
        report.output("bijective_comparisons", std::to_string(bij));
    }
    return report;
}

} // namespace

// ------------------------ demo and verify ------------------------

Report demo_p1(const gb::Options& opts) {
    Report report;
    report.command = "demo p1";

    auto chart1 = action::GradedAlgebra::make(
        PolyRing::make({{"x", 1}}, TermOrder{OrderKind::GrevLex, 0}), {});
    auto chart2 = action::GradedAlgebra::make(
        PolyRing::make({{"y", -1}}, TermOrder{OrderKind::GrevLex, 0}), {});

    auto a1 = action::attractor(chart1);
    auto r1 = action::repeller(chart1);
    auto f1 = action::fixed_subscheme(chart1);
    auto a2 = action::attractor(chart2);
    auto r2 = action::repeller(chart2);
    auto f2 = action::fixed_subscheme(chart2);

    report.output("chart1", chart1.describe());
    report.output("chart2", chart2.describe() + "  glued by x = 1/y on x,y != 0");
    report.output("chart1_attractor", a1.plus.describe());
    report.output("chart2_attractor", a2.plus.describe());
    report.output("attractor_shape", "affine line in chart 1, single point at infinity");

    timed(report, "chart1_attractor_is_whole_chart", [&] {
        return std::make_pair(action::presentations_identical(a1.plus, chart1), std::string());
    });
    timed(report, "chart1_repeller_is_point", [&] {
        return std::make_pair(r1.plus.ring->nvars() == 0 && r1.plus.relations.empty(),
                              std::string());
    });
    timed(report, "chart1_fixed_is_one_point", [&] {
        return std::make_pair(f1.algebra.ring->nvars() == 0 && f1.algebra.relations.empty(),
                              std::string());
    });
    timed(report, "chart2_attractor_is_point", [&] {
        return std::make_pair(a2.plus.ring->nvars() == 0 && a2.plus.relations.empty(),
                              std::string());
    });
    timed(report, "chart2_repeller_is_whole_chart", [&] {
        return std::make_pair(action::presentations_identical(r2.plus, chart2), std::string());
    });
    timed(report, "chart2_fixed_is_one_point", [&] {
        return std::make_pair(f2.algebra.ring->nvars() == 0 && f2.algebra.relations.empty(),
                              std::string());
    });
    // the overlap is the locus x != 0 (equivalently y != 0); its attractor and
    // repeller are empty, so the glued attractor really is A^1 plus one point
    timed(report, "overlap_attractor_empty", [&] {
        auto rep = action::localize_check(chart1, Polynomial::variable(chart1.ring, "x"), opts);
        return std::make_pair(rep.passed, rep.detail);
    });
    timed(report, "overlap_repeller_empty", [&] {
        auto rep = action::localize_check(chart2, Polynomial::variable(chart2.ring, "y"), opts);
        return std::make_pair(rep.passed, rep.detail);
    });
    return report;
}

Report run_verify(const AlgebraSpec& spec, const gb::Options& opts) {
    Report report;
    report.command = "verify";
    const auto& A = spec.algebra;
    report.output("A", A.describe());

    timed(report, "cartesian_j", [&] {
        auto rep = action::cartesian_j_check(A, opts);
        return std::make_pair(rep.passed, rep.detail);
    });
    timed(report, "repeller_duality", [&] {
        bool ok = action::presentations_identical(
            action::negate_weights(action::repeller(A).plus),
            action::attractor(action::negate_weights(A)).plus);
        return std::make_pair(ok, std::string());
    });
    timed(report, "p_after_i_is_canonical", [&] {
        auto R = action::attractor(A);
        auto F = action::fixed_subscheme(A);
        bool ok = action::maps_equal_mod_relations(action::compose(R.p, R.i), F.projection, opts);
        return std::make_pair(ok, std::string());
    });
    timed(report, "contraction_equivalence", [&] {
        auto rep = action::contraction_check(A);
        bool ok = rep.equivalence_holds && (!rep.all_weights_nonneg || rep.extension_valid);
        return std::make_pair(ok, std::string());
    });

    interp::InterpolationAlgebra IA;
    bool built = false;
    timed(report, "interpolation_build", [&] {
        IA = interp::build_interpolation(A);
        built = true;
        return std::make_pair(true, std::string("bihomogeneous, specializes at t=1"));
    });
    if (built) {
        timed(report, "fiber_at_one", [&] {
            auto rep = interp::fiber_at(IA, Rational(1), opts);
            return std::make_pair(rep.iso_ok, rep.detail);
        });
        timed(report, "fiber_at_zero", [&] {
            auto rep = interp::fiber_at(IA, Rational(0), opts);
            return std::make_pair(rep.iso_ok, rep.detail);
        });
        timed(report, "fiber_at_generic", [&] {
            auto rep = interp::fiber_at(IA, Rational(2), opts);
            return std::make_pair(rep.iso_ok, rep.detail);
        });
        timed(report, "fiber_generic_symbolic", [&] {
            auto rep = interp::fiber_generic_symbolic(IA, opts);
            return std::make_pair(rep.iso_ok, rep.detail);
        });
        timed(report, "embedding_invariants", [&] {
            auto E = interp::embedding_ideal(IA, opts);
            auto rep = interp::embedding_checks(IA, E, opts);
            return std::make_pair(rep.passed(), std::string());
        });
        timed(report, "closure_contains_family", [&] {
            auto rep = interp::graph_closure_compare(IA, opts);
            bool ok = rep.contained && rep.saturation_agrees;
            std::string note = rep.equal ? "equality" : "strict inclusion";
            if (!rep.saturation_agrees)
                note += "; closure disagrees with the t-saturation of the family ideal";
            if (spec.smooth.has_value() && *spec.smooth && !rep.equal) {
                ok = false;
                note = "spec asserts smooth but the inclusion is strict";
            }
            if (rep.witness)
                note += "; witness " + rep.witness->str();
            return std::make_pair(ok, note);
        });
        timed(report, "flatness_matches_closure_equality", [&] {
            // no t-torsion exactly when the family already is the closure
            auto rep = interp::graph_closure_compare(IA, opts);
            bool flat = interp::t_torsion(IA, opts).empty();
            return std::make_pair(flat == rep.equal,
                                  flat ? std::string("flat") : std::string("torsion present"));
        });
        timed(report, "anti_action", [&] {
            std::vector<std::pair<Rational, Rational>> samples = {
                {Rational(1), Rational(1)}, {Rational(2), Rational(3)},
                {Rational(0), Rational(1)}, {Rational(1), Rational(0)},
                {Rational(-1), Rational(1, 2)}, {Rational(5), Rational(-2)}};
            auto rep = interp::anti_action_checks(IA, samples, opts);
            return std::make_pair(rep.passed(), rep.detail);
        });
        timed(report, "composition_isomorphisms", [&] {
            auto rep = interp::composition_checks(IA, opts);
            return std::make_pair(rep.passed(), rep.detail);
        });
        timed(report, "torsion_vs_smoothness", [&] {
            auto torsion = interp::t_torsion(IA, opts);
            // smooth Z forces a flat family; torsion with a smoothness claim
            // is a contradiction in the input
            if (spec.smooth.has_value() && *spec.smooth && !torsion.empty())
                return std::make_pair(false, std::string("torsion despite smoothness claim: ") +
                                                 torsion.front().str());
            return std::make_pair(true, torsion.empty()
                                            ? std::string("flat: no torsion")
                                            : "torsion: " + describe_relations(torsion));
        });
    }
    if (spec.point) {
        timed(report, "tangent_weights", [&] {
            auto rep = action::tangent_weight_dims(A, *spec.point);
            return std::make_pair(rep.passed(), std::string());
        });
    } else {
        report.skip("tangent_weights", "no point in the spec");
    }
    for (const auto& v : A.ring->vars()) {
        timed(report, "localize_at_" + v.name, [&] {
            auto rep = action::localize_check(A, Polynomial::variable(A.ring, v.name), opts);
            return std::make_pair(rep.passed, rep.detail);
        });
    }
    return report;
}

// ------------------------ entry point ------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"attractors, repellers and the interpolation family of a graded algebra"};
    app.require_subcommand(1);
    app.fallthrough(); // parent flags like --json may follow the subcommand

    std::string file, point_text, t_text = "1", l1 = "1", l2 = "1";
    long xn_n = 2;
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable report on stdout");

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("--file", file, "algebra spec (JSON)")->required();
    };

    auto* c_fixed = app.add_subcommand("fixed", "maximal fixed quotient");
    add_file(c_fixed);
    auto* c_attr = app.add_subcommand("attractor", "maximal nonnegative quotient with maps");
    add_file(c_attr);
    auto* c_rep = app.add_subcommand("repeller", "maximal nonpositive quotient with maps");
    add_file(c_rep);
    auto* c_tan = app.add_subcommand("tangent", "tangent weight decomposition at a fixed point");
    add_file(c_tan);
    c_tan->add_option("--point", point_text, "x=0,y=1/2 (overrides the spec's point)");
    auto* c_interp = app.add_subcommand("interp", "interpolation family presentation");
    add_file(c_interp);
    auto* c_fiber = app.add_subcommand("fiber", "fiber of the family at a rational t");
    add_file(c_fiber);
    c_fiber->add_option("--t", t_text, "exact rational parameter value")->required();
    auto* c_closure = app.add_subcommand("closure", "compare with the action-graph closure");
    add_file(c_closure);
    c_closure->add_flag("--compare", "compare the family ideal with the closure ideal");
    auto* c_torsion = app.add_subcommand("torsion", "t-torsion of the family (flatness)");
    add_file(c_torsion);
    auto* c_anti = app.add_subcommand("antiaction", "reparametrization maps of the family");
    add_file(c_anti);
    c_anti->add_option("--l1", l1, "first scale (exact rational)");
    c_anti->add_option("--l2", l2, "second scale (exact rational)");
    auto* c_comp = app.add_subcommand("compose-check", "composition isomorphisms of the family");
    add_file(c_comp);
    auto* c_verify = app.add_subcommand("verify", "full verification battery");
    add_file(c_verify);

    auto* c_charts = app.add_subcommand("charts", "hyperbola chart atlases");
    auto* c_xn = c_charts->add_subcommand("xn", "chain-of-hyperbolas atlas");
    c_xn->add_option("--n", xn_n, "number of charts")->required();
    auto* c_blow = c_charts->add_subcommand("blowup", "blow-up chart checks");
    c_charts->require_subcommand(1);

    auto* c_cat = app.add_subcommand("cat", "finite category kernel");
    auto* c_pm = c_cat->add_subcommand("pm", "two-object category of a monoid with zero");
    c_pm->add_option("--file", file, "monoid JSON")->required();
    auto* c_tw = c_cat->add_subcommand("tw", "twisted arrow category");
    c_tw->add_option("--file", file, "category JSON")->required();
    auto* c_lax = c_cat->add_subcommand("lax", "lax functor data from a Tw functor");
    c_lax->add_option("--file", file, "category + functor JSON")->required();
    c_cat->require_subcommand(1);

    auto* c_demo = app.add_subcommand("demo", "worked examples");
    auto* c_p1 = c_demo->add_subcommand("p1", "two-chart projective line");
    c_demo->require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 convention
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        gb::Options opts = gb::default_options();
        Report report;
        if (*c_fixed)
            report = cmd_fixed(load_spec(file));
        else if (*c_attr)
            report = cmd_attractor(load_spec(file), false);
        else if (*c_rep)
            report = cmd_attractor(load_spec(file), true);
        else if (*c_tan)
            report = cmd_tangent(load_spec(file), point_text);
        else if (*c_interp)
            report = cmd_interp(load_spec(file));
        else if (*c_fiber)
            report = cmd_fiber(load_spec(file), t_text, opts);
        else if (*c_closure)
            report = cmd_closure(load_spec(file), opts);
        else if (*c_torsion)
            report = cmd_torsion(load_spec(file), opts);
        else if (*c_anti)
            report = cmd_antiaction(load_spec(file), l1, l2, opts);
        else if (*c_comp)
            report = cmd_compose_check(load_spec(file), opts);
        else if (*c_verify)
            report = run_verify(load_spec(file), opts);
        else if (*c_xn)
            report = cmd_charts_xn(xn_n);
        else if (*c_blow)
            report = cmd_charts_blowup();
        else if (*c_pm)
            report = cmd_cat_pm(file);
        else if (*c_tw)
            report = cmd_cat_tw(file);
        else if (*c_lax)
            report = cmd_cat_lax(file);
        else if (*c_p1)
            report = demo_p1(opts);
        else
            throw input_error("no subcommand selected");

        out << (as_json ? report.to_json() : report.to_text());
        return report.exit_code();
    } catch (const resource_limit& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gmact::cli
