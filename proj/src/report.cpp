/*
   Copyright 2026 The k3nine authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "k3nine/report.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace k3nine::report {

namespace {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(to_string(v));
}

json valuation_to_json(const fibration::Valuation& v) {
    if (v.infinite) return json("inf");
    return json(v.v);
}

std::string relation_string(const lefschetz::Relation& rel,
                            const std::vector<std::string>& unknowns) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < rel.coeffs.size(); ++i) {
        const Int& c = rel.coeffs[i];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1) os << to_string(a) << "*";
        os << unknowns[i];
    }
    if (first) os << "0";
    os << " = " << to_string(rel.constant);
    return os.str();
}

}  // namespace

lefschetz::RelationSet star_relations() {
    lefschetz::RelationSet s;
    s.consistent = true;
    s.unknowns = {"a_{2,8}", "a_{3,7}", "a_{4,6}", "a_{5,5}", "alpha"};
    s.relations.push_back({{Int(1), Int(0), Int(0), Int(1), Int(-3)}, Int(1)});
    s.relations.push_back({{Int(0), Int(1), Int(0), Int(0), Int(-2)}, Int(1)});
    s.relations.push_back({{Int(3), Int(0), Int(1), Int(0), Int(-8)}, Int(4)});
    return s;
}

json relations_to_json(const lefschetz::RelationSet& rels) {
    json out;
    out["unknowns"] = rels.unknowns;
    out["consistent"] = rels.consistent;
    out["relations"] = json::array();
    out["relation_strings"] = json::array();
    if (!rels.consistent) return out;
    for (const auto& rel : rels.relations) {
        json coeffs = json::array();
        for (const auto& c : rel.coeffs) coeffs.push_back(int_to_json(c));
        out["relations"].push_back(json::array({coeffs, int_to_json(rel.constant)}));
        out["relation_strings"].push_back(relation_string(rel, rels.unknowns));
    }
    return out;
}

json lefschetz_report(unsigned order, int k, bool isolated_only, bool enumerate,
                      const lefschetz::SolveBounds& bounds, bool suppress_curve_term) {
    using namespace lefschetz;
    bool curve_points_allowed = !isolated_only;
    bool cube_isolated_only = isolated_only;
    auto types = admissible_types(order, k, curve_points_allowed, cube_isolated_only);
    bool with_curve = (k == 1) && !isolated_only && !suppress_curve_term;
    auto sys = build_holo_system(order, k, types, with_curve);
    auto rels = solution_relations(sys);

    auto cyc_to_json = [](const CycNum& c) {
        json out;
        out["symbolic"] = c.str();
        json coords = json::array();
        for (const auto& x : c.coords()) coords.push_back(to_string(x));
        out["coords"] = coords;
        return out;
    };

    json out;
    out["order"] = order;
    out["k"] = k;
    out["isolated_only"] = isolated_only;
    out["curve_term"] = with_curve;
    out["types"] = json::array();
    for (const auto& t : types) {
        json jt;
        jt["i"] = t.i;
        jt["j"] = t.j;
        jt["on_curve"] = is_on_curve_type(t, order);
        if (!is_on_curve_type(t, order))
            jt["term"] = cyc_to_json(holo_term_point(order, t.i, t.j));
        out["types"].push_back(jt);
    }
    if (with_curve) out["curve_term_value"] = cyc_to_json(holo_term_curve(order));
    out["lhs"] = cyc_to_json(CycNum(order, Rat(1)) + CycNum::zeta_pow(order, -k));
    // the documented solution/relation shape: unknowns + relations (+ solutions)
    json system = relations_to_json(rels);
    out["unknowns"] = system["unknowns"];
    out["consistent"] = system["consistent"];
    out["relations"] = system["relations"];
    out["relation_strings"] = system["relation_strings"];
    if (enumerate) {
        out["bounds"] = {{"a_max", bounds.a_max},
                         {"alpha_min", bounds.alpha_min},
                         {"alpha_max", bounds.alpha_max}};
        out["solutions"] = json::array();
        for (const auto& s : solve_nonneg_integer(sys, bounds))
            out["solutions"].push_back(s);
    }
    return out;
}

json lattice_report(const std::string& expr_text) {
    auto expr = lattice::parse_lattice_expr(expr_text);
    auto g = lattice::gram(expr);
    json out;
    out["expr"] = expr_text;
    out["canonical"] = expr.str();
    out["dimension"] = g.n;
    out["rank"] = lattice::rank(g);
    auto [p, q] = lattice::signature(g);
    out["signature"] = json::array({p, q});
    Int det = lattice::determinant(g);
    out["determinant"] = to_string(det);
    out["even"] = lattice::is_even(g);
    if (det != 0) {
        auto snf = lattice::smith_normal_form(g);
        json factors = json::array();
        for (const auto& d : snf) factors.push_back(to_string(d));
        out["invariant_factors"] = factors;
        out["discriminant_group"] = lattice::discriminant_group_name(snf);
        out["discriminant_order"] = to_string(lattice::discriminant_group_order(snf));
    }
    json gram_rows = json::array();
    for (int i = 0; i < g.n; ++i) {
        json row = json::array();
        for (int j = 0; j < g.n; ++j) row.push_back(int_to_json(g.at(i, j)));
        gram_rows.push_back(row);
    }
    out["gram"] = gram_rows;
    return out;
}

json fibration_report(const std::string& a_text, const std::string& b_text) {
    auto m = fibration::make_model(parse_poly(a_text), parse_poly(b_text));
    auto an = fibration::analyze(m);
    json out;
    out["a"] = m.a.str();
    out["b"] = m.b.str();
    out["discriminant"] = fibration::discriminant(m).str();
    out["places"] = json::array();
    for (const auto& pc : an.places) {
        json jp;
        jp["place"] = pc.place;
        jp["count"] = pc.count;
        jp["v_a"] = valuation_to_json(pc.va);
        jp["v_b"] = valuation_to_json(pc.vb);
        jp["v_delta"] = valuation_to_json(pc.vd);
        jp["kodaira"] = pc.type.symbol;
        jp["euler"] = pc.type.euler;
        if (pc.reductions > 0) jp["minimality_reductions"] = pc.reductions;
        out["places"].push_back(jp);
    }
    out["euler_total"] = an.euler_total;
    out["k3"] = an.k3;
    return out;
}

json bisection_report(const std::string& poly_text) {
    auto f = parse_poly(poly_text);
    auto r = fibration::bisection_genus(f);
    json out;
    out["polynomial"] = f.str();
    if (r.splits)
        out["bisection"] = "splits";
    else
        out["bisection"] = r.genus;
    return out;
}

json monomials_report(unsigned order, const std::vector<int>& weights, int character,
                      int degree) {
    projective::DiagAction act{order, weights, character};
    auto monomials = projective::invariant_monomials(act, degree);
    json out;
    out["order"] = order;
    out["weights"] = weights;
    out["character"] = character;
    out["degree"] = degree;
    out["monomials"] = json::array();
    for (const auto& m : monomials) out["monomials"].push_back(projective::monomial_str(m));
    out["count"] = monomials.size();
    if (!monomials.empty() && degree >= 2) {
        out["screen"] = json::array();
        for (const auto& v : projective::coordinate_point_screen(monomials)) {
            json jv;
            jv["coordinate"] = v.coordinate;
            jv["necessarily_singular"] = v.necessarily_singular;
            if (!v.witness.empty()) jv["witness"] = v.witness;
            out["screen"].push_back(jv);
        }
    }
    out["strata"] = json::array();
    for (const auto& s : projective::fixed_strata(act)) {
        json js;
        js["weight"] = s.weight;
        js["coordinates"] = s.coordinates;
        js["dimension"] = s.dimension;
        out["strata"].push_back(js);
    }
    return out;
}

json row_to_json(const classifier::SigmaRow& row) {
    json out;
    out["id"] = row.id;
    out["case"] = row.tau_id;
    out["n_sigma"] = row.profile.n_sigma;
    out["k_sigma"] = row.profile.k_sigma;
    if (row.profile.g_sigma)
        out["g_sigma"] = *row.profile.g_sigma;
    else
        out["g_sigma"] = nullptr;
    out["a"] = row.profile.a;
    out["alpha"] = row.profile.alpha;
    out["r"] = row.ranks.r;
    out["l"] = row.ranks.l;
    out["s"] = row.ranks.s;
    out["m"] = row.ranks.m;
    out["reference"] = row.reference;
    json fates = json::array();
    for (const auto& f : row.fates) {
        json jf;
        jf["genus"] = f.genus;
        jf["fate"] = f.fate == classifier::Fate::Fixed       ? "fixed"
                     : f.fate == classifier::Fate::Invariant ? "invariant"
                                                             : "cycled";
        if (f.fate == classifier::Fate::Invariant) jf["fixed_points"] = f.fixed_points;
        fates.push_back(jf);
    }
    out["fates"] = fates;
    return out;
}

json classification_report(const classifier::Classification& cls,
                           const std::string& case_filter) {
    json rows = json::array();
    for (const auto& row : cls.rows) {
        if (!case_filter.empty() && row.tau_id != case_filter) continue;
        rows.push_back(row_to_json(row));
    }
    json out;
    out["rows"] = rows;
    out["count"] = rows.size();
    return out;
}

TableDiff diff_against_table(const std::vector<classifier::SigmaRow>& rows,
                             const std::vector<classifier::ReferenceRow>& expected,
                             const std::string& case_filter) {
    TableDiff d;
    json missing = json::array();
    json extra = json::array();
    for (const auto& ref : expected) {
        if (!case_filter.empty() && ref.tau_id != case_filter) continue;
        bool found = false;
        for (const auto& row : rows)
            found |= classifier::row_matches_reference(row, ref);
        if (!found) missing.push_back(ref.id);
    }
    for (const auto& row : rows) {
        if (!case_filter.empty() && row.tau_id != case_filter) continue;
        if (!row.reference) extra.push_back(row_to_json(row));
    }
    d.detail = {{"missing", missing}, {"extra", extra}};
    d.match = missing.empty() && extra.empty();
    return d;
}

namespace {

Check run_check(const std::string& name, const std::string& anchor,
                const std::function<void(Check&)>& body) {
    Check c;
    c.name = name;
    c.anchor = anchor;
    try {
        c.pass = true;
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
    }
    return c;
}

void require(Check& c, bool cond, const std::string& what) {
    if (!cond) {
        c.pass = false;
        if (!c.detail.empty()) c.detail += "; ";
        c.detail += what;
    }
}

std::map<std::string, int> census_of(const fibration::Analysis& an) {
    std::map<std::string, int> m;
    for (const auto& pc : an.places)
        if (pc.type.symbol != "I0") m[pc.type.symbol] += pc.count;
    return m;
}

}  // namespace

std::vector<Check> verify_table_lattices(const dataset::Dataset& ds) {
    std::vector<Check> checks;
    for (const auto& rec : ds.table2) {
        checks.push_back(run_check("lattice-" + rec.tau.id, rec.tau.lattice, [&](Check& c) {
            auto g = lattice::gram(lattice::parse_lattice_expr(rec.tau.lattice));
            int rk = lattice::rank(g);
            require(c, rk == 22 - 2 * rec.tau.m, "rank != 22 - 2m");
            auto sig = lattice::signature(g);
            require(c, sig == std::make_pair(1, rk - 1), "signature not hyperbolic");
            require(c, lattice::is_even(g), "lattice not even");
            Int det = lattice::determinant(g);
            require(c, det == rec.lattice_det,
                    "determinant " + to_string(det) + " != " + to_string(rec.lattice_det));
            auto snf = lattice::smith_normal_form(g);
            Int order = lattice::discriminant_group_order(snf);
            require(c, order == rec.disc_order, "discriminant order mismatch");
            require(c, order == abs(det), "SNF order differs from |det|");
            if (c.pass)
                c.detail = "rank " + std::to_string(rk) + ", det " + to_string(det) +
                           ", group " + lattice::discriminant_group_name(snf);
        }));
    }
    return checks;
}

std::vector<Check> verify_paper(const dataset::Dataset& ds) {
    using namespace lefschetz;
    std::vector<Check> checks;

    checks.push_back(run_check(
        "lefschetz-purely-non-symplectic", "which is inconsistent", [&](Check& c) {
            auto types = admissible_types(9, 3, false, true);
            auto sys = build_holo_system(9, 3, types, false);
            require(c, !solution_relations(sys).consistent, "system is unexpectedly consistent");
            require(c, solve_nonneg_integer(sys).empty(), "enumeration found a solution");
            if (c.pass) c.detail = "system over a_{1,2}, a_{4,8}, a_{5,7} has no solution";
        }));

    checks.push_back(run_check(
        "lefschetz-relations", "The following relations hold", [&](Check& c) {
            auto types = admissible_types(9, 1, true, false);
            auto sys = build_holo_system(9, 1, types, true);
            auto rels = solution_relations(sys);
            require(c, rels.consistent, "system inconsistent");
            require(c, relations_equivalent(rels, star_relations()),
                    "relation set differs from the published one");
            auto sols = solve_nonneg_integer(sys);
            for (const auto& s : sols) {
                for (const auto& rel : star_relations().relations)
                    require(c, relation_holds(rel, s), "enumerated solution violates a relation");
                require(c, holo_identity_holds(sys, s), "cyclotomic recheck failed");
            }
            if (c.pass)
                c.detail = std::to_string(rels.relations.size()) + " relations, " +
                           std::to_string(sols.size()) + " certified solutions in bounds";
        }));

    checks.push_back(run_check(
        "classification-table", "Classification of automorphisms of order 9", [&](Check& c) {
            auto cls = classifier::classify_all(ds.tau_cases(), classifier::AxiomPack::full(),
                                                ds.reference_rows());
            require(c, cls.rows.size() == ds.table1.size(),
                    "row count " + std::to_string(cls.rows.size()) + " != " +
                        std::to_string(ds.table1.size()));
            auto diff = diff_against_table(cls.rows, ds.reference_rows());
            if (!diff.match) {
                std::string names;
                for (const auto& mrow : diff.detail["missing"])
                    names += " missing:" + mrow.get<std::string>();
                for (const auto& erow : diff.detail["extra"])
                    names += " extra:" + erow["id"].get<std::string>();
                require(c, false, "table mismatch:" + names);
            }
            if (c.pass) c.detail = std::to_string(cls.rows.size()) + " rows match row-for-row";
        }));

    for (auto& check : verify_table_lattices(ds)) checks.push_back(std::move(check));

    for (const auto& fx : ds.fibrations) {
        checks.push_back(run_check("fibration-" + fx.name, fx.anchor, [&](Check& c) {
            auto m = fibration::make_model(parse_poly(fx.a), parse_poly(fx.b));
            auto an = fibration::analyze(m);
            std::map<std::string, int> expected(fx.census.begin(), fx.census.end());
            auto got = census_of(an);
            if (got != expected) {
                std::string s = "census mismatch: got";
                for (const auto& [sym, count] : got)
                    s += " " + sym + "x" + std::to_string(count);
                require(c, false, s);
            }
            require(c, an.euler_total == fx.euler,
                    "euler " + std::to_string(an.euler_total) + " != " +
                        std::to_string(fx.euler));
            if (fx.has_bisection) {
                auto bis = fibration::bisection_genus(parse_poly(fx.b));
                if (fx.bisection_splits)
                    require(c, bis.splits, "bisection does not split");
                else
                    require(c, !bis.splits && bis.genus == fx.bisection_genus,
                            "bisection genus mismatch");
            }
            if (fx.base_order) {
                auto inv = fibration::invariant_fibers(m, *fx.base_order);
                require(c, inv.points == fx.invariant_points, "invariant fibers mismatch");
            }
            c.note = fx.note;
            if (c.pass) c.detail = "euler " + std::to_string(an.euler_total);
        }));
    }

    for (const auto& mx : ds.monomials) {
        checks.push_back(run_check("monomials-" + mx.name, mx.anchor, [&](Check& c) {
            projective::DiagAction act{mx.order, mx.weights, mx.character};
            auto ms = projective::invariant_monomials(act, mx.degree);
            std::vector<std::string> got;
            for (const auto& m : ms) got.push_back(projective::monomial_str(m));
            require(c, got == mx.expected,
                    "monomial family has " + std::to_string(got.size()) + " members, expected " +
                        std::to_string(mx.expected.size()));
            std::vector<int> singular;
            for (const auto& v : projective::coordinate_point_screen(ms))
                if (v.necessarily_singular) singular.push_back(v.coordinate);
            require(c, singular == mx.necessarily_singular, "screen verdicts differ");
            if (c.pass)
                c.detail = std::to_string(got.size()) + " monomials, " +
                           std::to_string(singular.size()) + " necessarily singular points";
        }));
    }

    return checks;
}

json checks_to_json(const std::vector<Check>& checks) {
    json out;
    out["checks"] = json::array();
    int failed = 0;
    for (const auto& c : checks) {
        json jc;
        jc["name"] = c.name;
        jc["anchor"] = c.anchor;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        if (!c.note.empty()) jc["note"] = c.note;
        out["checks"].push_back(jc);
        failed += c.pass ? 0 : 1;
    }
    out["total"] = checks.size();
    out["failed"] = failed;
    out["pass"] = (failed == 0);
    return out;
}

}  // namespace k3nine::report
