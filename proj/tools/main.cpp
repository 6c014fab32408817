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

#include <CLI11.hpp>
#include <iostream>

#include "k3nine/report.hpp"

namespace {

using k3nine::report::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_weights(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw std::invalid_argument("empty weight list");
    return out;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "k3nine: exact re-derivation and verification of the classification of "
        "order-9 non-symplectic K3 automorphisms"};
    app.require_subcommand(1);
    std::string data_dir = "data";
    app.add_option("--data", data_dir, "dataset directory (default: ./data)");

    // lefschetz
    auto* lef = app.add_subcommand("lefschetz", "holomorphic fixed-point constraint system");
    int lef_order = 9, lef_k = 1;
    bool lef_isolated = false, lef_enumerate = false, lef_no_curve = false;
    k3nine::lefschetz::SolveBounds bounds;
    lef->add_option("--order", lef_order, "order of the automorphism")->required();
    lef->add_option("--k", lef_k, "character: action on the 2-form is zeta^k")->required();
    lef->add_flag("--isolated-only", lef_isolated,
                  "isolated fixed points only (the symplectic-cube filter)");
    lef->add_flag("--enumerate", lef_enumerate, "exhaustively enumerate integer solutions");
    lef->add_flag("--no-curve-term", lef_no_curve, "drop the fixed-curve term even for k=1");
    lef->add_option("--a-max", bounds.a_max, "upper bound for every point count (default 24)");
    lef->add_option("--alpha-min", bounds.alpha_min, "lower bound for alpha (default 0)");
    lef->add_option("--alpha-max", bounds.alpha_max, "upper bound for alpha (default 4)");

    // classify
    auto* cls = app.add_subcommand("classify", "enumerate fixed-locus profiles per case");
    std::string axioms = "full", case_filter, explain_row;
    bool diff = false;
    cls->add_option("--axioms", axioms,
                    "axiom pack: full, combinatorial, or a comma list of axiom keys");
    cls->add_option("--case", case_filter, "restrict to one case A..H");
    cls->add_flag("--diff", diff, "compare against the bundled table; exit 1 on mismatch");
    cls->add_option("--explain", explain_row, "print the derivation trace for one row id");

    // lattice
    auto* lat = app.add_subcommand("lattice", "invariants of a lattice expression");
    std::string lattice_expr;
    lat->add_option("expr", lattice_expr, "expression, e.g. \"U(3)+A2^4\"")->required();

    // fibration
    auto* fib = app.add_subcommand("fibration", "Kodaira fiber analysis of y^2=x^3+a(t)x+b(t)");
    std::string fib_a = "0", fib_b = "0", fib_bisection;
    fib->add_option("--a", fib_a, "coefficient a(t)");
    fib->add_option("--b", fib_b, "coefficient b(t)");
    fib->add_option("--bisection", fib_bisection,
                    "report the genus of y^2 = f(t) instead of analyzing a model");

    // monomials
    auto* mon = app.add_subcommand("monomials", "invariant monomials of a diagonal action");
    int mon_order = 9, mon_character = 0, mon_degree = 4;
    std::string mon_weights;
    mon->add_option("--order", mon_order, "order of the action")->required();
    mon->add_option("--weights", mon_weights, "comma-separated weights, e.g. 0,3,6,1")
        ->required();
    mon->add_option("--degree", mon_degree, "degree of the forms")->required();
    mon->add_option("--character", mon_character, "required eigenvalue exponent (default 0)");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run every bundled verification check");
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "machine-readable summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (lef->parsed()) {
            print(k3nine::report::lefschetz_report(static_cast<unsigned>(lef_order), lef_k,
                                                   lef_isolated, lef_enumerate, bounds,
                                                   lef_no_curve));
            return kExitOk;
        }
        if (cls->parsed()) {
            auto ds = k3nine::dataset::load_dataset(data_dir);
            if (!case_filter.empty()) {
                bool known = false;
                for (const auto& rec : ds.table2) known |= (rec.tau.id == case_filter);
                if (!known) throw std::invalid_argument("unknown case: " + case_filter);
            }
            auto pack = k3nine::classifier::AxiomPack::from_selector(axioms);
            auto result =
                k3nine::classifier::classify_all(ds.tau_cases(), pack, ds.reference_rows());
            if (!explain_row.empty()) {
                json out;
                out["row"] = explain_row;
                out["trace"] = k3nine::classifier::explain_row(result, explain_row);
                print(out);
                return kExitOk;
            }
            json out = k3nine::report::classification_report(result, case_filter);
            out["axioms"] = pack.names();
            if (diff) {
                auto d = k3nine::report::diff_against_table(result.rows, ds.reference_rows(),
                                                            case_filter);
                out["diff"] = d.detail;
                out["match"] = d.match;
                print(out);
                return d.match ? kExitOk : kExitMismatch;
            }
            print(out);
            return kExitOk;
        }
        if (lat->parsed()) {
            print(k3nine::report::lattice_report(lattice_expr));
            return kExitOk;
        }
        if (fib->parsed()) {
            if (!fib_bisection.empty()) {
                print(k3nine::report::bisection_report(fib_bisection));
            } else {
                print(k3nine::report::fibration_report(fib_a, fib_b));
            }
            return kExitOk;
        }
        if (mon->parsed()) {
            print(k3nine::report::monomials_report(static_cast<unsigned>(mon_order),
                                                   parse_weights(mon_weights), mon_character,
                                                   mon_degree));
            return kExitOk;
        }
        if (verify->parsed()) {
            auto ds = k3nine::dataset::load_dataset(data_dir);
            auto checks = k3nine::report::verify_paper(ds);
            if (verify_json) {
                print(k3nine::report::checks_to_json(checks));
            } else {
                int failed = 0;
                for (const auto& c : checks) {
                    std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << "  (\"" << c.anchor
                              << "\")";
                    if (!c.detail.empty()) std::cout << " -- " << c.detail;
                    std::cout << "\n";
                    if (!c.note.empty()) std::cout << "       note: " << c.note << "\n";
                    failed += c.pass ? 0 : 1;
                }
                std::cout << (failed == 0 ? "all " : "FAILED: ") << checks.size() - failed << "/"
                          << checks.size() << " checks passed\n";
            }
            for (const auto& c : checks)
                if (!c.pass) return kExitMismatch;
            return kExitOk;
        }
    } catch (const k3nine::dataset::DatasetError& e) {
        std::cerr << "dataset error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
