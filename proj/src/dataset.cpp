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

#include "k3nine/dataset.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "k3nine/fibration.hpp"
#include "k3nine/lattice.hpp"
#include "k3nine/lefschetz.hpp"

namespace k3nine::dataset {

using nlohmann::json;

std::vector<classifier::TauCase> Dataset::tau_cases() const {
    std::vector<classifier::TauCase> out;
    for (const auto& rec : table2) out.push_back(rec.tau);
    return out;
}

std::vector<classifier::ReferenceRow> Dataset::reference_rows() const {
    std::vector<classifier::ReferenceRow> out;
    for (const auto& rec : table1) out.push_back(rec.row);
    return out;
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

namespace {

json load_checked(const std::string& dir, const std::string& file, int& version) {
    std::ifstream in(dir + "/" + file);
    if (!in) throw DatasetError("cannot open " + dir + "/" + file);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DatasetError(file + ": invalid JSON: " + e.what());
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer())
        throw DatasetError(file + ": missing integer 'version'");
    version = doc["version"].get<int>();
    if (version < 1) throw DatasetError(file + ": version must be >= 1");
    if (!doc.contains("fnv1a64") || !doc.contains("records"))
        throw DatasetError(file + ": missing 'fnv1a64' or 'records'");
    std::string expect = doc["fnv1a64"].get<std::string>();
    std::string actual = fnv1a64_hex(doc["records"].dump());
    if (expect != actual)
        throw DatasetError(file + ": integrity digest mismatch (expected " + expect +
                           ", records hash to " + actual + ")");
    return doc["records"];
}

int geti(const json& j, const char* key, const std::string& ctx) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw DatasetError(ctx + ": missing integer '" + key + "'");
    return j[key].get<int>();
}

std::string gets(const json& j, const char* key, const std::string& ctx) {
    if (!j.contains(key) || !j[key].is_string())
        throw DatasetError(ctx + ": missing string '" + key + "'");
    return j[key].get<std::string>();
}

}  // namespace

Dataset load_dataset(const std::string& dir) {
    Dataset ds;
    int v2 = 0, v1 = 0, vf = 0;

    json t2 = load_checked(dir, "table2.json", v2);
    for (const auto& rec : t2) {
        TauRecord r;
        std::string ctx = "table2.json record";
        r.tau.id = gets(rec, "id", ctx);
        ctx = "table2.json record " + r.tau.id;
        r.tau.n_points = geti(rec, "n", ctx);
        for (const auto& g : rec.at("curves")) r.tau.curve_genera.push_back(g.get<int>());
        r.tau.m = geti(rec, "m", ctx);
        r.tau.lattice = gets(rec, "lattice", ctx);
        r.tau.hyperelliptic = rec.at("hyperelliptic").get<bool>();
        r.lattice_det = Int(gets(rec, "lattice_det", ctx));
        r.disc_order = Int(gets(rec, "disc_order", ctx));
        r.anchor = gets(rec, "anchor", ctx);

        if (r.tau.n_points + r.tau.m != 10) throw DatasetError(ctx + ": n + m != 10");
        int chi = r.tau.n_points;
        for (int g : r.tau.curve_genera) chi += 2 - 2 * g;
        if (chi != lefschetz::chi_fix_order3(r.tau.m))
            throw DatasetError(ctx + ": fixed locus does not match the Euler characteristic");
        lattice::parse_lattice_expr(r.tau.lattice);  // must parse
        ds.table2.push_back(std::move(r));
    }

    json t1 = load_checked(dir, "table1.json", v1);
    for (const auto& rec : t1) {
        RowRecord r;
        std::string ctx = "table1.json record";
        r.row.id = gets(rec, "id", ctx);
        ctx = "table1.json record " + r.row.id;
        r.row.tau_id = gets(rec, "case", ctx);
        r.row.n_sigma = geti(rec, "n_sigma", ctx);
        r.row.k_sigma = geti(rec, "k_sigma", ctx);
        if (!rec.at("g_sigma").is_null()) r.row.g_sigma = rec.at("g_sigma").get<int>();
        auto a = rec.at("a");
        if (!a.is_array() || a.size() != 4) throw DatasetError(ctx + ": 'a' must have 4 entries");
        for (size_t i = 0; i < 4; ++i) r.row.a[i] = a[i].get<int>();
        r.row.alpha = geti(rec, "alpha", ctx);
        r.row.r = geti(rec, "r", ctx);
        r.row.l = geti(rec, "l", ctx);
        r.a_status = gets(rec, "a_status", ctx);
        r.anchor = gets(rec, "anchor", ctx);

        bool case_known = false;
        for (const auto& t : ds.table2) case_known |= (t.tau.id == r.row.tau_id);
        if (!case_known) throw DatasetError(ctx + ": unknown case " + r.row.tau_id);
        ds.table1.push_back(std::move(r));
    }

    json fx = load_checked(dir, "fixtures.json", vf);
    for (const auto& rec : fx.at("fibrations")) {
        FibrationFixture f;
        std::string ctx = "fixtures.json fibration record";
        f.name = gets(rec, "name", ctx);
        ctx = "fixtures.json fibration " + f.name;
        f.a = gets(rec, "a", ctx);
        f.b = gets(rec, "b", ctx);
        parse_poly(f.a);
        parse_poly(f.b);
        for (const auto& c : rec.at("census"))
            f.census.emplace_back(c.at(0).get<std::string>(), c.at(1).get<int>());
        f.euler = geti(rec, "euler", ctx);
        const auto& bis = rec.at("bisection");
        if (bis.is_null()) {
            f.has_bisection = false;
        } else if (bis.is_string() && bis.get<std::string>() == "splits") {
            f.has_bisection = true;
            f.bisection_splits = true;
        } else if (bis.is_number_integer()) {
            f.has_bisection = true;
            f.bisection_genus = bis.get<int>();
        } else {
            throw DatasetError(ctx + ": 'bisection' must be null, \"splits\" or an integer");
        }
        if (rec.contains("base_order") && !rec.at("base_order").is_null()) {
            f.base_order = rec.at("base_order").get<int>();
            for (const auto& p : rec.at("invariant_points"))
                f.invariant_points.push_back(p.get<std::string>());
        }
        f.anchor = gets(rec, "anchor", ctx);
        if (rec.contains("note") && !rec.at("note").is_null())
            f.note = rec.at("note").get<std::string>();
        ds.fibrations.push_back(std::move(f));
    }
    for (const auto& rec : fx.at("monomials")) {
        MonomialFixture m;
        std::string ctx = "fixtures.json monomial record";
        m.name = gets(rec, "name", ctx);
        ctx = "fixtures.json monomials " + m.name;
        m.order = static_cast<unsigned>(geti(rec, "order", ctx));
        for (const auto& w : rec.at("weights")) m.weights.push_back(w.get<int>());
        m.character = geti(rec, "character", ctx);
        m.degree = geti(rec, "degree", ctx);
        for (const auto& s : rec.at("expected")) m.expected.push_back(s.get<std::string>());
        for (const auto& i : rec.at("necessarily_singular"))
            m.necessarily_singular.push_back(i.get<int>());
        m.anchor = gets(rec, "anchor", ctx);
        ds.monomials.push_back(std::move(m));
    }

    if (v1 != v2 || v1 != vf)
        throw DatasetError("dataset files carry different versions");
    ds.version = v1;
    return ds;
}

}  // namespace k3nine::dataset
