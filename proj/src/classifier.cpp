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

#include "k3nine/classifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace k3nine::classifier {

bool row_matches_reference(const SigmaRow& row, const ReferenceRow& ref) {
    return row.tau_id == ref.tau_id && row.profile.n_sigma == ref.n_sigma &&
           row.profile.k_sigma == ref.k_sigma && row.profile.g_sigma == ref.g_sigma &&
           row.profile.a == ref.a && row.profile.alpha == ref.alpha &&
           row.ranks.r == ref.r && row.ranks.l == ref.l;
}

const std::vector<Axiom>& AxiomPack::catalog() {
    static const std::vector<Axiom> axioms = {
        {kAxGenus,
         "a curve pointwise fixed by the order-9 automorphism has genus 0 or 1",
         "is either 0 or 1"},
        {kAxFRational,
         "in the case with cube invariants (4,4,3) the fixed locus contains a rational curve",
         "contains a curve of genus 0"},
        {kAxDConfig,
         "with cube invariants (4,2,1) only the four listed curve-fate configurations occur",
         "E' is of type I_0^*"},
        {kAxHConfig,
         "with cube invariants (7,5,1) exactly one curve-fate configuration occurs",
         "of type I_9^*"},
        {kAxHyper,
         "an order-3 automorphism of a hyperelliptic curve of genus >= 2 fixes 2, 3 or 4 points",
         "has 2,3 or 4 fixed points"},
    };
    return axioms;
}

AxiomPack AxiomPack::full() {
    AxiomPack p;
    for (const auto& ax : catalog()) p.enabled_.insert(ax.key);
    return p;
}

AxiomPack AxiomPack::combinatorial() { return AxiomPack{}; }

AxiomPack AxiomPack::from_selector(const std::string& selector) {
    if (selector == "full") return full();
    if (selector == "combinatorial") return combinatorial();
    AxiomPack p;
    std::stringstream ss(selector);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // trim
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        item = item.substr(b, e - b + 1);
        bool known = false;
        for (const auto& ax : catalog()) known |= (ax.key == item);
        if (!known) throw std::invalid_argument("unknown axiom: " + item);
        p.enabled_.insert(item);
    }
    return p;
}

AxiomPack AxiomPack::with(const std::string& key) const {
    AxiomPack p(*this);
    bool known = false;
    for (const auto& ax : catalog()) known |= (ax.key == key);
    if (!known) throw std::invalid_argument("unknown axiom: " + key);
    p.enabled_.insert(key);
    return p;
}

AxiomPack AxiomPack::without(const std::string& key) const {
    AxiomPack p(*this);
    p.enabled_.erase(key);
    return p;
}

std::vector<std::string> AxiomPack::names() const {
    return {enabled_.begin(), enabled_.end()};
}

bool AxiomPack::subset_of(const AxiomPack& other) const {
    return std::includes(other.enabled_.begin(), other.enabled_.end(), enabled_.begin(),
                         enabled_.end());
}

std::set<int> rh_options(int genus, bool hyperelliptic) {
    if (genus < 0) throw std::invalid_argument("negative genus");
    std::set<int> out;
    for (int gq = 0;; ++gq) {
        int f = genus + 2 - 3 * gq;
        if (f < 0) break;
        out.insert(f);
    }
    if (hyperelliptic && genus >= 2) {
        std::set<int> restricted;
        for (int f : out)
            if (f >= 2 && f <= 4) restricted.insert(f);
        out = std::move(restricted);
    }
    return out;
}

namespace {

std::string axiom_anchor(const std::string& key) {
    for (const auto& ax : AxiomPack::catalog())
        if (ax.key == key) return ax.anchor;
    return {};
}

// Candidate fate assignment in multiset form: counts per (genus, fate, f).
struct Candidate {
    std::optional<CurveFate> positive;  // the positive-genus curve, if any
    int fixed0 = 0;                     // rational curves fixed pointwise
    int invariant0 = 0;                 // rational curves kept with f = 2
    int cycles0 = 0;                    // 3-cycles of rational curves

    std::vector<CurveFate> fates() const {
        std::vector<CurveFate> out;
        if (positive) out.push_back(*positive);
        for (int i = 0; i < fixed0; ++i) out.push_back({0, Fate::Fixed, 0});
        for (int i = 0; i < invariant0; ++i) out.push_back({0, Fate::Invariant, 2});
        for (int i = 0; i < 3 * cycles0; ++i) out.push_back({0, Fate::Cycled, 0});
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string describe() const {
        std::ostringstream os;
        std::vector<std::string> fixed, cycled;
        std::vector<std::string> inv;
        int e = 1;
        if (positive) {
            if (positive->fate == Fate::Fixed)
                fixed.push_back("C");
            else
                inv.push_back("C:f=" + std::to_string(positive->fixed_points));
        }
        for (int i = 0; i < fixed0; ++i) fixed.push_back("E" + std::to_string(e++));
        for (int i = 0; i < invariant0; ++i) inv.push_back("E" + std::to_string(e++) + ":f=2");
        for (int i = 0; i < 3 * cycles0; ++i) cycled.push_back("E" + std::to_string(e++));
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
            return s;
        };
        bool first = true;
        auto emit = [&](const std::string& part) {
            if (part.empty()) return;
            if (!first) os << "; ";
            os << part;
            first = false;
        };
        if (!fixed.empty()) emit("fix{" + join(fixed) + "}");
        if (!inv.empty()) emit("inv{" + join(inv) + "}");
        if (!cycled.empty()) emit("cycle{" + join(cycled) + "}");
        if (first) os << "no curves";
        return os.str();
    }
};

// The four admissible fate configurations for case D and the unique one for
// case H, stated as canonical fate multisets.
std::vector<std::vector<CurveFate>> d_config_fates() {
    auto mk = [](CurveFate g1, std::vector<CurveFate> rest) {
        rest.push_back(g1);
        std::sort(rest.begin(), rest.end());
        return rest;
    };
    return {
        mk({1, Fate::Invariant, 3}, {{0, Fate::Fixed, 0}}),      // D1
        mk({1, Fate::Fixed, 0}, {{0, Fate::Invariant, 2}}),      // D2
        mk({1, Fate::Invariant, 3}, {{0, Fate::Invariant, 2}}),  // D3
        mk({1, Fate::Invariant, 0}, {{0, Fate::Invariant, 2}}),  // D4
    };
}

std::vector<CurveFate> h_config_fate() {
    std::vector<CurveFate> f = {{1, Fate::Invariant, 3},
                                {0, Fate::Fixed, 0},
                                {0, Fate::Fixed, 0},
                                {0, Fate::Invariant, 2},
                                {0, Fate::Invariant, 2}};
    std::sort(f.begin(), f.end());
    return f;
}

struct Verdict {
    bool ok = false;
    std::string constraint;
    std::string detail;
    SigmaRow row;
};

Verdict evaluate(const TauCase& tc, const AxiomPack& pack, const Candidate& cand) {
    Verdict v;
    auto reject = [&](const std::string& c, const std::string& d) {
        v.ok = false;
        v.constraint = c;
        v.detail = d;
        return v;
    };

    const bool has_pos = cand.positive.has_value();
    const int g = has_pos ? cand.positive->genus : 0;

    // C1 / AX-GENUS: a fixed curve must have admissible genus.
    if (pack.has(kAxGenus) && has_pos && cand.positive->fate == Fate::Fixed && g >= 2)
        return reject(std::string("C1/") + kAxGenus,
                      "fixing a genus-" + std::to_string(g) + " curve is excluded (\"" +
                          axiom_anchor(kAxGenus) + "\")");

    // C3: system (*) given alpha, combined with C5 (isolated points of types
    // (3,7) and (4,6) live on invariant non-fixed curves, f of them each).
    int alpha = cand.fixed0;
    if (has_pos && cand.positive->fate == Fate::Fixed) alpha += 1 - g;
    int sum_f = 2 * cand.invariant0;
    if (has_pos && cand.positive->fate == Fate::Invariant) sum_f += cand.positive->fixed_points;

    if (alpha < 0)
        return reject("C3", "alpha = " + std::to_string(alpha) +
                                " < 0 contradicts the nonnegative counts in (*)");

    const int a37 = 2 * alpha + 1;
    const int a46 = sum_f - a37;  // C5: a37 + a46 = sum of f
    if (a46 < 0)
        return reject("C5", "a_{3,7} = " + std::to_string(a37) + " but only " +
                                std::to_string(sum_f) +
                                " isolated points are available on invariant curves");
    if (a46 > 8 * alpha + 4)
        return reject("C3/C5", "a_{4,6} = " + std::to_string(a46) + " exceeds 8*alpha+4 = " +
                                   std::to_string(8 * alpha + 4));
    const int ten = 10 * alpha + 5 - sum_f;
    if (ten % 3 != 0)
        return reject("C5", "sum of f = " + std::to_string(sum_f) +
                                " is incompatible mod 3 with alpha = " + std::to_string(alpha));
    const int a28 = ten / 3;
    const int a55 = 3 * alpha + 1 - a28;
    if (a55 < 0)
        return reject("C3/C4", "a_{2,8} = " + std::to_string(a28) + " exceeds 3*alpha+1 = " +
                                   std::to_string(3 * alpha + 1));

    // C4: sigma-fixed isolated points of the cube come in 1- and 3-orbits.
    if (a28 + a55 > tc.n_points)
        return reject("C4", "a_{2,8}+a_{5,5} = " + std::to_string(a28 + a55) + " exceeds n = " +
                                std::to_string(tc.n_points));
    if ((tc.n_points - (a28 + a55)) % 3 != 0)
        return reject("C4", "n - (a_{2,8}+a_{5,5}) = " +
                                std::to_string(tc.n_points - (a28 + a55)) +
                                " is not a multiple of 3");

    // C6: case-specific axioms from the pack.
    if (pack.has(kAxHyper) && tc.hyperelliptic && has_pos && g >= 2 &&
        cand.positive->fate == Fate::Invariant) {
        int f = cand.positive->fixed_points;
        if (f < 2 || f > 4)
            return reject(std::string("C6/") + kAxHyper,
                          "f=" + std::to_string(f) + " on the genus-" + std::to_string(g) +
                              " curve is excluded (\"" + axiom_anchor(kAxHyper) + "\")");
    }
    if (pack.has(kAxFRational) && tc.id == "F" && cand.fixed0 == 0)
        return reject(std::string("C6/") + kAxFRational,
                      "no rational curve is fixed (\"" + axiom_anchor(kAxFRational) + "\")");
    if (pack.has(kAxDConfig) && tc.id == "D") {
        auto fates = cand.fates();
        bool listed = false;
        for (const auto& cfg : d_config_fates()) listed |= (cfg == fates);
        if (!listed)
            return reject(std::string("C6/") + kAxDConfig,
                          "fate configuration not among the four admissible ones (\"" +
                              axiom_anchor(kAxDConfig) + "\")");
    }
    if (pack.has(kAxHConfig) && tc.id == "H") {
        if (cand.fates() != h_config_fate())
            return reject(std::string("C6/") + kAxHConfig,
                          "fate configuration differs from the unique admissible one (\"" +
                              axiom_anchor(kAxHConfig) + "\")");
    }

    // C7: eigenvalue bookkeeping must close.
    const int n_sigma = a28 + a37 + a46 + a55;
    auto ranks = lefschetz::try_eigen_ranks(n_sigma, alpha, tc.m);
    if (!ranks)
        return reject("C7", "no nonnegative integral (r,l) for n_sigma = " +
                                std::to_string(n_sigma) + ", alpha = " + std::to_string(alpha));

    v.ok = true;
    v.row.tau_id = tc.id;
    v.row.fates = cand.fates();
    v.row.profile.a = {a28, a37, a46, a55};
    v.row.profile.alpha = alpha;
    v.row.profile.n_sigma = n_sigma;
    v.row.profile.k_sigma = cand.fixed0 + (has_pos && cand.positive->fate == Fate::Fixed ? 1 : 0);
    if (v.row.profile.k_sigma > 0)
        v.row.profile.g_sigma = (has_pos && cand.positive->fate == Fate::Fixed) ? g : 0;
    v.row.ranks = *ranks;
    return v;
}

std::string fate_sort_key(const SigmaRow& row) {
    std::ostringstream os;
    for (const auto& f : row.fates)
        os << f.genus << ":" << static_cast<int>(f.fate) << ":" << f.fixed_points << ";";
    return os.str();
}

bool row_order(const SigmaRow& x, const SigmaRow& y) {
    if (x.tau_id != y.tau_id) return x.tau_id < y.tau_id;
    if (x.profile.n_sigma != y.profile.n_sigma) return x.profile.n_sigma > y.profile.n_sigma;
    if (x.profile.k_sigma != y.profile.k_sigma) return x.profile.k_sigma > y.profile.k_sigma;
    int gx = x.profile.g_sigma.value_or(-1), gy = y.profile.g_sigma.value_or(-1);
    if (gx != gy) return gx > gy;
    if (x.profile.a != y.profile.a) return x.profile.a > y.profile.a;
    return fate_sort_key(x) < fate_sort_key(y);
}

}  // namespace

std::vector<SigmaRow> enumerate_case(const TauCase& tc, const AxiomPack& pack,
                                     const std::vector<ReferenceRow>& labels,
                                     CaseTrace* trace) {
    if (tc.n_points + tc.m != 10)
        throw std::invalid_argument("tau-case " + tc.id + " violates n + m = 10");
    int positives = 0;
    for (int g : tc.curve_genera) positives += (g >= 1);
    if (positives > 1)
        throw std::invalid_argument("tau-case " + tc.id + " has more than one positive-genus curve");

    std::optional<int> pos_genus;
    int g0 = 0;
    for (int g : tc.curve_genera) {
        if (g >= 1)
            pos_genus = g;
        else
            ++g0;
    }

    // Candidate fates for the positive-genus curve: pointwise fixed, or
    // invariant with any fixed-point count allowed by the unrestricted
    // Riemann-Hurwitz options (axioms prune afterwards, so rejections are
    // visible in the trace). It is never part of a 3-cycle.
    std::vector<std::optional<CurveFate>> pos_options;
    if (pos_genus) {
        pos_options.emplace_back(CurveFate{*pos_genus, Fate::Fixed, 0});
        for (int f : rh_options(*pos_genus, false))
            pos_options.emplace_back(CurveFate{*pos_genus, Fate::Invariant, f});
    } else {
        pos_options.emplace_back(std::nullopt);
    }

    std::vector<SigmaRow> rows;
    if (trace) {
        trace->tau_id = tc.id;
        trace->entries.clear();
    }
    for (int cycles = 0; 3 * cycles <= g0; ++cycles) {
        for (int fixed0 = 0; fixed0 + 3 * cycles <= g0; ++fixed0) {
            for (const auto& pos : pos_options) {
                Candidate cand;
                cand.positive = pos;
                cand.fixed0 = fixed0;
                cand.cycles0 = cycles;
                cand.invariant0 = g0 - 3 * cycles - fixed0;
                Verdict v = evaluate(tc, pack, cand);
                if (v.ok) {
                    rows.push_back(std::move(v.row));
                    if (trace)
                        trace->entries.push_back({true, cand.describe(), "", "", ""});
                } else if (trace) {
                    trace->entries.push_back(
                        {false, cand.describe(), "", v.constraint, v.detail});
                }
            }
        }
    }

    std::sort(rows.begin(), rows.end(), row_order);

    // Label: bundled table ids where they match, synthetic ids otherwise.
    int extra = 0;
    for (auto& row : rows) {
        row.reference = false;
        for (const auto& ref : labels) {
            if (row_matches_reference(row, ref)) {
                row.id = ref.id;
                row.reference = true;
                break;
            }
        }
        if (!row.reference) row.id = tc.id + "-x" + std::to_string(++extra);
    }
    if (trace) {
        for (auto& e : trace->entries) {
            if (!e.accepted) continue;
            for (const auto& row : rows) {
                Candidate cand;
                for (const auto& f : row.fates) {
                    if (f.genus >= 1)
                        cand.positive = f;
                    else if (f.fate == Fate::Fixed)
                        ++cand.fixed0;
                    else if (f.fate == Fate::Invariant)
                        ++cand.invariant0;
                    else
                        ++cand.cycles0;  // one per cycled curve; 3 per cycle
                }
                cand.cycles0 /= 3;
                if (cand.describe() == e.candidate) {
                    e.row_id = row.id;
                    e.detail = "accepted as " + row.id +
                               (row.reference ? "" : " (not excluded combinatorially)");
                    break;
                }
            }
        }
    }
    return rows;
}

Classification classify_all(const std::vector<TauCase>& table2, const AxiomPack& pack,
                            const std::vector<ReferenceRow>& labels) {
    Classification out;
    for (const auto& tc : table2) {
        CaseTrace trace;
        auto rows = enumerate_case(tc, pack, labels, &trace);
        out.rows.insert(out.rows.end(), rows.begin(), rows.end());
        out.traces.push_back(std::move(trace));
    }
    std::sort(out.rows.begin(), out.rows.end(), row_order);
    return out;
}

std::vector<std::string> explain_row(const Classification& cls, const std::string& row_id) {
    const SigmaRow* row = nullptr;
    for (const auto& r : cls.rows)
        if (r.id == row_id) row = &r;
    if (!row) throw std::invalid_argument("unknown row id: " + row_id);
    std::vector<std::string> out;
    for (const auto& trace : cls.traces) {
        if (trace.tau_id != row->tau_id) continue;
        for (const auto& e : trace.entries) {
            std::string line = "[" + trace.tau_id + "] " + e.candidate + " -> ";
            if (e.accepted)
                line += e.detail.empty() ? "accepted" : e.detail;
            else
                line += "rejected by " + e.constraint + ": " + e.detail;
            out.push_back(std::move(line));
        }
    }
    return out;
}

}  // namespace k3nine::classifier
