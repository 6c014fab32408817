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

#include "k3nine/projective.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace k3nine::projective {

namespace {

int mod(int x, unsigned n) {
    int r = x % static_cast<int>(n);
    return r < 0 ? r + static_cast<int>(n) : r;
}

}  // namespace

std::vector<Stratum> fixed_strata(const DiagAction& act) {
    if (act.order == 0) throw std::invalid_argument("order must be positive");
    if (act.weights.empty()) throw std::invalid_argument("no coordinates");
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < act.weights.size(); ++i)
        groups[mod(act.weights[i], act.order)].push_back(static_cast<int>(i));
    std::vector<Stratum> out;
    for (const auto& [w, coords] : groups)
        out.push_back({w, coords, static_cast<int>(coords.size()) - 1});
    return out;
}

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << i;
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

std::vector<Monomial> invariant_monomials(const DiagAction& act, int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    if (act.weights.empty()) throw std::invalid_argument("no coordinates");
    const size_t k = act.weights.size();
    std::vector<Monomial> out;
    Monomial cur(k, 0);
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (idx + 1 == k) {
            cur[idx] = remaining;
            int w = 0;
            for (size_t i = 0; i < k; ++i) w += cur[i] * act.weights[i];
            if (mod(w - act.character, act.order) == 0) out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {  // descending lex
            cur[idx] = e;
            self(self, idx + 1, remaining - e);
        }
        cur[idx] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<ScreenVerdict> coordinate_point_screen(const std::vector<Monomial>& monomials) {
    if (monomials.empty()) throw std::invalid_argument("empty monomial family");
    const size_t k = monomials.front().size();
    int degree = 0;
    for (int e : monomials.front()) degree += e;
    if (degree < 2) throw std::invalid_argument("screen needs degree >= 2");
    for (const auto& m : monomials) {
        if (m.size() != k) throw std::invalid_argument("mixed coordinate counts");
        int d = 0;
        for (int e : m) d += e;
        if (d != degree) throw std::invalid_argument("mixed degrees in the family");
    }
    std::vector<ScreenVerdict> out;
    for (size_t i = 0; i < k; ++i) {
        ScreenVerdict v;
        v.coordinate = static_cast<int>(i);
        v.necessarily_singular = true;
        // F(e_i) is the x_i^d coefficient; dF(e_i) needs some x_i^(d-1) x_j.
        for (const auto& m : monomials) {
            if (m[i] >= degree - 1) {
                v.necessarily_singular = false;
                v.witness = monomial_str(m);
                break;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

RootProfile line_intersection_count(const QPoly& dehomogenized, int form_degree) {
    if (dehomogenized.is_zero()) throw std::invalid_argument("zero form");
    int deg = dehomogenized.is_constant() ? 0 : dehomogenized.degree();
    if (deg > form_degree)
        throw std::invalid_argument("dehomogenized degree exceeds the form degree");
    RootProfile out;
    out.form_degree = form_degree;
    out.infinity_multiplicity = form_degree - deg;
    out.root_at_infinity = out.infinity_multiplicity > 0;
    if (!dehomogenized.is_constant())
        for (const auto& [layer, mult] : squarefree_decomposition(dehomogenized))
            for (int i = 0; i < layer.degree(); ++i) out.multiplicities.push_back(mult);
    if (out.root_at_infinity) out.multiplicities.push_back(out.infinity_multiplicity);
    std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
    out.distinct = true;
    for (int m : out.multiplicities) out.distinct &= (m == 1);
    return out;
}

}  // namespace k3nine::projective
