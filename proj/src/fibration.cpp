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

#include "k3nine/fibration.hpp"

#include <algorithm>

namespace k3nine::fibration {

WeierstrassModel make_model(QPoly a, QPoly b) {
    if (!a.is_constant() && !b.is_constant() && a.var() != b.var())
        throw std::invalid_argument("coefficient polynomials use different variables");
    if (!a.is_zero() && a.degree() > 8)
        throw std::invalid_argument("deg a exceeds the K3 bound 8");
    if (!b.is_zero() && b.degree() > 12)
        throw std::invalid_argument("deg b exceeds the K3 bound 12");
    WeierstrassModel m{std::move(a), std::move(b)};
    discriminant(m);  // rejects identically singular equations
    return m;
}

QPoly discriminant(const WeierstrassModel& m) {
    QPoly d = (m.a.pow(3) * Rat(4) + m.b.pow(2) * Rat(27)) * Rat(-16);
    if (d.is_zero()) throw std::domain_error("not an elliptic surface: discriminant vanishes");
    return d;
}

KodairaType kodaira_type(Valuation va, Valuation vb, Valuation vd) {
    if (vd.infinite) throw std::domain_error("discriminant valuation cannot be infinite");
    if (vd.equals(0)) return {"I0", 0};  // smooth
    if (va.equals(0) && vb.equals(0) && vd.v >= 1) return {"I" + std::to_string(vd.v), vd.v};
    if (va.at_least(1) && vb.equals(1) && vd.equals(2)) return {"II", 2};
    if (va.equals(1) && vb.at_least(2) && vd.equals(3)) return {"III", 3};
    if (va.at_least(2) && vb.equals(2) && vd.equals(4)) return {"IV", 4};
    if (va.at_least(2) && vb.at_least(3) && vd.equals(6)) return {"I0*", 6};
    if (va.equals(2) && vb.equals(3) && vd.v >= 7)
        return {"I" + std::to_string(vd.v - 6) + "*", vd.v};
    if (va.at_least(3) && vb.equals(4) && vd.equals(8)) return {"IV*", 8};
    if (va.equals(3) && vb.at_least(5) && vd.equals(9)) return {"III*", 9};
    if (va.at_least(4) && vb.equals(5) && vd.equals(10)) return {"II*", 10};
    throw std::domain_error("unclassified valuation triple (" + va.str() + "," + vb.str() +
                            "," + vd.str() + ")");
}

namespace {

Valuation poly_valuation(const QPoly& q, const QPoly& p) {
    if (p.is_zero()) return Valuation::inf();
    if (p.is_constant()) return Valuation::of(0);
    return Valuation::of(multiplicity(q, p));
}

PlaceClass classify_place(std::string name, int count, Valuation va, Valuation vb,
                          Valuation vd) {
    PlaceClass pc;
    pc.place = std::move(name);
    pc.count = count;
    pc.reductions = 0;
    while (va.at_least(4) && vb.at_least(6) && vd.at_least(12)) {
        va = va.minus(4);
        vb = vb.minus(6);
        vd = vd.minus(12);
        ++pc.reductions;
    }
    pc.va = va;
    pc.vb = vb;
    pc.vd = vd;
    pc.type = kodaira_type(va, vb, vd);
    return pc;
}

}  // namespace

Analysis analyze(const WeierstrassModel& m) {
    QPoly delta = discriminant(m);

    std::vector<QPoly> layers_input;
    for (const QPoly* p : std::initializer_list<const QPoly*>{&m.a, &m.b, &delta})
        if (!p->is_zero() && !p->is_constant()) layers_input.push_back(*p);
    std::vector<QPoly> basis = coprime_refinement(layers_input);

    Analysis out;
    for (const auto& q : basis) {
        Valuation vd = poly_valuation(q, delta);
        if (vd.equals(0)) continue;  // smooth fibers are not reported
        Valuation va = poly_valuation(q, m.a);
        Valuation vb = poly_valuation(q, m.b);
        out.places.push_back(classify_place(q.str(), q.degree(), va, vb, vd));
    }
    std::sort(out.places.begin(), out.places.end(),
              [](const PlaceClass& x, const PlaceClass& y) { return x.place < y.place; });

    Valuation va_inf = m.a.is_zero() ? Valuation::inf() : Valuation::of(8 - m.a.degree());
    Valuation vb_inf = m.b.is_zero() ? Valuation::inf() : Valuation::of(12 - m.b.degree());
    Valuation vd_inf = Valuation::of(24 - delta.degree());
    out.places.push_back(classify_place("inf", 1, va_inf, vb_inf, vd_inf));

    out.euler_total = 0;
    for (const auto& pc : out.places) out.euler_total += pc.type.euler * pc.count;
    out.k3 = (out.euler_total == 24);
    return out;
}

BisectionResult bisection_genus(const QPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("bisection over the zero polynomial");
    // f = s * h^2 with s squarefree: s collects the odd-multiplicity layers.
    QPoly s(Rat(1), f.var());
    if (!f.is_constant())
        for (const auto& [layer, mult] : squarefree_decomposition(f))
            if (mult % 2 == 1) s *= layer;
    if (s.is_constant()) return {true, 0};
    return {false, (s.degree() - 1) / 2};
}

InvariantFibers invariant_fibers(const WeierstrassModel& m, int base_order) {
    if (base_order < 1) throw std::invalid_argument("base order must be positive");
    if (base_order == 1) return {true, {}};
    auto single_residue_class = [base_order](const QPoly& p) {
        if (p.is_zero()) return true;
        int residue = -1;
        for (size_t e = 0; e < p.coeffs().size(); ++e) {
            if (p.coeffs()[e] == 0) continue;
            int r = static_cast<int>(e) % base_order;
            if (residue < 0)
                residue = r;
            else if (residue != r)
                return false;
        }
        return true;
    };
    if (!single_residue_class(m.a) || !single_residue_class(m.b))
        throw std::invalid_argument(
            "model incompatible with the diagonal base action of order " +
            std::to_string(base_order) +
            ": coefficient support spans several residue classes");
    return {false, {"0", "inf"}};
}

}  // namespace k3nine::fibration
