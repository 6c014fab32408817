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

#include "k3nine/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k3nine {

QPoly::QPoly(const Rat& c, std::string var) : var_(std::move(var)) {
    if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(long c, std::string var) : QPoly(Rat(c), std::move(var)) {}

QPoly::QPoly(std::vector<Rat> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

QPoly QPoly::variable(const std::string& var) {
    return QPoly({Rat(0), Rat(1)}, var);
}

QPoly QPoly::monomial(const Rat& c, int e, const std::string& var) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return QPoly(Rat(0), var);
    std::vector<Rat> cs(static_cast<size_t>(e) + 1, Rat(0));
    cs.back() = c;
    return QPoly(std::move(cs), var);
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int QPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
}

std::optional<int> QPoly::degree_opt() const {
    if (is_zero()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const Rat& QPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero");
    return coeffs_.back();
}

Rat QPoly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return Rat(0);
    return coeffs_[static_cast<size_t>(k)];
}

std::string QPoly::unify_var(const QPoly& a, const QPoly& b) {
    if (a.is_constant()) return b.var_;
    if (b.is_constant()) return a.var_;
    if (a.var_ != b.var_)
        throw std::invalid_argument("variable mismatch: '" + a.var_ + "' vs '" + b.var_ + "'");
    return a.var_;
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    var_ = unify_var(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    var_ = unify_var(*this, o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    var_ = unify_var(*this, o);
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rat& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return QPoly(Rat(0), var_);
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(out), var_);
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    QPoly r(*this);
    Rat inv = Rat(1) / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

QPoly QPoly::pow(unsigned e) const {
    QPoly r(Rat(1), var_);
    QPoly base(*this);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::string var = unify_var(a, b);
    if (a.is_zero() || a.coeffs_.size() < b.coeffs_.size())
        return {QPoly(Rat(0), var), a};
    std::vector<Rat> rem = a.coeffs_;
    std::vector<Rat> quo(a.coeffs_.size() - b.coeffs_.size() + 1, Rat(0));
    const Rat lead_inv = Rat(1) / b.leading();
    for (size_t k = quo.size(); k-- > 0;) {
        Rat c = rem[k + b.coeffs_.size() - 1] * lead_inv;
        quo[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= c * b.coeffs_[j];
    }
    rem.resize(b.coeffs_.size() - 1);
    return {QPoly(std::move(quo), var), QPoly(std::move(rem), var)};
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool QPoly::operator==(const QPoly& o) const {
    if (coeffs_ != o.coeffs_) return false;
    if (is_constant() || o.is_constant()) return true;
    return var_ == o.var_;
}

int QPoly::compare(const QPoly& a, const QPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    for (size_t i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
    }
    return 0;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c > 0 ? c : Rat(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly poly_gcd(const QPoly& p, const QPoly& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    QPoly a = p.monic();
    QPoly b = q.monic();
    while (!b.is_zero()) {
        QPoly r = QPoly::divrem(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a;  // already monic
}

bool divides_exactly(const QPoly& d, const QPoly& p) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    return QPoly::divrem(p, d).second.is_zero();
}

int multiplicity(const QPoly& d, const QPoly& p) {
    if (p.is_zero() || d.is_constant())
        throw std::invalid_argument("multiplicity needs nonzero p and nonconstant d");
    int m = 0;
    QPoly cur = p;
    while (true) {
        auto [q, r] = QPoly::divrem(cur, d);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++m;
        if (cur.is_constant()) break;
    }
    return m;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<QPoly, int>> out;
    if (p.is_constant()) return out;
    // Yun's method: only gcds and exact divisions, no factorization.
    QPoly f = p.monic();
    QPoly df = f.derivative();
    QPoly g = poly_gcd(f, df);
    QPoly b = QPoly::div_exact(f, g);
    QPoly c = QPoly::div_exact(df, g);
    QPoly d = c - b.derivative();
    int i = 1;
    while (!(b.is_constant())) {
        QPoly a = poly_gcd(b, d);
        if (!a.is_constant()) out.emplace_back(a.monic(), i);
        b = QPoly::div_exact(b, a);
        c = QPoly::div_exact(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

QPoly squarefree_part(const QPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero");
    if (p.is_constant()) return QPoly(Rat(1), p.var());
    return QPoly::div_exact(p, poly_gcd(p, p.derivative())).monic();
}

std::vector<QPoly> coprime_refinement(const std::vector<QPoly>& ps) {
    // Seed the basis with the squarefree layers of every input so that
    // factors of different multiplicity inside one input are already
    // separated (t^2*(t+1) must split t from t+1).
    std::vector<QPoly> basis;
    auto push = [&basis](const QPoly& q) {
        if (q.is_constant()) return;
        QPoly m = q.monic();
        for (const auto& b : basis)
            if (b == m) return;
        basis.push_back(std::move(m));
    };
    for (const auto& p : ps) {
        if (p.is_zero()) throw std::invalid_argument("coprime refinement of zero polynomial");
        for (const auto& [s, m] : squarefree_decomposition(p)) push(s);
    }
    // Split pairs with a common factor until pairwise coprime.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < basis.size() && !changed; ++i) {
            for (size_t j = i + 1; j < basis.size() && !changed; ++j) {
                QPoly d = poly_gcd(basis[i], basis[j]);
                if (d.is_constant()) continue;
                QPoly fi = QPoly::div_exact(basis[i], d).monic();
                QPoly fj = QPoly::div_exact(basis[j], d).monic();
                basis.erase(basis.begin() + static_cast<long>(j));
                basis.erase(basis.begin() + static_cast<long>(i));
                push(d);
                push(fi);
                push(fj);
                changed = true;
            }
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const QPoly& a, const QPoly& b) { return QPoly::compare(a, b) < 0; });
    return basis;
}

namespace {

// Integer polynomial helpers for the subresultant sequence.
using ZP = std::vector<Int>;  // coefficient k multiplies x^k, trailing nonzero

void ztrim(ZP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

Int zcontent(const ZP& p) {
    Int g = 0;
    for (const auto& c : p) g = int_gcd(g, c);
    return g == 0 ? Int(1) : g;
}

ZP zdiv_const(const ZP& p, const Int& c) {
    ZP out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[i] = p[i] / c;
    return out;
}

// Pseudo-remainder with the exact lc(b)^(delta+1) premultiplier.
ZP zprem_exact(const ZP& a0, const ZP& b) {
    int delta = zdeg(a0) - zdeg(b);
    ZP a = a0;
    const Int lb = b.back();
    Int mult = int_pow(lb, static_cast<unsigned long>(delta) + 1);
    for (auto& x : a) x *= mult;
    // Plain polynomial remainder now divides exactly at every step.
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        Int c = a.back() / lb;
        size_t shift = static_cast<size_t>(zdeg(a) - zdeg(b));
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        ztrim(a);
    }
    return a;
}

}  // namespace

Rat resultant(const QPoly& p, const QPoly& q) {
    if (!p.is_constant() && !q.is_constant() && p.var() != q.var())
        throw std::invalid_argument("variable mismatch in resultant");
    if (p.is_zero() || q.is_zero()) return Rat(0);
    if (p.is_constant() && q.is_constant()) return Rat(1);
    if (q.is_constant()) {
        Rat r(1);
        for (int i = 0; i < p.degree(); ++i) r *= q.coeff(0);
        return r;
    }
    if (p.is_constant()) {
        Rat r(1);
        for (int i = 0; i < q.degree(); ++i) r *= p.coeff(0);
        return r;
    }

    // Clear denominators: res(c*p, q) = c^deg(q) * res(p, q).
    auto to_int = [](const QPoly& f, Int& denom) {
        denom = 1;
        for (const auto& c : f.coeffs()) denom = int_lcm(denom, c.get_den());
        ZP out(f.coeffs().size());
        for (size_t i = 0; i < out.size(); ++i) {
            Rat scaled = f.coeffs()[i] * Rat(denom);
            out[i] = scaled.get_num();
        }
        return out;
    };
    Int dp, dq;
    ZP A = to_int(p, dp);
    ZP B = to_int(q, dq);

    int sign = 1;
    if (zdeg(A) < zdeg(B)) {
        std::swap(A, B);
        if ((zdeg(A) % 2) && (zdeg(B) % 2)) sign = -sign;
    }

    // Subresultant pseudo-remainder sequence (Collins / Cohen Alg. 3.3.7).
    Int ca = zcontent(A), cb = zcontent(B);
    A = zdiv_const(A, ca);
    B = zdiv_const(B, cb);
    Int t = int_pow(ca, static_cast<unsigned long>(zdeg(B))) *
            int_pow(cb, static_cast<unsigned long>(zdeg(A)));
    Int g(1), h(1);
    Int res;
    while (true) {
        int da = zdeg(A), db = zdeg(B);
        int delta = da - db;
        if ((da % 2) && (db % 2)) sign = -sign;
        ZP R = zprem_exact(A, B);
        if (R.empty()) return Rat(0);  // common nonconstant factor
        A = B;
        Int divisor = g * int_pow(h, static_cast<unsigned long>(delta));
        B = zdiv_const(R, divisor);
        g = A.back();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact in Z
            Int num = int_pow(g, static_cast<unsigned long>(delta));
            Int den = int_pow(h, static_cast<unsigned long>(delta - 1));
            h = num / den;
        }
        if (zdeg(B) == 0) {
            int dA = zdeg(A);
            // res = t * lc(B)^deg(A) / h^(deg(A)-1)
            Int num = int_pow(B.back(), static_cast<unsigned long>(dA));
            Int den = int_pow(h, static_cast<unsigned long>(dA - 1));
            res = t * (num / den);
            break;
        }
    }
    Rat result = Rat(res) * Rat(sign);
    // Undo the denominator clearing.
    Rat scale = Rat(int_pow(dp, static_cast<unsigned long>(q.degree()))) *
                Rat(int_pow(dq, static_cast<unsigned long>(p.degree())));
    return result / scale;
}

// ---------------------------------------------------------------------------
// Parser for the shared polynomial grammar.

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }
};

struct PolyParser {
    Lexer lex;
    std::string var;  // empty until the first variable is seen

    explicit PolyParser(const std::string& text) : lex(text) {}

    QPoly parse() {
        QPoly r = expr();
        if (!lex.eof()) lex.fail("trailing input");
        return r;
    }

    QPoly expr() {
        QPoly acc = term();
        while (true) {
            if (lex.accept('+'))
                acc += term();
            else if (lex.accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    QPoly term() {
        QPoly acc = factor();
        while (lex.accept('*')) acc *= factor();
        return acc;
    }

    QPoly factor() {
        int sign = 1;
        while (true) {
            if (lex.accept('-'))
                sign = -sign;
            else if (lex.accept('+'))
                ;
            else
                break;
        }
        QPoly base = atom();
        if (lex.accept('^')) {
            char c = lex.peek();
            if (!std::isdigit(static_cast<unsigned char>(c))) lex.fail("expected nonnegative exponent");
            Int e = lex.integer();
            if (!e.fits_ulong_p() || e > 4096) lex.fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        if (sign < 0) base = -base;
        return base;
    }

    QPoly atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.accept('(');
            QPoly inner = expr();
            if (!lex.accept(')')) lex.fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = lex.integer();
            // A '/' directly after an integer continues a rational literal.
            if (lex.accept('/')) {
                char d = lex.peek();
                if (!std::isdigit(static_cast<unsigned char>(d)))
                    lex.fail("'/' is only allowed inside a rational literal");
                Int den = lex.integer();
                if (den == 0) lex.fail("zero denominator");
                return QPoly(make_rat(num, den), var.empty() ? "t" : var);
            }
            return QPoly(Rat(num), var.empty() ? "t" : var);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex.ident();
            if (var.empty())
                var = name;
            else if (var != name)
                lex.fail("more than one variable ('" + var + "' and '" + name + "')");
            return QPoly::variable(var);
        }
        lex.fail("unexpected character");
    }
};

}  // namespace

QPoly parse_poly(const std::string& text) {
    PolyParser p(text);
    QPoly r = p.parse();
    if (!p.var.empty() && r.is_constant()) return QPoly(r.coeff(0), p.var);
    return r;
}

}  // namespace k3nine
