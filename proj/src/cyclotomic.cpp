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

#include "k3nine/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace k3nine {

unsigned euler_phi(unsigned n) {
    if (n == 0) throw std::invalid_argument("euler_phi(0)");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

const QPoly& cyclotomic_cached(unsigned n) {
    static std::map<unsigned, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // bottom-up so every divisor is already in the cache.
    std::vector<unsigned> divisors;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (unsigned d : divisors) {
        if (cache.count(d)) continue;
        std::vector<Rat> xn(static_cast<size_t>(d) + 1, Rat(0));
        xn[0] = Rat(-1);
        xn.back() = Rat(1);
        QPoly num(std::move(xn), "x");
        for (unsigned e = 1; e < d; ++e)
            if (d % e == 0) num = QPoly::div_exact(num, cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(n);
}

}  // namespace

QPoly cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial(0)");
    return cyclotomic_cached(n);
}

CycNum::CycNum(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    coords_.assign(euler_phi(n), Rat(0));
}

CycNum::CycNum(unsigned n, const Rat& rational) : CycNum(n) { coords_[0] = rational; }

CycNum CycNum::from_coords(unsigned n, std::vector<Rat> coords) {
    CycNum r(n);
    const QPoly& phi = cyclotomic_cached(n);
    QPoly rep(std::move(coords), "x");
    QPoly red = QPoly::divrem(rep, phi).second;
    for (size_t i = 0; i < red.coeffs().size(); ++i) r.coords_[i] = red.coeffs()[i];
    return r;
}

CycNum CycNum::zeta(unsigned n) { return zeta_pow(n, 1); }

CycNum CycNum::zeta_pow(unsigned n, long k) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    long e = k % static_cast<long>(n);
    if (e < 0) e += static_cast<long>(n);
    std::vector<Rat> coords(static_cast<size_t>(e) + 1, Rat(0));
    coords.back() = Rat(1);
    return from_coords(n, std::move(coords));
}

bool CycNum::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational value: " + str());
    return coords_[0];
}

void CycNum::check_same_order(const CycNum& a, const CycNum& b) {
    if (a.n_ != b.n_)
        throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a.n_) +
                                    " vs " + std::to_string(b.n_));
}

CycNum CycNum::operator-() const {
    CycNum r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    CycNum::check_same_order(a, b);
    CycNum r(a);
    for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
    return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    CycNum::check_same_order(a, b);
    CycNum r(a);
    for (size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    CycNum::check_same_order(a, b);
    size_t m = a.coords_.size();
    std::vector<Rat> prod(2 * m, Rat(0));
    for (size_t i = 0; i < m; ++i) {
        if (a.coords_[i] == 0) continue;
        for (size_t j = 0; j < m; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    return CycNum::from_coords(a.n_, std::move(prod));
}

CycNum operator*(const CycNum& a, const Rat& c) {
    CycNum r(a);
    for (auto& x : r.coords_) x *= c;
    return r;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
    // Extended gcd in Q[x]: u*a + v*Phi_n = 1 since Phi_n is irreducible.
    const QPoly& phi = cyclotomic_cached(n_);
    QPoly a(std::vector<Rat>(coords_), "x");
    QPoly r0 = phi, r1 = a;
    QPoly u0(Rat(0), "x"), u1(Rat(1), "x");
    while (!r1.is_zero()) {
        auto [q, r2] = QPoly::divrem(r0, r1);
        QPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 = gcd (a nonzero constant), u0 * a = r0 (mod Phi_n)
    if (!r0.is_constant() || r0.is_zero())
        throw std::logic_error("cyclotomic polynomial not coprime to nonzero element");
    QPoly inv = u0 * (Rat(1) / r0.coeff(0));
    return from_coords(n_, inv.coeffs());
}

CycNum CycNum::galois_conjugate(long k) const {
    long kk = k % static_cast<long>(n_);
    if (kk < 0) kk += static_cast<long>(n_);
    if (std::gcd(static_cast<unsigned long>(kk), static_cast<unsigned long>(n_)) != 1)
        throw std::invalid_argument("galois exponent not coprime to the order");
    CycNum r(n_);
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        r += CycNum::zeta_pow(n_, static_cast<long>(i) * kk) * coords_[i];
    }
    return r;
}

Rat CycNum::norm() const {
    CycNum prod(n_, Rat(1));
    for (unsigned k = 1; k <= n_; ++k) {
        if (std::gcd(k, n_) != 1) continue;
        prod *= galois_conjugate(static_cast<long>(k));
    }
    return prod.rational_value();
}

bool CycNum::operator==(const CycNum& o) const { return n_ == o.n_ && coords_ == o.coords_; }

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        const Rat& c = coords_[i];
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
            os << "zeta";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

}  // namespace k3nine
