/*
   Copyright 2026 The jetwist Authors

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

#include "mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <utility>

namespace jetwist::detail {

MPoly MPoly::constant(std::size_t nvars, const mpq_class& c) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t v) {
    MPoly p(nvars);
    Exponents e(nvars, 0);
    e[v] = 1;
    p.add_term(e, 1);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

void MPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

int MPoly::degree(std::size_t v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

MPoly MPoly::coeff(std::size_t v, int d) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] != d) continue;
        Exponents f = e;
        f[v] = 0;
        r.add_term(f, c);
    }
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars_);
    Exponents f(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) f[i] = e1[i] + e2[i];
            r.add_term(f, c1 * c2);
        }
    }
    return r;
}

MPoly MPoly::scaled(const mpq_class& c) const {
    MPoly r(nvars_);
    if (sgn(c) == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MPoly MPoly::shifted(std::size_t v, int k) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents s = e;
        s[v] += k;
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

MPoly MPoly::monic() const {
    if (terms_.empty()) return *this;
    mpq_class inv = 1 / leading_scalar();
    return scaled(inv);
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
    assert(!b.is_zero());
    const std::size_t n = a.nvars();
    MPoly q(n);
    MPoly r = a;
    const auto& [eb, cb] = *b.terms().begin();
    MPoly::Exponents t(n);
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms().begin();
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = er[i] - eb[i];
            if (t[i] < 0) return std::nullopt;
        }
        mpq_class c = cr / cb;
        MPoly term(n);
        term.add_term(t, c);
        q.add_term(t, c);
        r = r - term * b;
    }
    return q;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t v) {
    const int db = b.degree(v);
    const MPoly lcb = b.leading_coeff(v);
    MPoly r = a;
    while (!r.is_zero() && r.degree(v) >= db) {
        const int dr = r.degree(v);
        MPoly lcr = r.leading_coeff(v);
        r = r * lcb - (lcr * b).shifted(v, dr - db);
    }
    return r;
}

namespace {

MPoly monomial_gcd(const MPoly& m, const MPoly& p) {
    MPoly::Exponents e = m.terms().begin()->first;
    for (const auto& [f, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], f[i]);
    }
    MPoly r(m.nvars());
    r.add_term(e, 1);
    return r;
}

MPoly content(const MPoly& a, std::size_t v) {
    MPoly g(a.nvars());
    const int d = a.degree(v);
    for (int k = d; k >= 0; --k) {
        MPoly c = a.coeff(v, k);
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// a scaled to integer coefficients with unit content and positive leading term.
MPoly integral(const MPoly& a) {
    if (a.is_zero()) return a;
    mpz_class num = 0;
    mpz_class den = 1;
    for (const auto& [e, c] : a.terms()) {
        num = gcd(num, mpz_class(c.get_num()));
        den = lcm(den, mpz_class(c.get_den()));
    }
    mpq_class k(den, num);
    k.canonicalize();
    if (sgn(a.leading_scalar()) < 0) k = -k;
    return a.scaled(k);
}

MPoly primitive_part(const MPoly& a, std::size_t v) {
    if (a.is_zero()) return a;
    MPoly c = content(a, v);
    auto q = divide_exact(a, c);
    assert(q);
    return integral(*q);
}

}  // namespace

namespace {

__extension__ typedef unsigned __int128 wide;

constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<wide>(a) * b % prime);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, b = mul_mod(b, b))
        if (e & 1) r = mul_mod(r, b);
    return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, prime - 2); }

std::optional<std::uint64_t> reduce(const mpq_class& c) {
    mpz_class n = c.get_num() % prime;
    if (n < 0) n += prime;
    mpz_class d = c.get_den() % prime;
    if (d == 0) return std::nullopt;
    return mul_mod(static_cast<std::uint64_t>(n.get_ui()), inv_mod(static_cast<std::uint64_t>(d.get_ui())));
}

using Dense = std::vector<std::uint64_t>;  // ascending powers

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of a in Z_p[v] with every other variable replaced by point[i].
std::optional<Dense> image(const MPoly& a, std::size_t v, const std::vector<std::uint64_t>& point) {
    Dense r(static_cast<std::size_t>(a.degree(v)) + 1, 0);
    for (const auto& [e, c] : a.terms()) {
        auto k = reduce(c);
        if (!k) return std::nullopt;
        std::uint64_t t = *k;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != v && e[i] > 0) t = mul_mod(t, pow_mod(point[i], static_cast<std::uint64_t>(e[i])));
        auto& slot = r[static_cast<std::size_t>(e[v])];
        slot = (slot + t) % prime;
    }
    return r;
}

std::size_t dense_gcd_degree(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::uint64_t inv = inv_mod(b.back());
        while (a.size() >= b.size()) {
            const std::uint64_t q = mul_mod(a.back(), inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[i + shift] = (a[i + shift] + prime - mul_mod(q, b[i])) % prime;
            trim(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Upper bound on the degree in v of gcd(a, b), from images at points where
// neither leading coefficient vanishes.
int gcd_degree_bound(const MPoly& a, const MPoly& b, std::size_t v) {
    const int da = a.degree(v);
    const int db = b.degree(v);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL * (v + 1);
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<std::uint64_t> point(a.nvars());
        for (auto& x : point) {
            state += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            x = (z ^ (z >> 31)) % prime;
        }
        auto ia = image(a, v, point);
        auto ib = image(b, v, point);
        if (!ia || !ib) continue;
        if ((*ia)[static_cast<std::size_t>(da)] == 0 || (*ib)[static_cast<std::size_t>(db)] == 0) continue;
        return static_cast<int>(dense_gcd_degree(std::move(*ia), std::move(*ib)));
    }
    return std::min(da, db);
}

MPoly prs_gcd(const MPoly& a, const MPoly& b, std::size_t v) {
    MPoly ca = content(a, v);
    MPoly cb = content(b, v);
    MPoly c = gcd(ca, cb);
    MPoly p = integral(*divide_exact(a, ca));
    MPoly q = integral(*divide_exact(b, cb));
    if (p.degree(v) < q.degree(v)) std::swap(p, q);
    while (true) {
        MPoly r = pseudo_remainder(p, q, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            q = MPoly::constant(a.nvars(), 1);
            break;
        }
        p = std::move(q);
        q = primitive_part(r, v);
    }
    return (c * primitive_part(q, v)).monic();
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    const std::size_t n = a.nvars();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(n, 1);
    if (a.is_monomial()) return monomial_gcd(a, b);
    if (b.is_monomial()) return monomial_gcd(b, a);
    if (divide_exact(a, b)) return b.monic();
    if (divide_exact(b, a)) return a.monic();

    // A variable missing from one side cannot occur in the gcd.
    for (std::size_t v = 0; v < n; ++v) {
        const int da = a.degree(v);
        const int db = b.degree(v);
        if (da > 0 && db == 0) return gcd(content(a, v), b);
        if (db > 0 && da == 0) return gcd(a, content(b, v));
    }

    std::size_t best = n;
    int best_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (a.degree(v) == 0) continue;
        const int bound = gcd_degree_bound(a, b, v);
        if (bound == 0) return gcd(content(a, v), content(b, v));
        const int size = std::max(a.degree(v), b.degree(v));
        if (best == n || size < best_degree) {
            best = v;
            best_degree = size;
        }
    }
    return prs_gcd(a, b, best);
}

}  // namespace jetwist::detail
