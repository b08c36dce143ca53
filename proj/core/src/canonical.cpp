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

#include "jetwist/canonical.hpp"

#include <algorithm>
#include <cmath>

#include "algebra.hpp"
#include "jetwist/errors.hpp"

namespace jetwist {

using detail::canonical;
using detail::to_expr;

Expr normalize(const Expr& e) { return to_expr(*canonical(e)); }

Expr subst(const Expr& e, const Assignment& a, SubstMode mode) {
    if (mode == SubstMode::strict) {
        std::vector<std::string> missing;
        for (const auto& s : symbols(e))
            if (!a.count(s.name())) missing.push_back(s.name());
        if (!missing.empty()) throw MissingSymbols(std::move(missing));
    }
    return normalize(substitute(e, a));
}

Expr numerator(const Expr& e) { return to_expr(canonical(e)->num); }

Expr denominator(const Expr& e) { return to_expr(canonical(e)->den); }

const char* to_string(ZeroVerdict v) noexcept {
    switch (v) {
    case ZeroVerdict::proven_zero:
        return "proven-zero";
    case ZeroVerdict::proven_nonzero:
        return "proven-nonzero";
    case ZeroVerdict::probably_zero:
        return "probably-zero";
    case ZeroVerdict::unknown:
        return "unknown";
    }
    return "unknown";
}

namespace {
thread_local const ProbeOptions* current_options = nullptr;
}

const ProbeOptions& default_probe_options() noexcept {
    static const ProbeOptions defaults;
    return current_options != nullptr ? *current_options : defaults;
}

ProbeScope::ProbeScope(const ProbeOptions& opts) : previous_(current_options), current_(opts) {
    current_options = &current_;
}

ProbeScope::~ProbeScope() { current_options = previous_; }

mpq_class random_probe_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> den_dist(1, 8);
    const long q = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-3 * q, 3 * q);
    mpq_class v(num_dist(rng), q);
    v.canonicalize();
    return v;
}

ZeroVerdict is_zero(const Expr& e, const ProbeOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    return is_zero(e, rng, opts);
}

ZeroVerdict is_zero(const Expr& e, std::mt19937_64& rng, const ProbeOptions& opts) {
    const auto r = canonical(e);
    if (r->num.is_zero()) return ZeroVerdict::proven_zero;
    // A nonzero polynomial in independent symbols is a nonzero function.
    if (r->num.is_pure()) return ZeroVerdict::proven_nonzero;

    std::vector<Expr> terms;
    for (const auto& [m, c] : r->num.terms()) terms.push_back(to_expr(detail::Poly::from_monomial(m, c)));
    const Expr den = to_expr(r->den);
    std::vector<Symbol> syms = symbols(to_expr(r->num));
    for (const auto& s : symbols(den)) syms.push_back(s);

    int regular = 0;
    for (int attempt = 0; attempt < opts.max_attempts && regular < opts.points; ++attempt) {
        NumericAssignment point;
        for (const auto& s : syms) point[s.name()] = random_probe_value(rng).get_d();
        try {
            const double d = eval_numeric(den, point);
            if (std::abs(d) < 1e-12) continue;
            double value = 0;
            double scale = 0;
            for (const auto& t : terms) {
                const double v = eval_numeric(t, point);
                value += v;
                scale += std::abs(v);
            }
            ++regular;
            if (std::abs(value) > opts.tolerance * std::max(1.0, scale)) return ZeroVerdict::proven_nonzero;
        } catch (const DomainError&) {
            continue;
        }
    }
    return regular > 0 ? ZeroVerdict::probably_zero : ZeroVerdict::unknown;
}

bool vanishes(const Expr& e, const ProbeOptions& opts) {
    const ZeroVerdict v = is_zero(e, opts);
    return v == ZeroVerdict::proven_zero || v == ZeroVerdict::probably_zero;
}

}  // namespace jetwist
