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

#ifndef JETWIST_CANONICAL_HPP
#define JETWIST_CANONICAL_HPP

#include <cstdint>
#include <random>
#include <string>

#include "jetwist/expr.hpp"

namespace jetwist {

/// Canonical form: a reduced quotient of expanded polynomials whose
/// indeterminates are symbols and transcendental kernels.
///
/// Kernel rewrites applied: exp(a)exp(b) -> exp(a+b), exp(0) -> 1, ln(1) -> 0,
/// ln(exp(a)) -> a, sin(0) -> 0, cos(0) -> 1, sin(-a) -> -sin(a),
/// cos(-a) -> cos(a), cos(a)^2 -> 1 - sin(a)^2. Idempotent.
Expr normalize(const Expr& e);

/// Canonical numerator and denominator of e.
Expr numerator(const Expr& e);
Expr denominator(const Expr& e);

enum class ZeroVerdict : std::uint8_t { proven_zero, proven_nonzero, probably_zero, unknown };

const char* to_string(ZeroVerdict v) noexcept;

struct ProbeOptions {
    std::uint64_t seed = 0x6a65747769737431ULL;
    int points = 5;
    double tolerance = 1e-9;
    int max_attempts = 60;
};

/// Probe options used when none are passed: those of the innermost live
/// ProbeScope on this thread, else the defaults.
const ProbeOptions& default_probe_options() noexcept;

/// Sets default_probe_options() for the current thread while alive.
class ProbeScope {
public:
    explicit ProbeScope(const ProbeOptions& opts);
    ~ProbeScope();
    ProbeScope(const ProbeScope&) = delete;
    ProbeScope& operator=(const ProbeScope&) = delete;

private:
    const ProbeOptions* previous_;
    ProbeOptions current_;
};

/// Decides whether e is identically zero. A canonical zero is proven; otherwise
/// random rational probes in [-3, 3] decide: a regular probe whose value
/// exceeds the tolerance proves nonzero, all-small probes give probably_zero,
/// and no regular probe at all gives unknown.
ZeroVerdict is_zero(const Expr& e, const ProbeOptions& opts = default_probe_options());
ZeroVerdict is_zero(const Expr& e, std::mt19937_64& rng, const ProbeOptions& opts = default_probe_options());

/// True when is_zero(e) is proven_zero or probably_zero.
bool vanishes(const Expr& e, const ProbeOptions& opts = default_probe_options());

/// Random rational probe value in [-3, 3] as used by the zero test.
mpq_class random_probe_value(std::mt19937_64& rng);

}  // namespace jetwist

#endif
