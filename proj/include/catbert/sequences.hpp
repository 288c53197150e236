#pragma once

// Generalized Catalan number sequences g^(q/p): generation, integrality,
// shift recurrences, and the classical Catalan specialization.

#include "catbert/rational.hpp"
#include "catbert/report.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace catbert {

struct NonIntegerTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The triple (p, q, a) identifying a sequence/matrix family g^(q/p) with
/// offset a. p >= 2, q nonzero and coprime to p, a >= 0.
struct GCParams {
    long p = 2;
    long q = -3;
    long a = 0;

    void validate() const {
        if (p < 2) throw std::invalid_argument("p must be an integer >= 2");
        if (q == 0) throw std::invalid_argument("q must be nonzero");
        if (std::gcd(p, std::abs(q)) != 1)
            throw std::invalid_argument("q must be coprime to p");
        if (a < 0) throw std::invalid_argument("a must be a non-negative integer");
    }

    /// q/p as an exact rational.
    Rational ratio() const { return Rational(q, p); }

    std::string str() const {
        return "(p=" + std::to_string(p) + ", q=" + std::to_string(q) +
               ", a=" + std::to_string(a) + ")";
    }

    nlohmann::json to_json() const { return {{"p", p}, {"q", q}, {"a", a}}; }
};

struct GCSequence {
    GCParams params;
    std::vector<Int> terms;
};

/// g_n = p^(2n) * binom(n + q/p, n). Terms are generated incrementally via
/// the exact ratio g_n / g_{n-1} = p (q + n p) / n; every division must be
/// exact, since the terms are integers -- a remainder raises NonIntegerTerm.
inline GCSequence gen_catalan(const GCParams& params, long count) {
    params.validate();
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    GCSequence seq{params, {}};
    seq.terms.reserve(static_cast<std::size_t>(count));
    Int g = 1;  // g_0 = binom(q/p, 0) = 1
    seq.terms.push_back(g);
    for (long n = 1; n < count; ++n) {
        Int numerator = g * params.p * (params.q + n * params.p);
        if (!mpz_divisible_ui_p(numerator.get_mpz_t(), static_cast<unsigned long>(n)))
            throw NonIntegerTerm("g_" + std::to_string(n) + " is not an integer for " +
                                 params.str());
        mpz_divexact_ui(g.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(n));
        seq.terms.push_back(g);
    }
    return seq;
}

/// Catalan numbers via Cat_n = -g^(-3/2)_{n+1} / 2.
inline std::vector<Int> catalan_numbers(long count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    GCSequence g = gen_catalan({2, -3, 0}, count + 1);
    std::vector<Int> cats;
    cats.reserve(static_cast<std::size_t>(count));
    for (long n = 0; n < count; ++n) cats.push_back(-g.terms[static_cast<std::size_t>(n) + 1] / 2);
    return cats;
}

/// Checks both shift recurrences
///   g^(q/p)_n = g^((q-p)/p)_n + p^2 g^(q/p)_{n-1}
///   g^(q/p)_n = g^((q+p)/p)_n - p^2 g^((q+p)/p)_{n-1}
/// for 1 <= n < count. Violations are report entries, not exceptions.
inline Report check_shift_recurrences(const GCParams& params, long count) {
    Report report;
    report.identity = "shift-recurrences";
    report.params = params.to_json();
    report.size = count;
    const GCSequence g = gen_catalan(params, count);
    const GCSequence g_minus = gen_catalan({params.p, params.q - params.p, params.a}, count);
    const GCSequence g_plus = gen_catalan({params.p, params.q + params.p, params.a}, count);
    const Int p2 = Int(params.p) * params.p;
    for (long n = 1; n < count; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const Int down = g_minus.terms[i] + p2 * g.terms[i - 1];
        if (g.terms[i] != down)
            report.add_violation({1, n}, g.terms[i].get_str(), down.get_str());
        const Int up = g_plus.terms[i] - p2 * g_plus.terms[i - 1];
        if (g.terms[i] != up)
            report.add_violation({2, n}, g.terms[i].get_str(), up.get_str());
    }
    return report;
}

}  // namespace catbert
