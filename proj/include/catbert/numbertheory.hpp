#pragma once

// Lucas's theorem and its rational-parameter variations as executable scans,
// plus constructive divisibility certificates mirroring the case analyses
// that prove the inverse matrices integral.

#include "catbert/factorization.hpp"
#include "catbert/rational.hpp"
#include "catbert/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace catbert {

struct UnsupportedCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Divisibility by a prime, extended to zero (everything divides 0).
inline bool prime_divides(const Int& prime, const Rational& x) {
    if (x.is_zero()) return true;
    return valuation(prime, x) >= 1;
}

/// Lucas corollary: p | binom(n, k) whenever p | n and p does not divide k.
inline Report lucas_scan(long p, long n_max) {
    if (!is_prime(Int(p))) throw std::invalid_argument("lucas_scan: p must be prime");
    Report report;
    report.identity = "lucas";
    report.params = {{"p", p}};
    report.size = n_max;
    for (long n = p; n <= n_max; n += p) {
        for (long k = 1; k <= n; ++k) {
            if (k % p == 0) continue;
            Int b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(k));
            if (!mpz_divisible_ui_p(b.get_mpz_t(), static_cast<unsigned long>(p)))
                report.add_violation({n, k}, b.get_str(), "0 mod " + std::to_string(p));
        }
    }
    return report;
}

/// Variation 1: for prime q, gcd(p,q)=1, q | n, and k >= 1 with q not
/// dividing k:  q | p^(2k) binom(n + q/p, k). (The paper's hypothesis
/// p^2 n + p q = 0 mod q reduces to q | n since gcd(p,q)=1.)
inline Report lucas_var1_scan(long q, long p, long n_max, long k_max) {
    if (!is_prime(Int(q))) throw std::invalid_argument("lucas_var1_scan: q must be prime");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("lucas_var1_scan: gcd(p,q) must be 1");
    Report report;
    report.identity = "lucas-var1";
    report.params = {{"q", q}, {"p", p}};
    report.size = n_max;
    const Rational p2(static_cast<long>(p) * p);
    for (long n = 0; n <= n_max; n += q) {
        for (long k = 1; k <= k_max; ++k) {
            if (k % q == 0) continue;
            Rational v(1);
            for (long i = 0; i < k; ++i) v *= p2;
            v *= binom_rational(Rational(n) + Rational(q, p), static_cast<unsigned long>(k));
            if (!prime_divides(Int(q), v))
                report.add_violation({n, k}, v.str(), "0 mod " + std::to_string(q));
        }
    }
    return report;
}

/// Variation 2 (q=-3, p=2): for n = 2 mod 3 and k = 2 mod 3,
/// 3 | 4^k binom(n + k - 3/2, k).
inline Report lucas_var2_scan(long n_max, long k_max) {
    Report report;
    report.identity = "lucas-var2";
    report.params = {{"q", -3}, {"p", 2}};
    report.size = n_max;
    for (long n = 2; n <= n_max; n += 3) {
        for (long k = 2; k <= k_max; k += 3) {
            Rational v(1);
            for (long i = 0; i < k; ++i) v *= Rational(4);
            v *= binom_rational(Rational(n + k) - Rational(3, 2), static_cast<unsigned long>(k));
            if (!prime_divides(Int(3), v))
                report.add_violation({n, k}, v.str(), "0 mod 3");
        }
    }
    return report;
}

/// Variation 3: for prime p, gcd(q,p)=1, any integer n (negative included),
/// and k >= 1:  p | p^(2k) binom(n + q/p, k). The internal check asserts the
/// sharper bound v_p >= k - v_p(k!) >= 1 coming from the factorized product
/// (each of the k numerator factors p(p(n-i)+q) carries exactly one p).
inline Report lucas_var3_scan(long p, long q, long n_lo, long n_hi, long k_max) {
    if (!is_prime(Int(p))) throw std::invalid_argument("lucas_var3_scan: p must be prime");
    if (std::gcd(p, std::abs(q)) != 1)
        throw std::invalid_argument("lucas_var3_scan: gcd(q,p) must be 1");
    Report report;
    report.identity = "lucas-var3";
    report.params = {{"p", p}, {"q", q}};
    report.size = n_hi;
    const Rational p2(static_cast<long>(p) * p);
    for (long n = n_lo; n <= n_hi; ++n) {
        for (long k = 1; k <= k_max; ++k) {
            Rational v(1);
            for (long i = 0; i < k; ++i) v *= p2;
            v *= binom_rational(Rational(n) + Rational(q, p), static_cast<unsigned long>(k));
            const long bound = k - legendre_valuation(Int(p), static_cast<unsigned long>(k));
            // The binomial never vanishes for non-integer q/p.
            const long val = valuation(Int(p), v);
            if (val < bound || bound < 1)
                report.add_violation({n, k}, "v_p = " + std::to_string(val),
                                     ">= " + std::to_string(bound) + " >= 1");
        }
    }
    return report;
}

/// Names which factor of a summand L_{i,n} M_{i,i} K_{i,k} of the inverse
/// expansion (or of its transposed form K_{i,n} M_{i,i} L_{i,k}) carries
/// divisibility by the target prime.
enum class Witness { MNumerator, KFactor, LFactor };

inline const char* witness_name(Witness w) {
    switch (w) {
        case Witness::MNumerator: return "M-numerator";
        case Witness::KFactor: return "K-factor";
        case Witness::LFactor: return "L-factor";
    }
    return "?";
}

struct DivisibilityCertificate {
    long prime;
    long entry_n, entry_k;  // inverse entry (n, k)
    long summand_i;         // summand index i of the L^T M K expansion
    Witness witness;
    bool transposed;         // true when the K_{i,n} M_{i,i} L_{i,k} form is used
    Rational witnessed_value;
    bool verified;
};

namespace detail {

inline DivisibilityCertificate make_cert(const GCParams& params, long prime, long n, long k,
                                         long i, Witness w, bool transposed) {
    Rational value(0);
    switch (w) {
        case Witness::MNumerator:
            value = Rational(2 * i * params.p + params.a * params.p + params.q);
            break;
        case Witness::KFactor:
            value = K_entry(params, i, k);
            break;
        case Witness::LFactor:
            value = L_entry(params, i, k);
            break;
    }
    const bool ok = prime_divides(Int(prime), value);
    return {prime, n, k, i, w, transposed, value, ok};
}

// Case analysis for |q| = 2, target prime 2: on the parities of a, i, k.
inline DivisibilityCertificate q2_case(const GCParams& params, long n, long k, long i) {
    if (params.a % 2 == 0)
        return make_cert(params, 2, n, k, i, Witness::MNumerator, false);
    if (i % 2 != k % 2) {
        // One of binom(i,k) (inside K) or binom(i+a,k+a) (inside L) is even.
        if (i % 2 == 0) return make_cert(params, 2, n, k, i, Witness::KFactor, false);
        return make_cert(params, 2, n, k, i, Witness::LFactor, true);
    }
    // Same parity, a odd: exactly one of k, k+a is odd; the rational-top
    // binomial on that side is even by the first Lucas variation.
    if (k % 2 != 0) return make_cert(params, 2, n, k, i, Witness::LFactor, true);
    return make_cert(params, 2, n, k, i, Witness::KFactor, false);
}

// Case analysis for the Catbert parameters (p=2, q=-3, a=1), target prime 3:
// on the residues of i and k mod 3.
inline DivisibilityCertificate catbert3_case(const GCParams& params, long n, long k, long i) {
    const long im = i % 3, km = k % 3;
    if (im == 1) return make_cert(params, 3, n, k, i, Witness::MNumerator, false);
    if (im == 0 && km != 0) return make_cert(params, 3, n, k, i, Witness::KFactor, false);
    if (im == 2 && km != 2) return make_cert(params, 3, n, k, i, Witness::LFactor, true);
    if (im == 0 && km == 0) return make_cert(params, 3, n, k, i, Witness::KFactor, false);
    return make_cert(params, 3, n, k, i, Witness::LFactor, true);  // im == 2, km == 2
}

}  // namespace detail

/// Certificates for every inverse entry (n', k') and every summand i of the
/// L^T M K expansion at size n. Supported: target 2 with |q| = 2, and the
/// Catbert parameters (2, -3, 1) with targets 2 and 3.
inline std::vector<DivisibilityCertificate> build_divisibility_certificate(
    const GCParams& params, long n, long target) {
    params.validate();
    const bool is_catbert = params.p == 2 && params.q == -3 && params.a == 1;
    const bool is_q2 = params.q == 2 || params.q == -2;
    if (target == 2 && !is_q2 && !is_catbert)
        throw UnsupportedCase("target 2 requires |q| = 2 or the Catbert parameters");
    if (target == 3 && !is_catbert)
        throw UnsupportedCase("target 3 requires the Catbert parameters");
    if (target != 2 && target != 3)
        throw UnsupportedCase("target prime must be 2 or 3");

    std::vector<DivisibilityCertificate> certs;
    for (long en = 0; en < n; ++en)
        for (long ek = 0; ek < n; ++ek)
            for (long i = en; i < n; ++i) {
                if (target == 2 && is_catbert) {
                    // K_{i,k} is always even here (third Lucas variation,
                    // positive lower index k+a = k+1).
                    certs.push_back(
                        detail::make_cert(params, 2, en, ek, i, Witness::KFactor, false));
                } else if (target == 2) {
                    certs.push_back(detail::q2_case(params, en, ek, i));
                } else {
                    certs.push_back(detail::catbert3_case(params, en, ek, i));
                }
            }
    return certs;
}

inline nlohmann::json certificates_to_json(const std::vector<DivisibilityCertificate>& certs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : certs)
        arr.push_back({{"prime", c.prime},
                       {"entry", {c.entry_n, c.entry_k}},
                       {"summand", c.summand_i},
                       {"witness", witness_name(c.witness)},
                       {"transposed", c.transposed},
                       {"value", c.witnessed_value.str()},
                       {"verified", c.verified}});
    return arr;
}

}  // namespace catbert
