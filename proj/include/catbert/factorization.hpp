#pragma once

// Orthogonal-polynomial factorization of the Hankel matrices G^(a,q/p):
// the coefficient matrix L, companion matrices K, M, N, the identities
// L G L^T = N^-1 and N L = M K, the fast inverse G(m)^-1 = L^T M K, and the
// closed-form determinant products.

#include "catbert/hankel.hpp"
#include "catbert/matrix.hpp"
#include "catbert/report.hpp"
#include "catbert/sequences.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace catbert {

// Entry formulas. The binomial tops are rationals of the form m + q/p.

/// L_{n,k} = (-1)^(n+k) p^(2k) binom(n+k+a+q/p-1, k) binom(n+a, k+a).
inline Rational L_entry(const GCParams& params, long n, long k) {
    if (k > n || k < 0) return Rational(0);
    const Rational top = Rational(n + k + params.a - 1) + params.ratio();
    Rational v = binom_rational(top, static_cast<unsigned long>(k)) *
                 binom_rational(Rational(n + params.a), static_cast<unsigned long>(k + params.a));
    Rational p2k(1);
    for (long i = 0; i < k; ++i) p2k *= Rational(params.p * params.p);
    v *= p2k;
    return ((n + k) % 2 == 0) ? v : -v;
}

/// K_{n,k} = (-1)^(n+k) p^(2(k+a)) binom(n+k+a+q/p-1, k+a) binom(n, k).
inline Rational K_entry(const GCParams& params, long n, long k) {
    if (k > n || k < 0) return Rational(0);
    const Rational top = Rational(n + k + params.a - 1) + params.ratio();
    Rational v = binom_rational(top, static_cast<unsigned long>(k + params.a)) *
                 binom_rational(Rational(n), static_cast<unsigned long>(k));
    Rational scale(1);
    for (long i = 0; i < k + params.a; ++i) scale *= Rational(params.p * params.p);
    v *= scale;
    return ((n + k) % 2 == 0) ? v : -v;
}

/// M_{n,n} = (2np + ap + q) / q. The numerator is never 0 (it is q mod p,
/// and p does not divide q).
inline Rational M_entry(const GCParams& params, long n) {
    return Rational(2 * n * params.p + params.a * params.p + params.q, params.q);
}

/// N_{n,n} = p^(2a) (2np+ap+q) binom(n+a+q/p-1, a) / (q binom(n+a, a)).
inline Rational N_entry(const GCParams& params, long n) {
    Rational p2a(1);
    for (long i = 0; i < params.a; ++i) p2a *= Rational(params.p * params.p);
    const Rational top = Rational(n + params.a - 1) + params.ratio();
    const Rational numer = p2a * Rational(2 * n * params.p + params.a * params.p + params.q) *
                           binom_rational(top, static_cast<unsigned long>(params.a));
    const Rational denom =
        Rational(params.q) *
        binom_rational(Rational(n + params.a), static_cast<unsigned long>(params.a));
    return numer / denom;
}

inline ExactMatrix build_L(const GCParams& params, long n) {
    params.validate();
    ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= r; ++k)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) =
                L_entry(params, r, k);
    return m;
}

inline ExactMatrix build_K(const GCParams& params, long n) {
    params.validate();
    ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= r; ++k)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) =
                K_entry(params, r, k);
    return m;
}

inline std::vector<Rational> build_M(const GCParams& params, long n) {
    params.validate();
    std::vector<Rational> d;
    d.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) d.push_back(M_entry(params, i));
    return d;
}

inline std::vector<Rational> build_N(const GCParams& params, long n) {
    params.validate();
    std::vector<Rational> d;
    d.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) d.push_back(N_entry(params, i));
    return d;
}

/// The matrices L, K and diagonals M, N of size n for given params.
struct FactorizationBundle {
    GCParams params;
    long n;
    ExactMatrix L;
    ExactMatrix K;
    std::vector<Rational> Mdiag;
    std::vector<Rational> Ndiag;

    static FactorizationBundle build(const GCParams& params, long n) {
        return {params, n, build_L(params, n), build_K(params, n), build_M(params, n),
                build_N(params, n)};
    }
};

/// Coefficients of the three-term recurrence
///   alpha_n L(n,k) + beta_n L(n+1,k) + gamma_n L(n+1,k-1) = L(n+2,k).
struct ThreeTermCoeffs {
    long n;
    Rational alpha, beta, gamma;
};

inline ThreeTermCoeffs three_term_coeffs(const GCParams& params, long n) {
    const long p = params.p, q = params.q, a = params.a;
    const Int d1 = Int(q) + n * p + a * p + p;       // q + np + ap + p
    const Int d2 = Int(q) + 2 * n * p + a * p + p;   // q + 2np + ap + p
    // Both are congruent to q mod p with p not dividing q, hence nonzero.
    if (d1 == 0 || d2 == 0)
        throw std::logic_error("three_term_coeffs: vanishing denominator at n=" +
                               std::to_string(n));
    const Int e2 = Int(q) + 2 * n * p + a * p + 2 * p;
    const Int e3 = Int(q) + 2 * n * p + a * p + 3 * p;
    ThreeTermCoeffs c{n, Rational(0), Rational(0), Rational(0)};
    c.alpha = -Rational(Int(n + a + 1) * (q + n * p) * e3, Int(n + 2) * d1 * d2);
    const Int beta_num = e2 * (Int(2 * n) * q + a * q + 3 * q + 2 * n * n * p +
                               2 * a * n * p + 4 * n * p + (a + 1) * (a + 1) * p);
    c.beta = -Rational(beta_num, Int(n + 2) * d1 * d2);
    c.gamma = Rational(Int(p) * e2 * e3, Int(n + 2) * d1);
    return c;
}

/// Exhaustive exact check of the three-term recurrence for
/// 0 <= n <= n_max-2, 0 <= k <= n+2 (with L(., -1) = 0).
inline Report verify_three_term(const GCParams& params, long n_max) {
    params.validate();
    Report report;
    report.identity = "three-term-recurrence";
    report.params = params.to_json();
    report.size = n_max;
    for (long n = 0; n + 2 <= n_max; ++n) {
        const ThreeTermCoeffs c = three_term_coeffs(params, n);
        for (long k = 0; k <= n + 2; ++k) {
            Rational lhs = c.alpha * L_entry(params, n, k) + c.beta * L_entry(params, n + 1, k);
            if (k >= 1) lhs += c.gamma * L_entry(params, n + 1, k - 1);
            const Rational rhs = L_entry(params, n + 2, k);
            if (lhs != rhs) report.add_violation({n, k}, lhs.str(), rhs.str());
        }
    }
    return report;
}

/// Checks that P = L G L^T is diagonal, and independently the two low-order
/// row sums sum_k L_{r,k} G_{k,r-1} = 0 and sum_k L_{r,k} G_{k,r-2} = 0.
inline Report verify_orthogonality(const GCParams& params, long n) {
    params.validate();
    Report report;
    report.identity = "orthogonality";
    report.params = params.to_json();
    report.size = n;
    const ExactMatrix L = build_L(params, n);
    const ExactMatrix G = hankel_G(params, n);
    const ExactMatrix P = matmul(matmul(L, G), transpose(L));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (i == j) continue;
            const Rational& v = P.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (!v.is_zero()) report.add_violation({i, j}, v.str(), "0");
        }
    for (long r = 1; r < n; ++r) {
        for (long back = 1; back <= 2 && back <= r; ++back) {
            Rational sum(0);
            for (long k = 0; k <= r; ++k)
                sum += L.at(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) *
                       G.at(static_cast<std::size_t>(k), static_cast<std::size_t>(r - back));
            if (!sum.is_zero()) report.add_violation({r, r - back}, sum.str(), "0");
        }
    }
    return report;
}

/// Checks (L G L^T)_{i,i} = 1 / N_{i,i} for all i < n.
inline Report verify_norm(const GCParams& params, long n) {
    params.validate();
    Report report;
    report.identity = "norm";
    report.params = params.to_json();
    report.size = n;
    const ExactMatrix L = build_L(params, n);
    const ExactMatrix G = hankel_G(params, n);
    const ExactMatrix P = matmul(matmul(L, G), transpose(L));
    const std::vector<Rational> N = build_N(params, n);
    for (long i = 0; i < n; ++i) {
        const Rational lhs = P.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i));
        const Rational rhs = N[static_cast<std::size_t>(i)].inverse();
        if (lhs != rhs) report.add_violation({i, i}, lhs.str(), rhs.str());
    }
    return report;
}

/// Checks N_{i,i} L_{i,k} = M_{i,i} K_{i,k} for all 0 <= k <= i < n.
inline Report verify_NL_eq_MK(const GCParams& params, long n) {
    params.validate();
    Report report;
    report.identity = "nl-eq-mk";
    report.params = params.to_json();
    report.size = n;
    for (long i = 0; i < n; ++i) {
        const Rational Ni = N_entry(params, i);
        const Rational Mi = M_entry(params, i);
        for (long k = 0; k <= i; ++k) {
            const Rational lhs = Ni * L_entry(params, i, k);
            const Rational rhs = Mi * K_entry(params, i, k);
            if (lhs != rhs) report.add_violation({i, k}, lhs.str(), rhs.str());
        }
    }
    return report;
}

/// The factorized inverse G(n)^-1 = L^T diag(M) K, exploiting triangular
/// structure: entry (r,c) = sum_{i=max(r,c)}^{n-1} L_{i,r} M_{i,i} K_{i,c}.
inline ExactMatrix inverse_via_LMK(const GCParams& params, long n) {
    params.validate();
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const ExactMatrix L = build_L(params, n);
    const ExactMatrix K = build_K(params, n);
    const std::vector<Rational> M = build_M(params, n);
    ExactMatrix inv(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) {
            Rational sum(0);
            for (long i = std::max(r, c); i < n; ++i)
                sum += L.at(static_cast<std::size_t>(i), static_cast<std::size_t>(r)) *
                       M[static_cast<std::size_t>(i)] *
                       K.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c));
            inv.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = sum;
        }
    return inv;
}

/// q * G(n)^-1 = L^T (q M) K must be an integer matrix.
inline Report scaled_inverse_integrality(const GCParams& params, long n) {
    Report report;
    report.identity = "scaled-inverse-integrality";
    report.params = params.to_json();
    report.size = n;
    ExactMatrix inv = inverse_via_LMK(params, n);
    const Rational q(params.q);
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            const Rational scaled = q * inv.at(i, j);
            if (!scaled.is_integer())
                report.add_violation({static_cast<long>(i), static_cast<long>(j)},
                                     scaled.str(), "integer");
        }
    return report;
}

/// For |q| in {1, 2}: G(n)^-1 itself must be an integer matrix.
inline Report main_integrality(const GCParams& params, long n) {
    if (params.q != 1 && params.q != -1 && params.q != 2 && params.q != -2)
        throw std::invalid_argument("main_integrality requires |q| in {1, 2}");
    Report report;
    report.identity = "main-integrality";
    report.params = params.to_json();
    report.size = n;
    const ExactMatrix inv = inverse_via_LMK(params, n);
    const IntegerMatrixCheck chk = is_integer_matrix(inv);
    for (const auto& [i, j, v] : chk.offenders)
        report.add_violation({static_cast<long>(i), static_cast<long>(j)}, v.str(), "integer");
    return report;
}

/// det(G(n)^-1) = prod_{k=0}^{n-1}
///   (p^2)^(2k+a) (2kp+ap+q)/q binom(2k+a+q/p-1, k) binom(2k+a+q/p-1, k+a).
inline Rational det_inverse_formula(const GCParams& params, long n) {
    params.validate();
    Rational product(1);
    for (long k = 0; k < n; ++k) {
        Rational p2 = Rational(1);
        for (long i = 0; i < 2 * k + params.a; ++i) p2 *= Rational(params.p * params.p);
        const Rational top = Rational(2 * k + params.a - 1) + params.ratio();
        product *= p2 *
                   Rational(2 * k * params.p + params.a * params.p + params.q, params.q) *
                   binom_rational(top, static_cast<unsigned long>(k)) *
                   binom_rational(top, static_cast<unsigned long>(k + params.a));
    }
    return product;
}

/// det((G(n)/q)^-1): same product without the 1/q factors.
inline Rational det_scaled_inverse_formula(const GCParams& params, long n) {
    Rational product = det_inverse_formula(params, n);
    Rational qn(1);
    for (long i = 0; i < n; ++i) qn *= Rational(params.q);
    return product * qn;
}

}  // namespace catbert
