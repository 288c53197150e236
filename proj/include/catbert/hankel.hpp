#pragma once

// Hankel matrices of reciprocals of generalized Catalan numbers:
// G_{i,j} = 1/g_{i+j+a}.

#include "catbert/matrix.hpp"
#include "catbert/sequences.hpp"

namespace catbert {

/// The n x n Hankel matrix G^(a,q/p)(n) with entry (i,j) = 1/g_{i+j+a}.
/// Symmetric; needs 2n-1+a sequence terms. g terms are never zero.
inline ExactMatrix hankel_G(const GCParams& params, long n) {
    params.validate();
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const GCSequence g = gen_catalan(params, 2 * n - 1 + params.a);
    ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                Rational(Int(1), g.terms[static_cast<std::size_t>(i + j + params.a)]);
    return m;
}

}  // namespace catbert
