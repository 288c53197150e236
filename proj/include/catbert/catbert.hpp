#pragma once

// The Catbert specialization: the Hankel matrix of reciprocals of Catalan
// numbers C = -2 G^(1,-3/2), its integer inverse, its determinant sequence,
// and comparison against an OEIS b-file.

#include "catbert/factorization.hpp"
#include "catbert/hankel.hpp"
#include "catbert/matrix.hpp"
#include "catbert/sequences.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catbert {

inline GCParams catbert_params() { return {2, -3, 1}; }

struct CatbertMatrix {
    long n;
    ExactMatrix matrix;  // entry (i,j) = 1/Cat_{i+j}
};

/// Builds the matrix both ways -- 1/Cat_{i+j} directly and -2 G^(1,-3/2) --
/// and asserts they agree entrywise.
inline CatbertMatrix catbert_matrix(long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const std::vector<Int> cats = catalan_numbers(2 * n - 1);
    ExactMatrix direct(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            direct.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                Rational(Int(1), cats[static_cast<std::size_t>(i + j)]);
    ExactMatrix viaG = hankel_G(catbert_params(), n);
    for (std::size_t i = 0; i < viaG.rows(); ++i)
        for (std::size_t j = 0; j < viaG.cols(); ++j) viaG.at(i, j) *= Rational(-2);
    if (direct != viaG)
        throw std::logic_error("catbert_matrix: 1/Cat and -2G constructions disagree");
    return {n, std::move(direct)};
}

/// C(n)^-1 = -(1/2) G^(1,-3/2)(n)^-1, an integer matrix; C * C^-1 = I is
/// checked exactly before returning.
inline ExactMatrix catbert_inverse(long n) {
    ExactMatrix inv = inverse_via_LMK(catbert_params(), n);
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) inv.at(i, j) *= Rational(-1, 2);
    const CatbertMatrix c = catbert_matrix(n);
    if (matmul(c.matrix, inv) != ExactMatrix::identity(static_cast<std::size_t>(n)))
        throw std::logic_error("catbert_inverse: C * C^-1 != I");
    return inv;
}

/// det(C(n)^-1) = prod_{k=0}^{n-1}
///   4^(2k+1) (4k-1)/6 binom(2k-3/2, k) binom(2k-3/2, k+1).
inline Rational catbert_det_formula(long n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    Rational product(1);
    for (long k = 0; k < n; ++k) {
        Rational pow4(1);
        for (long i = 0; i < 2 * k + 1; ++i) pow4 *= Rational(4);
        const Rational top = Rational(2 * k) - Rational(3, 2);
        product *= pow4 * Rational(4 * k - 1, 6) *
                   binom_rational(top, static_cast<unsigned long>(k)) *
                   binom_rational(top, static_cast<unsigned long>(k + 1));
    }
    return product;
}

// --- OEIS b-file support ---

struct MalformedLine : std::runtime_error {
    long line;
    MalformedLine(long line_no, const std::string& content)
        : std::runtime_error("malformed b-file line " + std::to_string(line_no) + ": " +
                             content),
          line(line_no) {}
};

struct BFile {
    std::string sequence_id;
    std::vector<std::pair<long, Int>> entries;  // (index, value), indices increasing
};

/// Parses the standard OEIS b-file format: lines of "index value",
/// '#'-prefixed comments and blank lines skipped.
inline BFile parse_bfile(const std::string& text, const std::string& sequence_id = "") {
    BFile bf;
    bf.sequence_id = sequence_id;
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    auto is_integer_token = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) return false;
        for (std::size_t i = start; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;  // blank line
        if (first[0] == '#') continue;     // comment
        std::string second, extra;
        if (!(fields >> second) || (fields >> extra) || !is_integer_token(first) ||
            !is_integer_token(second))
            throw MalformedLine(line_no, line);
        const long index = std::stol(first);
        if (!bf.entries.empty() && index <= bf.entries.back().first)
            throw MalformedLine(line_no, line + " (indices must be strictly increasing)");
        bf.entries.emplace_back(index, Int(second));
    }
    return bf;
}

struct OeisComparison {
    long offset = 0;        // entry-list shift chosen (computed[i] vs entries[i+offset])
    std::size_t match_len = 0;
    bool full_match = false;  // entire computed prefix matched
    std::optional<std::pair<std::size_t, std::string>> first_mismatch;  // (computed idx, detail)
};

/// Compares a computed integer sequence against a b-file, auto-detecting the
/// list offset in [0, max_offset] that yields the longest matching prefix.
inline OeisComparison oeis_compare(const std::vector<Int>& computed, const BFile& bfile,
                                   long max_offset = 2) {
    OeisComparison best;
    for (long off = 0; off <= max_offset; ++off) {
        std::size_t len = 0;
        while (len < computed.size() &&
               len + static_cast<std::size_t>(off) < bfile.entries.size() &&
               computed[len] == bfile.entries[len + static_cast<std::size_t>(off)].second)
            ++len;
        if (len > best.match_len || off == 0) {
            best.offset = off;
            best.match_len = len;
        }
    }
    const std::size_t comparable =
        std::min(computed.size(),
                 bfile.entries.size() - static_cast<std::size_t>(
                                            std::min<std::size_t>(best.offset, bfile.entries.size())));
    best.full_match = best.match_len == comparable && comparable > 0;
    if (!best.full_match && best.match_len < computed.size()) {
        const std::size_t i = best.match_len;
        std::string detail = "computed[" + std::to_string(i) + "] = " + computed[i].get_str();
        const std::size_t bi = i + static_cast<std::size_t>(best.offset);
        if (bi < bfile.entries.size())
            detail += " vs b-file index " + std::to_string(bfile.entries[bi].first) + " = " +
                      bfile.entries[bi].second.get_str();
        else
            detail += " vs past end of b-file";
        best.first_mismatch = {i, detail};
    }
    return best;
}

}  // namespace catbert
