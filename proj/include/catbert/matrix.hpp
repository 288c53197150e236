#pragma once

// Dense exact-rational matrices with exact multiply, transpose, fraction-free
// (Bareiss) determinants, and Gauss-Jordan inversion. The elimination routines
// serve as the independent oracle against the factorized inverse.

#include "catbert/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace catbert {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

inline ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("matmul: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

inline ExactMatrix transpose(const ExactMatrix& a) {
    ExactMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

inline ExactMatrix diag_from(const std::vector<Rational>& values) {
    ExactMatrix d(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) d.at(i, i) = values[i];
    return d;
}

/// Exact determinant. Clears denominators row by row (tracking the scale
/// factor), then runs integer-preserving Bareiss elimination with first
/// nonzero pivoting and permutation sign tracking.
inline Rational det_oracle(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("det_oracle: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return Rational(1);

    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Int scale = 1;  // det(cleared) = scale * det(a)
    for (std::size_t i = 0; i < n; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.at(i, j).den().get_mpz_t());
        scale *= lcm;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational scaled = a.at(i, j) * Rational(lcm);
            m[i][j] = scaled.to_integer();
        }
    }

    int sign = 1;
    Int prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev_pivot = m[k][k];
    }
    return Rational(sign * m[n - 1][n - 1], scale);
}

/// Exact inverse via rational Gauss-Jordan elimination (first nonzero pivot).
/// Verifies A * A^-1 = I before returning; throws SingularMatrix otherwise.
inline ExactMatrix invert_oracle(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("invert_oracle: matrix not square");
    const std::size_t n = a.rows();
    ExactMatrix work = a;
    ExactMatrix inv = ExactMatrix::identity(n);

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && work.at(pivot, c).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix("invert_oracle: singular at column " + std::to_string(c));
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        }
        const Rational pv = work.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(c, j) /= pv;
            inv.at(c, j) /= pv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || work.at(r, c).is_zero()) continue;
            const Rational f = work.at(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(c, j);
                inv.at(r, j) -= f * inv.at(c, j);
            }
        }
    }
    if (matmul(a, inv) != ExactMatrix::identity(n))
        throw SingularMatrix("invert_oracle: internal check A*A^-1 = I failed");
    return inv;
}

struct IntegerMatrixCheck {
    bool integral = true;
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> offenders;
};

inline IntegerMatrixCheck is_integer_matrix(const ExactMatrix& a) {
    IntegerMatrixCheck r;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_integer()) {
                r.integral = false;
                r.offenders.emplace_back(i, j, a.at(i, j));
            }
    return r;
}

// --- serialization: exact strings only, never floats ---

inline nlohmann::json matrix_to_json(const ExactMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ExactMatrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.at(0).size() : 0;
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = Rational::parse(j.at(i).at(c).get<std::string>());
    return m;
}

inline std::string matrix_to_csv(const ExactMatrix& a) {
    std::ostringstream out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << ',';
            out << a.at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

inline std::string matrix_to_plain(const ExactMatrix& a) {
    std::ostringstream out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << a.at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace catbert
