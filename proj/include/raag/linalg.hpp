#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raag/error.hpp"

namespace raag {

/// Dense row-major integer matrix.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DomainError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
    }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact product; throws CapacityError on 64-bit overflow.
inline IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix shapes do not compose");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::int64_t x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                std::int64_t prod = 0;
                if (__builtin_mul_overflow(x, b(k, j), &prod) ||
                    __builtin_add_overflow(out(i, j), prod, &out(i, j)))
                    throw CapacityError("integer overflow in matrix product");
            }
        }
    return out;
}

struct SNFOptions {
    bool track_transforms = false;
    /// Largest absolute value tolerated in any intermediate entry.
    std::int64_t magnitude_limit = std::int64_t{1} << 62;
};

/**
 * Smith normal form U * A * V = D.
 *
 * `factors` are the nonzero diagonal entries d_1 | d_2 | ... | d_r, all
 * positive. `left` and `right` are the unimodular U and V when requested.
 */
struct SNFResult {
    std::vector<std::int64_t> factors;
    std::size_t rank = 0;
    std::optional<IntegerMatrix> left;
    std::optional<IntegerMatrix> right;
};

namespace detail {

class SnfWorker {
public:
    SnfWorker(IntegerMatrix m, const SNFOptions& opts) : a_(std::move(m)), opts_(opts) {
        if (opts_.track_transforms) {
            u_ = IntegerMatrix::identity(a_.rows());
            v_ = IntegerMatrix::identity(a_.cols());
        }
        for (std::size_t r = 0; r < a_.rows(); ++r)
            for (std::size_t c = 0; c < a_.cols(); ++c) guard(a_(r, c));
    }

    SNFResult run() {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!move_smallest_to(t)) break;
            while (true) {
                bool dirty = false;
                for (std::size_t r = t + 1; r < a_.rows(); ++r)
                    if (a_(r, t) != 0) {
                        add_row(r, t, -(a_(r, t) / a_(t, t)));
                        dirty |= a_(r, t) != 0;
                    }
                for (std::size_t c = t + 1; c < a_.cols(); ++c)
                    if (a_(t, c) != 0) {
                        add_col(c, t, -(a_(t, c) / a_(t, t)));
                        dirty |= a_(t, c) != 0;
                    }
                if (dirty) {
                    move_smallest_to(t);
                    continue;
                }
                // The pivot must divide the remaining block; otherwise fold
                // an offending row into row t and reduce again.
                std::optional<std::size_t> offender;
                for (std::size_t r = t + 1; r < a_.rows() && !offender; ++r)
                    for (std::size_t c = t + 1; c < a_.cols(); ++c)
                        if (a_(r, c) % a_(t, t) != 0) {
                            offender = r;
                            break;
                        }
                if (!offender) break;
                add_row(t, *offender, 1);
            }
            if (a_(t, t) < 0) negate_row(t);
        }
        SNFResult out;
        out.rank = t;
        for (std::size_t i = 0; i < t; ++i) out.factors.push_back(a_(i, i));
        if (opts_.track_transforms) {
            out.left = std::move(u_);
            out.right = std::move(v_);
        }
        return out;
    }

private:
    void guard(std::int64_t x) const {
        if (x > opts_.magnitude_limit || x < -opts_.magnitude_limit)
            throw CapacityError("Smith normal form entry exceeds the magnitude limit");
    }

    static std::int64_t axpy(std::int64_t y, std::int64_t k, std::int64_t x) {
        std::int64_t prod = 0;
        std::int64_t sum = 0;
        if (__builtin_mul_overflow(k, x, &prod) || __builtin_add_overflow(y, prod, &sum))
            throw CapacityError("integer overflow in Smith normal form");
        return sum;
    }

    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, std::int64_t k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < a_.cols(); ++c) {
            a_(dst, c) = axpy(a_(dst, c), k, a_(src, c));
            guard(a_(dst, c));
        }
        if (u_)
            for (std::size_t c = 0; c < u_->cols(); ++c) (*u_)(dst, c) = axpy((*u_)(dst, c), k, (*u_)(src, c));
    }

    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, std::int64_t k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < a_.rows(); ++r) {
            a_(r, dst) = axpy(a_(r, dst), k, a_(r, src));
            guard(a_(r, dst));
        }
        if (v_)
            for (std::size_t r = 0; r < v_->rows(); ++r) (*v_)(r, dst) = axpy((*v_)(r, dst), k, (*v_)(r, src));
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(a, c), a_(b, c));
        if (u_)
            for (std::size_t c = 0; c < u_->cols(); ++c) std::swap((*u_)(a, c), (*u_)(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, a), a_(r, b));
        if (v_)
            for (std::size_t r = 0; r < v_->rows(); ++r) std::swap((*v_)(r, a), (*v_)(r, b));
    }

    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < a_.cols(); ++c) a_(r, c) = -a_(r, c);
        if (u_)
            for (std::size_t c = 0; c < u_->cols(); ++c) (*u_)(r, c) = -(*u_)(r, c);
    }

    // Pivot: smallest nonzero |entry| in the trailing block, first in
    // row-major order on ties.
    bool move_smallest_to(std::size_t t) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t r = t; r < a_.rows(); ++r)
            for (std::size_t c = t; c < a_.cols(); ++c) {
                const std::int64_t x = a_(r, c);
                if (x == 0) continue;
                if (!best || std::llabs(x) < std::llabs(a_(best->first, best->second))) best = {r, c};
            }
        if (!best) return false;
        swap_rows(t, best->first);
        swap_cols(t, best->second);
        return true;
    }

    IntegerMatrix a_;
    SNFOptions opts_;
    std::optional<IntegerMatrix> u_;
    std::optional<IntegerMatrix> v_;
};

} // namespace detail

inline SNFResult smith_normal_form(IntegerMatrix m, const SNFOptions& opts = {}) {
    return detail::SnfWorker(std::move(m), opts).run();
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Rank over F_p by Gaussian elimination.
inline std::size_t rank_mod_p(const IntegerMatrix& m, std::int64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::int64_t> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = ((m(r, c) % p) + p) % p;
    auto inverse = [p](std::int64_t x) {
        std::int64_t result = 1, base = x % p, e = p - 2;
        while (e > 0) {
            if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
            base = static_cast<std::int64_t>((__int128)base * base % p);
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
        const std::int64_t inv = inverse(a[rank * cols + c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::int64_t f = static_cast<std::int64_t>((__int128)a[r * cols + c] * inv % p);
            if (f == 0) continue;
            for (std::size_t k = c; k < cols; ++k)
                a[r * cols + k] =
                    static_cast<std::int64_t>(((a[r * cols + k] - (__int128)f * a[rank * cols + k]) % p + p) % p);
        }
        ++rank;
    }
    return rank;
}

/// Rank over Q by fraction-free (Bareiss) elimination in arbitrary precision.
inline std::size_t rank_rational(const IntegerMatrix& m) {
    using boost::multiprecision::cpp_int;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<cpp_int> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c);
    cpp_int previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
        const cpp_int& p = a[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k)
                a[r * cols + k] = (p * a[r * cols + k] - a[r * cols + c] * a[rank * cols + k]) / previous;
            a[r * cols + c] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

} // namespace raag
