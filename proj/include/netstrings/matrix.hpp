#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netstrings/errors.hpp"

namespace netstrings {

// Counter type used for all string/walk counts. Signed 64-bit; every
// arithmetic step that could wrap goes through the checked helpers below.
using count_t = std::int64_t;

inline count_t checked_add(count_t a, count_t b, const char* what = "addition") {
    count_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw overflow_error(std::string("integer overflow in ") + what);
    return out;
}

inline count_t checked_mul(count_t a, count_t b, const char* what = "multiplication") {
    count_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw overflow_error(std::string("integer overflow in ") + what);
    return out;
}

// Dense square matrix of non-negative counters. Row-major.
class DenseIntMatrix {
public:
    DenseIntMatrix() = default;

    explicit DenseIntMatrix(int order)
        : order_(order), data_(static_cast<std::size_t>(order) * order, 0) {
        if (order <= 0) throw validation_error("matrix order must be positive");
    }

    static DenseIntMatrix identity(int order) {
        DenseIntMatrix m(order);
        for (int i = 0; i < order; ++i) m(i, i) = 1;
        return m;
    }

    int order() const { return order_; }

    count_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * order_ + j]; }
    count_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * order_ + j]; }

    bool operator==(const DenseIntMatrix& other) const = default;

    // Checked matrix product; `what` names the operation in overflow messages.
    DenseIntMatrix multiply(const DenseIntMatrix& rhs, const char* what = "matrix product") const {
        if (order_ != rhs.order_) throw validation_error("matrix order mismatch");
        DenseIntMatrix out(order_);
        for (int i = 0; i < order_; ++i) {
            for (int k = 0; k < order_; ++k) {
                const count_t a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < order_; ++j) {
                    const count_t b = rhs(k, j);
                    if (b == 0) continue;
                    out(i, j) = checked_add(out(i, j), checked_mul(a, b, what), what);
                }
            }
        }
        return out;
    }

    count_t trace() const {
        count_t t = 0;
        for (int i = 0; i < order_; ++i) t = checked_add(t, (*this)(i, i), "trace");
        return t;
    }

    count_t entry_sum() const {
        count_t s = 0;
        for (const count_t v : data_) s = checked_add(s, v, "entry sum");
        return s;
    }

    bool is_symmetric() const {
        for (int i = 0; i < order_; ++i)
            for (int j = i + 1; j < order_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    int order_ = 0;
    std::vector<count_t> data_;
};

} // namespace netstrings
