#pragma once

#include "lattix/number.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace lattix {

// Finite set of exact numbers, strictly increasing, no duplicates. When
// `shift` is set the set models [n]+x: the stored base is 1..n and values()
// materializes the shifted elements.
class NumberSet {
public:
    NumberSet() = default;

    static NumberSet of(std::vector<Number> elems) {
        NumberSet s;
        std::sort(elems.begin(), elems.end(), [](const Number& x, const Number& y) { return x < y; });
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        s.base_ = std::move(elems);
        return s;
    }

    static NumberSet interval(long n) {
        if (n < 1) throw std::invalid_argument("NumberSet: interval length must be positive");
        NumberSet s;
        s.base_.reserve(static_cast<std::size_t>(n));
        for (long i = 1; i <= n; ++i) s.base_.emplace_back(i);
        return s;
    }

    static NumberSet shifted_interval(long n, Number x) {
        NumberSet s = interval(n);
        if (!x.is_zero()) s.shift_ = std::move(x);
        return s;
    }

    const std::vector<Number>& base() const { return base_; }
    const std::optional<Number>& shift() const { return shift_; }

    // Materialized elements (base + shift). Sorted and duplicate-free because
    // shifting preserves strict order.
    std::vector<Number> values() const {
        if (!shift_) return base_;
        std::vector<Number> out;
        out.reserve(base_.size());
        for (const auto& b : base_) out.push_back(b + *shift_);
        return out;
    }

    std::size_t size() const { return base_.size(); }
    bool empty() const { return base_.empty(); }
    bool contains(const Number& x) const {
        if (shift_) {
            Number b = x - *shift_;
            return std::binary_search(base_.begin(), base_.end(), b,
                                      [](const Number& p, const Number& q) { return p < q; });
        }
        return std::binary_search(base_.begin(), base_.end(), x,
                                  [](const Number& p, const Number& q) { return p < q; });
    }

    bool operator==(const NumberSet& o) const { return values() == o.values(); }

private:
    std::vector<Number> base_;
    std::optional<Number> shift_;
};

} // namespace lattix
