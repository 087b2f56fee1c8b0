#pragma once

#include <cstdint>
#include <vector>

#include "otl/errors.hpp"
#include "otl/factored.hpp"

namespace otl {

// Permutation of {0..n-1} as an image table. Products compose as left
// actions: (a*b)(x) = a(b(x)).
class permutation {
  public:
    permutation() = default;
    explicit permutation(std::uint32_t n) : img_(n) {
        for (std::uint32_t i = 0; i < n; ++i) img_[i] = i;
    }
    explicit permutation(std::vector<std::uint32_t> img) : img_(std::move(img)) {
        std::vector<bool> seen(img_.size(), false);
        for (std::uint32_t x : img_) {
            if (x >= img_.size() || seen[x]) fail(errc::invariant_violation, "not a bijection");
            seen[x] = true;
        }
    }

    std::uint32_t size() const { return static_cast<std::uint32_t>(img_.size()); }
    std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    bool is_identity() const {
        for (std::uint32_t i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    permutation operator*(const permutation& o) const {
        permutation r;
        r.img_.resize(img_.size());
        for (std::uint32_t i = 0; i < size(); ++i) r.img_[i] = img_[o.img_[i]];
        return r;
    }

    permutation inverse() const {
        permutation r;
        r.img_.resize(img_.size());
        for (std::uint32_t i = 0; i < size(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    permutation power(std::int64_t k) const {
        permutation base = k < 0 ? inverse() : *this;
        std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
        permutation r(size());
        while (e) {
            if (e & 1) r = base * r;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::vector<std::vector<std::uint32_t>> cycles() const {
        std::vector<std::vector<std::uint32_t>> out;
        std::vector<bool> seen(size(), false);
        for (std::uint32_t i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            std::vector<std::uint32_t> c;
            std::uint32_t x = i;
            while (!seen[x]) {
                seen[x] = true;
                c.push_back(x);
                x = img_[x];
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    bool operator==(const permutation&) const = default;

  private:
    std::vector<std::uint32_t> img_;
};

// Order of a permutation: lcm of its cycle lengths, kept factored.
inline factored_int permutation_order(const permutation& p) {
    factored_int ord;
    std::vector<bool> seen(p.size(), false);
    for (std::uint32_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        std::uint32_t x = i;
        while (!seen[x]) {
            seen[x] = true;
            ++len;
            x = p(x);
        }
        if (len > 1) ord = lcm(ord, factored_int::of(len));
    }
    return ord;
}

} // namespace otl
