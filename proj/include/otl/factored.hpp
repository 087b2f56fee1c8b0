#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "otl/errors.hpp"

namespace otl {

// Primes up to `limit`, sieve-backed and cached. Inputs here are cycle lengths
// and coset-space sizes, so the sieve stays small.
inline const std::vector<std::uint32_t>& small_primes(std::uint32_t limit = 1u << 16) {
    static std::vector<std::uint32_t> primes;
    static std::uint32_t sieved_to = 0;
    if (limit > sieved_to) {
        primes.clear();
        std::vector<bool> composite(limit + 1, false);
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (!composite[i]) {
                primes.push_back(i);
                for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
                    composite[j] = true;
            }
        }
        sieved_to = limit;
    }
    return primes;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Exact nonnegative integer kept in factored form. The empty map is 1.
class factored_int {
  public:
    using map_type = std::map<std::uint64_t, std::uint64_t>;

    factored_int() = default;

    static factored_int one() { return factored_int(); }

    static factored_int prime_power(std::uint64_t p, std::uint64_t e) {
        factored_int f;
        if (e > 0) f.exps_[p] = e;
        return f;
    }

    // Trial division; inputs are bounded by the coset-space size.
    static factored_int of(std::uint64_t n) {
        if (n == 0) fail(errc::invalid_sequence, "cannot factor 0");
        factored_int f;
        for (std::uint32_t p : small_primes()) {
            if (static_cast<std::uint64_t>(p) * p > n) break;
            while (n % p == 0) {
                ++f.exps_[p];
                n /= p;
            }
        }
        if (n > 1) {
            std::uint64_t d = (1u << 16) | 1;
            while (d * d <= n) {
                while (n % d == 0) {
                    ++f.exps_[d];
                    n /= d;
                }
                d += 2;
            }
            if (n > 1) ++f.exps_[n];
        }
        return f;
    }

    const map_type& exponents() const { return exps_; }

    std::uint64_t exponent_of(std::uint64_t p) const {
        auto it = exps_.find(p);
        return it == exps_.end() ? 0 : it->second;
    }

    bool is_one() const { return exps_.empty(); }

    void mul_prime_power(std::uint64_t p, std::uint64_t e) {
        if (e > 0) exps_[p] += e;
    }

    factored_int operator*(const factored_int& o) const {
        factored_int r = *this;
        for (const auto& [p, e] : o.exps_) r.exps_[p] += e;
        return r;
    }

    friend factored_int lcm(const factored_int& a, const factored_int& b) {
        factored_int r = a;
        for (const auto& [p, e] : b.exps_) {
            auto& slot = r.exps_[p];
            if (e > slot) slot = e;
        }
        return r;
    }

    friend factored_int gcd(const factored_int& a, const factored_int& b) {
        factored_int r;
        for (const auto& [p, e] : a.exps_) {
            std::uint64_t f = b.exponent_of(p);
            if (f > 0) r.exps_[p] = std::min(e, f);
        }
        return r;
    }

    bool divides(const factored_int& o) const {
        for (const auto& [p, e] : exps_)
            if (e > o.exponent_of(p)) return false;
        return true;
    }

    bool operator==(const factored_int& o) const = default;

    // Value as uint64; throws on overflow. Used only for small quantities.
    std::uint64_t value() const {
        std::uint64_t v = 1;
        for (const auto& [p, e] : exps_) {
            for (std::uint64_t i = 0; i < e; ++i) {
                if (v > UINT64_MAX / p) fail(errc::depth_too_large, "factored value exceeds 64 bits");
                v *= p;
            }
        }
        return v;
    }

    // Value clamped to UINT64_MAX; for size guards.
    std::uint64_t value_saturating() const {
        std::uint64_t v = 1;
        for (const auto& [p, e] : exps_) {
            for (std::uint64_t i = 0; i < e; ++i) {
                if (v > UINT64_MAX / p) return UINT64_MAX;
                v *= p;
            }
        }
        return v;
    }

    // "2^3*5" style rendering; "1" for the empty product.
    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (const auto& [p, e] : exps_) {
            if (!s.empty()) s += "*";
            s += std::to_string(p);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

  private:
    map_type exps_;
};

// v_p(n) for plain integers.
inline std::uint64_t valuation(std::uint64_t n, std::uint64_t p) {
    std::uint64_t v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace otl
