#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "otl/chain_family.hpp"
#include "otl/errors.hpp"
#include "otl/factored.hpp"
#include "otl/level_action.hpp"
#include "otl/permutation.hpp"
#include "otl/steinitz.hpp"
#include "otl/word.hpp"

namespace otl {

// One coordinate's descent schedule: finitely many primes q_i entering with
// fixed multiplicity n(q_i) at level i, plus primes p_i entering at level i
// with exponent growing like the level.
struct prime_schedule {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> finite;  // (q_i, n_i)
    std::vector<std::uint64_t> infinite;                          // p_i

    void validate() const {
        std::set<std::uint64_t> seen;
        for (const auto& [q, n] : finite) {
            if (!is_prime(q)) fail(errc::invalid_config, std::to_string(q) + " is not prime");
            if (n < 1) fail(errc::invalid_config, "multiplicity must be >= 1");
            if (!seen.insert(q).second) fail(errc::invalid_config, "duplicate prime in schedule");
        }
        for (std::uint64_t p : infinite) {
            if (!is_prime(p)) fail(errc::invalid_config, std::to_string(p) + " is not prime");
            if (!seen.insert(p).second) fail(errc::invalid_config, "duplicate prime in schedule");
        }
    }

    // Beyond this the subgroup stops descending.
    std::uint64_t max_level() const {
        return infinite.empty() ? finite.size() : UINT64_MAX;
    }

    factored_int modulus(std::uint64_t level) const {
        factored_int m;
        for (std::size_t i = 0; i < finite.size() && i < level; ++i)
            m.mul_prime_power(finite[i].first, finite[i].second);
        for (std::size_t i = 0; i < infinite.size() && i < level; ++i)
            m.mul_prime_power(infinite[i], level);
        return m;
    }

    // Order of k mod the level modulus: modulus / gcd(modulus, k).
    factored_int order_of(std::int64_t k, std::uint64_t level) const {
        if (k == 0) return modulus(level);
        std::uint64_t a = static_cast<std::uint64_t>(k < 0 ? -k : k);
        factored_int ord;
        factored_int m = modulus(level);
        for (const auto& [p, e] : m.exponents()) {
            std::uint64_t v = valuation(a, p);
            if (e > v) ord.mul_prime_power(p, e - v);
        }
        return ord;
    }

    // Level at which p first appears, 1-based; 0 if not scheduled.
    std::uint64_t entry_level(std::uint64_t p) const {
        for (std::size_t i = 0; i < finite.size(); ++i)
            if (finite[i].first == p) return i + 1;
        for (std::size_t i = 0; i < infinite.size(); ++i)
            if (infinite[i] == p) return i + 1;
        return 0;
    }
};

namespace detail {

inline std::int64_t word_exponent_sum(const word& w, const std::string& gen) {
    std::int64_t k = 0;
    for (const auto& l : w.letters) {
        if (l.name != gen) fail(errc::unknown_generator, "generator '" + l.name + "' is not defined");
        k += l.exp;
    }
    return k;
}

inline std::uint64_t checked_size(const factored_int& index) {
    std::uint64_t n = index.value_saturating();
    if (n > point_bound() || n > 0xFFFFFFFFull)
        fail(errc::depth_too_large,
             "coset space has " + std::to_string(n) + " points (bound " +
                 std::to_string(point_bound()) + ")");
    return n;
}

inline level_action trivial_action(const std::vector<std::string>& gens) {
    level_action act;
    act.level = 0;
    act.size = 1;
    act.base = 0;
    for (const auto& g : gens) act.generators.emplace(g, permutation(1));
    return act;
}

inline void check_level(std::uint64_t level, std::uint64_t max) {
    if (level > max)
        fail(errc::depth_too_large,
             "chain stops descending after level " + std::to_string(max));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Z with subgroups q_1^{n_1}...q_l^{n_l} * p_1^l...p_l^l * Z.
// ---------------------------------------------------------------------------
class z_schedule_family : public chain_family {
  public:
    explicit z_schedule_family(prime_schedule sched) : sched_(std::move(sched)) {
        sched_.validate();
    }

    std::string name() const override { return "z-schedule"; }
    std::vector<std::string> generator_names() const override { return {"t"}; }
    std::uint64_t max_level() const override { return sched_.max_level(); }

    std::uint64_t index_at(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        return sched_.modulus(level).value_saturating();
    }

    level_action action_at(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        std::uint64_t n = detail::checked_size(sched_.modulus(level));
        std::uint64_t prev = level == 0 ? 1 : sched_.modulus(level - 1).value();
        level_action act;
        act.level = level;
        act.size = static_cast<std::uint32_t>(n);
        std::vector<std::uint32_t> img(n);
        for (std::uint64_t x = 0; x < n; ++x) img[x] = static_cast<std::uint32_t>((x + 1) % n);
        act.generators.emplace("t", permutation(std::move(img)));
        act.base = 0;
        if (level > 0) {
            act.project.resize(n);
            for (std::uint64_t x = 0; x < n; ++x)
                act.project[x] = static_cast<std::uint32_t>(x % prev);
        }
        return act;
    }

    std::optional<factored_int> analytic_index(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        return sched_.modulus(level);
    }
    std::optional<factored_int> analytic_core_order(std::uint64_t level) const override {
        return analytic_index(level); // abelian: C_l = Gamma_l
    }
    std::optional<factored_int> analytic_element_order(const word& w, std::uint64_t level) const override {
        detail::check_level(level, max_level());
        return sched_.order_of(detail::word_exponent_sum(w, "t"), level);
    }

    std::set<std::uint64_t> infinite_primes(const word& w) const override {
        if (detail::word_exponent_sum(w, "t") == 0) return {};
        return {sched_.infinite.begin(), sched_.infinite.end()};
    }
    std::map<std::uint64_t, std::uint64_t> stable_exponents(const word& w) const override {
        std::map<std::uint64_t, std::uint64_t> out;
        std::int64_t k = detail::word_exponent_sum(w, "t");
        if (k == 0) return out;
        std::uint64_t a = static_cast<std::uint64_t>(k < 0 ? -k : k);
        for (const auto& [q, n] : sched_.finite) {
            std::uint64_t v = valuation(a, q);
            if (n > v) out[q] = n - v;
        }
        return out;
    }
    bool spectrum_complete(const word&) const override { return true; }
    std::optional<exact_steinitz> exact_element_order(const word& w) const override {
        exact_steinitz x;
        if (detail::word_exponent_sum(w, "t") == 0) return x;
        for (const auto& [q, e] : stable_exponents(w)) x.set(q, exponent::finite(e));
        for (std::uint64_t p : sched_.infinite) x.set(p, exponent::infinity());
        return x;
    }
    std::optional<growth_certificate> growth_cert(const word& w, std::uint64_t p) const override {
        std::int64_t k = detail::word_exponent_sum(w, "t");
        if (k == 0) return {};
        std::uint64_t entry = 0;
        for (std::size_t i = 0; i < sched_.infinite.size(); ++i)
            if (sched_.infinite[i] == p) entry = i + 1;
        if (entry == 0) return {};
        std::uint64_t a = static_cast<std::uint64_t>(k < 0 ? -k : k);
        growth_certificate c;
        c.prime = p;
        c.start_level = entry;
        c.period = 1;
        c.gain = 1;
        c.base = static_cast<std::int64_t>(entry) - static_cast<std::int64_t>(valuation(a, p));
        return c;
    }

    // Abelian: cores are the chain groups themselves, so H-restriction does
    // not change orders at any k.
    std::optional<factored_int> analytic_restricted_order(const word& w, std::uint64_t,
                                                          std::uint64_t level) const override {
        return analytic_element_order(w, level);
    }
    std::set<std::uint64_t> restricted_infinite_primes(const word& w, std::uint64_t) const override {
        return infinite_primes(w);
    }
    std::map<std::uint64_t, std::uint64_t> restricted_stable_exponents(const word& w,
                                                                       std::uint64_t) const override {
        return stable_exponents(w);
    }
    bool restricted_spectrum_complete(const word&, std::uint64_t) const override { return true; }
    std::optional<exact_steinitz> restricted_exact_element_order(const word& w,
                                                                 std::uint64_t) const override {
        return exact_element_order(w);
    }

    const prime_schedule& schedule() const { return sched_; }

  private:
    prime_schedule sched_;
};

// ---------------------------------------------------------------------------
// Z^n with the product of coordinate schedules (diagonal action).
// ---------------------------------------------------------------------------
class zn_diagonal_family : public chain_family {
  public:
    explicit zn_diagonal_family(std::vector<prime_schedule> coords) : coords_(std::move(coords)) {
        for (const auto& c : coords_) c.validate();
    }

    std::string name() const override { return "zn-diagonal"; }
    std::vector<std::string> generator_names() const override {
        std::vector<std::string> g;
        for (std::size_t i = 0; i < coords_.size(); ++i) g.push_back("t" + std::to_string(i + 1));
        return g;
    }
    std::uint64_t max_level() const override {
        std::uint64_t m = 0;
        for (const auto& c : coords_) m = std::max(m, c.max_level());
        return coords_.empty() ? UINT64_MAX : m;
    }

    std::uint64_t index_at(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        return index_factored(level).value_saturating();
    }

    level_action action_at(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        std::vector<std::uint64_t> mods = moduli(level);
        std::vector<std::uint64_t> prev = level == 0 ? std::vector<std::uint64_t>() : moduli(level - 1);
        std::uint64_t n = detail::checked_size(index_factored(level));
        level_action act;
        act.level = level;
        act.size = static_cast<std::uint32_t>(n);
        act.base = 0;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            std::vector<std::uint32_t> img(n);
            for (std::uint64_t x = 0; x < n; ++x) {
                std::vector<std::uint64_t> r = unrank(x, mods);
                r[i] = (r[i] + 1) % mods[i];
                img[x] = static_cast<std::uint32_t>(rank(r, mods));
            }
            act.generators.emplace("t" + std::to_string(i + 1), permutation(std::move(img)));
        }
        if (level > 0) {
            act.project.resize(n);
            for (std::uint64_t x = 0; x < n; ++x) {
                std::vector<std::uint64_t> r = unrank(x, mods);
                for (std::size_t i = 0; i < r.size(); ++i) r[i] %= prev[i];
                act.project[x] = static_cast<std::uint32_t>(rank(r, prev));
            }
        }
        return act;
    }

    std::optional<factored_int> analytic_index(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        return index_factored(level);
    }
    std::optional<factored_int> analytic_core_order(std::uint64_t level) const override {
        return analytic_index(level);
    }
    std::optional<factored_int> analytic_element_order(const word& w, std::uint64_t level) const override {
        detail::check_level(level, max_level());
        std::vector<std::int64_t> k = translation_of(w);
        factored_int ord;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            ord = lcm(ord, coords_[i].order_of(k[i], level));
        return ord;
    }

    std::set<std::uint64_t> infinite_primes(const word& w) const override {
        std::set<std::uint64_t> out;
        std::vector<std::int64_t> k = translation_of(w);
        for (std::size_t i = 0; i < coords_.size(); ++i)
            if (k[i] != 0)
                out.insert(coords_[i].infinite.begin(), coords_[i].infinite.end());
        return out;
    }
    std::map<std::uint64_t, std::uint64_t> stable_exponents(const word& w) const override {
        std::vector<std::int64_t> k = translation_of(w);
        std::set<std::uint64_t> inf = infinite_primes(w);
        std::map<std::uint64_t, std::uint64_t> out;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (k[i] == 0) continue;
            std::uint64_t a = static_cast<std::uint64_t>(k[i] < 0 ? -k[i] : k[i]);
            for (const auto& [q, n] : coords_[i].finite) {
                if (inf.count(q)) continue;
                std::uint64_t v = valuation(a, q);
                if (n > v) {
                    auto& slot = out[q];
                    slot = std::max(slot, n - v);
                }
            }
        }
        return out;
    }
    bool spectrum_complete(const word&) const override { return true; }
    std::optional<exact_steinitz> exact_element_order(const word& w) const override {
        exact_steinitz x;
        for (const auto& [q, e] : stable_exponents(w)) x.set(q, exponent::finite(e));
        for (std::uint64_t p : infinite_primes(w)) x.set(p, exponent::infinity());
        return x;
    }
    std::optional<growth_certificate> growth_cert(const word& w, std::uint64_t p) const override {
        std::vector<std::int64_t> k = translation_of(w);
        std::optional<growth_certificate> best;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (k[i] == 0) continue;
            std::uint64_t entry = 0;
            for (std::size_t j = 0; j < coords_[i].infinite.size(); ++j)
                if (coords_[i].infinite[j] == p) entry = j + 1;
            if (entry == 0) continue;
            std::uint64_t a = static_cast<std::uint64_t>(k[i] < 0 ? -k[i] : k[i]);
            growth_certificate c;
            c.prime = p;
            c.start_level = entry;
            c.period = 1;
            c.gain = 1;
            c.base = static_cast<std::int64_t>(entry) - static_cast<std::int64_t>(valuation(a, p));
            if (!best || c.base > best->base) best = c;
        }
        return best;
    }

    std::optional<factored_int> analytic_restricted_order(const word& w, std::uint64_t,
                                                          std::uint64_t level) const override {
        return analytic_element_order(w, level);
    }
    std::set<std::uint64_t> restricted_infinite_primes(const word& w, std::uint64_t) const override {
        return infinite_primes(w);
    }
    std::map<std::uint64_t, std::uint64_t> restricted_stable_exponents(const word& w,
                                                                       std::uint64_t) const override {
        return stable_exponents(w);
    }
    bool restricted_spectrum_complete(const word&, std::uint64_t) const override { return true; }
    std::optional<exact_steinitz> restricted_exact_element_order(const word& w,
                                                                 std::uint64_t) const override {
        return exact_element_order(w);
    }

    std::vector<std::string> report_notes() const override {
        return {"typeset classification of Z^n odometers not attempted"};
    }

    std::vector<std::int64_t> translation_of(const word& w) const {
        std::vector<std::int64_t> k(coords_.size(), 0);
        for (const auto& l : w.letters) {
            bool found = false;
            for (std::size_t i = 0; i < coords_.size(); ++i) {
                if (l.name == "t" + std::to_string(i + 1)) {
                    k[i] += l.exp;
                    found = true;
                    break;
                }
            }
            if (!found) fail(errc::unknown_generator, "generator '" + l.name + "' is not defined");
        }
        return k;
    }

  private:
    std::vector<std::uint64_t> moduli(std::uint64_t level) const {
        std::vector<std::uint64_t> m;
        for (const auto& c : coords_) m.push_back(c.modulus(level).value());
        return m;
    }
    factored_int index_factored(std::uint64_t level) const {
        factored_int f;
        for (const auto& c : coords_) f = f * c.modulus(level);
        return f;
    }
    static std::vector<std::uint64_t> unrank(std::uint64_t x, const std::vector<std::uint64_t>& mods) {
        std::vector<std::uint64_t> r(mods.size());
        for (std::size_t i = 0; i < mods.size(); ++i) {
            r[i] = x % mods[i];
            x /= mods[i];
        }
        return r;
    }
    static std::uint64_t rank(const std::vector<std::uint64_t>& r, const std::vector<std::uint64_t>& mods) {
        std::uint64_t x = 0;
        for (std::size_t i = mods.size(); i-- > 0;) x = x * mods[i] + r[i];
        return x;
    }

    std::vector<prime_schedule> coords_;

    friend class semidirect_family;
};

// ---------------------------------------------------------------------------
// Z^n x| Delta for Delta <= Perm(n), with chain subgroups inside Z^n x {id}.
// Optionally inserts Z^n x {id} itself as chain level 1.
// ---------------------------------------------------------------------------
class semidirect_family : public chain_family {
  public:
    semidirect_family(std::size_t n, std::vector<permutation> delta_gens,
                      std::vector<prime_schedule> coords, bool untwisted_level)
        : n_(n), delta_gens_(std::move(delta_gens)), coords_(std::move(coords)),
          untwisted_(untwisted_level) {
        if (coords_.size() != n_) fail(errc::invalid_config, "need one schedule per coordinate");
        if (n_ == 0 || n_ > 8) fail(errc::invalid_config, "rank must be in 1..8");
        for (const auto& c : coords_) c.validate();
        for (const auto& g : delta_gens_)
            if (g.size() != n_) fail(errc::invalid_config, "Delta generator degree != rank");
        close_delta();
        compute_orbits();
    }

    std::string name() const override { return "semidirect"; }
    std::vector<std::string> generator_names() const override {
        std::vector<std::string> g;
        for (std::size_t i = 0; i < n_; ++i) g.push_back("t" + std::to_string(i + 1));
        for (std::size_t i = 0; i < delta_gens_.size(); ++i) g.push_back("d" + std::to_string(i + 1));
        return g;
    }
    std::uint64_t max_level() const override {
        std::uint64_t m = 0;
        for (const auto& c : coords_) m = std::max(m, c.max_level());
        if (m == UINT64_MAX) return m;
        return untwisted_ ? m + 1 : m;
    }

    std::uint64_t index_at(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        return index_factored(level).value_saturating();
    }

    level_action action_at(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        if (level == 0) return detail::trivial_action(generator_names());
        std::uint64_t n = detail::checked_size(index_factored(level));
        std::uint64_t block = 1;
        for (const auto& m : coord_moduli(level)) block *= m;
        level_action act;
        act.level = level;
        act.size = static_cast<std::uint32_t>(n);
        act.base = 0; // identity block sorts first, zero residues
        auto gens = generator_elements();
        for (const auto& [name, g] : gens) {
            std::vector<std::uint32_t> img(n);
            for (std::uint64_t x = 0; x < n; ++x)
                img[x] = static_cast<std::uint32_t>(point_apply(g, x, level, block));
            act.generators.emplace(name, permutation(std::move(img)));
        }
        if (level > 0) {
            std::uint64_t prev_block = 1;
            for (const auto& m : coord_moduli(level - 1)) prev_block *= m;
            act.project.resize(n);
            for (std::uint64_t x = 0; x < n; ++x) {
                auto [s, r] = point_decode(x, level, block);
                for (std::size_t i = 0; i < n_; ++i) {
                    std::uint64_t m = coset_modulus(s, i, level - 1);
                    r[i] = m == 1 ? 0 : r[i] % m;
                }
                act.project[x] = static_cast<std::uint32_t>(point_encode(s, r, level - 1, prev_block));
            }
        }
        return act;
    }

    std::optional<factored_int> analytic_index(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        return index_factored(level);
    }

    std::optional<factored_int> analytic_core_order(std::uint64_t level) const override {
        detail::check_level(level, max_level());
        if (level == 0) return factored_int::one();
        factored_int f = factored_int::of(delta_.size());
        for (std::size_t i = 0; i < n_; ++i) f = f * core_modulus(i, level);
        return f;
    }

    // gamma = (v,s): gamma^r = (w,id) with r = ord(s) and w = sum s^j v, so the
    // order mod C_l is r * min{t : t*w in the core lattice}.
    std::optional<factored_int> analytic_element_order(const word& w, std::uint64_t level) const override {
        detail::check_level(level, max_level());
        if (level == 0) return factored_int::one();
        auto [v, s] = element_of(w);
        std::uint64_t r = permutation_order(delta_[s]).value();
        if (r == 0) r = 1;
        std::vector<std::int64_t> sum = power_translation(v, s);
        std::map<std::uint64_t, std::uint64_t> texp;
        for (std::size_t i = 0; i < n_; ++i) {
            if (sum[i] == 0) continue;
            std::uint64_t a = static_cast<std::uint64_t>(sum[i] < 0 ? -sum[i] : sum[i]);
            factored_int cm = core_modulus(i, level);
            for (const auto& [p, e] : cm.exponents()) {
                std::uint64_t vp = valuation(a, p);
                if (e > vp) {
                    auto& slot = texp[p];
                    slot = std::max(slot, e - vp);
                }
            }
        }
        factored_int ord = factored_int::of(r);
        for (const auto& [p, e] : texp) ord.mul_prime_power(p, e);
        return ord;
    }

    std::set<std::uint64_t> infinite_primes(const word& w) const override {
        auto [v, s] = element_of(w);
        std::vector<std::int64_t> sum = power_translation(v, s);
        std::set<std::uint64_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (sum[i] != 0)
                for (std::size_t j : orbit_of_[i])
                    out.insert(coords_[j].infinite.begin(), coords_[j].infinite.end());
        return out;
    }

    std::map<std::uint64_t, std::uint64_t> stable_exponents(const word& w) const override {
        auto [v, s] = element_of(w);
        std::vector<std::int64_t> sum = power_translation(v, s);
        std::set<std::uint64_t> inf = infinite_primes(w);
        factored_int r = permutation_order(delta_[s]);
        std::map<std::uint64_t, std::uint64_t> out;
        for (const auto& [p, e] : r.exponents())
            if (!inf.count(p)) out[p] += e;
        for (std::size_t i = 0; i < n_; ++i) {
            if (sum[i] == 0) continue;
            std::uint64_t a = static_cast<std::uint64_t>(sum[i] < 0 ? -sum[i] : sum[i]);
            // eventual finite exponents of the core modulus on this orbit
            std::map<std::uint64_t, std::uint64_t> fin;
            for (std::size_t j : orbit_of_[i])
                for (const auto& [q, nq] : coords_[j].finite) {
                    auto& slot = fin[q];
                    slot = std::max(slot, nq);
                }
            for (const auto& [q, nq] : fin) {
                if (inf.count(q)) continue;
                std::uint64_t vq = valuation(a, q);
                std::uint64_t rq = r.exponent_of(q);
                if (nq > vq) {
                    auto& slot = out[q];
                    slot = std::max(slot, rq + (nq - vq));
                }
            }
        }
        return out;
    }
    bool spectrum_complete(const word&) const override { return true; }
    std::optional<exact_steinitz> exact_element_order(const word& w) const override {
        exact_steinitz x;
        for (const auto& [q, e] : stable_exponents(w)) x.set(q, exponent::finite(e));
        for (std::uint64_t p : infinite_primes(w)) x.set(p, exponent::infinity());
        return x;
    }
    std::optional<growth_certificate> growth_cert(const word& w, std::uint64_t p) const override {
        auto [v, s] = element_of(w);
        std::vector<std::int64_t> sum = power_translation(v, s);
        std::optional<growth_certificate> best;
        for (std::size_t i = 0; i < n_; ++i) {
            if (sum[i] == 0) continue;
            std::uint64_t entry = 0;
            for (std::size_t j : orbit_of_[i]) {
                std::uint64_t e = coords_[j].entry_level(p);
                bool infinite = std::find(coords_[j].infinite.begin(), coords_[j].infinite.end(), p) !=
                                coords_[j].infinite.end();
                if (infinite && e > 0 && (entry == 0 || e < entry)) entry = e;
            }
            if (entry == 0) continue;
            std::uint64_t a = static_cast<std::uint64_t>(sum[i] < 0 ? -sum[i] : sum[i]);
            growth_certificate c;
            c.prime = p;
            c.start_level = entry + (untwisted_ ? 1 : 0);
            c.period = 1;
            c.gain = 1;
            c.base = static_cast<std::int64_t>(entry) - static_cast<std::int64_t>(valuation(a, p));
            if (!best || c.base > best->base) best = c;
        }
        return best;
    }

    // H = a chain level inside Z^n x {id}: abelian, so C^H_l = Gamma_l and
    // restricted orders split per coordinate (no orbit lcm).
    std::optional<factored_int> analytic_restricted_order(const word& w, std::uint64_t k,
                                                          std::uint64_t level) const override {
        detail::check_level(level, max_level());
        if (k == 0) return analytic_element_order(w, level);
        auto [v, s] = element_of(w);
        if (!delta_[s].is_identity()) return {}; // not in H; engine reports NotInSubgroup
        factored_int ord;
        for (std::size_t i = 0; i < n_; ++i)
            ord = lcm(ord, coords_[i].order_of(v[i], schedule_level(level)));
        return ord;
    }
    std::set<std::uint64_t> restricted_infinite_primes(const word& w, std::uint64_t k) const override {
        if (k == 0) return infinite_primes(w);
        auto [v, s] = element_of(w);
        std::set<std::uint64_t> out;
        if (!delta_[s].is_identity()) return out;
        for (std::size_t i = 0; i < n_; ++i)
            if (v[i] != 0) out.insert(coords_[i].infinite.begin(), coords_[i].infinite.end());
        return out;
    }
    std::map<std::uint64_t, std::uint64_t> restricted_stable_exponents(const word& w,
                                                                       std::uint64_t k) const override {
        if (k == 0) return stable_exponents(w);
        auto [v, s] = element_of(w);
        std::map<std::uint64_t, std::uint64_t> out;
        if (!delta_[s].is_identity()) return out;
        std::set<std::uint64_t> inf = restricted_infinite_primes(w, k);
        for (std::size_t i = 0; i < n_; ++i) {
            if (v[i] == 0) continue;
            std::uint64_t a = static_cast<std::uint64_t>(v[i] < 0 ? -v[i] : v[i]);
            for (const auto& [q, nq] : coords_[i].finite) {
                if (inf.count(q)) continue;
                std::uint64_t vq = valuation(a, q);
                if (nq > vq) {
                    auto& slot = out[q];
                    slot = std::max(slot, nq - vq);
                }
            }
        }
        return out;
    }
    bool restricted_spectrum_complete(const word& w, std::uint64_t k) const override {
        if (k == 0) return true;
        auto [v, s] = element_of(w);
        (void)v;
        return delta_[s].is_identity();
    }
    std::optional<exact_steinitz> restricted_exact_element_order(const word& w,
                                                                 std::uint64_t k) const override {
        if (k == 0) return exact_element_order(w);
        auto [v, s] = element_of(w);
        (void)v;
        if (!delta_[s].is_identity()) return std::nullopt;
        exact_steinitz x;
        for (const auto& [q, e] : restricted_stable_exponents(w, k)) x.set(q, exponent::finite(e));
        for (std::uint64_t p : restricted_infinite_primes(w, k)) x.set(p, exponent::infinity());
        return x;
    }

    std::size_t delta_order() const { return delta_.size(); }
    bool untwisted_level_inserted() const { return untwisted_; }

  private:
    // chain level -> coordinate-schedule level
    std::uint64_t schedule_level(std::uint64_t level) const {
        if (!untwisted_) return level;
        return level == 0 ? 0 : level - 1;
    }

    void close_delta() {
        std::set<std::vector<std::uint32_t>> seen;
        std::vector<permutation> todo{permutation(static_cast<std::uint32_t>(n_))};
        seen.insert(todo[0].images());
        std::vector<permutation> elems{todo[0]};
        while (!todo.empty()) {
            permutation cur = todo.back();
            todo.pop_back();
            for (const auto& g : delta_gens_) {
                permutation nxt = g * cur;
                if (seen.insert(nxt.images()).second) {
                    elems.push_back(nxt);
                    todo.push_back(nxt);
                }
            }
        }
        std::sort(elems.begin(), elems.end(),
                  [](const permutation& a, const permutation& b) { return a.images() < b.images(); });
        delta_ = std::move(elems);
    }

    void compute_orbits() {
        orbit_of_.assign(n_, {});
        std::vector<bool> done(n_, false);
        for (std::size_t i = 0; i < n_; ++i) {
            if (done[i]) continue;
            std::vector<std::size_t> orb;
            for (const auto& d : delta_) {
                std::size_t j = d(static_cast<std::uint32_t>(i));
                if (std::find(orb.begin(), orb.end(), j) == orb.end()) orb.push_back(j);
            }
            std::sort(orb.begin(), orb.end());
            for (std::size_t j : orb) {
                orbit_of_[j] = orb;
                done[j] = true;
            }
        }
    }

    std::uint32_t delta_index(const permutation& p) const {
        auto it = std::lower_bound(delta_.begin(), delta_.end(), p,
                                   [](const permutation& a, const permutation& b) {
                                       return a.images() < b.images();
                                   });
        if (it == delta_.end() || !(*it == p))
            fail(errc::invariant_violation, "permutation outside Delta");
        return static_cast<std::uint32_t>(it - delta_.begin());
    }

    std::uint32_t delta_mul(std::uint32_t a, std::uint32_t b) const {
        return delta_index(delta_[a] * delta_[b]);
    }

    static std::vector<std::int64_t> act_on_vector(const permutation& s,
                                                   const std::vector<std::int64_t>& v) {
        std::vector<std::int64_t> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[s(static_cast<std::uint32_t>(i))] = v[i];
        return r;
    }

    // (v, s) from a word; s stored as index into delta_.
    std::pair<std::vector<std::int64_t>, std::uint32_t> element_of(const word& w) const {
        std::vector<std::int64_t> v(n_, 0);
        std::uint32_t s = delta_index(permutation(static_cast<std::uint32_t>(n_)));
        auto apply = [&](const std::vector<std::int64_t>& u, const permutation& sig, std::int64_t times) {
            // multiply (v,s) by (u,sig)^times on the right
            for (std::int64_t c = 0; c < times; ++c) {
                std::vector<std::int64_t> su = act_on_vector(delta_[s], u);
                for (std::size_t i = 0; i < n_; ++i) v[i] += su[i];
                s = delta_index(delta_[s] * sig);
            }
        };
        for (const auto& l : w.letters) {
            std::vector<std::int64_t> u(n_, 0);
            permutation sig(static_cast<std::uint32_t>(n_));
            bool found = false;
            for (std::size_t i = 0; i < n_ && !found; ++i)
                if (l.name == "t" + std::to_string(i + 1)) {
                    u[i] = 1;
                    found = true;
                }
            for (std::size_t i = 0; i < delta_gens_.size() && !found; ++i)
                if (l.name == "d" + std::to_string(i + 1)) {
                    sig = delta_gens_[i];
                    found = true;
                }
            if (!found) fail(errc::unknown_generator, "generator '" + l.name + "' is not defined");
            if (l.exp >= 0) {
                apply(u, sig, l.exp);
            } else {
                std::vector<std::int64_t> ui(n_);
                permutation sinv = sig.inverse();
                std::vector<std::int64_t> minus_u(n_);
                for (std::size_t i = 0; i < n_; ++i) minus_u[i] = -u[i];
                ui = act_on_vector(sinv, minus_u); // (u,sig)^{-1} = (sig^{-1}(-u), sig^{-1})
                apply(ui, sinv, -l.exp);
            }
        }
        return {v, s};
    }

    std::vector<std::int64_t> power_translation(const std::vector<std::int64_t>& v,
                                                std::uint32_t s) const {
        std::uint64_t r = permutation_order(delta_[s]).value();
        std::vector<std::int64_t> sum(n_, 0);
        std::uint32_t sj = delta_index(permutation(static_cast<std::uint32_t>(n_)));
        for (std::uint64_t j = 0; j < r; ++j) {
            std::vector<std::int64_t> image = act_on_vector(delta_[sj], v);
            for (std::size_t i = 0; i < n_; ++i) sum[i] += image[i];
            sj = delta_mul(s, sj);
        }
        return sum;
    }

    // modulus of coordinate i inside the coset block of s (s * Lambda)
    std::uint64_t coset_modulus(std::uint32_t s, std::size_t i, std::uint64_t level) const {
        std::uint32_t j = delta_[s].inverse()(static_cast<std::uint32_t>(i));
        return coords_[j].modulus(schedule_level(level)).value();
    }

    std::vector<std::uint64_t> coord_moduli(std::uint64_t level) const {
        std::vector<std::uint64_t> m;
        for (const auto& c : coords_) m.push_back(c.modulus(schedule_level(level)).value());
        return m;
    }

    factored_int core_modulus(std::size_t i, std::uint64_t level) const {
        factored_int f;
        for (std::size_t j : orbit_of_[i]) f = lcm(f, coords_[j].modulus(schedule_level(level)));
        return f;
    }

    factored_int index_factored(std::uint64_t level) const {
        if (level == 0) return factored_int::one();
        factored_int f = factored_int::of(delta_.size());
        for (const auto& c : coords_) f = f * c.modulus(schedule_level(level));
        return f;
    }

    std::pair<std::uint32_t, std::vector<std::uint64_t>> point_decode(std::uint64_t x,
                                                                      std::uint64_t level,
                                                                      std::uint64_t block) const {
        std::uint32_t s = static_cast<std::uint32_t>(x / block);
        std::uint64_t rest = x % block;
        std::vector<std::uint64_t> r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint64_t m = coset_modulus(s, i, level);
            r[i] = rest % m;
            rest /= m;
        }
        return {s, r};
    }

    std::uint64_t point_encode(std::uint32_t s, const std::vector<std::uint64_t>& r,
                               std::uint64_t level, std::uint64_t block) const {
        std::uint64_t x = 0;
        for (std::size_t i = n_; i-- > 0;) x = x * coset_modulus(s, i, level) + r[i];
        return static_cast<std::uint64_t>(s) * block + x;
    }

    std::vector<std::pair<std::string, std::pair<std::vector<std::int64_t>, std::uint32_t>>>
    generator_elements() const {
        std::vector<std::pair<std::string, std::pair<std::vector<std::int64_t>, std::uint32_t>>> out;
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<std::int64_t> u(n_, 0);
            u[i] = 1;
            out.push_back({"t" + std::to_string(i + 1),
                           {u, delta_index(permutation(static_cast<std::uint32_t>(n_)))}});
        }
        for (std::size_t i = 0; i < delta_gens_.size(); ++i) {
            std::vector<std::int64_t> u(n_, 0);
            out.push_back({"d" + std::to_string(i + 1), {u, delta_index(delta_gens_[i])}});
        }
        return out;
    }

    // left multiplication of the coset point by group element g = (u, sigma)
    std::uint64_t point_apply(const std::pair<std::vector<std::int64_t>, std::uint32_t>& g,
                              std::uint64_t x, std::uint64_t level, std::uint64_t block) const {
        auto [s, r] = point_decode(x, level, block);
        const auto& [u, sigma] = g;
        std::vector<std::int64_t> v(n_);
        for (std::size_t i = 0; i < n_; ++i) v[i] = static_cast<std::int64_t>(r[i]);
        std::vector<std::int64_t> sv = act_on_vector(delta_[sigma], v);
        std::uint32_t ns = delta_mul(sigma, s);
        std::vector<std::uint64_t> nr(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            std::uint64_t m = coset_modulus(ns, i, level);
            std::int64_t val = (u[i] + sv[i]) % static_cast<std::int64_t>(m);
            if (val < 0) val += static_cast<std::int64_t>(m);
            nr[i] = static_cast<std::uint64_t>(val);
        }
        return point_encode(ns, nr, level, block);
    }

    std::size_t n_;
    std::vector<permutation> delta_gens_;
    std::vector<prime_schedule> coords_;
    bool untwisted_;
    std::vector<permutation> delta_;             // sorted by image vector
    std::vector<std::vector<std::size_t>> orbit_of_;
};

// ---------------------------------------------------------------------------
// Integer Heisenberg group with renormalization phi_p(a,b,c) = (pa,pb,p^2 c)
// or phi_{p,q}(a,b,c) = (pa,qb,pq c); (a,b,c)(a',b',c') = (a+a',b+b',c+c'+ab').
// ---------------------------------------------------------------------------
class heisenberg_family : public chain_family {
  public:
    explicit heisenberg_family(std::uint64_t p) : p_(p), q_(0) { validate(); }
    heisenberg_family(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) { validate(); }

    std::string name() const override { return "heisenberg"; }
    std::vector<std::string> generator_names() const override { return {"x", "y", "z"}; }

    bool two_primes() const { return q_ != 0; }

    std::uint64_t index_at(std::uint64_t level) const override {
        return index_factored(level).value_saturating();
    }

    level_action action_at(std::uint64_t level) const override {
        std::uint64_t A = mod_a(level), B = mod_b(level), C = mod_c(level);
        std::uint64_t n = detail::checked_size(index_factored(level));
        level_action act;
        act.level = level;
        act.size = static_cast<std::uint32_t>(n);
        act.base = 0;
        const std::int64_t gens[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        const char* names[3] = {"x", "y", "z"};
        for (int gi = 0; gi < 3; ++gi) {
            std::vector<std::uint32_t> img(n);
            for (std::uint64_t x = 0; x < n; ++x) {
                auto [a, b, c] = decode(x, A, B, C);
                std::int64_t ra = gens[gi][0] + a;
                std::int64_t rb = gens[gi][1] + b;
                std::int64_t rc = gens[gi][2] + c + gens[gi][0] * b;
                img[x] = static_cast<std::uint32_t>(encode(ra, rb, rc, A, B, C));
            }
            act.generators.emplace(names[gi], permutation(std::move(img)));
        }
        if (level > 0) {
            std::uint64_t A1 = mod_a(level - 1), B1 = mod_b(level - 1), C1 = mod_c(level - 1);
            act.project.resize(n);
            for (std::uint64_t x = 0; x < n; ++x) {
                auto [a, b, c] = decode(x, A, B, C);
                act.project[x] = static_cast<std::uint32_t>(encode(a, b, c, A1, B1, C1));
            }
        }
        return act;
    }

    std::optional<factored_int> analytic_index(std::uint64_t level) const override {
        return index_factored(level);
    }

    std::optional<factored_int> analytic_core_order(std::uint64_t level) const override {
        factored_int f;
        if (two_primes()) {
            f.mul_prime_power(p_, 3 * level);
            f.mul_prime_power(q_, 3 * level);
        } else {
            f.mul_prime_power(p_, 6 * level);
        }
        return f;
    }

    std::optional<factored_int> analytic_element_order(const word& w, std::uint64_t level) const override {
        auto [a, b, c] = element_of(w);
        return order_mod_core(a, b, c, level);
    }

    std::set<std::uint64_t> infinite_primes(const word& w) const override {
        auto [a, b, c] = element_of(w);
        if (a == 0 && b == 0 && c == 0) return {};
        return two_primes() ? std::set<std::uint64_t>{p_, q_} : std::set<std::uint64_t>{p_};
    }
    std::map<std::uint64_t, std::uint64_t> stable_exponents(const word&) const override {
        return {}; // orders are pure (pq)-powers growing without bound
    }
    bool spectrum_complete(const word&) const override { return true; }
    std::optional<exact_steinitz> exact_element_order(const word& w) const override {
        exact_steinitz x;
        for (std::uint64_t p : infinite_primes(w)) x.set(p, exponent::infinity());
        return x;
    }
    std::optional<growth_certificate> growth_cert(const word& w, std::uint64_t prime) const override {
        auto [a, b, c] = element_of(w);
        if (a == 0 && b == 0 && c == 0) return {};
        if (prime != p_ && (!two_primes() || prime != q_)) return {};
        std::uint64_t v = UINT64_MAX;
        for (std::int64_t coord : {a, b, c})
            if (coord != 0)
                v = std::min(v, valuation(static_cast<std::uint64_t>(coord < 0 ? -coord : coord), prime));
        growth_certificate g;
        g.prime = prime;
        g.start_level = 1;
        g.period = 1;
        g.gain = two_primes() ? 1 : 2;
        g.base = g.gain - static_cast<std::int64_t>(v);
        return g;
    }

    // H = Gamma_k = phi^k(Gamma): C^H_l = phi^k(C_{l-k}), so restricted orders
    // are unrestricted orders of the phi^{-k} preimage.
    std::optional<factored_int> analytic_restricted_order(const word& w, std::uint64_t k,
                                                          std::uint64_t level) const override {
        if (k == 0) return analytic_element_order(w, level);
        if (level < k) return factored_int::one();
        auto pre = preimage(w, k);
        if (!pre) return {};
        auto [a, b, c] = *pre;
        return order_mod_core(a, b, c, level - k);
    }
    std::set<std::uint64_t> restricted_infinite_primes(const word& w, std::uint64_t k) const override {
        if (k == 0) return infinite_primes(w);
        auto pre = preimage(w, k);
        if (!pre) return {};
        auto [a, b, c] = *pre;
        if (a == 0 && b == 0 && c == 0) return {};
        return two_primes() ? std::set<std::uint64_t>{p_, q_} : std::set<std::uint64_t>{p_};
    }
    bool restricted_spectrum_complete(const word& w, std::uint64_t k) const override {
        return k == 0 ? true : preimage(w, k).has_value();
    }
    std::optional<exact_steinitz> restricted_exact_element_order(const word& w,
                                                                 std::uint64_t k) const override {
        if (k == 0) return exact_element_order(w);
        auto pre = preimage(w, k);
        if (!pre) return std::nullopt;
        auto [a, b, c] = *pre;
        exact_steinitz x;
        if (a != 0 || b != 0 || c != 0) {
            x.set(p_, exponent::infinity());
            if (two_primes()) x.set(q_, exponent::infinity());
        }
        return x;
    }

    std::tuple<std::int64_t, std::int64_t, std::int64_t> element_of(const word& w) const {
        std::int64_t a = 0, b = 0, c = 0;
        for (const auto& l : w.letters) {
            std::int64_t ga = 0, gb = 0, gc = 0;
            if (l.name == "x")
                ga = l.exp;
            else if (l.name == "y")
                gb = l.exp;
            else if (l.name == "z")
                gc = l.exp;
            else
                fail(errc::unknown_generator, "generator '" + l.name + "' is not defined");
            // (a,b,c) * (ga,gb,gc): single-axis powers have no twist term
            c += gc + a * gb;
            a += ga;
            b += gb;
        }
        return {a, b, c};
    }

  private:
    void validate() const {
        if (!is_prime(p_)) fail(errc::invalid_config, std::to_string(p_) + " is not prime");
        if (q_ != 0) {
            if (!is_prime(q_)) fail(errc::invalid_config, std::to_string(q_) + " is not prime");
            if (q_ == p_) fail(errc::invalid_config, "the two primes must be distinct");
        }
    }

    std::uint64_t pow64(std::uint64_t base, std::uint64_t e) const {
        std::uint64_t v = 1;
        while (e--) {
            if (v > UINT64_MAX / base) fail(errc::depth_too_large, "modulus exceeds 64 bits");
            v *= base;
        }
        return v;
    }

    std::uint64_t mod_a(std::uint64_t l) const { return pow64(p_, l); }
    std::uint64_t mod_b(std::uint64_t l) const { return pow64(two_primes() ? q_ : p_, l); }
    std::uint64_t mod_c(std::uint64_t l) const {
        return two_primes() ? pow64(p_, l) * pow64(q_, l) : pow64(p_, 2 * l);
    }

    factored_int index_factored(std::uint64_t level) const {
        factored_int f;
        if (two_primes()) {
            f.mul_prime_power(p_, 2 * level);
            f.mul_prime_power(q_, 2 * level);
        } else {
            f.mul_prime_power(p_, 4 * level);
        }
        return f;
    }

    static std::int64_t floormod(std::int64_t x, std::int64_t m) {
        std::int64_t r = x % m;
        return r < 0 ? r + m : r;
    }

    // canonical coset representative: a mod A, b mod B, (c + a(b0-b)) mod C
    static std::tuple<std::int64_t, std::int64_t, std::int64_t> canonical(std::int64_t a,
                                                                          std::int64_t b,
                                                                          std::int64_t c,
                                                                          std::uint64_t A,
                                                                          std::uint64_t B,
                                                                          std::uint64_t C) {
        std::int64_t a0 = floormod(a, static_cast<std::int64_t>(A));
        std::int64_t b0 = floormod(b, static_cast<std::int64_t>(B));
        std::int64_t c0 = floormod(c + a * (b0 - b), static_cast<std::int64_t>(C));
        return {a0, b0, c0};
    }

    static std::uint64_t encode(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t A,
                                std::uint64_t B, std::uint64_t C) {
        auto [a0, b0, c0] = canonical(a, b, c, A, B, C);
        return (static_cast<std::uint64_t>(a0) * B + static_cast<std::uint64_t>(b0)) * C +
               static_cast<std::uint64_t>(c0);
    }

    static std::tuple<std::int64_t, std::int64_t, std::int64_t> decode(std::uint64_t x,
                                                                       std::uint64_t A,
                                                                       std::uint64_t B,
                                                                       std::uint64_t C) {
        (void)A;
        std::int64_t c = static_cast<std::int64_t>(x % C);
        x /= C;
        std::int64_t b = static_cast<std::int64_t>(x % B);
        std::int64_t a = static_cast<std::int64_t>(x / B);
        return {a, b, c};
    }

    // gamma^k = (ka, kb, kc + C(k,2) ab); tests membership in the core lattice.
    bool power_in_core(std::int64_t a, std::int64_t b, std::int64_t c, unsigned __int128 k,
                       std::uint64_t m) const {
        auto modm = [&](unsigned __int128 x) { return static_cast<std::uint64_t>(x % m); };
        auto smod = [&](std::int64_t x) {
            std::int64_t r = x % static_cast<std::int64_t>(m);
            return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
        };
        std::uint64_t km = modm(k);
        if (detail_mulmod(km, smod(a), m) != 0) return false;
        if (detail_mulmod(km, smod(b), m) != 0) return false;
        unsigned __int128 binom = k % (2 * static_cast<unsigned __int128>(m));
        binom = binom * ((k - 1) % (2 * static_cast<unsigned __int128>(m)));
        binom /= 2;
        std::uint64_t bin_m = static_cast<std::uint64_t>(binom % m);
        std::uint64_t term = detail_mulmod(km, smod(c), m);
        std::uint64_t twist = detail_mulmod(bin_m, detail_mulmod(smod(a), smod(b), m), m);
        return (term + twist) % m == 0;
    }

    static std::uint64_t detail_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    }

    factored_int order_mod_core(std::int64_t a, std::int64_t b, std::int64_t c,
                                std::uint64_t level) const {
        if (level == 0 || (a == 0 && b == 0 && c == 0)) return factored_int::one();
        std::uint64_t m = two_primes() ? pow64(p_, level) * pow64(q_, level) : pow64(p_, 2 * level);
        std::uint64_t ep_max = (two_primes() ? level : 2 * level) + 1;
        auto kpow = [&](std::uint64_t base, std::uint64_t e) {
            unsigned __int128 v = 1;
            while (e--) v *= base;
            return v;
        };
        if (!two_primes()) {
            for (std::uint64_t e = 0; e <= ep_max; ++e)
                if (power_in_core(a, b, c, kpow(p_, e), m)) return factored_int::prime_power(p_, e);
            fail(errc::invariant_violation, "element order not found within exponent bound");
        }
        std::uint64_t eq_max = level + 1;
        std::uint64_t alpha = ep_max, beta = eq_max;
        for (std::uint64_t e = 0; e <= ep_max; ++e)
            if (power_in_core(a, b, c, kpow(p_, e) * kpow(q_, eq_max), m)) {
                alpha = e;
                break;
            }
        for (std::uint64_t e = 0; e <= eq_max; ++e)
            if (power_in_core(a, b, c, kpow(p_, ep_max) * kpow(q_, e), m)) {
                beta = e;
                break;
            }
        if (!power_in_core(a, b, c, kpow(p_, alpha) * kpow(q_, beta), m))
            fail(errc::invariant_violation, "Heisenberg order lattice is not rectangular");
        factored_int f;
        f.mul_prime_power(p_, alpha);
        f.mul_prime_power(q_, beta);
        return f;
    }

    // phi^{-k} of the word's element, when it lies in Gamma_k.
    std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>> preimage(
        const word& w, std::uint64_t k) const {
        auto [a, b, c] = element_of(w);
        std::int64_t A = static_cast<std::int64_t>(mod_a(k));
        std::int64_t B = static_cast<std::int64_t>(mod_b(k));
        std::int64_t C = static_cast<std::int64_t>(mod_c(k));
        if (a % A || b % B || c % C) return std::nullopt;
        return std::make_tuple(a / A, b / B, c / C);
    }

    std::uint64_t p_;
    std::uint64_t q_;
};

} // namespace otl
