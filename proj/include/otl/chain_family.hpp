#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "otl/errors.hpp"
#include "otl/factored.hpp"
#include "otl/level_action.hpp"
#include "otl/steinitz.hpp"
#include "otl/word.hpp"

namespace otl {

// Brute-force size bound: coset models above this are refused. Overridable
// through OTL_MAX_POINTS.
inline std::uint64_t point_bound() {
    if (const char* env = std::getenv("OTL_MAX_POINTS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        fail(errc::invalid_config, "OTL_MAX_POINTS must be a positive integer");
    }
    return 2'000'000;
}

// A checkable witness that the p-valuation of the level orders of a word is
// unbounded: v_p(m_{start + k*period}) >= base + k*gain for all k >= 0, with
// gain >= 1.
struct growth_certificate {
    std::uint64_t prime = 0;
    std::uint64_t start_level = 1;
    std::uint64_t period = 1;
    std::int64_t gain = 1;
    std::int64_t base = 0;
};

// A pluggable presentation of a group chain. The brute-force coset model is
// mandatory (within the point bound); the analytic hooks are optional closed
// forms that the engine cross-checks against the model.
class chain_family {
  public:
    virtual ~chain_family() = default;

    virtual std::string name() const = 0;
    virtual std::vector<std::string> generator_names() const = 0;

    // [Gamma : Gamma_l] as a plain count; used for bound checks.
    virtual std::uint64_t index_at(std::uint64_t level) const = 0;

    // Brute-force coset model at one level.
    virtual level_action action_at(std::uint64_t level) const = 0;

    // Levels this presentation supports (UINT64_MAX = unbounded).
    virtual std::uint64_t max_level() const { return UINT64_MAX; }

    // -- optional certified closed forms -------------------------------------
    virtual std::optional<factored_int> analytic_index(std::uint64_t) const { return {}; }
    virtual std::optional<factored_int> analytic_core_order(std::uint64_t) const { return {}; }
    virtual std::optional<factored_int> analytic_element_order(const word&, std::uint64_t) const {
        return {};
    }
    virtual std::optional<growth_certificate> growth_cert(const word&, std::uint64_t) const {
        return {};
    }
    // Primes certified to appear with unbounded exponent in xi(gamma); each
    // must be backed by growth_cert.
    virtual std::set<std::uint64_t> infinite_primes(const word&) const { return {}; }
    // Primes whose exponent certifiedly stabilizes, with the limit exponent.
    virtual std::map<std::uint64_t, std::uint64_t> stable_exponents(const word&) const {
        return {};
    }
    // True when every prime ever appearing in xi(gamma) is covered by
    // infinite_primes/stable_exponents.
    virtual bool spectrum_complete(const word&) const { return false; }
    // Full closed form for xi(gamma) when the family has one.
    virtual std::optional<exact_steinitz> exact_element_order(const word&) const { return {}; }

    // -- restricted (H = Gamma_k) closed forms --------------------------------
    virtual std::optional<factored_int> analytic_restricted_order(const word&, std::uint64_t /*k*/,
                                                                  std::uint64_t /*level*/) const {
        return {};
    }
    virtual std::set<std::uint64_t> restricted_infinite_primes(const word& w, std::uint64_t k) const {
        return k == 0 ? infinite_primes(w) : std::set<std::uint64_t>{};
    }
    virtual std::map<std::uint64_t, std::uint64_t> restricted_stable_exponents(const word& w,
                                                                               std::uint64_t k) const {
        return k == 0 ? stable_exponents(w) : std::map<std::uint64_t, std::uint64_t>{};
    }
    virtual bool restricted_spectrum_complete(const word& w, std::uint64_t k) const {
        return k == 0 ? spectrum_complete(w) : false;
    }
    virtual std::optional<exact_steinitz> restricted_exact_element_order(const word& w,
                                                                         std::uint64_t k) const {
        return k == 0 ? exact_element_order(w) : std::nullopt;
    }

    // Free-form notes surfaced in reports.
    virtual std::vector<std::string> report_notes() const { return {}; }
};

using family_ptr = std::shared_ptr<const chain_family>;

} // namespace otl
