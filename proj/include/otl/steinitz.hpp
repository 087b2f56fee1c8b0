#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "otl/errors.hpp"
#include "otl/factored.hpp"

namespace otl {

// Three-valued answer. Truncation is inherent to computing limits of chains,
// so "inconclusive" is a result, not an error.
enum class tri { yes, no, inconclusive };

inline const char* tri_name(tri t) {
    switch (t) {
        case tri::yes: return "yes";
        case tri::no: return "no";
        case tri::inconclusive: return "inconclusive";
    }
    return "?";
}

// Multiplicity of a prime: a natural number >= 1 or infinity. Zero is never
// stored; absence from a map means exponent 0.
class exponent {
  public:
    static exponent finite(std::uint64_t n) {
        if (n == 0) fail(errc::invariant_violation, "zero exponent is represented by absence");
        exponent e;
        e.n_ = n;
        return e;
    }
    static exponent infinity() {
        exponent e;
        e.n_ = kInf;
        return e;
    }

    bool is_infinite() const { return n_ == kInf; }
    std::uint64_t finite_value() const {
        if (is_infinite()) fail(errc::invariant_violation, "infinite exponent has no finite value");
        return n_;
    }

    bool operator==(const exponent&) const = default;

    std::string str() const { return is_infinite() ? "inf" : std::to_string(n_); }

  private:
    static constexpr std::uint64_t kInf = UINT64_MAX;
    std::uint64_t n_ = 1;
};

// Enumerates (prime, finite exponent) pairs in strictly increasing prime
// order: all primes >= `from` outside `excluded`, with constant exponent.
// The token identifies the rule; equality of types across distinct tokens is
// semi-decidable and reported inconclusive.
struct tail_rule {
    std::uint64_t from = 2;
    std::uint64_t exp = 1;
    std::set<std::uint64_t> excluded;

    std::string token() const {
        std::string t = "const^" + std::to_string(exp) + ":from" + std::to_string(from);
        if (!excluded.empty()) {
            t += ":excl";
            bool first = true;
            for (std::uint64_t p : excluded) {
                t += (first ? "" : ",") + std::to_string(p);
                first = false;
            }
        }
        return t;
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerate(std::size_t count) const {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        std::uint64_t p = from < 2 ? 2 : from;
        while (out.size() < count) {
            if (is_prime(p) && !excluded.count(p)) out.emplace_back(p, exp);
            ++p;
        }
        return out;
    }

    bool contains(std::uint64_t p) const { return p >= from && !excluded.count(p) && is_prime(p); }

    bool operator==(const tail_rule&) const = default;
};

// A Steinitz (supernatural) number: finite part as an explicit prime->exponent
// map, plus an optional infinite tail of finite exponents. Empty explicit map
// and no tail is xi = 1.
class exact_steinitz {
  public:
    exact_steinitz() = default;

    static exact_steinitz one() { return exact_steinitz(); }

    static exact_steinitz of(const factored_int& f) {
        exact_steinitz x;
        for (const auto& [p, e] : f.exponents()) x.set(p, exponent::finite(e));
        return x;
    }

    void set(std::uint64_t p, exponent e) {
        if (!is_prime(p)) fail(errc::invariant_violation, std::to_string(p) + " is not prime");
        explicit_[p] = e;
    }

    void set_tail(tail_rule rule) {
        tail_ = std::move(rule);
        check_tail_disjoint(64);
    }

    const std::map<std::uint64_t, exponent>& explicit_part() const { return explicit_; }
    const std::optional<tail_rule>& tail() const { return tail_; }

    bool is_one() const { return explicit_.empty() && !tail_; }

    // chi(p) restricted to what is explicitly stored or tail-covered.
    std::optional<exponent> chi(std::uint64_t p) const {
        auto it = explicit_.find(p);
        if (it != explicit_.end()) return it->second;
        if (tail_ && tail_->contains(p)) return exponent::finite(tail_->exp);
        return std::nullopt;
    }

    // Multiplication by a finite integer adds to finitely many exponents.
    exact_steinitz times(const factored_int& n) const {
        exact_steinitz r = *this;
        for (const auto& [p, e] : n.exponents()) {
            auto it = r.explicit_.find(p);
            if (it == r.explicit_.end()) {
                std::uint64_t base = (r.tail_ && r.tail_->contains(p)) ? r.tail_->exp : 0;
                // Lifting a tail prime into the explicit part keeps the formal
                // product unchanged but would collide with the tail rule, so
                // extend the exclusion set.
                if (r.tail_ && r.tail_->contains(p)) r.tail_->excluded.insert(p);
                r.explicit_[p] = exponent::finite(base + e);
            } else if (!it->second.is_infinite()) {
                it->second = exponent::finite(it->second.finite_value() + e);
            }
        }
        return r;
    }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        for (const auto& [p, e] : explicit_) {
            if (!s.empty()) s += "*";
            s += std::to_string(p) + "^" + e.str();
        }
        if (tail_) {
            if (!s.empty()) s += "*";
            s += "tail(" + tail_->token() + ")";
        }
        return s;
    }

  private:
    void check_tail_disjoint(std::size_t prefix) const {
        if (!tail_) return;
        for (const auto& [p, e] : tail_->enumerate(prefix)) {
            (void)e;
            if (explicit_.count(p))
                fail(errc::invariant_violation,
                     "tail prime " + std::to_string(p) + " collides with explicit part");
        }
    }

    std::map<std::uint64_t, exponent> explicit_;
    std::optional<tail_rule> tail_;
};

// pi / pi_f / pi_inf of Definition 1.2 shape. The sets hold explicitly stored
// primes; an infinite tail is reported through the flag.
struct prime_spectra {
    std::set<std::uint64_t> pi;
    std::set<std::uint64_t> pi_f;
    std::set<std::uint64_t> pi_inf;
    tri pi_f_is_infinite = tri::no;
};

inline prime_spectra spectra(const exact_steinitz& x) {
    prime_spectra s;
    for (const auto& [p, e] : x.explicit_part()) {
        s.pi.insert(p);
        if (e.is_infinite())
            s.pi_inf.insert(p);
        else
            s.pi_f.insert(p);
    }
    s.pi_f_is_infinite = x.tail() ? tri::yes : tri::no;
    return s;
}

// chi_x(p) = chi_y(p) for all but finitely many p, and the infinite spectra
// agree exactly. Decidable whenever the tails are absent or share a token.
inline tri asymptotically_equivalent(const exact_steinitz& x, const exact_steinitz& y) {
    prime_spectra sx = spectra(x), sy = spectra(y);
    if (sx.pi_inf != sy.pi_inf) return tri::no;
    bool xt = x.tail().has_value(), yt = y.tail().has_value();
    if (xt != yt) return tri::no; // one side certifies infinitely many nonzero exponents
    if (xt && yt && x.tail()->token() != y.tail()->token()) return tri::inconclusive;
    return tri::yes; // finite explicit parts differ at only finitely many primes
}

// Status of one prime in a depth-L truncation.
struct prime_status {
    enum kind_t { stable, certified_infinite, unknown_at_depth } kind = unknown_at_depth;
    std::uint64_t stable_exponent = 0; // meaningful for `stable` only

    static prime_status make_stable(std::uint64_t e) { return {stable, e}; }
    static prime_status make_infinite() { return {certified_infinite, 0}; }
    static prime_status make_unknown() { return {unknown_at_depth, 0}; }

    bool operator==(const prime_status&) const = default;
};

// Depth-L truncation of a Steinitz number: the factored integer
// lcm{m_1...m_l : l <= L} plus per-prime stabilization certificates.
struct steinitz_approx {
    std::uint64_t depth = 0;
    factored_int value;
    std::map<std::uint64_t, prime_status> status;
    // True when a backend certifies that no prime outside `status` can ever
    // appear at deeper levels.
    bool spectrum_complete = false;

    void check_invariants() const {
        for (const auto& [p, st] : status) {
            if (st.kind == prime_status::stable && value.exponent_of(p) != st.stable_exponent)
                fail(errc::invariant_violation,
                     "Stable(" + std::to_string(st.stable_exponent) + ") for prime " +
                         std::to_string(p) + " does not match truncation exponent");
        }
    }
};

// lcm of the partial products of a positive integer sequence, truncated at L.
inline steinitz_approx steinitz_from_sequence(const std::vector<std::uint64_t>& m, std::uint64_t L,
                                              bool complete = false) {
    if (L > m.size()) fail(errc::invalid_sequence, "depth exceeds sequence length");
    steinitz_approx a;
    a.depth = L;
    factored_int prefix;
    for (std::uint64_t i = 0; i < L; ++i) {
        if (m[i] < 1) fail(errc::invalid_sequence, "sequence entries must be >= 1");
        prefix = prefix * factored_int::of(m[i]);
        a.value = lcm(a.value, prefix);
    }
    for (const auto& [p, e] : a.value.exponents())
        a.status[p] = complete ? prime_status::make_stable(e) : prime_status::make_unknown();
    a.spectrum_complete = complete;
    a.check_invariants();
    return a;
}

// ---------------------------------------------------------------------------
// Types: asymptotic equivalence classes of Steinitz numbers.
// ---------------------------------------------------------------------------

// Decision-ready representative of a type: the infinite spectrum, a
// description of the finite-part tail (none = eventually zero), and whether
// the data is exact or a depth-L truncation.
struct type_descriptor {
    std::set<std::uint64_t> inf_spectrum;
    std::optional<tail_rule> finite_tail;       // nullopt = EventuallyZero
    std::optional<std::uint64_t> truncated_at;  // nullopt = Certified

    bool certified() const { return !truncated_at.has_value(); }

    static type_descriptor trivial() { return {}; } // the type [1]

    bool is_trivial_certified() const {
        return certified() && inf_spectrum.empty() && !finite_tail;
    }

    std::string str() const {
        std::string body;
        if (inf_spectrum.empty() && !finite_tail) {
            body = "1";
        } else {
            if (!inf_spectrum.empty()) {
                if (inf_spectrum.size() == 1) {
                    body = std::to_string(*inf_spectrum.begin()) + "^inf";
                } else {
                    body = "(";
                    bool first = true;
                    for (std::uint64_t p : inf_spectrum) {
                        body += (first ? "" : "*") + std::to_string(p);
                        first = false;
                    }
                    body += ")^inf";
                }
            }
            if (finite_tail) body += (body.empty() ? "" : "*") + ("tail(" + finite_tail->token() + ")");
        }
        std::string s = "[" + body + "]";
        if (truncated_at) s += "@L" + std::to_string(*truncated_at);
        return s;
    }

    // Deterministic ordering for report output.
    friend bool operator<(const type_descriptor& a, const type_descriptor& b) {
        if (a.inf_spectrum != b.inf_spectrum) return a.inf_spectrum < b.inf_spectrum;
        std::string ta = a.finite_tail ? a.finite_tail->token() : std::string();
        std::string tb = b.finite_tail ? b.finite_tail->token() : std::string();
        if (ta != tb) return ta < tb;
        if (a.truncated_at.has_value() != b.truncated_at.has_value())
            return b.truncated_at.has_value(); // certified sorts first
        return a.truncated_at.value_or(0) < b.truncated_at.value_or(0);
    }
    bool operator==(const type_descriptor&) const = default;
};

// The type of an exact Steinitz number. Finite explicit exponents are
// absorbed by asymptotic equivalence and dropped; the tail's exclusion set is
// canonicalized so that lifting finitely many primes out of the tail (as
// multiplication by an integer does) leaves the descriptor unchanged.
inline type_descriptor type_of(const exact_steinitz& x) {
    type_descriptor t;
    for (const auto& [p, e] : x.explicit_part())
        if (e.is_infinite()) t.inf_spectrum.insert(p);
    t.finite_tail = x.tail();
    if (t.finite_tail) {
        std::set<std::uint64_t> kept;
        for (std::uint64_t p : t.finite_tail->excluded)
            if (p >= t.finite_tail->from && is_prime(p) && !x.explicit_part().count(p))
                kept.insert(p);
        t.finite_tail->excluded = std::move(kept);
    }
    return t;
}

// The type visible in a truncation: certified-infinite primes form the
// spectrum; certification holds only when every prime's fate is known.
inline type_descriptor type_of(const steinitz_approx& a) {
    type_descriptor t;
    bool all_known = a.spectrum_complete;
    for (const auto& [p, st] : a.status) {
        if (st.kind == prime_status::certified_infinite) t.inf_spectrum.insert(p);
        if (st.kind == prime_status::unknown_at_depth) all_known = false;
    }
    if (!all_known) t.truncated_at = a.depth;
    return t;
}

namespace detail {

inline tri combine_tails_mul(const std::optional<tail_rule>& a, const std::optional<tail_rule>& b,
                             std::optional<tail_rule>& out) {
    if (!a && !b) {
        out = std::nullopt;
        return tri::yes;
    }
    if (a && !b) {
        out = a;
        return tri::yes;
    }
    if (!a && b) {
        out = b;
        return tri::yes;
    }
    if (a->token() != b->token()) return tri::inconclusive;
    out = *a;
    out->exp = a->exp + b->exp;
    return tri::yes;
}

inline tri combine_tails_minmax(const std::optional<tail_rule>& a, const std::optional<tail_rule>& b,
                                bool take_max, std::optional<tail_rule>& out) {
    if (!a && !b) {
        out = std::nullopt;
        return tri::yes;
    }
    if (!a || !b) { // min with eventually-zero is eventually zero, max keeps the rule
        out = take_max ? (a ? a : b) : std::nullopt;
        return tri::yes;
    }
    if (a->token() != b->token()) return tri::inconclusive;
    out = *a;
    out->exp = take_max ? std::max(a->exp, b->exp) : std::min(a->exp, b->exp);
    return tri::yes;
}

inline std::optional<std::uint64_t> combine_truncation(const type_descriptor& a, const type_descriptor& b) {
    if (a.certified() && b.certified()) return std::nullopt;
    std::uint64_t d = UINT64_MAX;
    if (a.truncated_at) d = std::min(d, *a.truncated_at);
    if (b.truncated_at) d = std::min(d, *b.truncated_at);
    return d;
}

} // namespace detail

// Result of a type-algebra operation; inconclusive when incomparable tail
// tokens prevent a definitive answer.
struct type_result {
    std::optional<type_descriptor> value;
    bool inconclusive() const { return !value.has_value(); }
};

// Product: pointwise sum of characteristic functions.
inline type_result type_mul(const type_descriptor& a, const type_descriptor& b) {
    type_descriptor r;
    std::set_union(a.inf_spectrum.begin(), a.inf_spectrum.end(), b.inf_spectrum.begin(),
                   b.inf_spectrum.end(), std::inserter(r.inf_spectrum, r.inf_spectrum.begin()));
    if (detail::combine_tails_mul(a.finite_tail, b.finite_tail, r.finite_tail) != tri::yes)
        return {};
    r.truncated_at = detail::combine_truncation(a, b);
    return {r};
}

// Join: pointwise max.
inline type_result type_join(const type_descriptor& a, const type_descriptor& b) {
    type_descriptor r;
    std::set_union(a.inf_spectrum.begin(), a.inf_spectrum.end(), b.inf_spectrum.begin(),
                   b.inf_spectrum.end(), std::inserter(r.inf_spectrum, r.inf_spectrum.begin()));
    if (detail::combine_tails_minmax(a.finite_tail, b.finite_tail, true, r.finite_tail) != tri::yes)
        return {};
    // Tail primes swallowed by an infinite exponent stay infinite; pointwise
    // max over the finitely many overlaps does not change the class.
    r.truncated_at = detail::combine_truncation(a, b);
    return {r};
}

// Intersection: pointwise min.
inline type_result type_meet(const type_descriptor& a, const type_descriptor& b) {
    type_descriptor r;
    std::set_intersection(a.inf_spectrum.begin(), a.inf_spectrum.end(), b.inf_spectrum.begin(),
                          b.inf_spectrum.end(), std::inserter(r.inf_spectrum, r.inf_spectrum.begin()));
    // A lone tail meets zero off the other side's finite infinite spectrum,
    // so only finitely many primes survive and the result tail is eventually
    // zero; two tails need a shared token.
    if (detail::combine_tails_minmax(a.finite_tail, b.finite_tail, false, r.finite_tail) != tri::yes)
        return {};
    r.truncated_at = detail::combine_truncation(a, b);
    return {r};
}

// tau <= tau' via representatives: chi(p) <= chi'(p) for all but finitely
// many primes, with infinite exponents dominated everywhere.
inline tri type_leq(const type_descriptor& a, const type_descriptor& b) {
    if (!a.certified() || !b.certified()) return tri::inconclusive;
    if (!std::includes(b.inf_spectrum.begin(), b.inf_spectrum.end(), a.inf_spectrum.begin(),
                       a.inf_spectrum.end()))
        return tri::no;
    if (!a.finite_tail) return tri::yes;
    if (!b.finite_tail) return tri::no; // infinitely many positive exponents vs eventually zero
    if (a.finite_tail->token() != b.finite_tail->token()) return tri::inconclusive;
    return a.finite_tail->exp <= b.finite_tail->exp ? tri::yes : tri::no;
}

// Equality of types on the decidable fragment. Certified pairs decide unless
// tail tokens differ; truncated data answers only when certainty is possible.
inline tri type_equal(const type_descriptor& a, const type_descriptor& b) {
    if (a.certified() && b.certified()) {
        bool tails_same_shape = a.finite_tail.has_value() == b.finite_tail.has_value();
        if (a.inf_spectrum != b.inf_spectrum) return tri::no;
        if (!tails_same_shape) return tri::no;
        if (!a.finite_tail) return tri::yes;
        if (a.finite_tail->token() == b.finite_tail->token()) return tri::yes;
        return tri::inconclusive;
    }
    // A certified-infinite prime present on one side and provably absent on
    // the other would be a witness, but a truncated side can always grow.
    if (a == b) return tri::yes; // identical truncated data: equal up to depth
    return tri::inconclusive;
}

} // namespace otl
