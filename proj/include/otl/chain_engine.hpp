#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "otl/chain_family.hpp"
#include "otl/errors.hpp"
#include "otl/factored.hpp"
#include "otl/level_action.hpp"
#include "otl/permutation.hpp"
#include "otl/schreier.hpp"
#include "otl/steinitz.hpp"
#include "otl/word.hpp"

namespace otl {

// H = Gamma_k, optionally conjugated: H = delta Gamma_k delta^{-1}. The base
// point at level k is delta . (e Gamma_k).
struct restricted_context {
    std::uint64_t k = 0;
    word conjugator;
};

// The image of a word in Sym(X_l).
inline permutation permutation_of(const word& w, const level_action& act) {
    permutation acc(act.size);
    for (const auto& l : w.letters) {
        auto it = act.generators.find(l.name);
        if (it == act.generators.end())
            fail(errc::unknown_generator, "generator '" + l.name + "' is not defined");
        acc = acc * it->second.power(l.exp);
    }
    return acc;
}

struct element_invariants {
    std::vector<factored_int> level_orders; // levels first..L
    std::uint64_t first_level = 1;
    steinitz_approx approx;
    std::optional<exact_steinitz> exact;
    type_descriptor type;
};

struct word_record {
    std::string text;
    factored_int xi_value;
    type_descriptor type;
};

struct typeset_entry {
    type_descriptor type;
    std::vector<std::string> representatives;
    bool inconclusive_merge = false;
};

struct typeset_report {
    std::string family;
    std::uint64_t depth = 0;
    std::uint64_t max_word_length = 0;
    std::optional<std::uint64_t> restrict_level;
    std::string restrict_conjugator;
    std::vector<word_record> words;
    std::vector<typeset_entry> types;
    std::uint64_t skipped_not_in_subgroup = 0;
    std::vector<std::string> notes;
};

struct lagrange_report {
    bool passed = true;
    std::uint64_t fail_level = 0;
    // per level: element order, group image order, index
    std::vector<std::array<factored_int, 3>> rows;
};

enum class commensurability { equal_up_to_depth, distinct, inconclusive };

struct commensurability_result {
    commensurability verdict = commensurability::inconclusive;
    std::string witness;
};

class chain_engine {
  public:
    explicit chain_engine(family_ptr fam) : fam_(std::move(fam)) {}

    const chain_family& family() const { return *fam_; }

    // Brute-force cross-checks of analytic values run at levels with at most
    // this many points; pure brute force is bounded by point_bound().
    std::uint64_t cross_check_cap = 50'000;
    // Multi-generator Schreier-Sims is quadratic in the degree; cap it.
    std::uint64_t schreier_cap = 5'000;

    const level_action& action(std::uint64_t level) const {
        if (auto it = actions_.find(level); it != actions_.end()) return it->second;
        level_action act = fam_->action_at(level);
        const level_action* prev = nullptr;
        if (level > 0)
            if (auto pit = actions_.find(level - 1); pit != actions_.end()) prev = &pit->second;
        act.validate(prev);
        return actions_.emplace(level, std::move(act)).first->second;
    }

    std::optional<std::uint64_t> tractable_size(std::uint64_t level) const {
        if (level > fam_->max_level())
            fail(errc::depth_too_large,
                 "level " + std::to_string(level) + " exceeds the chain's descent");
        try {
            std::uint64_t n = fam_->index_at(level);
            if (n > point_bound()) return std::nullopt;
            return n;
        } catch (const error& e) {
            if (e.code() == errc::depth_too_large) return std::nullopt;
            throw;
        }
    }

    // #(<gamma>/(<gamma> cap C_l)): the order of the induced permutation of
    // X_l, cross-checked against the family's closed form when present.
    factored_int element_order_mod_core(const word& w, std::uint64_t level) const {
        if (level == 0) return factored_int::one();
        std::optional<factored_int> analytic = fam_->analytic_element_order(w, level);
        std::optional<std::uint64_t> size = tractable_size(level);
        std::optional<factored_int> brute;
        if (size && (!analytic || *size <= cross_check_cap))
            brute = permutation_order(permutation_of(w, action(level)));
        if (analytic && brute && !(*analytic == *brute))
            fail(errc::backend_disagreement,
                 "element order at level " + std::to_string(level) + ": analytic " +
                     analytic->str() + " vs brute " + brute->str());
        if (analytic) return *analytic;
        if (brute) return *brute;
        fail(errc::depth_too_large, "no backend can compute level " + std::to_string(level));
    }

    // #(Gamma/C_l): order of the permutation group generated by the images.
    factored_int group_image_order(std::uint64_t level) const {
        if (level == 0) return factored_int::one();
        std::optional<factored_int> analytic = fam_->analytic_core_order(level);
        std::optional<std::uint64_t> size = tractable_size(level);
        std::optional<factored_int> brute;
        if (size && (!analytic || *size <= cross_check_cap)) {
            const level_action& act = action(level);
            std::vector<permutation> gens;
            for (const auto& [name, g] : act.generators)
                if (!g.is_identity()) gens.push_back(g);
            if (gens.size() <= 1 || *size <= schreier_cap)
                brute = permutation_group_order(act.size, gens);
        }
        if (analytic && brute && !(*analytic == *brute))
            fail(errc::backend_disagreement, "core order at level " + std::to_string(level) +
                                                 ": analytic " + analytic->str() + " vs brute " +
                                                 brute->str());
        if (analytic) return *analytic;
        if (brute) return *brute;
        fail(errc::depth_too_large,
             "group image order out of reach at level " + std::to_string(level));
    }

    factored_int index_of(std::uint64_t level) const {
        if (auto a = fam_->analytic_index(level)) return *a;
        std::optional<std::uint64_t> size = tractable_size(level);
        if (!size) fail(errc::depth_too_large, "index out of reach at level " + std::to_string(level));
        return factored_int::of(*size);
    }

    // xi(gamma) truncated at depth L, with per-prime certificates and the
    // certified type.
    element_invariants element_steinitz_order(const word& w, std::uint64_t L) const {
        return compute(w, L, std::nullopt);
    }

    // xi^H(gamma) for H a (conjugated) chain level.
    element_invariants restricted_order(const word& w, const restricted_context& ctx,
                                        std::uint64_t L) const {
        return compute(w, L, ctx);
    }

    lagrange_report lagrange_divisibility_check(const word& w, std::uint64_t L) const {
        lagrange_report rep;
        for (std::uint64_t l = 1; l <= L; ++l) {
            factored_int m = element_order_mod_core(w, l);
            factored_int g = group_image_order(l);
            factored_int idx = index_of(l);
            rep.rows.push_back({m, g, idx});
            if (!m.divides(g) || !idx.divides(g)) {
                rep.passed = false;
                rep.fail_level = l;
                return rep;
            }
        }
        return rep;
    }

    // Deterministic sample: reduced words in graded shortlex order over the
    // signed generators.
    std::vector<word> enumerate_words(std::uint64_t max_len) const {
        std::vector<std::pair<std::string, int>> alphabet;
        for (const auto& g : fam_->generator_names()) {
            alphabet.emplace_back(g, +1);
            alphabet.emplace_back(g, -1);
        }
        std::vector<word> out;
        std::vector<std::vector<std::size_t>> frontier{{}};
        out.push_back(word{});
        for (std::uint64_t len = 1; len <= max_len; ++len) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& seq : frontier) {
                for (std::size_t a = 0; a < alphabet.size(); ++a) {
                    if (!seq.empty()) {
                        const auto& prev = alphabet[seq.back()];
                        const auto& cur = alphabet[a];
                        if (prev.first == cur.first && prev.second != cur.second)
                            continue; // not freely reduced
                    }
                    auto s = seq;
                    s.push_back(a);
                    word w;
                    for (std::size_t idx : s) w.append(alphabet[idx].first, alphabet[idx].second);
                    out.push_back(std::move(w));
                    next.push_back(std::move(s));
                }
            }
            frontier = std::move(next);
        }
        return out;
    }

    bool in_restricted_subgroup(const word& w, const restricted_context& ctx) const {
        if (ctx.k == 0) return true;
        const level_action& act = action(ctx.k);
        std::uint32_t base = permutation_of(ctx.conjugator, act)(act.base);
        return permutation_of(w, act)(base) == base;
    }

    typeset_report typeset_sample(std::uint64_t max_word_length, std::uint64_t L,
                                  std::optional<restricted_context> ctx = std::nullopt) const {
        if (ctx && L < ctx->k)
            fail(errc::invalid_config, "depth must be at least the restriction level");
        typeset_report rep;
        rep.family = fam_->name();
        rep.depth = L;
        rep.max_word_length = max_word_length;
        if (ctx) {
            rep.restrict_level = ctx->k;
            rep.restrict_conjugator = ctx->conjugator.str();
        }
        rep.notes = fam_->report_notes();
        for (const word& w : enumerate_words(max_word_length)) {
            if (ctx && !in_restricted_subgroup(w, *ctx)) {
                ++rep.skipped_not_in_subgroup;
                continue;
            }
            element_invariants inv = compute(w, L, ctx);
            word_record rec;
            rec.text = w.str();
            rec.xi_value = inv.approx.value;
            rec.type = inv.type;
            rep.words.push_back(rec);
            merge_type(rep.types, inv.type, rec.text);
        }
        std::sort(rep.types.begin(), rep.types.end(),
                  [](const typeset_entry& a, const typeset_entry& b) { return a.type < b.type; });
        return rep;
    }

    // Never over-claims: representatives that cannot be proved equal stay
    // side by side with an inconclusive_merge flag.
    static void merge_type(std::vector<typeset_entry>& entries, const type_descriptor& t,
                           const std::string& rep) {
        std::vector<std::size_t> maybes;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            tri eq = type_equal(entries[i].type, t);
            if (eq == tri::yes) {
                entries[i].representatives.push_back(rep);
                return;
            }
            if (eq == tri::inconclusive) maybes.push_back(i);
        }
        typeset_entry e;
        e.type = t;
        e.representatives.push_back(rep);
        e.inconclusive_merge = !maybes.empty();
        for (std::size_t i : maybes) entries[i].inconclusive_merge = true;
        entries.push_back(std::move(e));
    }

  private:
    element_invariants compute(const word& w, std::uint64_t L,
                               std::optional<restricted_context> ctx) const {
        element_invariants inv;
        std::uint64_t k = ctx ? ctx->k : 0;
        bool conj = ctx && !ctx->conjugator.empty();
        word w_eff = conj ? w.conjugated_by(ctx->conjugator.inverse()) : w;
        if (ctx && !in_restricted_subgroup(w, *ctx))
            fail(errc::not_in_subgroup, "word '" + w.str() + "' does not fix the level-" +
                                            std::to_string(k) + " base point");

        inv.first_level = k == 0 ? 1 : k;
        inv.approx.depth = L;
        for (std::uint64_t l = inv.first_level; l <= L; ++l) {
            factored_int m = k == 0 ? element_order_mod_core(w, l)
                                    : restricted_order_at(w, w_eff, *ctx, l);
            inv.level_orders.push_back(m);
            inv.approx.value = lcm(inv.approx.value, m);
        }

        std::set<std::uint64_t> inf = fam_->restricted_infinite_primes(w_eff, k);
        std::map<std::uint64_t, std::uint64_t> stable = fam_->restricted_stable_exponents(w_eff, k);
        for (const auto& [p, e] : inv.approx.value.exponents()) {
            prime_status st = prime_status::make_unknown();
            if (inf.count(p)) {
                // CertifiedInfinite always rides on a family-issued witness.
                if (k == 0 && !fam_->growth_cert(w_eff, p))
                    fail(errc::invariant_violation,
                         "family marks " + std::to_string(p) + " infinite without a certificate");
                st = prime_status::make_infinite();
            } else if (auto it = stable.find(p); it != stable.end() && it->second == e) {
                st = prime_status::make_stable(e);
            }
            inv.approx.status[p] = st;
        }
        inv.approx.spectrum_complete = fam_->restricted_spectrum_complete(w_eff, k);
        inv.approx.check_invariants();

        inv.exact = fam_->restricted_exact_element_order(w_eff, k);
        if (inv.exact)
            inv.type = type_of(*inv.exact);
        else
            inv.type = type_of(inv.approx);
        return inv;
    }

    // Order of gamma restricted to the fiber of X_l -> X_k over the
    // (conjugated) base point; equals #(<gamma>/C^H_{gamma,l}).
    factored_int restricted_order_at(const word& w, const word& w_eff,
                                     const restricted_context& ctx, std::uint64_t level) const {
        std::optional<factored_int> analytic =
            fam_->analytic_restricted_order(w_eff, ctx.k, level);
        std::optional<std::uint64_t> size = tractable_size(level);
        std::optional<factored_int> brute;
        if (size && (!analytic || *size <= cross_check_cap))
            brute = restricted_brute(w, ctx, level);
        if (analytic && brute && !(*analytic == *brute))
            fail(errc::backend_disagreement,
                 "restricted order at level " + std::to_string(level) + ": analytic " +
                     analytic->str() + " vs brute " + brute->str());
        if (analytic) return *analytic;
        if (brute) return *brute;
        fail(errc::depth_too_large,
             "restricted order out of reach at level " + std::to_string(level));
    }

    factored_int restricted_brute(const word& w, const restricted_context& ctx,
                                  std::uint64_t level) const {
        const level_action& act_k = action(ctx.k);
        std::uint32_t base_k = permutation_of(ctx.conjugator, act_k)(act_k.base);
        const level_action& act = action(level);
        // composite projection X_level -> X_k
        std::vector<std::uint32_t> down(act.size);
        for (std::uint32_t i = 0; i < act.size; ++i) down[i] = i;
        for (std::uint64_t l = level; l > ctx.k; --l) {
            const level_action& a = action(l);
            for (std::uint32_t i = 0; i < act.size; ++i) down[i] = a.project[down[i]];
        }
        permutation g = permutation_of(w, act);
        std::vector<std::uint32_t> fiber;
        for (std::uint32_t i = 0; i < act.size; ++i)
            if (down[i] == base_k) fiber.push_back(i);
        // cycle lengths within the fiber
        std::set<std::uint32_t> fiber_set(fiber.begin(), fiber.end());
        std::set<std::uint32_t> seen;
        factored_int ord;
        for (std::uint32_t start : fiber) {
            if (seen.count(start)) continue;
            std::uint64_t len = 0;
            std::uint32_t x = start;
            do {
                if (!fiber_set.count(x))
                    fail(errc::invariant_violation, "fiber is not invariant under the word");
                seen.insert(x);
                ++len;
                x = g(x);
            } while (x != start);
            if (len > 1) ord = lcm(ord, factored_int::of(len));
        }
        return ord;
    }

    family_ptr fam_;
    mutable std::map<std::uint64_t, level_action> actions_;
};

// Set comparison of two sampled typesets; `distinct` needs a type provably in
// one report and provably different from every type of the other.
inline commensurability_result commensurable(const typeset_report& a, const typeset_report& b) {
    commensurability_result res;
    bool all_matched = true;
    bool any_inconclusive = false;
    auto check = [&](const typeset_report& from, const typeset_report& to,
                     const char* side) -> bool {
        for (const auto& e : from.types) {
            bool matched = false;
            bool provably_absent = true;
            for (const auto& f : to.types) {
                tri eq = type_equal(e.type, f.type);
                if (eq == tri::yes) {
                    matched = true;
                    provably_absent = false;
                    break;
                }
                if (eq == tri::inconclusive) provably_absent = false;
            }
            if (matched) continue;
            all_matched = false;
            if (provably_absent) {
                res.verdict = commensurability::distinct;
                res.witness = std::string(side) + " realizes " + e.type.str() +
                              " which is provably absent from the other sample";
                return false;
            }
            any_inconclusive = true;
        }
        return true;
    };
    if (!check(a, b, "first")) return res;
    if (!check(b, a, "second")) return res;
    if (all_matched) {
        res.verdict = commensurability::equal_up_to_depth;
    } else {
        res.verdict = commensurability::inconclusive;
        (void)any_inconclusive;
    }
    return res;
}

} // namespace otl
