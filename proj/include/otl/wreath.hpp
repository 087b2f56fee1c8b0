#pragma once

#include <algorithm>
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
#include "otl/steinitz.hpp"
#include "otl/word.hpp"

namespace otl {

// Elements of a self-similar group: freely reduced words over the states,
// stored as signed 1-based state indices (negative = inverse).
using automaton_element = std::vector<std::int32_t>;

struct vertex_path {
    std::vector<std::uint32_t> symbols;
};

// Budget for the order algorithms; exhaustion yields UnknownAtBudget, never a
// wrong claim.
struct order_budget {
    std::uint64_t max_level = 48;
    std::uint64_t cert_depth = 20;
    std::uint64_t max_words = 200000;
    std::uint64_t max_power_letters = 250000;
};

struct order_result {
    enum kind_t { finite, infinite_certified, unknown_at_budget } kind = unknown_at_budget;
    factored_int order;             // finite order
    factored_int loop_multiplier;   // product of cycle lengths around the loop
    factored_int entry_multiplier;  // cycle lengths from the element to the loop
    std::uint64_t anchor_depth = 0; // levels from the element to the loop anchor
    std::uint64_t loop_period = 0;  // levels around the loop
    std::string witness;            // the self-reproducing reduced word
};

// A group acting on the d-ary rooted tree by wreath recursion: each state has
// a root permutation and d section words. Words act on {0..d-1}* by
// w(x u) = root(w)(x) . section(w,x)(u).
class wreath_recursion {
  public:
    wreath_recursion(std::uint32_t arity, std::vector<std::string> names,
                     std::vector<permutation> roots,
                     std::vector<std::vector<automaton_element>> sections)
        : d_(arity), names_(std::move(names)), roots_(std::move(roots)),
          sections_(std::move(sections)) {
        if (d_ < 2) fail(errc::invalid_config, "arity must be >= 2");
        if (roots_.size() != names_.size() || sections_.size() != names_.size())
            fail(errc::invalid_config, "state table sizes disagree");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (roots_[i].size() != d_) fail(errc::invalid_config, "root permutation has wrong degree");
            if (sections_[i].size() != d_) fail(errc::invalid_config, "need one section per letter");
            for (const auto& sec : sections_[i])
                for (std::int32_t s : sec)
                    if (s == 0 || static_cast<std::size_t>(s < 0 ? -s : s) > names_.size())
                        fail(errc::invalid_config, "section references unknown state");
        }
    }

    std::uint32_t arity() const { return d_; }
    const std::vector<std::string>& state_names() const { return names_; }

    std::int32_t state_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<std::int32_t>(i + 1);
        fail(errc::unknown_generator, "state '" + name + "' is not defined");
    }

    static automaton_element reduce(const automaton_element& w) {
        automaton_element out;
        for (std::int32_t s : w) {
            if (!out.empty() && out.back() == -s)
                out.pop_back();
            else
                out.push_back(s);
        }
        return out;
    }

    static automaton_element inverse(const automaton_element& w) {
        automaton_element out;
        for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
        return out;
    }

    automaton_element element_of(const word& w) const {
        automaton_element e;
        for (const auto& l : w.letters) {
            std::int32_t s = state_index(l.name);
            std::int64_t n = l.exp;
            for (std::int64_t i = 0, cnt = n < 0 ? -n : n; i < cnt; ++i)
                e.push_back(n < 0 ? -s : s);
        }
        return reduce(e);
    }

    permutation root_perm(const automaton_element& w) const {
        permutation acc(d_);
        for (std::int32_t s : w)
            acc = acc * (s > 0 ? roots_[s - 1] : roots_[-s - 1].inverse());
        return acc;
    }

    // Section of a single signed letter at tree letter x.
    automaton_element letter_section(std::int32_t s, std::uint32_t x) const {
        if (s > 0) return sections_[s - 1][x];
        std::uint32_t y = roots_[-s - 1].inverse()(x);
        return inverse(sections_[-s - 1][y]);
    }

    // section(w, x): sections of the letters accumulate right-to-left along
    // the moving point, satisfying section(ef,v) = section(e, f.v) section(f, v).
    automaton_element section(const automaton_element& w, std::uint32_t x) const {
        std::vector<automaton_element> parts;
        std::uint32_t cur = x;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            parts.push_back(letter_section(*it, cur));
            cur = (*it > 0 ? roots_[*it - 1] : roots_[-*it - 1].inverse())(cur);
        }
        automaton_element out;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            out.insert(out.end(), it->begin(), it->end());
        return reduce(out);
    }

    automaton_element section_at(const automaton_element& w, const vertex_path& v) const {
        automaton_element cur = reduce(w);
        for (std::uint32_t x : v.symbols) cur = section(cur, x);
        return cur;
    }

    std::uint32_t apply_to_letter(const automaton_element& w, std::uint32_t x) const {
        return root_perm(w)(x);
    }

    vertex_path apply_to_vertex(const automaton_element& w, const vertex_path& v) const {
        vertex_path out;
        automaton_element cur = reduce(w);
        for (std::uint32_t x : v.symbols) {
            out.symbols.push_back(root_perm(cur)(x));
            cur = section(cur, x);
        }
        return out;
    }

    // Permutation of the d^l level-l vertices, most significant symbol first.
    permutation act_on_level(const automaton_element& w, std::uint64_t level) const {
        std::uint64_t n = 1;
        for (std::uint64_t i = 0; i < level; ++i) {
            if (n > point_bound() / d_) fail(errc::depth_too_large, "tree level too large");
            n *= d_;
        }
        std::vector<std::uint32_t> img(n);
        struct frame {
            automaton_element w;
            std::uint64_t src, dst;
            std::uint64_t depth;
        };
        std::vector<frame> stack{{reduce(w), 0, 0, 0}};
        while (!stack.empty()) {
            frame f = std::move(stack.back());
            stack.pop_back();
            std::uint64_t rest = level - f.depth;
            if (f.w.empty()) { // identity below this vertex
                std::uint64_t width = 1;
                for (std::uint64_t i = 0; i < rest; ++i) width *= d_;
                for (std::uint64_t i = 0; i < width; ++i)
                    img[f.src * width + i] = static_cast<std::uint32_t>(f.dst * width + i);
                continue;
            }
            if (f.depth == level) {
                img[f.src] = static_cast<std::uint32_t>(f.dst);
                continue;
            }
            permutation pi = root_perm(f.w);
            for (std::uint32_t x = 0; x < d_; ++x)
                stack.push_back(
                    {section(f.w, x), f.src * d_ + x, f.dst * d_ + pi(x), f.depth + 1});
        }
        return permutation(std::move(img));
    }

    // Order of the level-l action, by the cycle recursion
    // ord_l(w) = lcm_c |c| * ord_{l-1}(prod of sections along c).
    factored_int level_order(const automaton_element& w, std::uint64_t level) const {
        std::map<std::pair<automaton_element, std::uint64_t>, factored_int> memo;
        return level_order_memo(reduce(w), level, memo);
    }

    // Cycle products of the root permutation, anchored at each cycle's
    // smallest point: (w^{|c|})|_x0 = w_{x_{L-1}} ... w_{x_1} w_{x_0}.
    std::vector<std::pair<std::uint64_t, automaton_element>> cycle_products(
        const automaton_element& w) const {
        std::vector<std::pair<std::uint64_t, automaton_element>> out;
        permutation pi = root_perm(w);
        for (const auto& cyc : pi.cycles()) {
            automaton_element prod;
            for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) {
                automaton_element s = section(w, *it);
                prod.insert(prod.end(), s.begin(), s.end());
            }
            out.emplace_back(cyc.size(), reduce(prod));
        }
        return out;
    }

    // True iff w acts trivially on the whole tree: no word reachable through
    // sections has a nontrivial root permutation.
    bool is_identity(const automaton_element& w, const order_budget& budget = {}) const {
        automaton_element start = reduce(w);
        if (start.empty()) return true;
        std::set<automaton_element> seen{start};
        std::vector<automaton_element> todo{start};
        while (!todo.empty()) {
            automaton_element cur = std::move(todo.back());
            todo.pop_back();
            if (!root_perm(cur).is_identity()) return false;
            for (std::uint32_t x = 0; x < d_; ++x) {
                automaton_element s = section(cur, x);
                if (s.empty()) continue;
                if (seen.size() >= budget.max_words)
                    fail(errc::depth_too_large, "identity check exceeded the word budget");
                if (seen.insert(s).second) todo.push_back(s);
            }
        }
        return true;
    }

    // Order of the group element: Finite(n) by plateau-and-verify,
    // InfiniteCertified by a self-reproduction witness (a cycle-product chain
    // that revisits a reduced word with intermediate cycle lengths >= 2), or
    // UnknownAtBudget.
    order_result element_order(const automaton_element& w, const order_budget& budget = {}) const {
        automaton_element e = reduce(w);
        order_result res;
        if (e.empty()) {
            res.kind = order_result::finite;
            res.order = factored_int::one();
            return res;
        }
        if (auto cert = find_self_reproduction(e, budget)) return *cert;

        std::map<std::pair<automaton_element, std::uint64_t>, factored_int> memo;
        factored_int prev;
        for (std::uint64_t l = 1; l <= budget.max_level; ++l) {
            factored_int m = level_order_memo(e, l, memo);
            if (l > 1 && m == prev) {
                std::uint64_t n = m.value_saturating();
                if (n != UINT64_MAX && n * e.size() <= budget.max_power_letters) {
                    automaton_element power;
                    power.reserve(n * e.size());
                    for (std::uint64_t i = 0; i < n; ++i)
                        power.insert(power.end(), e.begin(), e.end());
                    try {
                        if (is_identity(power, budget)) {
                            res.kind = order_result::finite;
                            res.order = m;
                            return res;
                        }
                    } catch (const error& err) {
                        if (err.code() != errc::depth_too_large) throw;
                        break; // budget exhausted during verification
                    }
                }
            }
            prev = m;
            if (memo.size() > budget.max_words) break;
        }
        res.kind = order_result::unknown_at_budget;
        return res;
    }

  private:
    factored_int level_order_memo(
        const automaton_element& w, std::uint64_t level,
        std::map<std::pair<automaton_element, std::uint64_t>, factored_int>& memo) const {
        if (level == 0 || w.empty()) return factored_int::one();
        auto key = std::make_pair(w, level);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        factored_int ord;
        for (const auto& [len, prod] : cycle_products(w)) {
            factored_int sub = level_order_memo(prod, level - 1, memo);
            ord = lcm(ord, factored_int::of(len) * sub);
        }
        memo.emplace(std::move(key), ord);
        return ord;
    }

    // Depth-bounded DFS over cycle products, looking for a reduced word equal
    // to one of its path ancestors with accumulated cycle-length product >= 2.
    // ord_l(e) is then divisible by M0 * M^k * ord(anchor at l - j0 - k*j),
    // which forces the primes of M into the infinite spectrum.
    std::optional<order_result> find_self_reproduction(const automaton_element& e,
                                                       const order_budget& budget) const {
        struct path_entry {
            automaton_element w;
            std::uint64_t depth;
            factored_int mult; // accumulated cycle lengths from the root word
        };
        std::vector<path_entry> path;
        std::map<automaton_element, std::uint64_t> explored; // word -> depth budget already spent
        std::optional<order_result> found;

        auto dfs = [&](auto&& self, const automaton_element& w, std::uint64_t depth,
                       const factored_int& mult) -> void {
            if (found || depth >= budget.cert_depth) return;
            path.push_back({w, depth, mult});
            for (const auto& [len, prod] : cycle_products(w)) {
                if (found) break;
                if (prod.empty()) continue;
                factored_int next_mult = mult * factored_int::of(len);
                for (const auto& anc : path) {
                    if (anc.w != prod) continue;
                    // loop multiplier = next_mult / anc.mult
                    if (!anc.mult.divides(next_mult)) continue;
                    factored_int loop;
                    for (const auto& [p, ex] : next_mult.exponents()) {
                        std::uint64_t base = anc.mult.exponent_of(p);
                        if (ex > base) loop.mul_prime_power(p, ex - base);
                    }
                    if (loop.is_one()) continue; // multiplier 1 proves nothing
                    order_result r;
                    r.kind = order_result::infinite_certified;
                    r.loop_multiplier = loop;
                    r.entry_multiplier = anc.mult;
                    r.anchor_depth = anc.depth;
                    r.loop_period = depth + 1 - anc.depth;
                    r.witness = render(prod);
                    found = r;
                    break;
                }
                if (found) break;
                std::uint64_t remaining = budget.cert_depth - depth - 1;
                auto it = explored.find(prod);
                if (it != explored.end() && it->second >= remaining) continue;
                explored[prod] = remaining;
                if (explored.size() > budget.max_words) break;
                self(self, prod, depth + 1, next_mult);
            }
            path.pop_back();
        };
        dfs(dfs, e, 0, factored_int::one());
        return found;
    }

  public:
    std::string render(const automaton_element& w) const {
        if (w.empty()) return "";
        std::string s;
        for (std::int32_t x : w) {
            s += names_[(x > 0 ? x : -x) - 1];
            if (x < 0) s += "'";
        }
        return s;
    }

  private:
    std::uint32_t d_;
    std::vector<std::string> names_;
    std::vector<permutation> roots_;
    std::vector<std::vector<automaton_element>> sections_;
};

// Primes dividing {2..d}, their count, and the typeset cardinality bound
// 2^{N_d} (equal to the binomial sum).
inline std::vector<std::uint64_t> tree_prime_set(std::uint32_t d) {
    std::vector<std::uint64_t> out;
    for (std::uint32_t p = 2; p <= d; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

inline std::uint64_t typeset_bound(std::uint32_t d) {
    if (d < 2) fail(errc::invalid_config, "arity must be >= 2");
    std::uint64_t n = tree_prime_set(d).size();
    return 1ull << n;
}

// ---------------------------------------------------------------------------
// Built-in catalog.
// ---------------------------------------------------------------------------

inline wreath_recursion adding_machine() {
    // a = (1, a) sigma
    return wreath_recursion(2, {"a"}, {permutation({1, 0})}, {{{}, {1}}});
}

inline wreath_recursion grigorchuk() {
    // a = sigma; b = (a, c); c = (a, d); d = (1, b)
    permutation sigma({1, 0}), id(2);
    return wreath_recursion(2, {"a", "b", "c", "d"}, {sigma, id, id, id},
                            {{{}, {}}, {{1}, {3}}, {{1}, {4}}, {{}, {2}}});
}

inline wreath_recursion basilica() {
    // a = (b, 1) sigma; b = (a, 1)
    permutation sigma({1, 0}), id(2);
    return wreath_recursion(2, {"a", "b"}, {sigma, id}, {{{2}, {}}, {{1}, {}}});
}

inline wreath_recursion gupta_sidki(std::uint32_t p) {
    if (p < 3 || !is_prime(p)) fail(errc::invalid_config, "Gupta-Sidki needs an odd prime");
    std::vector<std::uint32_t> cyc(p);
    for (std::uint32_t i = 0; i < p; ++i) cyc[i] = (i + 1) % p;
    permutation sigma(cyc), id(p);
    std::vector<automaton_element> s_sections(p), t_sections(p);
    t_sections[0] = {1};      // sigma
    t_sections[1] = {-1};     // sigma^{-1}
    t_sections[p - 1] = {2};  // tau
    return wreath_recursion(p, {"s", "t"}, {sigma, id}, {s_sections, t_sections});
}

// ---------------------------------------------------------------------------
// The stabilizer chain of a vertex ray, as a pluggable group chain:
// Gamma_l = Stab(v_l) and X_l is the orbit of v_l (the full level when the
// action is level-transitive).
// ---------------------------------------------------------------------------
class stabilizer_chain_family : public chain_family {
  public:
    stabilizer_chain_family(wreath_recursion w, std::string display_name,
                            vertex_path ray_prefix = {}, order_budget budget = {})
        : w_(std::move(w)), name_(std::move(display_name)), ray_(std::move(ray_prefix)),
          budget_(budget) {}

    std::string name() const override { return name_; }
    const wreath_recursion& recursion() const { return w_; }

    std::vector<std::string> generator_names() const override { return w_.state_names(); }

    std::uint64_t index_at(std::uint64_t level) const override { return orbit_of_level(level).size(); }

    level_action action_at(std::uint64_t level) const override {
        const std::vector<std::uint64_t>& orbit = orbit_of_level(level);
        std::map<std::uint64_t, std::uint32_t> slot;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            slot[orbit[i]] = static_cast<std::uint32_t>(i);
        level_action act;
        act.level = level;
        act.size = static_cast<std::uint32_t>(orbit.size());
        act.base = slot.at(ray_vertex(level));
        for (const auto& name : w_.state_names()) {
            automaton_element g{w_.state_index(name)};
            std::vector<std::uint32_t> img(orbit.size());
            for (std::size_t i = 0; i < orbit.size(); ++i)
                img[i] = slot.at(apply_vertex_rank(g, orbit[i], level));
            act.generators.emplace(name, permutation(std::move(img)));
        }
        if (level > 0) {
            const std::vector<std::uint64_t>& prev = orbit_of_level(level - 1);
            std::map<std::uint64_t, std::uint32_t> pslot;
            for (std::size_t i = 0; i < prev.size(); ++i)
                pslot[prev[i]] = static_cast<std::uint32_t>(i);
            act.project.resize(orbit.size());
            for (std::size_t i = 0; i < orbit.size(); ++i)
                act.project[i] = pslot.at(orbit[i] / w_.arity());
        }
        return act;
    }

    std::optional<factored_int> analytic_element_order(const word& wd, std::uint64_t level) const override {
        return w_.level_order(w_.element_of(wd), level);
    }

    // Memoized group-element order; the certificate hooks all consult it.
    const order_result& order_of(const automaton_element& e) const {
        if (auto it = order_cache_.find(e); it != order_cache_.end()) return it->second;
        return order_cache_.emplace(e, w_.element_order(e, budget_)).first->second;
    }

    std::set<std::uint64_t> infinite_primes(const word& wd) const override {
        const order_result& r = order_of(w_.element_of(wd));
        std::set<std::uint64_t> out;
        if (r.kind == order_result::infinite_certified)
            for (const auto& [p, e] : r.loop_multiplier.exponents()) out.insert(p);
        return out;
    }

    std::map<std::uint64_t, std::uint64_t> stable_exponents(const word& wd) const override {
        const order_result& r = order_of(w_.element_of(wd));
        std::map<std::uint64_t, std::uint64_t> out;
        if (r.kind == order_result::finite)
            for (const auto& [p, e] : r.order.exponents()) out[p] = e;
        return out;
    }

    bool spectrum_complete(const word& wd) const override {
        const order_result& r = order_of(w_.element_of(wd));
        if (r.kind == order_result::finite) return true;
        if (r.kind == order_result::infinite_certified) {
            auto pd = tree_prime_set(w_.arity());
            for (std::uint64_t p : pd)
                if (r.loop_multiplier.exponent_of(p) == 0) return false;
            return true;
        }
        return false;
    }

    std::optional<growth_certificate> growth_cert(const word& wd, std::uint64_t prime) const override {
        const order_result& r = order_of(w_.element_of(wd));
        if (r.kind != order_result::infinite_certified) return {};
        std::uint64_t gain = r.loop_multiplier.exponent_of(prime);
        if (gain == 0) return {};
        growth_certificate c;
        c.prime = prime;
        c.start_level = r.anchor_depth;
        c.period = r.loop_period;
        c.gain = static_cast<std::int64_t>(gain);
        c.base = static_cast<std::int64_t>(r.entry_multiplier.exponent_of(prime));
        return c;
    }

    std::optional<exact_steinitz> exact_element_order(const word& wd) const override {
        return exact_from(order_of(w_.element_of(wd)));
    }
    std::optional<exact_steinitz> restricted_exact_element_order(const word& wd,
                                                                 std::uint64_t k) const override {
        if (k == 0) return exact_element_order(wd);
        automaton_element e = w_.element_of(wd);
        vertex_path vk = ray_prefix(k);
        if (!(w_.apply_to_vertex(e, vk).symbols == vk.symbols)) return std::nullopt;
        return exact_from(order_of(w_.section_at(e, vk)));
    }

    // H = Stab(v_k): the action on the fiber below v_k is the action of the
    // section at v_k, k levels up.
    std::optional<factored_int> analytic_restricted_order(const word& wd, std::uint64_t k,
                                                          std::uint64_t level) const override {
        if (level < k) return factored_int::one();
        automaton_element e = w_.element_of(wd);
        vertex_path vk = ray_prefix(k);
        if (!(w_.apply_to_vertex(e, vk).symbols == vk.symbols)) return {};
        return w_.level_order(w_.section_at(e, vk), level - k);
    }
    std::set<std::uint64_t> restricted_infinite_primes(const word& wd, std::uint64_t k) const override {
        if (k == 0) return infinite_primes(wd);
        automaton_element e = w_.element_of(wd);
        vertex_path vk = ray_prefix(k);
        if (!(w_.apply_to_vertex(e, vk).symbols == vk.symbols)) return {};
        const order_result& r = order_of(w_.section_at(e, vk));
        std::set<std::uint64_t> out;
        if (r.kind == order_result::infinite_certified)
            for (const auto& [p, ex] : r.loop_multiplier.exponents()) out.insert(p);
        return out;
    }
    std::map<std::uint64_t, std::uint64_t> restricted_stable_exponents(const word& wd,
                                                                       std::uint64_t k) const override {
        if (k == 0) return stable_exponents(wd);
        automaton_element e = w_.element_of(wd);
        vertex_path vk = ray_prefix(k);
        if (!(w_.apply_to_vertex(e, vk).symbols == vk.symbols)) return {};
        const order_result& r = order_of(w_.section_at(e, vk));
        std::map<std::uint64_t, std::uint64_t> out;
        if (r.kind == order_result::finite)
            for (const auto& [p, ex] : r.order.exponents()) out[p] = ex;
        return out;
    }
    bool restricted_spectrum_complete(const word& wd, std::uint64_t k) const override {
        if (k == 0) return spectrum_complete(wd);
        automaton_element e = w_.element_of(wd);
        vertex_path vk = ray_prefix(k);
        if (!(w_.apply_to_vertex(e, vk).symbols == vk.symbols)) return false;
        const order_result& r = order_of(w_.section_at(e, vk));
        if (r.kind == order_result::finite) return true;
        if (r.kind == order_result::infinite_certified) {
            for (std::uint64_t p : tree_prime_set(w_.arity()))
                if (r.loop_multiplier.exponent_of(p) == 0) return false;
            return true;
        }
        return false;
    }

  private:
    // Finite order n means xi(gamma) = n exactly (the boundary action is
    // faithful); a witness covering all of P_d pins xi to prod P_d^inf.
    std::optional<exact_steinitz> exact_from(const order_result& r) const {
        if (r.kind == order_result::finite) return exact_steinitz::of(r.order);
        if (r.kind == order_result::infinite_certified) {
            auto pd = tree_prime_set(w_.arity());
            for (std::uint64_t p : pd)
                if (r.loop_multiplier.exponent_of(p) == 0) return std::nullopt;
            exact_steinitz x;
            for (std::uint64_t p : pd) x.set(p, exponent::infinity());
            return x;
        }
        return std::nullopt;
    }

    vertex_path ray_prefix(std::uint64_t level) const {
        vertex_path v;
        for (std::uint64_t i = 0; i < level; ++i)
            v.symbols.push_back(i < ray_.symbols.size() ? ray_.symbols[i] : 0);
        return v;
    }

    std::uint64_t ray_vertex(std::uint64_t level) const {
        std::uint64_t r = 0;
        vertex_path v = ray_prefix(level);
        for (std::uint32_t x : v.symbols) r = r * w_.arity() + x;
        return r;
    }

    std::uint64_t apply_vertex_rank(const automaton_element& e, std::uint64_t rank,
                                    std::uint64_t level) const {
        vertex_path v;
        v.symbols.resize(level);
        std::uint64_t r = rank;
        for (std::uint64_t i = level; i-- > 0;) {
            v.symbols[i] = static_cast<std::uint32_t>(r % w_.arity());
            r /= w_.arity();
        }
        vertex_path img = w_.apply_to_vertex(e, v);
        std::uint64_t out = 0;
        for (std::uint32_t x : img.symbols) out = out * w_.arity() + x;
        return out;
    }

    const std::vector<std::uint64_t>& orbit_of_level(std::uint64_t level) const {
        if (auto it = orbit_cache_.find(level); it != orbit_cache_.end()) return it->second;
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < level; ++i) {
            if (total > point_bound() / w_.arity())
                fail(errc::depth_too_large, "tree level exceeds the point bound");
            total *= w_.arity();
        }
        std::uint64_t start = ray_vertex(level);
        std::set<std::uint64_t> seen{start};
        std::vector<std::uint64_t> todo{start};
        std::vector<automaton_element> gens;
        for (const auto& name : w_.state_names()) {
            gens.push_back({w_.state_index(name)});
            gens.push_back({-w_.state_index(name)});
        }
        while (!todo.empty()) {
            std::uint64_t v = todo.back();
            todo.pop_back();
            for (const auto& g : gens) {
                std::uint64_t u = apply_vertex_rank(g, v, level);
                if (seen.insert(u).second) todo.push_back(u);
            }
        }
        std::vector<std::uint64_t> orbit(seen.begin(), seen.end());
        return orbit_cache_.emplace(level, std::move(orbit)).first->second;
    }

    wreath_recursion w_;
    std::string name_;
    vertex_path ray_;
    order_budget budget_;
    mutable std::map<std::uint64_t, std::vector<std::uint64_t>> orbit_cache_;
    mutable std::map<automaton_element, order_result> order_cache_;
};

} // namespace otl
