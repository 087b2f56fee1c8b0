#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "otl/errors.hpp"
#include "otl/factored.hpp"
#include "otl/permutation.hpp"

namespace otl {

// Deterministic base-and-strong-generating-set order computation. Bases are
// the smallest moved points, orbits grow breadth-first in generator order,
// and every Schreier generator is sifted, so the result is exact and
// reproducible. Transversals are materialized per layer; callers bound the
// degree (see chain_engine's Schreier cap).
class stabilizer_chain {
  public:
    stabilizer_chain(std::uint32_t degree, const std::vector<permutation>& generators)
        : n_(degree) {
        for (const auto& g : generators) {
            if (g.size() != n_) fail(errc::invariant_violation, "generator degree mismatch");
            if (!g.is_identity()) seed_.push_back(g);
        }
        if (seed_.empty()) return;
        new_layer(min_moved(seed_.front()));
        for (const auto& g : seed_) add_generator(0, g);
        complete(0);
    }

    factored_int order() const {
        factored_int o;
        for (const auto& L : layers_)
            o = o * factored_int::of(L.orbit.size());
        return o;
    }

  private:
    struct layer {
        std::uint32_t base = 0;
        std::vector<permutation> gens;
        std::vector<std::uint32_t> orbit;          // discovery order, orbit[0] == base
        std::vector<std::int32_t> slot;            // point -> index into orbit, -1 outside
        std::vector<permutation> transversal;      // u[slot[x]](base) == x
    };

    std::uint32_t min_moved(const permutation& g) const {
        for (std::uint32_t i = 0; i < n_; ++i)
            if (g(i) != i) return i;
        fail(errc::invariant_violation, "identity has no moved point");
    }

    void new_layer(std::uint32_t base) {
        layer L;
        L.base = base;
        L.slot.assign(n_, -1);
        layers_.push_back(std::move(L));
        rebuild_orbit(layers_.size() - 1);
    }

    void rebuild_orbit(std::size_t i) {
        layer& L = layers_[i];
        L.orbit.clear();
        L.slot.assign(n_, -1);
        L.transversal.clear();
        L.orbit.push_back(L.base);
        L.slot[L.base] = 0;
        L.transversal.push_back(permutation(n_));
        std::deque<std::uint32_t> queue{L.base};
        while (!queue.empty()) {
            std::uint32_t x = queue.front();
            queue.pop_front();
            const permutation& ux = L.transversal[L.slot[x]];
            for (const auto& g : L.gens) {
                std::uint32_t y = g(x);
                if (L.slot[y] < 0) {
                    L.slot[y] = static_cast<std::int32_t>(L.orbit.size());
                    L.orbit.push_back(y);
                    L.transversal.push_back(g * ux);
                    queue.push_back(y);
                }
            }
        }
    }

    void add_generator(std::size_t i, const permutation& g) {
        layers_[i].gens.push_back(g);
        rebuild_orbit(i);
    }

    // Strips g through layers [from..); returns the residue and the layer
    // index where sifting failed (layers_.size() if it fixed every base).
    std::pair<permutation, std::size_t> strip(permutation g, std::size_t from) const {
        for (std::size_t i = from; i < layers_.size(); ++i) {
            const layer& L = layers_[i];
            std::uint32_t x = g(L.base);
            if (L.slot[x] < 0) return {std::move(g), i};
            g = L.transversal[L.slot[x]].inverse() * g;
        }
        return {std::move(g), layers_.size()};
    }

    // Verifies Schreier's condition at layer i, pushing residues deeper and
    // re-verifying the affected layers until everything sifts to identity.
    // layers_ may reallocate mid-pass, so elements are copied, not referenced.
    void complete(std::size_t i) {
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t oi = 0; oi < layers_[i].orbit.size() && !dirty; ++oi) {
                std::uint32_t x = layers_[i].orbit[oi];
                const permutation ux = layers_[i].transversal[oi];
                for (std::size_t gi = 0; gi < layers_[i].gens.size() && !dirty; ++gi) {
                    const permutation g = layers_[i].gens[gi];
                    std::uint32_t y = g(x);
                    permutation sg =
                        layers_[i].transversal[layers_[i].slot[y]].inverse() * (g * ux);
                    if (sg.is_identity()) continue;
                    auto [res, j] = strip(std::move(sg), i + 1);
                    if (res.is_identity()) continue;
                    if (j == layers_.size()) new_layer(min_moved(res));
                    for (std::size_t k = i + 1; k <= j && k < layers_.size(); ++k)
                        add_generator(k, res);
                    for (std::size_t k = std::min(j, layers_.size() - 1); k > i; --k) complete(k);
                    dirty = true; // deeper layers changed; re-run this one
                }
            }
        }
    }

    std::uint32_t n_;
    std::vector<permutation> seed_;
    std::vector<layer> layers_;
};

// Order of the permutation group generated by `generators` on `degree`
// points. Single-generator groups are cyclic and read off cycle structure.
inline factored_int permutation_group_order(std::uint32_t degree,
                                            const std::vector<permutation>& generators) {
    std::vector<permutation> nontrivial;
    for (const auto& g : generators)
        if (!g.is_identity()) nontrivial.push_back(g);
    if (nontrivial.empty()) return factored_int::one();
    if (nontrivial.size() == 1) return permutation_order(nontrivial.front());
    return stabilizer_chain(degree, nontrivial).order();
}

} // namespace otl
