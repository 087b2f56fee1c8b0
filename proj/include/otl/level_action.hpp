#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "otl/errors.hpp"
#include "otl/permutation.hpp"

namespace otl {

// The permutation action of the generators on the finite coset space
// X_l = Gamma/Gamma_l, together with the equivariant projection to X_{l-1}.
struct level_action {
    std::uint64_t level = 0;
    std::uint32_t size = 1;
    std::map<std::string, permutation> generators;
    std::uint32_t base = 0;                // index of the coset e*Gamma_l
    std::vector<std::uint32_t> project;    // X_l -> X_{l-1}; empty at level 0

    // Checks the chain invariants against the previous level: transitivity,
    // equivariance of the projection, base nesting, and equal fiber sizes.
    void validate(const level_action* prev) const {
        for (const auto& [name, perm] : generators)
            if (perm.size() != size)
                fail(errc::invariant_violation, "generator " + name + " has wrong degree");
        // transitivity via orbit of the base point
        std::vector<bool> seen(size, false);
        std::vector<std::uint32_t> stack{base};
        seen[base] = true;
        std::uint32_t reached = 1;
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            for (const auto& [name, perm] : generators) {
                for (std::uint32_t y : {perm(x), perm.inverse()(x)}) {
                    if (!seen[y]) {
                        seen[y] = true;
                        ++reached;
                        stack.push_back(y);
                    }
                }
            }
        }
        if (reached != size) fail(errc::invariant_violation, "level action is not transitive");
        if (level == 0) {
            if (!project.empty()) fail(errc::invariant_violation, "level 0 has no projection");
            return;
        }
        if (!prev) return;
        if (project.size() != size) fail(errc::invariant_violation, "projection has wrong domain");
        if (project[base] != prev->base)
            fail(errc::invariant_violation, "projection does not nest base cosets");
        std::vector<std::uint32_t> fiber_size(prev->size, 0);
        for (std::uint32_t x = 0; x < size; ++x) {
            if (project[x] >= prev->size) fail(errc::invariant_violation, "projection out of range");
            ++fiber_size[project[x]];
        }
        for (std::uint32_t c : fiber_size)
            if (c != fiber_size[0]) fail(errc::invariant_violation, "projection fibers differ in size");
        for (const auto& [name, perm] : generators) {
            auto it = prev->generators.find(name);
            if (it == prev->generators.end())
                fail(errc::invariant_violation, "generator sets differ between levels");
            for (std::uint32_t x = 0; x < size; ++x)
                if (project[perm(x)] != it->second(project[x]))
                    fail(errc::invariant_violation, "projection is not equivariant for " + name);
        }
    }
};

} // namespace otl
