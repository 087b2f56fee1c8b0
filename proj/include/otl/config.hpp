#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "otl/chain_family.hpp"
#include "otl/errors.hpp"
#include "otl/families.hpp"
#include "otl/wreath.hpp"
#include "otl/word.hpp"

namespace otl {

using nlohmann::json;

namespace cfg {

inline prime_schedule schedule_from(const json& j) {
    prime_schedule s;
    if (j.contains("finite_primes")) {
        for (const auto& e : j.at("finite_primes")) {
            if (!e.is_array() || e.size() != 2)
                fail(errc::invalid_config, "finite_primes entries are [prime, multiplicity] pairs");
            s.finite.emplace_back(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>());
        }
    }
    if (j.contains("infinite_primes"))
        for (const auto& e : j.at("infinite_primes")) s.infinite.push_back(e.get<std::uint64_t>());
    s.validate();
    return s;
}

inline json schedule_echo(const prime_schedule& s) {
    json j = json::object();
    json fin = json::array();
    for (const auto& [q, n] : s.finite) fin.push_back(json::array({q, n}));
    json inf = json::array();
    for (std::uint64_t p : s.infinite) inf.push_back(p);
    j["finite_primes"] = fin;
    j["infinite_primes"] = inf;
    return j;
}

inline automaton_element section_from(const std::string& text, const wreath_recursion& w) {
    return w.element_of(parse_word(text, w.state_names()));
}

inline wreath_recursion automaton_from(const json& j) {
    std::uint32_t arity = j.at("arity").get<std::uint32_t>();
    std::vector<std::string> names;
    for (const auto& [name, st] : j.at("states").items()) {
        (void)st;
        names.push_back(name);
    }
    std::vector<permutation> roots;
    std::vector<std::vector<automaton_element>> sections;
    // two passes so section words may reference any state
    auto state_index = [&](const std::string& n) -> std::int32_t {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<std::int32_t>(i + 1);
        fail(errc::invalid_config, "section references unknown state '" + n + "'");
    };
    for (const auto& name : names) {
        const json& st = j.at("states").at(name);
        std::vector<std::uint32_t> img;
        for (const auto& e : st.at("perm")) img.push_back(e.get<std::uint32_t>());
        roots.emplace_back(img);
        std::vector<automaton_element> secs;
        for (const auto& e : st.at("sections")) {
            word wd = parse_word(e.get<std::string>(), names);
            automaton_element elem;
            for (const auto& l : wd.letters)
                for (std::int64_t i = 0, c = l.exp < 0 ? -l.exp : l.exp; i < c; ++i)
                    elem.push_back(l.exp < 0 ? -state_index(l.name) : state_index(l.name));
            secs.push_back(elem);
        }
        if (secs.size() != arity) fail(errc::invalid_config, "need one section per letter");
        sections.push_back(std::move(secs));
    }
    return wreath_recursion(arity, names, roots, sections);
}

} // namespace cfg

// Parsed, validated run configuration with a canonical echo for reports.
struct run_config {
    family_ptr family;
    json echo; // canonical config (deterministic serialization)
    std::string word_text;
    std::uint64_t depth = 6;
    std::uint64_t max_word_length = 4;
    std::optional<std::uint64_t> restrict_level;
    std::string restrict_conjugator;
    std::uint64_t seed = 0; // echoed; sampling is exhaustive
};

inline family_ptr make_family(const json& j, json& echo) {
    if (!j.contains("family")) fail(errc::invalid_config, "config needs a \"family\" field");
    std::string name = j.at("family").get<std::string>();
    echo = json::object();
    echo["family"] = name;
    if (name == "z-schedule") {
        prime_schedule s = cfg::schedule_from(j);
        echo["schedule"] = cfg::schedule_echo(s);
        return std::make_shared<z_schedule_family>(s);
    }
    if (name == "zn-diagonal") {
        std::vector<prime_schedule> coords;
        json ech = json::array();
        for (const auto& c : j.at("coordinates")) {
            coords.push_back(cfg::schedule_from(c));
            ech.push_back(cfg::schedule_echo(coords.back()));
        }
        echo["coordinates"] = ech;
        return std::make_shared<zn_diagonal_family>(coords);
    }
    if (name == "semidirect") {
        std::size_t n = j.at("n").get<std::size_t>();
        std::vector<permutation> dgens;
        json dech = json::array();
        for (const auto& d : j.at("delta")) {
            std::vector<std::uint32_t> img;
            for (const auto& e : d) img.push_back(e.get<std::uint32_t>());
            dgens.emplace_back(img);
            dech.push_back(d);
        }
        std::vector<prime_schedule> coords;
        json ech = json::array();
        for (const auto& c : j.at("coordinates")) {
            coords.push_back(cfg::schedule_from(c));
            ech.push_back(cfg::schedule_echo(coords.back()));
        }
        bool untw = j.value("untwisted_level", false);
        echo["n"] = n;
        echo["delta"] = dech;
        echo["coordinates"] = ech;
        echo["untwisted_level"] = untw;
        return std::make_shared<semidirect_family>(n, dgens, coords, untw);
    }
    if (name == "heisenberg") {
        std::uint64_t p = j.at("p").get<std::uint64_t>();
        echo["p"] = p;
        if (j.contains("q")) {
            std::uint64_t q = j.at("q").get<std::uint64_t>();
            echo["q"] = q;
            return std::make_shared<heisenberg_family>(p, q);
        }
        return std::make_shared<heisenberg_family>(p);
    }
    if (name == "adding-machine")
        return std::make_shared<stabilizer_chain_family>(adding_machine(), "adding-machine");
    if (name == "grigorchuk")
        return std::make_shared<stabilizer_chain_family>(grigorchuk(), "grigorchuk");
    if (name == "basilica")
        return std::make_shared<stabilizer_chain_family>(basilica(), "basilica");
    if (name == "gupta-sidki") {
        std::uint32_t p = j.at("p").get<std::uint32_t>();
        echo["p"] = p;
        return std::make_shared<stabilizer_chain_family>(gupta_sidki(p),
                                                         "gupta-sidki-" + std::to_string(p));
    }
    if (name == "automaton") {
        wreath_recursion w = cfg::automaton_from(j);
        echo["arity"] = w.arity();
        echo["states"] = j.at("states");
        vertex_path ray;
        if (j.contains("path"))
            for (const auto& e : j.at("path")) ray.symbols.push_back(e.get<std::uint32_t>());
        std::string label = j.value("name", std::string("automaton"));
        echo["name"] = label;
        return std::make_shared<stabilizer_chain_family>(w, label, ray);
    }
    fail(errc::invalid_config, "unknown family '" + name + "'");
}

inline run_config parse_config(const json& j) {
    if (!j.is_object()) fail(errc::invalid_config, "config must be a JSON object");
    run_config rc;
    rc.family = make_family(j, rc.echo);
    rc.word_text = j.value("word", std::string());
    rc.depth = j.value("depth", static_cast<std::uint64_t>(6));
    rc.max_word_length = j.value("max_word_length", static_cast<std::uint64_t>(4));
    if (j.contains("restrict_level"))
        rc.restrict_level = j.at("restrict_level").get<std::uint64_t>();
    rc.restrict_conjugator = j.value("restrict_conjugator", std::string());
    rc.seed = j.value("seed", static_cast<std::uint64_t>(0));
    if (rc.depth < 1) fail(errc::invalid_config, "depth must be >= 1");
    if (rc.max_word_length > 8) fail(errc::invalid_config, "max_word_length must be <= 8");
    rc.echo["word"] = rc.word_text;
    rc.echo["depth"] = rc.depth;
    rc.echo["max_word_length"] = rc.max_word_length;
    if (rc.restrict_level) rc.echo["restrict_level"] = *rc.restrict_level;
    if (!rc.restrict_conjugator.empty()) rc.echo["restrict_conjugator"] = rc.restrict_conjugator;
    rc.echo["seed"] = rc.seed;
    return rc;
}

} // namespace otl
