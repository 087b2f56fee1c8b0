#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "otl/errors.hpp"

namespace otl {

// A group word: generator names with integer exponents. The empty word is
// the identity.
struct word {
    struct letter {
        std::string name;
        std::int64_t exp = 1;
        bool operator==(const letter&) const = default;
    };
    std::vector<letter> letters;

    bool empty() const { return letters.empty(); }

    void append(const std::string& name, std::int64_t exp) {
        if (exp == 0) return;
        if (!letters.empty() && letters.back().name == name) {
            letters.back().exp += exp;
            if (letters.back().exp == 0) letters.pop_back();
            return;
        }
        letters.push_back({name, exp});
    }

    word operator*(const word& o) const {
        word r = *this;
        for (const auto& l : o.letters) r.append(l.name, l.exp);
        return r;
    }

    word inverse() const {
        word r;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.append(it->name, -it->exp);
        return r;
    }

    word power(std::int64_t k) const {
        word base = k < 0 ? inverse() : *this;
        word r;
        for (std::int64_t i = 0, n = k < 0 ? -k : k; i < n; ++i) r = r * base;
        return r;
    }

    word conjugated_by(const word& d) const { return d * (*this) * d.inverse(); }

    std::string str() const {
        if (letters.empty()) return "";
        std::string s;
        for (const auto& l : letters) {
            if (!s.empty()) s += " ";
            s += l.name;
            if (l.exp == -1)
                s += "'";
            else if (l.exp != 1)
                s += "^" + std::to_string(l.exp);
        }
        return s;
    }

    bool operator==(const word&) const = default;
};

// Parses "t1 t2' z^-3"; when every generator name is a single character a
// compact form like "ab'a" is accepted too.
inline word parse_word(const std::string& text, const std::vector<std::string>& generator_names) {
    auto known = [&](const std::string& n) {
        for (const auto& g : generator_names)
            if (g == n) return true;
        return false;
    };
    bool all_single = true;
    for (const auto& g : generator_names)
        if (g.size() != 1) all_single = false;

    word w;
    auto push_token = [&](const std::string& tok) {
        if (tok.empty()) return;
        std::string name = tok;
        std::int64_t exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            name = tok.substr(0, caret);
            try {
                exp = std::stoll(tok.substr(caret + 1));
            } catch (...) {
                fail(errc::invalid_config, "bad exponent in word token '" + tok + "'");
            }
        }
        if (!name.empty() && name.back() == '\'') {
            name.pop_back();
            exp = -exp;
        }
        if (!known(name)) fail(errc::unknown_generator, "generator '" + name + "' is not defined");
        w.append(name, exp);
    };

    if (text.find(' ') == std::string::npos && all_single && text.find('^') == std::string::npos) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            std::string name(1, text[i]);
            std::int64_t exp = 1;
            if (i + 1 < text.size() && text[i + 1] == '\'') {
                exp = -1;
                ++i;
            }
            if (!known(name)) fail(errc::unknown_generator, "generator '" + name + "' is not defined");
            w.append(name, exp);
        }
        return w;
    }

    std::string tok;
    for (char c : text) {
        if (c == ' ' || c == '\t') {
            push_token(tok);
            tok.clear();
        } else {
            tok += c;
        }
    }
    push_token(tok);
    return w;
}

} // namespace otl
