#pragma once

#include <initializer_list>
#include <string>

#include "curalight/util/errors.hpp"
#include "json.hpp"

namespace curalight {

using json = nlohmann::json;

// Scenario files are strict: every object may carry only known keys, so typos
// fail loudly instead of being silently ignored.
inline void require_keys(const json& obj, const std::string& where,
                         std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ParseError(where + ": expected an object");
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) throw ParseError(where + ": unknown key \"" + key + "\"");
    }
}

inline const json& require_field(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing required key \"" + key + "\"");
    return *it;
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    return it->get<T>();
}

} // namespace curalight
