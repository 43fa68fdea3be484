#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>

#include "lrc/error.hpp"

namespace lrc {

/// Hard limits on exhaustive enumerations. Exceeding one raises
/// ErrorKind::guard_exceeded; nothing is ever silently truncated.
struct Guards {
    std::size_t enumerator_dimension = 28;     // k for weight enumeration / min distance
    std::size_t syndrome_bits = 28;            // n - k for coset sweeps
    std::size_t dual_enumeration = 20;         // n - k below which all dual words are listed
    std::size_t support_candidates = 1u << 26; // low-weight supports tested by syndrome otherwise
    std::size_t disjoint_subsets = 64;         // subsets in a maximum-disjoint search
    std::size_t equivalence_length = 12;       // n for permutation-search equivalence
    std::size_t search_points_t2 = 10;         // n for exact-covering search with t <= 2
    std::size_t search_points_t3 = 9;          // n for exact-covering search with t >= 3
    std::size_t oracle_length = 20;            // n for brute-force oracles

    /// Applies LRC_GUARD_OVERRIDE, a comma separated list of `name=value`
    /// pairs. Values can only raise a guard, never lower it.
    static Guards from_environment() {
        Guards guards;
        if (const char* env = std::getenv("LRC_GUARD_OVERRIDE"); env != nullptr) {
            guards.apply_overrides(env);
        }
        return guards;
    }

    void apply_overrides(std::string_view list) {
        while (!list.empty()) {
            const auto comma = list.find(',');
            const auto item = list.substr(0, comma);
            list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
            if (item.empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string_view::npos) {
                throw Error(ErrorKind::parse_error, "guard override '" + std::string(item) + "' lacks '='");
            }
            const std::string name(item.substr(0, eq));
            const std::string text(item.substr(eq + 1));
            std::size_t value = 0;
            try {
                value = static_cast<std::size_t>(std::stoull(text));
            } catch (const std::exception&) {
                throw Error(ErrorKind::parse_error, "guard override value '" + text + "' is not a count");
            }
            std::size_t* slot = lookup(name);
            if (slot == nullptr) throw Error(ErrorKind::unknown_name, "no guard named '" + name + "'");
            if (value > *slot) *slot = value;
        }
    }

private:
    std::size_t* lookup(std::string_view name) {
        if (name == "enumerator_dimension") return &enumerator_dimension;
        if (name == "syndrome_bits") return &syndrome_bits;
        if (name == "dual_enumeration") return &dual_enumeration;
        if (name == "support_candidates") return &support_candidates;
        if (name == "disjoint_subsets") return &disjoint_subsets;
        if (name == "equivalence_length") return &equivalence_length;
        if (name == "search_points_t2") return &search_points_t2;
        if (name == "search_points_t3") return &search_points_t3;
        if (name == "oracle_length") return &oracle_length;
        return nullptr;
    }
};

}  // namespace lrc
