#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace emvkit {

/// Canonical element payloads. Equality of elements is equality of payloads,
/// so every constructor below normalizes its input.

using FinIdx = std::uint32_t;           // finite carrier index
using FinSet = std::vector<std::uint32_t>;  // sorted, duplicate-free

/// Finitely supported map N -> {1..k}; zero levels are dropped.
struct FinMap {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;  // sorted by key
    auto operator<=>(const FinMap&) const = default;

    std::uint32_t level(std::uint32_t key) const;
};

/// Element of the lexicographic chain family: b=0 encodes (0,m), b=1 encodes
/// (1,-m); m >= 0 in both cases.
struct LexPair {
    std::uint8_t b = 0;
    std::int64_t m = 0;
    auto operator<=>(const LexPair&) const = default;
};

/// Element of a representing MV-algebra: either an element of the embedded
/// algebra or the complement of one. Direct and Complement payloads are never
/// identified.
struct ReprElem {
    bool complement = false;
    std::variant<FinSet, FinMap, LexPair> inner;
    auto operator<=>(const ReprElem&) const = default;
};

using Elem = std::variant<FinIdx, FinSet, FinMap, LexPair, ReprElem>;

FinSet make_set(std::vector<std::uint32_t> xs);
FinMap make_map(std::vector<std::pair<std::uint32_t, std::uint32_t>> entries);

Elem direct_elem(Elem base);      // wraps a base payload as Direct
Elem complement_elem(Elem base);  // wraps a base payload as Complement

/// Short human-readable form, used in witnesses and labels.
std::string elem_str(const Elem& e);

}  // namespace emvkit
