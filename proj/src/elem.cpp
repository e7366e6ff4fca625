#include "emvkit/elem.hpp"

#include <algorithm>

#include "emvkit/error.hpp"

namespace emvkit {

std::uint32_t FinMap::level(std::uint32_t key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    return 0;
}

FinSet make_set(std::vector<std::uint32_t> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

FinMap make_map(std::vector<std::pair<std::uint32_t, std::uint32_t>> entries) {
    std::sort(entries.begin(), entries.end());
    FinMap m;
    for (const auto& [k, v] : entries) {
        if (v == 0) continue;
        if (!m.entries.empty() && m.entries.back().first == k)
            throw Error("BadInput", "duplicate key in map element");
        m.entries.emplace_back(k, v);
    }
    return m;
}

namespace {

std::variant<FinSet, FinMap, LexPair> base_payload(Elem e) {
    if (auto* s = std::get_if<FinSet>(&e)) return std::move(*s);
    if (auto* m = std::get_if<FinMap>(&e)) return std::move(*m);
    if (auto* l = std::get_if<LexPair>(&e)) return *l;
    throw Error("BadInput", "element cannot be wrapped in a representing algebra");
}

}  // namespace

Elem direct_elem(Elem base) { return ReprElem{false, base_payload(std::move(base))}; }
Elem complement_elem(Elem base) { return ReprElem{true, base_payload(std::move(base))}; }

std::string elem_str(const Elem& e) {
    struct V {
        std::string operator()(FinIdx i) const { return std::to_string(i); }
        std::string operator()(const FinSet& s) const {
            std::string out = "{";
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(s[i]);
            }
            return out + "}";
        }
        std::string operator()(const FinMap& m) const {
            std::string out = "{";
            for (std::size_t i = 0; i < m.entries.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(m.entries[i].first) + ":" + std::to_string(m.entries[i].second);
            }
            return out + "}";
        }
        std::string operator()(const LexPair& l) const {
            const long long second = l.b == 0 ? l.m : -l.m;
            return "(" + std::to_string(int(l.b)) + "," + std::to_string(second) + ")";
        }
        std::string operator()(const ReprElem& r) const {
            const std::string inner = std::visit(V{}, r.inner);
            return r.complement ? inner + "'" : inner;
        }
    };
    return std::visit(V{}, e);
}

}  // namespace emvkit
