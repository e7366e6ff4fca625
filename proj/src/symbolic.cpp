#include <algorithm>

#include "emvkit/algebra.hpp"
#include "emvkit/error.hpp"

namespace emvkit {

namespace {

const FinSet& as_set(const Elem& e) {
    if (const auto* s = std::get_if<FinSet>(&e)) return *s;
    throw Error("BadInput", "expected a finite-set element");
}
const FinMap& as_map(const Elem& e) {
    if (const auto* m = std::get_if<FinMap>(&e)) return *m;
    throw Error("BadInput", "expected a finitely supported map element");
}
const LexPair& as_lex(const Elem& e) {
    if (const auto* l = std::get_if<LexPair>(&e)) return *l;
    throw Error("BadInput", "expected a lex-pair element");
}
const ReprElem& as_repr(const Elem& e) {
    if (const auto* r = std::get_if<ReprElem>(&e)) return *r;
    throw Error("BadInput", "expected a representing-algebra element");
}
Elem unwrap(const ReprElem& r) {
    return std::visit([](const auto& x) { return Elem(x); }, r.inner);
}

FinSet set_union(const FinSet& a, const FinSet& b) {
    FinSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
FinSet set_intersection(const FinSet& a, const FinSet& b) {
    FinSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
FinSet set_difference(const FinSet& a, const FinSet& b) {
    FinSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
bool set_subset(const FinSet& a, const FinSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// merge two finitely supported maps with a per-coordinate combiner
template <typename F>
FinMap map_zip(const FinMap& a, const FinMap& b, F&& f) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        std::uint32_t key;
        std::uint32_t va = 0, vb = 0;
        if (j == b.entries.size() || (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            key = a.entries[i].first;
            va = a.entries[i].second;
            ++i;
        } else if (i == a.entries.size() || b.entries[j].first < a.entries[i].first) {
            key = b.entries[j].first;
            vb = b.entries[j].second;
            ++j;
        } else {
            key = a.entries[i].first;
            va = a.entries[i].second;
            vb = b.entries[j].second;
            ++i;
            ++j;
        }
        const std::uint32_t v = f(va, vb);
        if (v != 0) out.emplace_back(key, v);
    }
    return FinMap{std::move(out)};
}

// (b, m) as an actual point of Z x_lex Z
std::pair<long long, long long> lex_value(const LexPair& p) {
    return {p.b, p.b == 0 ? p.m : -p.m};
}
LexPair lex_make(long long first, long long second) {
    if (first <= 0) {
        if (first < 0 || second < 0) throw Error("BadInput", "lex element below zero");
        return LexPair{0, second};
    }
    if (second > 0 || first > 1) return LexPair{1, 0};  // clamp at the unit (1,0)
    return LexPair{1, -second};
}

}  // namespace

SymbolicEmv SymbolicEmv::finsubsets() { return SymbolicEmv(Family::FinSubsets, 1); }
SymbolicEmv SymbolicEmv::finsupport(int k) {
    if (k < 1) throw Error("BadInput", "finsupport chain height must be >= 1");
    return SymbolicEmv(Family::FinSupport, k);
}
SymbolicEmv SymbolicEmv::changlex() { return SymbolicEmv(Family::ChangLex, 1); }
SymbolicEmv SymbolicEmv::representing(SymbolicEmv inner) {
    if (inner.has_top())
        throw Error("HasTop", "inner algebra already has a top element; it is its own MV-algebra");
    SymbolicEmv s(Family::Representing, inner.k_);
    s.inner_ = std::make_shared<SymbolicEmv>(std::move(inner));
    return s;
}

const SymbolicEmv& SymbolicEmv::inner() const {
    if (!inner_) throw Error("BadInput", "family has no inner algebra");
    return *inner_;
}

bool SymbolicEmv::has_top() const {
    return family_ == Family::ChangLex || family_ == Family::Representing;
}

std::optional<Elem> SymbolicEmv::top() const {
    switch (family_) {
        case Family::ChangLex: return Elem(LexPair{1, 0});
        case Family::Representing: return complement_elem(inner().zero());
        default: return std::nullopt;
    }
}

Elem SymbolicEmv::zero() const {
    switch (family_) {
        case Family::FinSubsets: return Elem(FinSet{});
        case Family::FinSupport: return Elem(FinMap{});
        case Family::ChangLex: return Elem(LexPair{0, 0});
        case Family::Representing: return direct_elem(inner().zero());
    }
    throw Error("BadInput", "unknown family");
}

bool SymbolicEmv::contains(const Elem& e) const {
    switch (family_) {
        case Family::FinSubsets: return std::holds_alternative<FinSet>(e);
        case Family::FinSupport: {
            const auto* m = std::get_if<FinMap>(&e);
            if (!m) return false;
            for (const auto& [k, v] : m->entries)
                if (v == 0 || v > static_cast<std::uint32_t>(k_)) return false;
            return true;
        }
        case Family::ChangLex: {
            const auto* l = std::get_if<LexPair>(&e);
            return l && l->m >= 0 && (l->b == 0 || l->b == 1);
        }
        case Family::Representing: {
            const auto* r = std::get_if<ReprElem>(&e);
            return r && inner().contains(unwrap(*r));
        }
    }
    return false;
}

Elem SymbolicEmv::oplus(const Elem& x, const Elem& y) const {
    switch (family_) {
        case Family::FinSubsets:
            return set_union(as_set(x), as_set(y));
        case Family::FinSupport: {
            const auto k = static_cast<std::uint32_t>(k_);
            return map_zip(as_map(x), as_map(y),
                           [k](std::uint32_t a, std::uint32_t b) { return std::min(a + b, k); });
        }
        case Family::ChangLex: {
            const auto [a1, a2] = lex_value(as_lex(x));
            const auto [b1, b2] = lex_value(as_lex(y));
            return Elem(lex_make(a1 + b1, a2 + b2));
        }
        case Family::Representing: {
            const ReprElem& a = as_repr(x);
            const ReprElem& b = as_repr(y);
            const SymbolicEmv& M = inner();
            if (!a.complement && !b.complement)
                return direct_elem(M.oplus(unwrap(a), unwrap(b)));
            if (a.complement && b.complement)
                return complement_elem(M.odot(unwrap(a), unwrap(b)));
            // mixed case: Direct(u) + Complement(v) = Complement(v . lambda_c(u))
            const Elem u = a.complement ? unwrap(b) : unwrap(a);
            const Elem v = a.complement ? unwrap(a) : unwrap(b);
            const Elem c = M.idempotent_above(M.join(u, v));
            return complement_elem(M.odot(v, M.lambda(c, u)));
        }
    }
    throw Error("BadInput", "unknown family");
}

Elem SymbolicEmv::neg(const Elem& x) const {
    switch (family_) {
        case Family::ChangLex: {
            const LexPair& l = as_lex(x);
            return Elem(LexPair{static_cast<std::uint8_t>(1 - l.b), l.m});
        }
        case Family::Representing: {
            ReprElem r = as_repr(x);
            r.complement = !r.complement;
            return r;
        }
        default:
            throw Error("HasTop", "negation requires a top element");
    }
}

Elem SymbolicEmv::odot(const Elem& x, const Elem& y) const {
    switch (family_) {
        case Family::FinSubsets:
            return set_intersection(as_set(x), as_set(y));
        case Family::FinSupport: {
            const auto k = static_cast<std::uint32_t>(k_);
            return map_zip(as_map(x), as_map(y), [k](std::uint32_t a, std::uint32_t b) {
                return a + b > k ? a + b - k : 0;
            });
        }
        case Family::ChangLex:
        case Family::Representing:
            return neg(oplus(neg(x), neg(y)));
    }
    throw Error("BadInput", "unknown family");
}

bool SymbolicEmv::leq(const Elem& x, const Elem& y) const {
    switch (family_) {
        case Family::FinSubsets:
            return set_subset(as_set(x), as_set(y));
        case Family::FinSupport: {
            const FinMap& a = as_map(x);
            const FinMap& b = as_map(y);
            for (const auto& [k, v] : a.entries)
                if (v > b.level(k)) return false;
            return true;
        }
        case Family::ChangLex:
            return lex_value(as_lex(x)) <= lex_value(as_lex(y));
        case Family::Representing:
            return odot(x, neg(y)) == zero();
    }
    throw Error("BadInput", "unknown family");
}

Elem SymbolicEmv::join(const Elem& x, const Elem& y) const {
    switch (family_) {
        case Family::FinSubsets:
            return set_union(as_set(x), as_set(y));
        case Family::FinSupport:
            return map_zip(as_map(x), as_map(y),
                           [](std::uint32_t a, std::uint32_t b) { return std::max(a, b); });
        case Family::ChangLex:
            return leq(x, y) ? y : x;
        case Family::Representing:
            return oplus(odot(x, neg(y)), y);
    }
    throw Error("BadInput", "unknown family");
}

Elem SymbolicEmv::meet(const Elem& x, const Elem& y) const {
    switch (family_) {
        case Family::FinSubsets:
            return set_intersection(as_set(x), as_set(y));
        case Family::FinSupport:
            return map_zip(as_map(x), as_map(y),
                           [](std::uint32_t a, std::uint32_t b) { return std::min(a, b); });
        case Family::ChangLex:
            return leq(x, y) ? x : y;
        case Family::Representing:
            return odot(x, oplus(neg(x), y));
    }
    throw Error("BadInput", "unknown family");
}

bool SymbolicEmv::is_idempotent(const Elem& x) const {
    return oplus(x, x) == x;
}

Elem SymbolicEmv::idempotent_above(const Elem& x) const {
    switch (family_) {
        case Family::FinSubsets:
            return x;  // every element is idempotent
        case Family::FinSupport: {
            // least {0,k}-valued map covering x
            FinMap out;
            for (const auto& [key, v] : as_map(x).entries) {
                (void)v;
                out.entries.emplace_back(key, static_cast<std::uint32_t>(k_));
            }
            return out;
        }
        case Family::ChangLex:
            return as_lex(x) == LexPair{0, 0} ? Elem(LexPair{0, 0}) : Elem(LexPair{1, 0});
        case Family::Representing: {
            const ReprElem& r = as_repr(x);
            if (r.complement) return *top();
            return direct_elem(inner().idempotent_above(unwrap(r)));
        }
    }
    throw Error("BadInput", "unknown family");
}

Elem SymbolicEmv::lambda(const Elem& a, const Elem& x) const {
    if (!is_idempotent(a))
        throw Error("NotIdempotent", "lambda requires an idempotent bound", {{"a", elem_str(a)}});
    if (!leq(x, a))
        throw Error("NotBelow", "lambda argument not below its bound",
                    {{"x", elem_str(x)}, {"a", elem_str(a)}});
    switch (family_) {
        case Family::FinSubsets:
            return set_difference(as_set(a), as_set(x));
        case Family::FinSupport:
            return map_zip(as_map(a), as_map(x),
                           [](std::uint32_t av, std::uint32_t xv) { return av - xv; });
        case Family::ChangLex: {
            const auto [a1, a2] = lex_value(as_lex(a));
            const auto [x1, x2] = lex_value(as_lex(x));
            return Elem(lex_make(a1 - x1, a2 - x2));
        }
        case Family::Representing:
            return odot(a, neg(x));
    }
    throw Error("BadInput", "unknown family");
}

std::optional<Elem> SymbolicEmv::partial_add(const Elem& x, const Elem& y) const {
    if (odot(x, y) != zero()) return std::nullopt;
    return oplus(x, y);
}

std::vector<Elem> SymbolicEmv::enumerate(std::size_t bound) const {
    std::vector<Elem> out;
    out.reserve(bound);
    switch (family_) {
        case Family::FinSubsets:
            for (std::size_t mask = 0; mask < bound; ++mask) {
                FinSet s;
                for (std::uint32_t b = 0; b < 32; ++b)
                    if (mask & (std::size_t(1) << b)) s.push_back(b);
                out.emplace_back(std::move(s));
            }
            break;
        case Family::FinSupport: {
            const std::size_t radix = static_cast<std::size_t>(k_) + 1;
            for (std::size_t v = 0; v < bound; ++v) {
                std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
                std::size_t rest = v;
                for (std::uint32_t key = 0; rest > 0; ++key, rest /= radix) {
                    const auto level = static_cast<std::uint32_t>(rest % radix);
                    if (level) entries.emplace_back(key, level);
                }
                out.emplace_back(FinMap{std::move(entries)});
            }
            break;
        }
        case Family::ChangLex: {
            const std::size_t low = (bound + 1) / 2;
            for (std::size_t m = 0; m < low; ++m)
                out.emplace_back(LexPair{0, static_cast<std::int64_t>(m)});
            for (std::size_t i = bound - low; i > 0; --i)
                out.emplace_back(LexPair{1, static_cast<std::int64_t>(i - 1)});
            break;
        }
        case Family::Representing: {
            const std::size_t low = (bound + 1) / 2;
            for (const Elem& e : inner().enumerate(low)) out.push_back(direct_elem(e));
            auto rest = inner().enumerate(bound - low);
            std::reverse(rest.begin(), rest.end());
            for (const Elem& e : rest) out.push_back(complement_elem(e));
            break;
        }
    }
    return out;
}

std::string SymbolicEmv::name() const {
    switch (family_) {
        case Family::FinSubsets: return "finsubsets";
        case Family::FinSupport: return "finsupport(" + std::to_string(k_) + ")";
        case Family::ChangLex: return "changlex";
        case Family::Representing: return "representing(" + inner().name() + ")";
    }
    return "?";
}

}  // namespace emvkit
