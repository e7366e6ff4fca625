#include "emvkit/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "emvkit/error.hpp"

namespace emvkit {

AlgebraSpec AlgebraSpec::chain(int k) {
    AlgebraSpec s;
    s.kind = Kind::Chain;
    s.k = k;
    return s;
}
AlgebraSpec AlgebraSpec::boolean(int m) {
    AlgebraSpec s;
    s.kind = Kind::Boolean;
    s.m = m;
    return s;
}
AlgebraSpec AlgebraSpec::product(std::vector<AlgebraSpec> factors) {
    AlgebraSpec s;
    s.kind = Kind::Product;
    s.factors = std::move(factors);
    return s;
}
AlgebraSpec AlgebraSpec::table(std::vector<std::vector<long long>> oplus) {
    AlgebraSpec s;
    s.kind = Kind::Table;
    s.oplus = std::move(oplus);
    return s;
}
AlgebraSpec AlgebraSpec::finsubsets() {
    AlgebraSpec s;
    s.kind = Kind::FinSubsets;
    return s;
}
AlgebraSpec AlgebraSpec::finsupport(int k) {
    AlgebraSpec s;
    s.kind = Kind::FinSupport;
    s.k = k;
    return s;
}
AlgebraSpec AlgebraSpec::changlex() {
    AlgebraSpec s;
    s.kind = Kind::ChangLex;
    return s;
}
AlgebraSpec AlgebraSpec::representing(AlgebraSpec inner) {
    AlgebraSpec s;
    s.kind = Kind::Representing;
    s.inner.push_back(std::move(inner));
    return s;
}

FiniteEmv::FiniteEmv(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
    n_ = static_cast<int>(table_.size());
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n_)
            throw Error("MalformedMatrix", "oplus table is not square");
        for (int v : row)
            if (v < 0 || v >= n_)
                throw Error("MalformedMatrix", "oplus entry out of range",
                            {{"entry", v}, {"size", n_}});
    }
    if (n_ == 0) throw Error("MalformedMatrix", "empty carrier");
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    } else if (static_cast<int>(labels_.size()) != n_) {
        throw Error("MalformedMatrix", "label count does not match carrier size");
    }
    derive();
}

void FiniteEmv::derive() {
    // natural order: x <= y iff some z has x + z = y
    leq_.assign(n_, std::vector<std::uint8_t>(n_, 0));
    for (int x = 0; x < n_; ++x)
        for (int z = 0; z < n_; ++z) leq_[x][table_[x][z]] = 1;

    for (int x = 0; x < n_ && !defect_; ++x)
        for (int y = x + 1; y < n_; ++y)
            if (leq_[x][y] && leq_[y][x]) {
                defect_ = OrderDefect{"antisymmetry", x, y, -1};
                break;
            }

    join_.assign(n_, std::vector<int>(n_, -1));
    meet_.assign(n_, std::vector<int>(n_, -1));
    if (!defect_) {
        for (int x = 0; x < n_ && !defect_; ++x) {
            for (int y = x; y < n_; ++y) {
                // least upper bound: sweep for a minimal candidate, then verify
                int cand = -1;
                for (int u = 0; u < n_; ++u) {
                    if (!leq_[x][u] || !leq_[y][u]) continue;
                    if (cand < 0 || leq_[u][cand]) cand = u;
                }
                bool ok = cand >= 0;
                for (int u = 0; ok && u < n_; ++u)
                    if (leq_[x][u] && leq_[y][u] && !leq_[cand][u]) ok = false;
                if (!ok) {
                    defect_ = OrderDefect{"no-join", x, y, -1};
                    break;
                }
                join_[x][y] = join_[y][x] = cand;

                cand = -1;
                for (int u = 0; u < n_; ++u) {
                    if (!leq_[u][x] || !leq_[u][y]) continue;
                    if (cand < 0 || leq_[cand][u]) cand = u;
                }
                ok = cand >= 0;
                for (int u = 0; ok && u < n_; ++u)
                    if (leq_[u][x] && leq_[u][y] && !leq_[u][cand]) ok = false;
                if (!ok) {
                    defect_ = OrderDefect{"no-meet", x, y, -1};
                    break;
                }
                meet_[x][y] = meet_[y][x] = cand;
            }
        }
    }
    if (!defect_) {
        for (int x = 0; x < n_ && !dist_defect_; ++x)
            for (int y = 0; y < n_ && !dist_defect_; ++y)
                for (int z = 0; z < n_; ++z)
                    if (meet_[x][join_[y][z]] != join_[meet_[x][y]][meet_[x][z]]) {
                        dist_defect_ = OrderDefect{"not-distributive", x, y, z};
                        break;
                    }
    }

    for (int x = 0; x < n_; ++x)
        if (table_[x][x] == x) idempotents_.push_back(x);

    if (!defect_) {
        for (int a : idempotents_) {
            if (a == 0) continue;
            bool minimal = true;
            for (int b : idempotents_)
                if (b != 0 && b != a && leq_[b][a]) { minimal = false; break; }
            if (minimal) atoms_.push_back(a);
        }
        for (int t = 0; t < n_; ++t) {
            bool greatest = true;
            for (int x = 0; x < n_; ++x)
                if (!leq_[x][t]) { greatest = false; break; }
            if (greatest) { top_ = t; break; }
        }
        // heights by increasing down-set size
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> below(n_, 0);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                if (y != x && leq_[y][x]) ++below[x];
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
        height_.assign(n_, 0);
        for (int x : order)
            for (int y = 0; y < n_; ++y)
                if (y != x && leq_[y][x]) height_[x] = std::max(height_[x], height_[y] + 1);
    }
}

int FiniteEmv::join(int x, int y) const {
    if (defect_)
        throw Error("NotALattice", "derived order is not a lattice: " + defect_->what,
                    {{"x", defect_->x}, {"y", defect_->y}});
    return join_[x][y];
}

int FiniteEmv::meet(int x, int y) const {
    if (defect_)
        throw Error("NotALattice", "derived order is not a lattice: " + defect_->what,
                    {{"x", defect_->x}, {"y", defect_->y}});
    return meet_[x][y];
}

const std::vector<int>& FiniteEmv::idempotent_atoms() const {
    if (defect_) throw Error("NotALattice", "idempotent atoms need a lattice order");
    return atoms_;
}

int FiniteEmv::idempotent_above(int x) const {
    int best = -1;
    for (int a : idempotents_) {
        if (!leq_[x][a]) continue;
        if (best < 0 || leq_[a][best]) best = a;
    }
    if (best < 0)
        throw Error("NoIdempotentCover", "no idempotent above element", {{"x", label(x)}});
    for (int a : idempotents_)
        if (leq_[x][a] && !leq_[best][a])
            throw Error("NoIdempotentCover", "idempotents above element have no least member",
                        {{"x", label(x)}});
    return best;
}

int FiniteEmv::lambda(int a, int x) const {
    if (!is_idempotent(a))
        throw Error("NotIdempotent", "lambda requires an idempotent bound", {{"a", label(a)}});
    if (!leq_[x][a])
        throw Error("NotBelow", "lambda argument not below its bound",
                    {{"x", label(x)}, {"a", label(a)}});
    int cand = -1;
    for (int z = 0; z < n_; ++z) {
        if (!leq_[z][a] || table_[z][x] != a) continue;
        if (cand < 0 || leq_[z][cand]) cand = z;
    }
    if (cand < 0)
        throw Error("NoMinimum", "no z in [0,a] with z+x = a", {{"x", label(x)}, {"a", label(a)}});
    for (int z = 0; z < n_; ++z)
        if (leq_[z][a] && table_[z][x] == a && !leq_[cand][z])
            throw Error("NoMinimum", "witness set for lambda has no least element",
                        {{"x", label(x)}, {"a", label(a)}});
    return cand;
}

int FiniteEmv::odot(int x, int y) const {
    if (!top_ || !is_idempotent(*top_))
        throw Error("NoIdempotentCover", "carrier lacks a top idempotent");
    const int a = *top_;
    return lambda(a, table_[lambda(a, x)][lambda(a, y)]);
}

std::optional<int> FiniteEmv::partial_add(int x, int y) const {
    if (odot(x, y) != 0) return std::nullopt;
    return table_[x][y];
}

int FiniteEmv::height(int x) const {
    if (defect_) throw Error("NotALattice", "heights need a valid order");
    return height_[x];
}

std::optional<int> FiniteEmv::index_of_label(const std::string& s) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == s) return i;
    return std::nullopt;
}

FiniteEmv FiniteEmv::chain(int k) {
    if (k < 1) throw Error("BadInput", "chain height must be >= 1");
    const int n = k + 1;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = std::min(i + j, k);
    return FiniteEmv(std::move(t));
}

FiniteEmv FiniteEmv::boolean_algebra(int m) {
    if (m < 1) throw Error("BadInput", "boolean exponent must be >= 1");
    if (m > 16) throw Error("BadInput", "boolean exponent too large");
    const int n = 1 << m;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = i | j;
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        std::string s = "{";
        bool first = true;
        for (int b = 0; b < m; ++b)
            if (i & (1 << b)) {
                if (!first) s += ',';
                s += std::to_string(b);
                first = false;
            }
        labels[i] = s + "}";
    }
    return FiniteEmv(std::move(t), std::move(labels));
}

FiniteEmv FiniteEmv::product(const std::vector<FiniteEmv>& factors) {
    if (factors.empty()) throw Error("BadInput", "product needs at least one factor");
    int n = 1;
    for (const auto& f : factors) n *= f.size();
    std::vector<int> radix(factors.size());
    {
        int r = 1;
        for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
            radix[i] = r;
            r *= factors[i].size();
        }
    }
    auto digits = [&](int idx) {
        std::vector<int> d(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            d[i] = idx / radix[i];
            idx %= radix[i];
        }
        return d;
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        const auto dx = digits(x);
        for (int y = 0; y < n; ++y) {
            const auto dy = digits(y);
            int idx = 0;
            for (std::size_t i = 0; i < factors.size(); ++i)
                idx += factors[i].oplus(dx[i], dy[i]) * radix[i];
            t[x][y] = idx;
        }
    }
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        const auto d = digits(x);
        std::string s = "(";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ',';
            s += factors[i].label(d[i]);
        }
        labels[x] = s + ")";
    }
    return FiniteEmv(std::move(t), std::move(labels));
}

const FiniteEmv& Carrier::finite() const {
    if (!is_finite()) throw Error("UnsupportedCarrier", "operation requires a finite carrier");
    return std::get<FiniteEmv>(impl_);
}

const SymbolicEmv& Carrier::symbolic() const {
    if (is_finite()) throw Error("UnsupportedCarrier", "operation requires a symbolic carrier");
    return std::get<SymbolicEmv>(impl_);
}

int Carrier::idx(const Elem& e) const {
    const auto* i = std::get_if<FinIdx>(&e);
    if (!i || static_cast<int>(*i) >= finite().size())
        throw Error("BadInput", "element does not belong to this finite carrier");
    return static_cast<int>(*i);
}

Elem Carrier::zero() const {
    if (is_finite()) return FinIdx{0};
    return symbolic().zero();
}
Elem Carrier::oplus(const Elem& x, const Elem& y) const {
    if (is_finite()) return FinIdx(finite().oplus(idx(x), idx(y)));
    return symbolic().oplus(x, y);
}
bool Carrier::leq(const Elem& x, const Elem& y) const {
    if (is_finite()) return finite().leq(idx(x), idx(y));
    return symbolic().leq(x, y);
}
Elem Carrier::join(const Elem& x, const Elem& y) const {
    if (is_finite()) return FinIdx(finite().join(idx(x), idx(y)));
    return symbolic().join(x, y);
}
Elem Carrier::meet(const Elem& x, const Elem& y) const {
    if (is_finite()) return FinIdx(finite().meet(idx(x), idx(y)));
    return symbolic().meet(x, y);
}
bool Carrier::is_idempotent(const Elem& x) const {
    if (is_finite()) return finite().is_idempotent(idx(x));
    return symbolic().is_idempotent(x);
}
Elem Carrier::idempotent_above(const Elem& x) const {
    if (is_finite()) return FinIdx(finite().idempotent_above(idx(x)));
    return symbolic().idempotent_above(x);
}
Elem Carrier::lambda(const Elem& a, const Elem& x) const {
    if (is_finite()) return FinIdx(finite().lambda(idx(a), idx(x)));
    return symbolic().lambda(a, x);
}
Elem Carrier::odot(const Elem& x, const Elem& y) const {
    if (is_finite()) return FinIdx(finite().odot(idx(x), idx(y)));
    return symbolic().odot(x, y);
}
std::optional<Elem> Carrier::partial_add(const Elem& x, const Elem& y) const {
    if (is_finite()) {
        auto r = finite().partial_add(idx(x), idx(y));
        if (!r) return std::nullopt;
        return Elem(FinIdx(*r));
    }
    return symbolic().partial_add(x, y);
}
std::optional<Elem> Carrier::top() const {
    if (is_finite()) {
        auto t = finite().top();
        if (t && finite().is_idempotent(*t)) return Elem(FinIdx(*t));
        return std::nullopt;
    }
    return symbolic().top();
}
std::vector<Elem> Carrier::enumerate(std::size_t bound) const {
    if (is_finite()) {
        std::vector<Elem> out;
        const int n = std::min<std::size_t>(bound == 0 ? finite().size() : bound, finite().size());
        for (int i = 0; i < n; ++i) out.emplace_back(FinIdx(i));
        return out;
    }
    return symbolic().enumerate(bound);
}
std::string Carrier::describe() const {
    if (is_finite()) return "finite(" + std::to_string(finite().size()) + ")";
    return symbolic().name();
}

Carrier build(const AlgebraSpec& spec) {
    using K = AlgebraSpec::Kind;
    switch (spec.kind) {
        case K::Table: {
            std::vector<std::vector<int>> t;
            t.reserve(spec.oplus.size());
            for (const auto& row : spec.oplus) {
                std::vector<int> r;
                r.reserve(row.size());
                for (long long v : row) {
                    if (v < 0 || v >= static_cast<long long>(spec.oplus.size()))
                        throw Error("MalformedMatrix", "oplus entry out of range");
                    r.push_back(static_cast<int>(v));
                }
                t.push_back(std::move(r));
            }
            return Carrier(FiniteEmv(std::move(t)));
        }
        case K::Chain:
            return Carrier(FiniteEmv::chain(spec.k));
        case K::Boolean:
            return Carrier(FiniteEmv::boolean_algebra(spec.m));
        case K::Product: {
            std::vector<FiniteEmv> fs;
            for (const auto& f : spec.factors) {
                Carrier c = build(f);
                if (!c.is_finite())
                    throw Error("UnsupportedProduct", "products of symbolic families are unsupported");
                fs.push_back(c.finite());
            }
            return Carrier(FiniteEmv::product(fs));
        }
        case K::FinSubsets:
            return Carrier(SymbolicEmv::finsubsets());
        case K::FinSupport:
            return Carrier(SymbolicEmv::finsupport(spec.k));
        case K::ChangLex:
            return Carrier(SymbolicEmv::changlex());
        case K::Representing: {
            if (spec.inner.size() != 1)
                throw Error("BadInput", "representing spec needs exactly one inner spec");
            Carrier c = build(spec.inner[0]);
            if (c.is_finite())
                throw Error("HasTop", "finite carriers already have a top element");
            return Carrier(SymbolicEmv::representing(c.symbolic()));
        }
    }
    throw Error("BadInput", "unknown spec kind");
}

OrderTables natural_order(const FiniteEmv& M) {
    if (const auto& d = M.order_defect())
        throw Error("NotALattice", "derived order is not a lattice: " + d->what,
                    {{"x", d->x}, {"y", d->y}});
    if (const auto& d = M.distributivity_defect())
        throw Error("NotDistributive", "derived lattice is not distributive",
                    {{"x", d->x}, {"y", d->y}, {"z", d->z}});
    OrderTables t;
    const int n = M.size();
    t.leq.assign(n, std::vector<std::uint8_t>(n, 0));
    t.join.assign(n, std::vector<int>(n, -1));
    t.meet.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            t.leq[x][y] = M.leq(x, y) ? 1 : 0;
            t.join[x][y] = M.join(x, y);
            t.meet[x][y] = M.meet(x, y);
        }
    return t;
}

}  // namespace emvkit
