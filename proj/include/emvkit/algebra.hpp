#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "emvkit/elem.hpp"

namespace emvkit {

/// Construction recipe for a carrier. Table inputs are not validated beyond
/// shape; axiom checking is verify_axioms' job.
struct AlgebraSpec {
    enum class Kind { Table, Chain, Product, Boolean, FinSubsets, FinSupport, Representing, ChangLex };
    Kind kind = Kind::Chain;
    std::vector<std::vector<long long>> oplus;  // Table
    int k = 1;                                  // Chain / FinSupport
    int m = 1;                                  // Boolean
    std::vector<AlgebraSpec> factors;           // Product
    std::vector<AlgebraSpec> inner;             // Representing (exactly one)

    static AlgebraSpec chain(int k);
    static AlgebraSpec boolean(int m);
    static AlgebraSpec product(std::vector<AlgebraSpec> factors);
    static AlgebraSpec table(std::vector<std::vector<long long>> oplus);
    static AlgebraSpec finsubsets();
    static AlgebraSpec finsupport(int k);
    static AlgebraSpec changlex();
    static AlgebraSpec representing(AlgebraSpec inner);
};

/// Finite carrier over indices 0..n-1 with 0 as the monoid unit. The natural
/// order, lattice tables, idempotents and heights are all derived from the
/// single source of truth, the oplus table. Derivation never throws: defects
/// are recorded and surface when an operation actually needs the missing
/// structure.
class FiniteEmv {
public:
    explicit FiniteEmv(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

    static FiniteEmv chain(int k);
    static FiniteEmv boolean_algebra(int m);
    static FiniteEmv product(const std::vector<FiniteEmv>& factors);

    int size() const { return n_; }
    int oplus(int x, int y) const { return table_[x][y]; }
    bool leq(int x, int y) const { return leq_[x][y] != 0; }

    struct OrderDefect {
        std::string what;  // "antisymmetry" | "no-join" | "no-meet" | "not-distributive"
        int x = -1, y = -1, z = -1;
    };
    const std::optional<OrderDefect>& order_defect() const { return defect_; }
    const std::optional<OrderDefect>& distributivity_defect() const { return dist_defect_; }

    bool lattice_ok() const { return !defect_.has_value(); }
    int join(int x, int y) const;  // throws NotALattice when the order is defective
    int meet(int x, int y) const;

    const std::vector<int>& idempotents() const { return idempotents_; }
    bool is_idempotent(int x) const { return table_[x][x] == x; }
    /// Minimal nonzero idempotents (atoms of the idempotent sub-lattice).
    const std::vector<int>& idempotent_atoms() const;
    std::optional<int> top() const { return top_; }
    /// Least idempotent above x; throws NoIdempotentCover if none exists.
    int idempotent_above(int x) const;

    int lambda(int a, int x) const;             // least z <= a with z + x = a
    int odot(int x, int y) const;               // via the top idempotent
    std::optional<int> partial_add(int x, int y) const;

    /// Longest strictly increasing chain from 0 to x (bounds decomposition size).
    int height(int x) const;

    const std::string& label(int x) const { return labels_[x]; }
    std::optional<int> index_of_label(const std::string& s) const;

    bool same_table(const FiniteEmv& other) const { return table_ == other.table_; }
    const std::vector<std::vector<int>>& table() const { return table_; }

private:
    void derive();

    int n_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::uint8_t>> leq_;
    std::vector<std::vector<int>> join_, meet_;  // -1 where missing
    std::optional<OrderDefect> defect_;
    std::optional<OrderDefect> dist_defect_;
    std::vector<int> idempotents_;
    std::vector<int> atoms_;
    std::optional<int> top_;
    std::vector<int> height_;
};

/// The four built-in symbolic families. All carriers are infinite; every
/// operation is total and works on canonical payloads.
class SymbolicEmv {
public:
    enum class Family { FinSubsets, FinSupport, ChangLex, Representing };

    static SymbolicEmv finsubsets();
    static SymbolicEmv finsupport(int k);
    static SymbolicEmv changlex();
    static SymbolicEmv representing(SymbolicEmv inner);  // throws HasTop

    Family family() const { return family_; }
    int chain_height() const { return k_; }
    const SymbolicEmv& inner() const;

    bool has_top() const;
    std::optional<Elem> top() const;
    Elem zero() const;

    bool contains(const Elem& e) const;  // payload shape matches this family

    Elem oplus(const Elem& x, const Elem& y) const;
    bool leq(const Elem& x, const Elem& y) const;
    Elem join(const Elem& x, const Elem& y) const;
    Elem meet(const Elem& x, const Elem& y) const;
    bool is_idempotent(const Elem& x) const;
    Elem idempotent_above(const Elem& x) const;  // least idempotent above x
    Elem lambda(const Elem& a, const Elem& x) const;
    Elem odot(const Elem& x, const Elem& y) const;
    std::optional<Elem> partial_add(const Elem& x, const Elem& y) const;
    /// Negation in a family with a top element.
    Elem neg(const Elem& x) const;

    /// Deterministic sample of pairwise distinct canonical elements,
    /// starting at 0.
    std::vector<Elem> enumerate(std::size_t bound) const;

    std::string name() const;

private:
    SymbolicEmv(Family f, int k) : family_(f), k_(k) {}
    Family family_;
    int k_ = 1;
    std::shared_ptr<const SymbolicEmv> inner_;
};

/// A built carrier: finite table or symbolic family, with a uniform
/// element-level interface for the axiom checker and the CLI.
class Carrier {
public:
    explicit Carrier(FiniteEmv f) : impl_(std::move(f)) {}
    explicit Carrier(SymbolicEmv s) : impl_(std::move(s)) {}

    bool is_finite() const { return std::holds_alternative<FiniteEmv>(impl_); }
    const FiniteEmv& finite() const;
    const SymbolicEmv& symbolic() const;

    Elem zero() const;
    Elem oplus(const Elem& x, const Elem& y) const;
    bool leq(const Elem& x, const Elem& y) const;
    Elem join(const Elem& x, const Elem& y) const;
    Elem meet(const Elem& x, const Elem& y) const;
    bool is_idempotent(const Elem& x) const;
    Elem idempotent_above(const Elem& x) const;
    Elem lambda(const Elem& a, const Elem& x) const;
    Elem odot(const Elem& x, const Elem& y) const;
    std::optional<Elem> partial_add(const Elem& x, const Elem& y) const;
    std::optional<Elem> top() const;
    std::vector<Elem> enumerate(std::size_t bound) const;
    std::string describe() const;

private:
    int idx(const Elem& e) const;
    std::variant<FiniteEmv, SymbolicEmv> impl_;
};

/// Builds a carrier from a spec. Composite builders are correct by
/// construction; raw tables are checked for shape only.
Carrier build(const AlgebraSpec& spec);

/// Full natural-order structure of a finite carrier; throws NotALattice /
/// NotDistributive with a witness when the derived order is defective.
struct OrderTables {
    std::vector<std::vector<std::uint8_t>> leq;
    std::vector<std::vector<int>> join;
    std::vector<std::vector<int>> meet;
};
OrderTables natural_order(const FiniteEmv& M);

}  // namespace emvkit
