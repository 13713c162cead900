#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ap2 {

using elem_t = std::int32_t;

// Resource limits shared by builders and the poset/complex pipeline.
struct Limits {
  long long max_order = 6561;         // largest multiplication table we will materialize
  long long max_poset_members = 200000;
  long long max_faces = 5000000;
};

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

// A finite group as a dense multiplication table. Immutable after construction;
// all operations on it are pure, so instances can be shared across threads freely.
//
// Construction validates the table: identity, two-sided inverses, latin-square
// rows/columns, and associativity (exhaustive for order <= 512, otherwise 10^5
// pseudo-random triples from a fixed seed). Element orders are precomputed.
class GroupTable {
 public:
  // table is row-major: table[g*order + h] = g*h.
  static GroupPtr from_table(std::string label, std::vector<elem_t> table,
                             long long order);

  long long order() const { return order_; }
  const std::string& label() const { return label_; }

  elem_t mul(elem_t a, elem_t b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  elem_t identity() const { return identity_; }
  elem_t inverse(elem_t g) const { return inverses_[g]; }
  int element_order(elem_t g) const { return element_orders_[g]; }

  elem_t power(elem_t g, long long k) const;
  // b^-1 * a * b
  elem_t conjugate(elem_t a, elem_t b) const;
  // a^-1 * b^-1 * a * b
  elem_t commutator(elem_t a, elem_t b) const;

  long long exponent() const;
  bool is_abelian() const;

  // p such that order() == p^k with k >= 1, if the order is a prime power.
  std::optional<long long> p_group_prime() const;
  bool is_p_group(long long p) const;

  const std::vector<elem_t>& raw_table() const { return table_; }

 private:
  GroupTable() = default;

  std::string label_;
  long long order_ = 0;
  std::vector<elem_t> table_;
  elem_t identity_ = 0;
  std::vector<elem_t> inverses_;
  std::vector<int> element_orders_;
};

// Isomorphism-type summary; this is the only structure reporting the tool does.
struct IsoHint {
  long long size = 0;
  long long exponent = 1;
  bool abelian = true;
  bool cyclic = true;
  int elem_ab_rank = -1;  // r if elementary abelian of rank r (for its own prime), else -1
};

std::string format_iso_hint(const IsoHint& h);

// A subgroup of a parent table, stored as a sorted element list.
// Construction validates closure, identity and inverses.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<elem_t> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<elem_t>& elements() const { return elems_; }
  long long size() const { return static_cast<long long>(elems_.size()); }

  bool contains(elem_t g) const;
  bool contains_all(const Subgroup& other) const;

  bool is_abelian() const;
  long long exponent() const;
  bool is_cyclic() const;
  // r >= 0 if the subgroup is elementary abelian of rank r for this p, else nullopt.
  std::optional<int> elementary_rank(long long p) const;

  IsoHint iso_hint() const;

  bool operator==(const Subgroup& other) const { return elems_ == other.elems_; }

 private:
  GroupPtr parent_;
  std::vector<elem_t> elems_;
};

// Subgroup generated by gens (breadth-first closure).
Subgroup closure(const GroupPtr& g, std::span<const elem_t> gens);

Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g);
// Elements commuting with every element of s.
Subgroup centralizer(const GroupPtr& g, std::span<const elem_t> s);

struct QuotientResult {
  GroupPtr group;
  std::vector<elem_t> projection;  // parent element -> coset index
};

// G/N for central N (checked). Cosets are indexed by their smallest member,
// in increasing order, so the result is deterministic.
QuotientResult quotient_by_central(const GroupPtr& g, const Subgroup& n);

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h,
                        const Limits& limits = {});

struct SubTableResult {
  GroupPtr group;
  std::vector<elem_t> to_parent;  // new index -> parent element
};

// The subgroup as a standalone table (elements reindexed in sorted order).
SubTableResult subgroup_table(const Subgroup& s);

}  // namespace ap2
