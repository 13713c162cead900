#include "ap2/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "ap2/errors.hpp"
#include "ap2/util.hpp"

namespace ap2 {

namespace {

constexpr long long kFullAssocLimit = 512;
constexpr int kRandomAssocTrials = 100000;
constexpr std::uint64_t kAssocSeed = 0x5eed0a55u;

}  // namespace

GroupPtr GroupTable::from_table(std::string label, std::vector<elem_t> table,
                                long long order) {
  if (order < 1) throw InputError("group order must be positive");
  if (static_cast<long long>(table.size()) != order * order)
    throw InputError("table size does not match order " + std::to_string(order));
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= order)
      throw InputError("table entry out of range at position " + std::to_string(i));
  }

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->label_ = std::move(label);
  g->order_ = order;
  g->table_ = std::move(table);

  const long long n = order;
  auto at = [&](elem_t a, elem_t b) { return g->table_[static_cast<std::size_t>(a) * n + b]; };

  // latin square: every row and column is a permutation
  {
    std::vector<char> seen(n);
    for (elem_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (elem_t b = 0; b < n; ++b) {
        if (seen[at(a, b)]++)
          throw InputError("row " + std::to_string(a) + " of table is not a permutation");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (elem_t b = 0; b < n; ++b) {
        if (seen[at(b, a)]++)
          throw InputError("column " + std::to_string(a) + " of table is not a permutation");
      }
    }
  }

  elem_t id = -1;
  for (elem_t e = 0; e < n; ++e) {
    bool ok = true;
    for (elem_t x = 0; x < n && ok; ++x)
      ok = at(e, x) == x && at(x, e) == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw InputError("table has no identity element");
  g->identity_ = id;

  g->inverses_.assign(n, -1);
  for (elem_t a = 0; a < n; ++a) {
    for (elem_t b = 0; b < n; ++b) {
      if (at(a, b) == id && at(b, a) == id) {
        g->inverses_[a] = b;
        break;
      }
    }
    if (g->inverses_[a] < 0)
      throw InputError("element " + std::to_string(a) + " has no two-sided inverse");
  }

  if (n <= kFullAssocLimit) {
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b) {
        const elem_t ab = at(a, b);
        for (elem_t c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            throw InputError("table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
      }
  } else {
    std::mt19937_64 rng(kAssocSeed);
    std::uniform_int_distribution<elem_t> pick(0, static_cast<elem_t>(n - 1));
    for (int t = 0; t < kRandomAssocTrials; ++t) {
      const elem_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw InputError("table is not associative at (" + std::to_string(a) + "," +
                         std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }

  g->element_orders_.assign(n, 0);
  for (elem_t a = 0; a < n; ++a) {
    elem_t x = a;
    int k = 1;
    while (x != id) {
      x = at(x, a);
      ++k;
      if (k > n) throw InternalError("element order exceeds group order");
    }
    g->element_orders_[a] = k;
  }

  return g;
}

elem_t GroupTable::power(elem_t g, long long k) const {
  const int ord = element_orders_[g];
  k %= ord;
  if (k < 0) k += ord;
  elem_t acc = identity_;
  elem_t base = g;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

elem_t GroupTable::conjugate(elem_t a, elem_t b) const {
  return mul(mul(inverse(b), a), b);
}

elem_t GroupTable::commutator(elem_t a, elem_t b) const {
  return mul(mul(inverse(a), inverse(b)), mul(a, b));
}

long long GroupTable::exponent() const {
  long long e = 1;
  for (elem_t g = 0; g < order_; ++g) e = std::lcm<long long>(e, element_orders_[g]);
  return e;
}

bool GroupTable::is_abelian() const {
  for (elem_t a = 0; a < order_; ++a)
    for (elem_t b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<long long> GroupTable::p_group_prime() const {
  return prime_power_base(order_);
}

bool GroupTable::is_p_group(long long p) const {
  if (order_ == 1) return true;
  return power_exponent(order_, p).has_value();
}

std::string format_iso_hint(const IsoHint& h) {
  std::ostringstream out;
  if (h.size == 1) return "1";
  if (h.elem_ab_rank == 1 || h.cyclic) {
    out << "C" << h.size;
    return out.str();
  }
  if (h.elem_ab_rank > 1) {
    out << "C" << h.exponent << "^" << h.elem_ab_rank;
    return out.str();
  }
  out << (h.abelian ? "abelian" : "nonabelian") << "(order=" << h.size
      << ",exp=" << h.exponent << ")";
  return out.str();
}

Subgroup::Subgroup(GroupPtr parent, std::vector<elem_t> elements)
    : parent_(std::move(parent)), elems_(std::move(elements)) {
  if (!parent_) throw InputError("subgroup needs a parent group");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty()) throw InputError("subgroup cannot be empty");
  const long long n = parent_->order();
  for (elem_t g : elems_)
    if (g < 0 || g >= n) throw InputError("subgroup element out of range");
  if (!contains(parent_->identity()))
    throw InputError("subgroup does not contain the identity");
  for (elem_t a : elems_) {
    if (!contains(parent_->inverse(a)))
      throw InputError("subgroup not closed under inverse");
    for (elem_t b : elems_)
      if (!contains(parent_->mul(a, b)))
        throw InputError("subgroup not closed under multiplication");
  }
  if (parent_->order() % size() != 0)
    throw InternalError("subgroup size does not divide group order");
}

bool Subgroup::contains(elem_t g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(),
                       other.elems_.end());
}

bool Subgroup::is_abelian() const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = i + 1; j < elems_.size(); ++j)
      if (parent_->mul(elems_[i], elems_[j]) != parent_->mul(elems_[j], elems_[i]))
        return false;
  return true;
}

long long Subgroup::exponent() const {
  long long e = 1;
  for (elem_t g : elems_) e = std::lcm<long long>(e, parent_->element_order(g));
  return e;
}

bool Subgroup::is_cyclic() const {
  for (elem_t g : elems_)
    if (parent_->element_order(g) == size()) return true;
  return false;
}

std::optional<int> Subgroup::elementary_rank(long long p) const {
  if (size() == 1) return 0;
  auto r = power_exponent(size(), p);
  if (!r) return std::nullopt;
  for (elem_t g : elems_) {
    const int o = parent_->element_order(g);
    if (o != 1 && o != p) return std::nullopt;
  }
  if (!is_abelian()) return std::nullopt;
  return r;
}

IsoHint Subgroup::iso_hint() const {
  IsoHint h;
  h.size = size();
  h.exponent = exponent();
  h.abelian = is_abelian();
  h.cyclic = is_cyclic();
  h.elem_ab_rank = -1;
  if (h.abelian && h.exponent > 1 && is_prime(h.exponent)) {
    if (auto r = elementary_rank(h.exponent)) h.elem_ab_rank = *r;
  } else if (h.size == 1) {
    h.elem_ab_rank = 0;
  }
  return h;
}

Subgroup closure(const GroupPtr& g, std::span<const elem_t> gens) {
  std::set<elem_t> seen;
  seen.insert(g->identity());
  std::vector<elem_t> frontier(seen.begin(), seen.end());
  for (elem_t x : gens) {
    if (x < 0 || x >= g->order()) throw InputError("generator out of range");
    if (seen.insert(x).second) frontier.push_back(x);
  }
  // BFS over right-multiplication by the generators
  while (!frontier.empty()) {
    std::vector<elem_t> next;
    for (elem_t x : frontier)
      for (elem_t s : gens) {
        const elem_t y = g->mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Subgroup(g, std::vector<elem_t>(seen.begin(), seen.end()));
}

Subgroup center(const GroupPtr& g) {
  std::vector<elem_t> z;
  const long long n = g->order();
  for (elem_t a = 0; a < n; ++a) {
    bool central = true;
    for (elem_t b = 0; b < n && central; ++b)
      central = g->mul(a, b) == g->mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup(g, std::move(z));
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::set<elem_t> comms;
  const long long n = g->order();
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) comms.insert(g->commutator(a, b));
  std::vector<elem_t> gens(comms.begin(), comms.end());
  return closure(g, gens);
}

Subgroup centralizer(const GroupPtr& g, std::span<const elem_t> s) {
  std::vector<elem_t> c;
  const long long n = g->order();
  for (elem_t a = 0; a < n; ++a) {
    bool commutes = true;
    for (elem_t b : s) {
      if (b < 0 || b >= n) throw InputError("centralizer target out of range");
      if (g->mul(a, b) != g->mul(b, a)) {
        commutes = false;
        break;
      }
    }
    if (commutes) c.push_back(a);
  }
  return Subgroup(g, std::move(c));
}

QuotientResult quotient_by_central(const GroupPtr& g, const Subgroup& n) {
  if (n.parent().get() != g.get())
    throw InputError("quotient subgroup belongs to a different group");
  for (elem_t x : n.elements())
    for (elem_t a = 0; a < g->order(); ++a)
      if (g->mul(x, a) != g->mul(a, x))
        throw InputError("quotient subgroup is not central");

  const long long ord = g->order();
  std::vector<elem_t> coset_min(ord);
  for (elem_t a = 0; a < ord; ++a) {
    elem_t m = a;
    for (elem_t x : n.elements()) m = std::min(m, g->mul(a, x));
    coset_min[a] = m;
  }
  std::vector<elem_t> reps;
  for (elem_t a = 0; a < ord; ++a)
    if (coset_min[a] == a) reps.push_back(a);

  std::vector<elem_t> index_of(ord, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<elem_t>(i);

  const long long q = static_cast<long long>(reps.size());
  if (q * n.size() != ord) throw InternalError("coset count mismatch");

  std::vector<elem_t> table(static_cast<std::size_t>(q) * q);
  for (long long i = 0; i < q; ++i)
    for (long long j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * q + j] =
          index_of[coset_min[g->mul(reps[i], reps[j])]];

  QuotientResult res;
  res.group = GroupTable::from_table(g->label() + "/N" + std::to_string(n.size()),
                                     std::move(table), q);
  res.projection.resize(ord);
  for (elem_t a = 0; a < ord; ++a) res.projection[a] = index_of[coset_min[a]];
  return res;
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, const Limits& limits) {
  const long long ng = g->order(), nh = h->order();
  if (ng * nh > limits.max_order)
    throw CapError("direct product order " + std::to_string(ng * nh) +
                   " exceeds max order " + std::to_string(limits.max_order));
  const long long n = ng * nh;
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (elem_t a1 = 0; a1 < ng; ++a1)
    for (elem_t a2 = 0; a2 < nh; ++a2) {
      const long long a = static_cast<long long>(a1) * nh + a2;
      for (elem_t b1 = 0; b1 < ng; ++b1)
        for (elem_t b2 = 0; b2 < nh; ++b2) {
          const long long b = static_cast<long long>(b1) * nh + b2;
          table[static_cast<std::size_t>(a) * n + b] =
              static_cast<elem_t>(static_cast<long long>(g->mul(a1, b1)) * nh +
                                  h->mul(a2, b2));
        }
    }
  return GroupTable::from_table(g->label() + " x " + h->label(), std::move(table), n);
}

SubTableResult subgroup_table(const Subgroup& s) {
  const auto& parent = s.parent();
  const auto& elems = s.elements();
  const long long n = s.size();
  std::vector<elem_t> index_of(parent->order(), -1);
  for (long long i = 0; i < n; ++i) index_of[elems[i]] = static_cast<elem_t>(i);
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      const elem_t prod = parent->mul(elems[i], elems[j]);
      table[static_cast<std::size_t>(i) * n + j] = index_of[prod];
    }
  SubTableResult res;
  res.group = GroupTable::from_table(parent->label() + "|sub" + std::to_string(n),
                                     std::move(table), n);
  res.to_parent = elems;
  return res;
}

}  // namespace ap2
