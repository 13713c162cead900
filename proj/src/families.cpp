#include "ap2/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ap2/errors.hpp"
#include "ap2/util.hpp"

namespace ap2 {

namespace {

void check_prime(long long p) {
  if (!is_prime(p)) throw InputError("p=" + std::to_string(p) + " is not prime");
}

void check_order_cap(long long order, const Limits& limits, const std::string& what) {
  if (order > limits.max_order)
    throw CapError(what + " order " + std::to_string(order) + " exceeds max order " +
                   std::to_string(limits.max_order));
}

// ---- parsing ----------------------------------------------------------

struct Tokenizer {
  std::string s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw InputError("family spec: expected '" + std::string(1, c) + "' near position " +
                       std::to_string(i) + " in \"" + s + "\"");
  }
  std::string word() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (start == i) throw InputError("family spec: expected a word in \"" + s + "\"");
    return s.substr(start, i - start);
  }
  long long number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i)
      throw InputError("family spec: expected a number near position " +
                       std::to_string(start) + " in \"" + s + "\"");
    return std::stoll(s.substr(start, i - start));
  }
  long long keyed_number(const std::string& key) {
    skip_ws();
    if (i >= s.size())
      throw InputError("family spec: missing " + key + "=... in \"" + s + "\"");
    const std::string w = word();
    if (w != key) throw InputError("family spec: expected " + key + "=..., got \"" + w + "\"");
    expect('=');
    return number();
  }
};

std::vector<long long> parse_bracket_numbers(Tokenizer& tok) {
  tok.expect('[');
  std::vector<long long> out;
  if (!tok.consume(']')) {
    do {
      out.push_back(tok.number());
    } while (tok.consume(','));
    tok.expect(']');
  }
  return out;
}

FamilySpec parse_factor(Tokenizer& tok) {
  FamilySpec f;
  const std::string kind = tok.word();
  if (kind == "S0" || kind == "S1") {
    f.kind = kind == "S0" ? FamilySpec::Kind::S0 : FamilySpec::Kind::S1;
    tok.expect('(');
    f.n = static_cast<int>(tok.number());
    tok.expect(',');
    f.m = static_cast<int>(tok.number());
    tok.expect(')');
  } else if (kind == "abelian") {
    f.kind = FamilySpec::Kind::Abelian;
    tok.expect('(');
    do {
      f.invariant_factors.push_back(tok.number());
    } while (tok.consume(','));
    tok.expect(')');
  } else if (kind == "extraspecial_plus") {
    f.kind = FamilySpec::Kind::ExtraspecialPlus;
  } else if (kind == "extraspecial_minus") {
    f.kind = FamilySpec::Kind::ExtraspecialMinus;
  } else {
    throw InputError("family spec: unknown central product factor kind \"" + kind + "\"");
  }
  return f;
}

void validate_spec(const FamilySpec& s);

void validate_factor(const FamilySpec& f, long long p) {
  switch (f.kind) {
    case FamilySpec::Kind::S0:
    case FamilySpec::Kind::S1:
    case FamilySpec::Kind::Abelian:
    case FamilySpec::Kind::ExtraspecialPlus:
    case FamilySpec::Kind::ExtraspecialMinus:
      break;
    default:
      throw InputError("central product factors must be S0, S1 or abelian");
  }
  FamilySpec copy = f;
  copy.p = p;
  validate_spec(copy);
}

void validate_spec(const FamilySpec& s) {
  check_prime(s.p);
  switch (s.kind) {
    case FamilySpec::Kind::S0:
      if (s.n < 2)
        throw InputError("S0 requires n >= 2 (x^(p^(n-1)) must be nontrivial)");
      if (s.m < 1) throw InputError("S0 requires m >= 1");
      break;
    case FamilySpec::Kind::S1:
      if (s.n < 1 || s.m < 1) throw InputError("S1 requires n, m >= 1");
      break;
    case FamilySpec::Kind::ExtraspecialPlus:
    case FamilySpec::Kind::ExtraspecialMinus:
      break;
    case FamilySpec::Kind::Abelian:
      if (s.invariant_factors.empty())
        throw InputError("abelian spec needs at least one invariant factor");
      for (long long f : s.invariant_factors) {
        auto e = power_exponent(f, s.p);
        if (!e || *e < 1)
          throw InputError("abelian invariant factor " + std::to_string(f) +
                           " is not a positive power of p=" + std::to_string(s.p));
      }
      break;
    case FamilySpec::Kind::CentralProduct:
      if (s.factors.empty()) throw InputError("central product needs at least one factor");
      for (const auto& f : s.factors) validate_factor(f, s.p);
      break;
    case FamilySpec::Kind::JordanSemidirect:
      if (s.d < 1) throw InputError("jordan_semidirect requires d >= 1");
      if (s.d > s.p)
        throw InputError("jordan_semidirect requires d <= p (a single Jordan block of size " +
                         std::to_string(s.d) + " over F_" + std::to_string(s.p) +
                         " has order p^2 or more)");
      break;
  }
}

std::string format_factor(const FamilySpec& f) {
  std::ostringstream out;
  switch (f.kind) {
    case FamilySpec::Kind::S0:
      out << "S0(" << f.n << "," << f.m << ")";
      break;
    case FamilySpec::Kind::S1:
      out << "S1(" << f.n << "," << f.m << ")";
      break;
    case FamilySpec::Kind::ExtraspecialPlus:
      out << "extraspecial_plus";
      break;
    case FamilySpec::Kind::ExtraspecialMinus:
      out << "extraspecial_minus";
      break;
    case FamilySpec::Kind::Abelian: {
      out << "abelian(";
      for (std::size_t i = 0; i < f.invariant_factors.size(); ++i) {
        if (i) out << ",";
        out << f.invariant_factors[i];
      }
      out << ")";
      break;
    }
    default:
      throw InternalError("unexpected central product factor kind");
  }
  return out.str();
}

// ---- table builders ---------------------------------------------------

GroupPtr table_from_spec(const FamilySpec& spec, std::vector<elem_t> table,
                         long long order) {
  return GroupTable::from_table(format_family(spec), std::move(table), order);
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  Tokenizer tok{text};
  FamilySpec s;
  const std::string kind = tok.word();
  if (kind == "S0" || kind == "S1") {
    s.kind = kind == "S0" ? FamilySpec::Kind::S0 : FamilySpec::Kind::S1;
    s.n = static_cast<int>(tok.keyed_number("n"));
    s.m = static_cast<int>(tok.keyed_number("m"));
  } else if (kind == "extraspecial_plus") {
    s.kind = FamilySpec::Kind::ExtraspecialPlus;
  } else if (kind == "extraspecial_minus") {
    s.kind = FamilySpec::Kind::ExtraspecialMinus;
  } else if (kind == "abelian") {
    s.kind = FamilySpec::Kind::Abelian;
    s.invariant_factors = parse_bracket_numbers(tok);
  } else if (kind == "central_product") {
    s.kind = FamilySpec::Kind::CentralProduct;
    tok.expect('[');
    do {
      s.factors.push_back(parse_factor(tok));
    } while (tok.consume(','));
    tok.expect(']');
  } else if (kind == "jordan_semidirect") {
    s.kind = FamilySpec::Kind::JordanSemidirect;
    s.d = static_cast<int>(tok.keyed_number("d"));
  } else {
    throw InputError("family spec: unknown kind \"" + kind + "\"");
  }
  s.p = tok.keyed_number("p");
  if (!tok.eof()) throw InputError("family spec: trailing input in \"" + text + "\"");
  validate_spec(s);
  return s;
}

std::string format_family(const FamilySpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case FamilySpec::Kind::S0:
      out << "S0 n=" << spec.n << " m=" << spec.m;
      break;
    case FamilySpec::Kind::S1:
      out << "S1 n=" << spec.n << " m=" << spec.m;
      break;
    case FamilySpec::Kind::ExtraspecialPlus:
      out << "extraspecial_plus";
      break;
    case FamilySpec::Kind::ExtraspecialMinus:
      out << "extraspecial_minus";
      break;
    case FamilySpec::Kind::Abelian: {
      out << "abelian [";
      for (std::size_t i = 0; i < spec.invariant_factors.size(); ++i) {
        if (i) out << ",";
        out << spec.invariant_factors[i];
      }
      out << "]";
      break;
    }
    case FamilySpec::Kind::CentralProduct: {
      out << "central_product [";
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out << ", ";
        out << format_factor(spec.factors[i]);
      }
      out << "]";
      break;
    }
    case FamilySpec::Kind::JordanSemidirect:
      out << "jordan_semidirect d=" << spec.d;
      break;
  }
  out << " p=" << spec.p;
  return out.str();
}

GroupPtr build_S0(int n, int m, long long p, const Limits& limits) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::S0;
  spec.n = n;
  spec.m = m;
  spec.p = p;
  validate_spec(spec);

  const long long pn = ipow(p, n), pm = ipow(p, m);
  const long long order = pn * pm;
  check_order_cap(order, limits, "S0");

  // elements y^j x^i, index j*p^n + i; y^-1 x y = x^w with w = 1 + p^(n-1)
  const long long w = 1 + ipow(p, n - 1);
  std::vector<long long> wpow(pm);
  wpow[0] = 1;
  for (long long l = 1; l < pm; ++l) wpow[l] = (wpow[l - 1] * w) % pn;

  std::vector<elem_t> table(static_cast<std::size_t>(order) * order);
  for (long long j1 = 0; j1 < pm; ++j1)
    for (long long i1 = 0; i1 < pn; ++i1) {
      const long long a = j1 * pn + i1;
      for (long long j2 = 0; j2 < pm; ++j2)
        for (long long i2 = 0; i2 < pn; ++i2) {
          const long long b = j2 * pn + i2;
          const long long j = (j1 + j2) % pm;
          const long long i = (i1 * wpow[j2] + i2) % pn;
          table[static_cast<std::size_t>(a) * order + b] =
              static_cast<elem_t>(j * pn + i);
        }
    }

  auto g = table_from_spec(spec, std::move(table), order);

  const elem_t x = 1, y = static_cast<elem_t>(pn);
  if (g->element_order(x) != pn || g->element_order(y) != pm ||
      g->commutator(x, y) != g->power(x, ipow(p, n - 1)))
    throw InternalError("S0 builder: defining relations failed self-check");
  return g;
}

GroupPtr build_S1(int n, int m, long long p, const Limits& limits) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::S1;
  spec.n = n;
  spec.m = m;
  spec.p = p;
  validate_spec(spec);

  const long long pn = ipow(p, n), pm = ipow(p, m);
  const long long order = pn * pm * p;
  check_order_cap(order, limits, "S1");

  const elem_t x = static_cast<elem_t>(pm * p), y = static_cast<elem_t>(p), z = 1;

  // elements x^i y^j z^k, index (i*p^m + j)*p + k; the commutation exponent sign
  // is fixed by requiring [x,y] = z in the built table.
  for (long long sigma : {-1, +1}) {
    std::vector<elem_t> table(static_cast<std::size_t>(order) * order);
    for (long long i1 = 0; i1 < pn; ++i1)
      for (long long j1 = 0; j1 < pm; ++j1)
        for (long long k1 = 0; k1 < p; ++k1) {
          const long long a = (i1 * pm + j1) * p + k1;
          for (long long i2 = 0; i2 < pn; ++i2)
            for (long long j2 = 0; j2 < pm; ++j2)
              for (long long k2 = 0; k2 < p; ++k2) {
                const long long b = (i2 * pm + j2) * p + k2;
                const long long i = (i1 + i2) % pn;
                const long long j = (j1 + j2) % pm;
                long long k = (k1 + k2 + sigma * ((j1 * i2) % p)) % p;
                if (k < 0) k += p;
                table[static_cast<std::size_t>(a) * order + b] =
                    static_cast<elem_t>((i * pm + j) * p + k);
              }
        }
    auto g = table_from_spec(spec, std::move(table), order);
    if (g->commutator(x, y) != z) continue;
    if (g->element_order(x) != pn || g->element_order(y) != pm ||
        g->element_order(z) != p || g->commutator(z, x) != g->identity() ||
        g->commutator(z, y) != g->identity())
      throw InternalError("S1 builder: defining relations failed self-check");
    return g;
  }
  throw InternalError("S1 builder: no commutation sign satisfies [x,y] = z");
}

GroupPtr build_extraspecial(long long p, bool plus, const Limits& limits) {
  FamilySpec spec;
  spec.kind = plus ? FamilySpec::Kind::ExtraspecialPlus : FamilySpec::Kind::ExtraspecialMinus;
  spec.p = p;
  validate_spec(spec);
  auto g = plus ? build_S1(1, 1, p, limits) : build_S0(2, 1, p, limits);
  return GroupTable::from_table(format_family(spec), g->raw_table(), g->order());
}

GroupPtr build_abelian(const std::vector<long long>& invariant_factors, long long p,
                       const Limits& limits) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::Abelian;
  spec.invariant_factors = invariant_factors;
  spec.p = p;
  validate_spec(spec);

  long long order = 1;
  for (long long f : invariant_factors) {
    order *= f;
    check_order_cap(order, limits, "abelian");
  }

  const std::size_t r = invariant_factors.size();
  std::vector<long long> stride(r);
  long long acc = 1;
  for (std::size_t i = r; i-- > 0;) {
    stride[i] = acc;
    acc *= invariant_factors[i];
  }

  std::vector<elem_t> table(static_cast<std::size_t>(order) * order);
  std::vector<long long> da(r), db(r);
  for (long long a = 0; a < order; ++a) {
    long long t = a;
    for (std::size_t i = 0; i < r; ++i) {
      da[i] = t / stride[i];
      t %= stride[i];
    }
    for (long long b = 0; b < order; ++b) {
      t = b;
      long long c = 0;
      for (std::size_t i = 0; i < r; ++i) {
        db[i] = t / stride[i];
        t %= stride[i];
        c += ((da[i] + db[i]) % invariant_factors[i]) * stride[i];
      }
      table[static_cast<std::size_t>(a) * order + b] = static_cast<elem_t>(c);
    }
  }
  return table_from_spec(spec, std::move(table), order);
}

GroupPtr build_jordan_semidirect(long long p, int d, const Limits& limits) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::JordanSemidirect;
  spec.d = d;
  spec.p = p;
  validate_spec(spec);

  const long long pd = ipow(p, d);
  const long long order = pd * p;
  check_order_cap(order, limits, "jordan_semidirect");

  // J = I + N with N the single nilpotent Jordan block; d <= p gives J^p = I.
  // Powers of J as d x d matrices over F_p, column-major action on digit vectors.
  std::vector<std::vector<long long>> jpow(p, std::vector<long long>(d * d, 0));
  for (int i = 0; i < d; ++i) jpow[0][i * d + i] = 1;
  std::vector<long long> jmat(d * d, 0);
  for (int i = 0; i < d; ++i) {
    jmat[i * d + i] = 1;
    if (i + 1 < d) jmat[i * d + (i + 1)] = 1;  // N e_(i+1) = e_i
  }
  for (long long s = 1; s < p; ++s)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        long long v = 0;
        for (int k = 0; k < d; ++k) v += jpow[s - 1][i * d + k] * jmat[k * d + j];
        jpow[s][i * d + j] = v % p;
      }
  // self-check J^p = I
  {
    std::vector<long long> jp(d * d, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        long long v = 0;
        for (int k = 0; k < d; ++k) v += jpow[p - 1][i * d + k] * jmat[k * d + j];
        jp[i * d + j] = v % p;
      }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (jp[i * d + j] != (i == j ? 1 : 0))
          throw InternalError("jordan_semidirect: J^p != I");
  }

  auto digits = [&](long long v, std::vector<long long>& out) {
    for (int i = 0; i < d; ++i) {
      out[i] = v % p;
      v /= p;
    }
  };
  auto undigits = [&](const std::vector<long long>& in) {
    long long v = 0;
    for (int i = d; i-- > 0;) v = v * p + in[i];
    return v;
  };

  // element (v, s) has index s*p^d + v; (v,s)(w,t) = (v + J^s w, s+t)
  std::vector<elem_t> table(static_cast<std::size_t>(order) * order);
  std::vector<long long> vd(d), wd(d), rd(d);
  for (long long s = 0; s < p; ++s)
    for (long long v = 0; v < pd; ++v) {
      const long long a = s * pd + v;
      digits(v, vd);
      for (long long t = 0; t < p; ++t)
        for (long long w = 0; w < pd; ++w) {
          const long long b = t * pd + w;
          digits(w, wd);
          for (int i = 0; i < d; ++i) {
            long long acc = vd[i];
            for (int j = 0; j < d; ++j) acc += jpow[s][i * d + j] * wd[j];
            rd[i] = acc % p;
          }
          table[static_cast<std::size_t>(a) * order + b] =
              static_cast<elem_t>(((s + t) % p) * pd + undigits(rd));
        }
    }
  return table_from_spec(spec, std::move(table), order);
}

namespace {

// Designated order-p central element used for amalgamation, as an index into
// the factor's own table.
elem_t designated_central(const FamilySpec& f, const GroupPtr& g) {
  const long long p = f.p;
  switch (f.kind) {
    case FamilySpec::Kind::S0:
      return g->power(1, ipow(p, f.n - 1));  // x^(p^(n-1))
    case FamilySpec::Kind::ExtraspecialMinus:
      return g->power(1, p);
    case FamilySpec::Kind::S1:
    case FamilySpec::Kind::ExtraspecialPlus:
      return 1;  // z
    case FamilySpec::Kind::Abelian: {
      // order-p element of the first invariant-factor component
      const long long f1 = f.invariant_factors.front();
      if (f1 % p != 0)
        throw InputError("abelian central product factor has no designated order-p element");
      long long stride = 1;
      for (std::size_t i = 1; i < f.invariant_factors.size(); ++i)
        stride *= f.invariant_factors[i];
      const elem_t gen = static_cast<elem_t>(stride);  // generator of first component
      return g->power(gen, f1 / p);
    }
    default:
      throw InternalError("unexpected factor kind in designated_central");
  }
}

}  // namespace

GroupPtr build_central_product(const std::vector<FamilySpec>& factors, long long p,
                               const Limits& limits) {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::CentralProduct;
  spec.factors = factors;
  spec.p = p;
  validate_spec(spec);

  std::vector<GroupPtr> built;
  std::vector<elem_t> designated;
  for (const auto& f : factors) {
    FamilySpec ff = f;
    ff.p = p;
    auto g = build_family(ff, limits);
    designated.push_back(designated_central(ff, g));
    if (g->element_order(designated.back()) != p)
      throw InternalError("designated central element does not have order p");
    built.push_back(std::move(g));
  }

  GroupPtr prod = built[0];
  for (std::size_t i = 1; i < built.size(); ++i)
    prod = direct_product(prod, built[i], limits);  // cap applies to the intermediate

  // embedded index of factor i's designated element: identity elsewhere
  const std::size_t k = built.size();
  std::vector<long long> tail(k);
  long long acc = 1;
  for (std::size_t i = k; i-- > 0;) {
    tail[i] = acc;
    acc *= built[i]->order();
  }
  auto embed = [&](std::size_t i, elem_t e) {
    return static_cast<elem_t>(static_cast<long long>(e) * tail[i]);
  };

  std::vector<elem_t> gens;
  for (std::size_t i = 0; i + 1 < k; ++i)
    gens.push_back(
        prod->mul(embed(i, designated[i]), prod->inverse(embed(i + 1, designated[i + 1]))));

  if (gens.empty()) {
    return GroupTable::from_table(format_family(spec), prod->raw_table(), prod->order());
  }

  Subgroup n = closure(prod, gens);
  if (n.size() != ipow(p, static_cast<int>(k - 1)))
    throw InternalError("central product amalgamation subgroup has wrong order");
  auto q = quotient_by_central(prod, n);
  return GroupTable::from_table(format_family(spec), q.group->raw_table(),
                                q.group->order());
}

GroupPtr build_family(const FamilySpec& spec, const Limits& limits) {
  validate_spec(spec);
  switch (spec.kind) {
    case FamilySpec::Kind::S0:
      return build_S0(spec.n, spec.m, spec.p, limits);
    case FamilySpec::Kind::S1:
      return build_S1(spec.n, spec.m, spec.p, limits);
    case FamilySpec::Kind::ExtraspecialPlus:
      return build_extraspecial(spec.p, true, limits);
    case FamilySpec::Kind::ExtraspecialMinus:
      return build_extraspecial(spec.p, false, limits);
    case FamilySpec::Kind::Abelian:
      return build_abelian(spec.invariant_factors, spec.p, limits);
    case FamilySpec::Kind::CentralProduct:
      return build_central_product(spec.factors, spec.p, limits);
    case FamilySpec::Kind::JordanSemidirect:
      return build_jordan_semidirect(spec.p, spec.d, limits);
  }
  throw InternalError("unreachable family kind");
}

GroupPtr build_family(const std::string& text, const Limits& limits) {
  return build_family(parse_family(text), limits);
}

GroupPtr group_from_permutations(const std::string& label, int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 const Limits& limits) {
  if (degree < 1) throw InputError("permutation degree must be positive");
  if (generators.empty()) throw InputError("need at least one permutation generator");
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& g = generators[gi];
    if (static_cast<int>(g.size()) != degree)
      throw InputError("generator " + std::to_string(gi) + " has wrong length");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v]++)
        throw InputError("generator " + std::to_string(gi) + " is not a permutation");
    }
  }

  using Perm = std::vector<int>;
  auto compose = [&](const Perm& a, const Perm& b) {
    Perm c(degree);
    for (int i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  };

  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  std::map<Perm, int> seen;
  std::vector<Perm> elems{id};
  seen[id] = 0;
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier)
      for (const auto& g : generators) {
        Perm c = compose(elems[idx], g);
        if (seen.emplace(c, static_cast<int>(elems.size())).second) {
          elems.push_back(std::move(c));
          if (static_cast<long long>(elems.size()) > limits.max_order)
            throw CapError("permutation group closure exceeds max order " +
                           std::to_string(limits.max_order));
          next.push_back(elems.size() - 1);
        }
      }
    frontier = std::move(next);
  }

  // reindex in lexicographic order for determinism
  std::sort(elems.begin(), elems.end());
  std::map<Perm, elem_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<elem_t>(i);

  const long long n = static_cast<long long>(elems.size());
  std::vector<elem_t> table(static_cast<std::size_t>(n) * n);
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return GroupTable::from_table(label, std::move(table), n);
}

}  // namespace ap2
