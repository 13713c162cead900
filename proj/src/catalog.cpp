#include "ap2/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "ap2/complex.hpp"
#include "ap2/errors.hpp"
#include "ap2/homology.hpp"
#include "ap2/poset.hpp"
#include "ap2/util.hpp"
#include "ap2/verifier.hpp"

namespace ap2 {

using nlohmann::json;
using nlohmann::ordered_json;

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const CatalogEntry& e : entries) out.push_back(e.name);
  return out;
}

namespace {

[[noreturn]] void entry_error(const std::string& name, const std::string& msg) {
  throw InputError("entry '" + name + "': " + msg);
}

long long require_int(const json& ej, const std::string& name, const char* key) {
  const json& v = ej.at(key);
  if (!v.is_number_integer())
    entry_error(name, std::string("'") + key + "' must be an integer");
  return v.get<long long>();
}

void parse_table_payload(const json& ej, const std::string& name,
                         CatalogEntry& e) {
  const json& tj = ej.at("table");
  if (!tj.is_array() || tj.empty())
    entry_error(name, "'table' must be a nonempty array of rows");
  const std::size_t n = tj.size();
  e.table.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = tj[r];
    if (!row.is_array() || row.size() != n)
      entry_error(name, "table row " + std::to_string(r) + " has length " +
                            std::to_string(row.size()) + ", expected " +
                            std::to_string(n) + " (table must be square)");
    std::vector<long long> vals;
    vals.reserve(n);
    for (const json& v : row) {
      if (!v.is_number_integer())
        entry_error(name, "table row " + std::to_string(r) +
                              " contains a non-integer");
      const long long x = v.get<long long>();
      if (x < 0 || x >= static_cast<long long>(n))
        entry_error(name, "table row " + std::to_string(r) + " contains " +
                              std::to_string(x) + ", outside [0, " +
                              std::to_string(n) + ")");
      vals.push_back(x);
    }
    e.table.push_back(std::move(vals));
  }
  if (!power_exponent(static_cast<long long>(n), e.prime))
    entry_error(name, "order " + std::to_string(n) + " is not a power of " +
                          std::to_string(e.prime));
}

void parse_permgen_payload(const json& ej, const std::string& name,
                           CatalogEntry& e) {
  const long long deg = require_int(ej, name, "degree");
  if (deg < 1 || deg > 100000)
    entry_error(name, "'degree' must be in [1, 100000]");
  e.degree = static_cast<int>(deg);
  const json& gj = ej.at("generators");
  if (!gj.is_array() || gj.empty())
    entry_error(name, "'generators' must be a nonempty array of permutations");
  for (std::size_t k = 0; k < gj.size(); ++k) {
    const json& pj = gj[k];
    if (!pj.is_array() || pj.size() != static_cast<std::size_t>(e.degree))
      entry_error(name, "generator " + std::to_string(k) + " must list " +
                            std::to_string(e.degree) + " images");
    std::vector<int> perm;
    std::vector<char> seen(static_cast<std::size_t>(e.degree), 0);
    perm.reserve(pj.size());
    for (const json& v : pj) {
      if (!v.is_number_integer())
        entry_error(name, "generator " + std::to_string(k) +
                              " contains a non-integer");
      const long long x = v.get<long long>();
      if (x < 0 || x >= deg || seen[static_cast<std::size_t>(x)])
        entry_error(name, "generator " + std::to_string(k) +
                              " is not a permutation of 0.." +
                              std::to_string(deg - 1));
      seen[static_cast<std::size_t>(x)] = 1;
      perm.push_back(static_cast<int>(x));
    }
    e.generators.push_back(std::move(perm));
  }
}

}  // namespace

Catalog parse_catalog(const json& doc) {
  if (!doc.is_object())
    throw InputError("catalog root must be an object with an 'entries' array");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "entries")
      throw InputError("catalog: unknown top-level key '" + it.key() + "'");
  if (!doc.contains("entries") || !doc.at("entries").is_array())
    throw InputError("catalog needs an 'entries' array");

  Catalog cat;
  std::set<std::string> seen;
  for (const json& ej : doc.at("entries")) {
    if (!ej.is_object()) throw InputError("catalog entries must be objects");
    if (!ej.contains("name") || !ej.at("name").is_string())
      throw InputError("every entry needs a string 'name'");
    const std::string name = ej.at("name").get<std::string>();
    if (name.empty()) throw InputError("entry names must be nonempty");
    if (!seen.insert(name).second) entry_error(name, "duplicate name");

    CatalogEntry e;
    e.name = name;
    if (!ej.contains("prime")) entry_error(name, "missing 'prime'");
    e.prime = require_int(ej, name, "prime");
    if (!is_prime(e.prime))
      entry_error(name, std::to_string(e.prime) + " is not prime");
    if (!ej.contains("format") || !ej.at("format").is_string())
      entry_error(name, "missing 'format' (table, permgen, or family)");
    const std::string fmt = ej.at("format").get<std::string>();

    std::set<std::string> allowed = {"name", "prime", "format"};
    if (fmt == "table") {
      e.format = CatalogEntry::Format::Table;
      allowed.insert("table");
      if (!ej.contains("table")) entry_error(name, "table format needs 'table'");
      parse_table_payload(ej, name, e);
    } else if (fmt == "permgen") {
      e.format = CatalogEntry::Format::Permgen;
      allowed.insert({"degree", "generators"});
      if (!ej.contains("degree") || !ej.contains("generators"))
        entry_error(name, "permgen format needs 'degree' and 'generators'");
      parse_permgen_payload(ej, name, e);
    } else if (fmt == "family") {
      e.format = CatalogEntry::Format::Family;
      allowed.insert("family");
      if (!ej.contains("family") || !ej.at("family").is_string())
        entry_error(name, "family format needs a 'family' string");
      try {
        e.family = parse_family(ej.at("family").get<std::string>());
      } catch (const InputError& ie) {
        entry_error(name, ie.what());
      }
      if (e.family.p != e.prime)
        entry_error(name, "family prime " + std::to_string(e.family.p) +
                              " disagrees with entry prime " +
                              std::to_string(e.prime));
      e.family_text = format_family(e.family);
    } else {
      entry_error(name, "unknown format '" + fmt + "'");
    }

    for (auto it = ej.begin(); it != ej.end(); ++it)
      if (!allowed.count(it.key()))
        entry_error(name, "unknown key '" + it.key() + "'");

    cat.entries.push_back(std::move(e));
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& pe) {
    throw InputError("catalog " + path + ": " + pe.what());
  }
  return parse_catalog(doc);
}

ordered_json entry_document(const std::string& name, const GroupPtr& g,
                            long long prime) {
  const long long n = g->order();
  ordered_json rows = ordered_json::array();
  for (long long a = 0; a < n; ++a) {
    ordered_json row = ordered_json::array();
    for (long long b = 0; b < n; ++b)
      row.push_back(g->mul(static_cast<elem_t>(a), static_cast<elem_t>(b)));
    rows.push_back(std::move(row));
  }
  ordered_json entry;
  entry["name"] = name;
  entry["prime"] = prime;
  entry["format"] = "table";
  entry["table"] = std::move(rows);
  ordered_json doc;
  doc["entries"] = ordered_json::array({std::move(entry)});
  return doc;
}

GroupPtr build_entry(const CatalogEntry& e, const Limits& limits) {
  switch (e.format) {
    case CatalogEntry::Format::Table: {
      const long long n = static_cast<long long>(e.table.size());
      if (n > limits.max_order)
        throw CapError("entry '" + e.name + "': order " + std::to_string(n) +
                       " exceeds the table cap " +
                       std::to_string(limits.max_order));
      std::vector<elem_t> flat;
      flat.reserve(static_cast<std::size_t>(n * n));
      for (const auto& row : e.table)
        for (long long v : row) flat.push_back(static_cast<elem_t>(v));
      return GroupTable::from_table(e.name, std::move(flat), n);
    }
    case CatalogEntry::Format::Permgen: {
      GroupPtr g = group_from_permutations(e.name, e.degree, e.generators, limits);
      if (!power_exponent(g->order(), e.prime))
        throw InputError("entry '" + e.name + "': generated group has order " +
                         std::to_string(g->order()) + ", not a power of " +
                         std::to_string(e.prime));
      return g;
    }
    case CatalogEntry::Format::Family:
      return build_family(e.family, limits);
  }
  throw InternalError("unhandled catalog entry format");
}

VerifyMode parse_mode(const std::string& text) {
  if (text == "theorem") return VerifyMode::Theorem;
  if (text == "wedge") return VerifyMode::Wedge;
  if (text == "step2") return VerifyMode::Step2;
  if (text == "cor22") return VerifyMode::Cor22;
  if (text == "p2-explore") return VerifyMode::P2Explore;
  throw InputError("unknown mode '" + text +
                   "' (expected theorem, wedge, step2, cor22, or p2-explore)");
}

std::string format_mode(VerifyMode m) {
  switch (m) {
    case VerifyMode::Theorem: return "theorem";
    case VerifyMode::Wedge: return "wedge";
    case VerifyMode::Step2: return "step2";
    case VerifyMode::Cor22: return "cor22";
    case VerifyMode::P2Explore: return "p2-explore";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

ordered_json rank_counts(const std::vector<std::pair<int, long long>>& by_rank) {
  ordered_json out = ordered_json::object();
  for (const auto& [rank, count] : by_rank)
    out[std::to_string(rank)] = count;
  return out;
}

ordered_json homology_section(const HomologyReport& rep) {
  ordered_json h;
  h["empty_complex"] = rep.empty_complex;
  ordered_json degs = ordered_json::array();
  for (std::size_t j = 0; j < rep.degrees.size(); ++j) {
    ordered_json d;
    d["degree"] = j;
    d["betti"] = rep.degrees[j].betti;
    d["torsion"] = rep.degrees[j].torsion;
    degs.push_back(std::move(d));
  }
  h["degrees"] = std::move(degs);
  h["signature"] = format_signature(rep.signature);
  return h;
}

// The serialization-time Euler recheck: recomputed from the numbers that
// actually land in the document.
void reassert_euler(const ordered_json& complex_sec, const ordered_json& hom_sec) {
  long long chi_f = 0;
  long long sign = 1;
  for (const auto& f : complex_sec.at("f_vector")) {
    chi_f += sign * f.get<long long>();
    sign = -sign;
  }
  if (hom_sec.at("empty_complex").get<bool>()) {
    if (chi_f != 0)
      throw InternalError("serialized Euler characteristic of empty complex");
    return;
  }
  long long chi_b = 1;
  sign = 1;
  for (const auto& d : hom_sec.at("degrees")) {
    chi_b += sign * d.at("betti").get<long long>();
    sign = -sign;
  }
  if (chi_f != chi_b)
    throw InternalError("Euler identity failed at serialization: " +
                        std::to_string(chi_f) + " vs " + std::to_string(chi_b));
}

ordered_json hypotheses_section(const Hypotheses& h) {
  ordered_json out;
  out["p_odd"] = h.p_odd;
  out["derived_rank2"] = h.derived_rank2;
  out["center_cyclic"] = h.center_cyclic;
  return out;
}

}  // namespace

ordered_json analysis_report(const std::string& name, const GroupPtr& g,
                             long long p, const ReportOptions& opts) {
  const auto t0 = Clock::now();
  ordered_json doc;
  doc["schema"] = "ap2.analysis.v1";

  Subgroup zc = center(g);
  Subgroup der = derived_subgroup(g);
  ordered_json meta;
  meta["name"] = name;
  meta["order"] = g->order();
  meta["exponent"] = g->exponent();
  meta["center_order"] = zc.size();
  meta["center_cyclic"] = zc.is_cyclic();
  meta["derived_order"] = der.size();
  meta["derived_type"] = format_iso_hint(der.iso_hint());
  doc["group"] = std::move(meta);
  doc["prime"] = p;
  doc["min_rank"] = opts.min_rank;

  ordered_json timing;
  auto ts = Clock::now();
  ElemAbPoset poset = enumerate_elementary_abelian(g, p, opts.min_rank, opts.limits);
  timing["enumerate"] = ms_since(ts);

  ordered_json poset_sec;
  poset_sec["member_count"] = poset.size();
  poset_sec["by_rank"] = rank_counts(poset.members_by_rank());
  doc["poset"] = std::move(poset_sec);

  ts = Clock::now();
  SimplicialComplex complex = order_complex(poset, opts.limits);
  timing["complex"] = ms_since(ts);
  ordered_json complex_sec;
  complex_sec["f_vector"] = complex.f_vector();
  complex_sec["total_faces"] = complex.total_faces();
  complex_sec["euler_characteristic"] = complex.euler_characteristic();
  doc["complex"] = std::move(complex_sec);

  ts = Clock::now();
  HomologyReport hom = reduced_homology(complex);
  timing["homology"] = ms_since(ts);
  doc["homology"] = homology_section(hom);
  reassert_euler(doc["complex"], doc["homology"]);

  ts = Clock::now();
  TheoremVerdict verdict = check_theorem_same_dimension(g, p, opts.limits);
  timing["theorem"] = ms_since(ts);
  ordered_json th;
  th["outcome"] = format_theorem_outcome(verdict.outcome);
  th["hypotheses"] = hypotheses_section(verdict.hypotheses);
  if (verdict.outcome == TheoremOutcome::Contractible)
    th["contractible_via"] = format_contract_kind(verdict.contract_kind);
  if (verdict.homology)
    th["signature"] = format_signature(verdict.homology->signature);
  if (!verdict.violation.empty()) th["violation_witness"] = verdict.violation;
  doc["theorem"] = std::move(th);

  ts = Clock::now();
  ordered_json dec;
  try {
    DecompositionRecord rec = wedge_decompose(g, opts.limits);
    dec["applicable"] = true;
    dec["m_order"] = rec.m.size();
    dec["z_order"] = rec.z.size();
    dec["chi_size"] = rec.chi.size();
    ordered_json parts = ordered_json::array();
    for (const Subgroup& s : rec.locals)
      parts.push_back(format_iso_hint(s.iso_hint()));
    dec["parts"] = std::move(parts);
  } catch (const InputError& ie) {
    dec["applicable"] = false;
    dec["reason"] = ie.what();
  }
  timing["decomposition"] = ms_since(ts);
  doc["decomposition"] = std::move(dec);

  if (opts.with_timing) {
    timing["total"] = ms_since(t0);
    doc["timing_ms"] = std::move(timing);
  }
  return doc;
}

namespace {

struct EntryOutcome {
  ordered_json doc;
  bool skipped = false;
  bool violation = false;
  long long ms = 0;
};

void mark_skipped(EntryOutcome& r, const std::string& reason) {
  r.skipped = true;
  r.doc["skipped"] = true;
  r.doc["reason"] = reason;
}

void run_theorem(const GroupPtr& g, long long prime, const Limits& limits,
                 EntryOutcome& r) {
  TheoremVerdict v = check_theorem_same_dimension(g, prime, limits);
  r.doc["outcome"] = format_theorem_outcome(v.outcome);
  r.doc["hypotheses"] = hypotheses_section(v.hypotheses);
  r.doc["poset_members"] = v.stats.poset_members;
  if (!v.stats.f_vector.empty()) r.doc["f_vector"] = v.stats.f_vector;
  if (v.outcome == TheoremOutcome::Contractible)
    r.doc["contractible_via"] = format_contract_kind(v.contract_kind);
  if (v.homology) r.doc["signature"] = format_signature(v.homology->signature);
  if (v.outcome == TheoremOutcome::Violation) {
    r.violation = true;
    r.doc["violation_witness"] = v.violation;
  }
}

void run_wedge(const GroupPtr& g, const Limits& limits, EntryOutcome& r) {
  WedgeCheck w = check_wedge_additivity(g, limits);
  r.doc["chi_size"] = static_cast<long long>(w.record.chi.size());
  r.doc["m_order"] = w.record.m.size();
  r.doc["m_complex_contractible"] = w.m_complex_contractible;
  ordered_json parts = ordered_json::array();
  for (const WedgePartReport& pr : w.parts) {
    ordered_json pj;
    pj["part"] = format_iso_hint(pr.part);
    pj["empty_complex"] = pr.empty_complex;
    pj["betti"] = pr.betti;
    parts.push_back(std::move(pj));
  }
  r.doc["parts"] = std::move(parts);
  r.doc["whole_betti"] = w.whole_betti;
  r.doc["expected_betti"] = w.expected_betti;
  r.doc["holds"] = w.holds;
  if (!w.holds) r.violation = true;
}

void run_step2(const GroupPtr& g, const Limits& limits, EntryOutcome& r) {
  Step2Result s = check_step2_assertion(g, limits);
  r.doc["vacuous"] = s.vacuous;
  r.doc["m_order"] = s.m.size();
  r.doc["m_derived_order"] = s.m_derived.size();
  r.doc["holds"] = s.holds;
  if (!s.holds) {
    r.violation = true;
    if (s.witness)
      r.doc["witness_pair"] = ordered_json::array({s.witness->first, s.witness->second});
  }
}

void run_cor22(const CatalogEntry& e, const GroupPtr& g, const Limits& limits,
               EntryOutcome& r) {
  const FamilySpec* from =
      e.format == CatalogEntry::Format::Family ? &e.family : nullptr;
  Cor22Report c = check_cor22_structure(g, from, limits);
  r.doc["derived_central"] = c.derived_central;
  r.doc["derived_is_omega"] = c.derived_is_omega;
  r.doc["form_consistent"] = c.form_consistent;
  r.doc["l"] = c.l;
  r.doc["exponent"] = c.exponent;
  r.doc["roundtrip_checked"] = c.roundtrip_checked;
  if (c.roundtrip_checked) r.doc["roundtrip_ok"] = c.roundtrip_ok;
  r.doc["detail"] = c.detail;
  r.doc["holds"] = c.consequences_hold;
  if (!c.consequences_hold) r.violation = true;
}

void run_p2(const GroupPtr& g, const Limits& limits, EntryOutcome& r) {
  P2Exploration ex = explore_question_p2(g, limits);
  r.doc["poset_members"] = ex.stats.poset_members;
  if (!ex.stats.f_vector.empty()) r.doc["f_vector"] = ex.stats.f_vector;
  r.doc["signature"] = format_signature(ex.homology.signature);
  r.doc["betti_degrees"] = ex.degrees;
  r.doc["consecutive_le2"] = ex.consecutive_le2;
}

}  // namespace

VerifyRun verify_report(const Catalog& catalog, VerifyMode mode,
                        const ReportOptions& opts) {
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    if (opts.prime_filter && catalog.entries[i].prime != *opts.prime_filter)
      continue;
    selected.push_back(i);
  }

  std::vector<EntryOutcome> results(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());

  auto run_one = [&](std::size_t slot) {
    const CatalogEntry& e = catalog.entries[selected[slot]];
    EntryOutcome& r = results[slot];
    const auto t0 = Clock::now();
    r.doc["name"] = e.name;
    r.doc["prime"] = e.prime;
    try {
      if (mode != VerifyMode::P2Explore && e.prime == 2) {
        mark_skipped(r, "p = 2 entries are handled by p2-explore only");
        return;
      }
      if (mode == VerifyMode::P2Explore && e.prime != 2) {
        mark_skipped(r, "p2-explore requires p = 2");
        return;
      }
      GroupPtr g = build_entry(e, opts.limits);
      r.doc["order"] = g->order();
      switch (mode) {
        case VerifyMode::Theorem:
          run_theorem(g, e.prime, opts.limits, r);
          break;
        case VerifyMode::Wedge:
          try {
            run_wedge(g, opts.limits, r);
          } catch (const InputError& ie) {
            mark_skipped(r, ie.what());
          }
          break;
        case VerifyMode::Step2:
          try {
            run_step2(g, opts.limits, r);
          } catch (const InputError& ie) {
            mark_skipped(r, ie.what());
          }
          break;
        case VerifyMode::Cor22:
          try {
            run_cor22(e, g, opts.limits, r);
          } catch (const InputError& ie) {
            mark_skipped(r, ie.what());
          }
          break;
        case VerifyMode::P2Explore:
          run_p2(g, opts.limits, r);
          break;
      }
    } catch (...) {
      errors[slot] = std::current_exception();
    }
    r.ms = ms_since(t0);
  };

  const std::size_t jobs = static_cast<std::size_t>(std::max(1, opts.jobs));
  if (jobs <= 1 || selected.size() <= 1) {
    for (std::size_t slot = 0; slot < selected.size(); ++slot) run_one(slot);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t slot = next.fetch_add(1);
        if (slot >= selected.size()) break;
        run_one(slot);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t width = std::min(jobs, selected.size());
    pool.reserve(width);
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (std::size_t slot = 0; slot < selected.size(); ++slot)
    if (errors[slot]) std::rethrow_exception(errors[slot]);

  VerifyRun run;
  ordered_json doc;
  doc["schema"] = "ap2.verify.v1";
  doc["mode"] = format_mode(mode);
  if (opts.prime_filter) doc["prime"] = *opts.prime_filter;
  ordered_json rows = ordered_json::array();
  for (EntryOutcome& r : results) {
    run.skipped += r.skipped ? 1 : 0;
    run.violations += r.violation ? 1 : 0;
    rows.push_back(std::move(r.doc));
  }
  run.checked = static_cast<long long>(selected.size()) - run.skipped;
  doc["results"] = std::move(rows);
  ordered_json summary;
  summary["entries"] = selected.size();
  summary["checked"] = run.checked;
  summary["skipped"] = run.skipped;
  summary["violations"] = run.violations;
  doc["summary"] = std::move(summary);
  if (selected.empty()) doc["warning"] = "no entries matched";
  if (opts.with_timing) {
    ordered_json timing = ordered_json::object();
    for (std::size_t slot = 0; slot < selected.size(); ++slot)
      timing[catalog.entries[selected[slot]].name] = results[slot].ms;
    doc["timing_ms"] = std::move(timing);
  }
  run.report = std::move(doc);
  return run;
}

namespace {

std::string betti_text(const ordered_json& degrees) {
  std::ostringstream out;
  bool first = true;
  for (const auto& d : degrees) {
    if (!first) out << ", ";
    first = false;
    out << "b~" << d.at("degree").get<int>() << "=" << d.at("betti").get<long long>();
    const auto& tor = d.at("torsion");
    if (!tor.empty()) {
      out << " torsion[";
      for (std::size_t i = 0; i < tor.size(); ++i)
        out << (i ? "," : "") << tor[i].get<long long>();
      out << "]";
    }
  }
  return out.str();
}

std::string pretty_analysis(const ordered_json& doc) {
  std::ostringstream out;
  const auto& g = doc.at("group");
  out << "group          " << g.at("name").get<std::string>() << " (order "
      << g.at("order").get<long long>() << ", exponent "
      << g.at("exponent").get<long long>() << ")\n";
  out << "center         order " << g.at("center_order").get<long long>()
      << (g.at("center_cyclic").get<bool>() ? ", cyclic" : ", not cyclic") << "\n";
  out << "derived        order " << g.at("derived_order").get<long long>() << ", "
      << g.at("derived_type").get<std::string>() << "\n";
  out << "prime          " << doc.at("prime").get<long long>() << "\n";
  out << "min_rank       " << doc.at("min_rank").get<int>() << "\n";
  out << "poset          " << doc.at("poset").at("member_count").get<long long>()
      << " members, by rank ";
  bool first = true;
  for (const auto& [rank, count] : doc.at("poset").at("by_rank").items()) {
    out << (first ? "" : ", ") << rank << ": " << count.get<long long>();
    first = false;
  }
  out << "\n";
  out << "f_vector       [";
  const auto& fv = doc.at("complex").at("f_vector");
  for (std::size_t i = 0; i < fv.size(); ++i)
    out << (i ? ", " : "") << fv[i].get<long long>();
  out << "]\n";
  const auto& hom = doc.at("homology");
  if (hom.at("empty_complex").get<bool>())
    out << "homology       empty complex\n";
  else
    out << "homology       " << betti_text(hom.at("degrees")) << "\n";
  out << "signature      " << hom.at("signature").get<std::string>() << "\n";
  const auto& th = doc.at("theorem");
  out << "theorem        " << th.at("outcome").get<std::string>();
  if (th.contains("contractible_via"))
    out << " (" << th.at("contractible_via").get<std::string>() << ")";
  out << "\n";
  const auto& dec = doc.at("decomposition");
  if (dec.at("applicable").get<bool>()) {
    out << "decomposition  chi size " << dec.at("chi_size").get<long long>()
        << ", |M| = " << dec.at("m_order").get<long long>() << ", parts:";
    for (const auto& p : dec.at("parts")) out << " " << p.get<std::string>();
    out << "\n";
  } else {
    out << "decomposition  " << dec.at("reason").get<std::string>() << "\n";
  }
  if (doc.contains("timing_ms")) {
    out << "timing_ms     ";
    for (const auto& [stage, ms] : doc.at("timing_ms").items())
      out << " " << stage << "=" << ms.get<long long>();
    out << "\n";
  }
  return out.str();
}

std::string pretty_verify(const ordered_json& doc) {
  std::ostringstream out;
  out << "mode " << doc.at("mode").get<std::string>();
  if (doc.contains("prime")) out << ", prime " << doc.at("prime").get<long long>();
  out << "\n";
  std::size_t name_w = 4;
  for (const auto& r : doc.at("results"))
    name_w = std::max(name_w, r.at("name").get<std::string>().size());
  for (const auto& r : doc.at("results")) {
    const std::string name = r.at("name").get<std::string>();
    out << name << std::string(name_w - name.size() + 2, ' ');
    if (r.value("skipped", false)) {
      out << "skip: " << r.at("reason").get<std::string>() << "\n";
      continue;
    }
    if (r.contains("outcome")) {
      out << r.at("outcome").get<std::string>();
      if (r.contains("signature"))
        out << "  " << r.at("signature").get<std::string>();
    } else if (r.contains("holds")) {
      out << (r.at("holds").get<bool>() ? "holds" : "VIOLATION");
      if (r.contains("signature"))
        out << "  " << r.at("signature").get<std::string>();
    } else if (r.contains("signature")) {
      out << r.at("signature").get<std::string>();
    }
    out << "\n";
  }
  const auto& s = doc.at("summary");
  out << "entries " << s.at("entries").get<long long>() << ", checked "
      << s.at("checked").get<long long>() << ", skipped "
      << s.at("skipped").get<long long>() << ", violations "
      << s.at("violations").get<long long>() << "\n";
  if (doc.contains("warning"))
    out << "warning: " << doc.at("warning").get<std::string>() << "\n";
  return out.str();
}

}  // namespace

std::string pretty_report(const ordered_json& doc) {
  const std::string schema = doc.value("schema", "");
  if (schema == "ap2.analysis.v1") return pretty_analysis(doc);
  if (schema == "ap2.verify.v1") return pretty_verify(doc);
  return doc.dump(2) + "\n";
}

}  // namespace ap2
