#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ap2/families.hpp"
#include "ap2/group.hpp"

namespace ap2 {

// One catalog entry. Exactly one payload is populated, per `format`:
//   table   -> `table` (row-major index matrix, order x order)
//   permgen -> `degree` + `generators` (image arrays over {0..degree-1})
//   family  -> `family` (parsed) + `family_text` (canonical form)
struct CatalogEntry {
  enum class Format { Table, Permgen, Family };
  std::string name;
  Format format = Format::Family;
  long long prime = 0;
  FamilySpec family;
  std::string family_text;
  std::vector<std::vector<long long>> table;
  int degree = 0;
  std::vector<std::vector<int>> generators;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  const CatalogEntry* find(const std::string& name) const;
  std::vector<std::string> names() const;
};

// Strict schema: required keys per format, unknown keys rejected, names
// unique and nonempty, tables square, permutations bijective, primes prime.
// Every diagnostic names the offending entry and key.
Catalog parse_catalog(const nlohmann::json& doc);
Catalog load_catalog(const std::string& path);

// Serializes a group as a self-contained table entry (re-ingestible).
nlohmann::ordered_json entry_document(const std::string& name, const GroupPtr& g,
                                      long long prime);

GroupPtr build_entry(const CatalogEntry& entry, const Limits& limits = {});

enum class VerifyMode { Theorem, Wedge, Step2, Cor22, P2Explore };
VerifyMode parse_mode(const std::string& text);
std::string format_mode(VerifyMode m);

struct ReportOptions {
  int min_rank = 2;
  bool with_timing = false;
  int jobs = 1;
  std::optional<long long> prime_filter;
  Limits limits;
};

// Full single-group pipeline as a stable-field-order document. The displayed
// poset/complex/homology honor opts.min_rank; the theorem verdict and the
// decomposition summary always evaluate at rank >= 2. The Euler identity is
// re-asserted from the serialized numbers before returning.
nlohmann::ordered_json analysis_report(const std::string& name, const GroupPtr& g,
                                       long long p, const ReportOptions& opts = {});

struct VerifyRun {
  nlohmann::ordered_json report;
  long long checked = 0;
  long long skipped = 0;
  long long violations = 0;
};

// Runs `mode` over all applicable entries (prime filter first, then
// mode-specific gates; inapplicable entries are listed as skipped with a
// reason). Results appear in catalog order regardless of opts.jobs.
VerifyRun verify_report(const Catalog& catalog, VerifyMode mode,
                        const ReportOptions& opts = {});

// Human-readable rendering of an analysis or verify document.
std::string pretty_report(const nlohmann::ordered_json& doc);

}  // namespace ap2
