#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <string>

#include "ap2/catalog.hpp"
#include "ap2/errors.hpp"
#include "ap2/families.hpp"

#ifndef AP2_BUNDLED_CATALOG
#define AP2_BUNDLED_CATALOG "data/bundled_catalog.json"
#endif

namespace {

// Canonical JSON goes to --out (or stdout); --pretty renders the human table
// on stdout. With --pretty and no --out, only the table is shown.
void write_out(const nlohmann::ordered_json& doc, const std::string& out_path,
               bool pretty) {
  const std::string body = doc.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    if (pretty)
      std::cout << ap2::pretty_report(doc);
    else
      std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ap2::InputError("cannot write to " + out_path);
  out << body;
  if (pretty) std::cout << ap2::pretty_report(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elementary abelian p-subgroup posets: analysis and verification"};
  app.require_subcommand(1);

  std::string input = AP2_BUNDLED_CATALOG;
  std::string group_name;
  std::string mode_text = "theorem";
  std::string out_path;
  std::string family_text;
  std::string entry_name;
  long long prime = 0;
  int min_rank = 2;
  int jobs = 1;
  bool pretty = false;
  bool timing = false;
  ap2::Limits limits;

  int result = 0;

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", limits.max_order,
                    "largest multiplication table the builders will produce")
        ->envname("AP2_MAX_ORDER")
        ->capture_default_str();
    cmd->add_option("--max-faces", limits.max_faces,
                    "largest simplex count for order complexes")
        ->envname("AP2_MAX_FACES")
        ->capture_default_str();
  };
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "catalog file")
        ->envname("AP2_INPUT")
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write the JSON report here ('-' = stdout)")
        ->envname("AP2_OUT");
    cmd->add_flag("--pretty", pretty, "print a human-readable table to stdout")
        ->envname("AP2_PRETTY");
    cmd->add_flag("--timing", timing,
                  "include wall-clock timings (separate section, off by default)")
        ->envname("AP2_TIMING");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full pipeline on one catalog group");
  add_io(analyze);
  add_caps(analyze);
  analyze->add_option("--group", group_name, "catalog entry name")
      ->envname("AP2_GROUP")
      ->required();
  analyze->add_option("--min-rank", min_rank, "smallest rank kept in the poset")
      ->envname("AP2_MIN_RANK")
      ->capture_default_str();
  analyze->callback([&]() {
    ap2::Catalog cat = ap2::load_catalog(input);
    const ap2::CatalogEntry* entry = cat.find(group_name);
    if (!entry) {
      std::string names;
      for (const std::string& n : cat.names()) {
        if (!names.empty()) names += ", ";
        names += n;
      }
      throw ap2::InputError("group not found: '" + group_name +
                            "' (available: " + names + ")");
    }
    ap2::ReportOptions opts;
    opts.min_rank = min_rank;
    opts.with_timing = timing;
    opts.limits = limits;
    ap2::GroupPtr g = ap2::build_entry(*entry, limits);
    write_out(ap2::analysis_report(entry->name, g, entry->prime, opts), out_path,
              pretty);
  });

  CLI::App* verify = app.add_subcommand("verify", "batch checks over a catalog");
  add_io(verify);
  add_caps(verify);
  CLI::Option* prime_opt =
      verify->add_option("--prime", prime, "only entries with this prime")
          ->envname("AP2_PRIME");
  verify->add_option("--mode", mode_text,
                     "theorem, wedge, step2, cor22, or p2-explore")
      ->envname("AP2_MODE")
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "concurrent catalog entries")
      ->envname("AP2_JOBS")
      ->capture_default_str();
  verify->callback([&]() {
    ap2::Catalog cat = ap2::load_catalog(input);
    ap2::ReportOptions opts;
    opts.with_timing = timing;
    opts.jobs = jobs;
    opts.limits = limits;
    if (prime_opt->count() > 0) opts.prime_filter = prime;
    ap2::VerifyRun run = ap2::verify_report(cat, ap2::parse_mode(mode_text), opts);
    write_out(run.report, out_path, pretty);
    if (run.violations > 0) result = 1;
  });

  CLI::App* build = app.add_subcommand(
      "build", "construct a family and emit a self-contained table entry");
  build->add_option("--family", family_text, "family spec text")
      ->envname("AP2_FAMILY")
      ->required();
  build->add_option("--name", entry_name,
                    "entry name (default: canonical family text)")
      ->envname("AP2_NAME");
  build->add_option("--out", out_path, "write the entry document here")
      ->envname("AP2_OUT");
  add_caps(build);
  build->callback([&]() {
    ap2::FamilySpec spec = ap2::parse_family(family_text);
    ap2::GroupPtr g = ap2::build_family(spec, limits);
    const std::string name =
        entry_name.empty() ? ap2::format_family(spec) : entry_name;
    write_out(ap2::entry_document(name, g, spec.p), out_path, false);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ap2::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ap2::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return result;
}
