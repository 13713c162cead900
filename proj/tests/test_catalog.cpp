#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ap2/catalog.hpp"
#include "ap2/errors.hpp"
#include "ap2/families.hpp"
#include "ap2/group.hpp"

using namespace ap2;
using nlohmann::json;

namespace {

json minimal_entry() {
  return json{{"name", "C2"},
              {"prime", 2},
              {"format", "table"},
              {"table", json::array({json::array({0, 1}), json::array({1, 0})})}};
}

json catalog_of(std::vector<json> entries) {
  return json{{"entries", std::move(entries)}};
}

const std::string kBundled = std::string(AP2_DATA_DIR) + "/bundled_catalog.json";

}  // namespace

TEST_CASE("bundled catalog loads and builds") {
  Catalog cat = load_catalog(kBundled);
  CHECK(cat.entries.size() == 23);
  CHECK(cat.find("jordan33") != nullptr);
  CHECK(cat.find("no_such_entry") == nullptr);
  CHECK(cat.names().size() == cat.entries.size());
  for (const CatalogEntry& e : cat.entries) {
    GroupPtr g = build_entry(e);
    INFO("entry ", e.name);
    CHECK(g->order() > 0);
    CHECK(g->is_p_group(e.prime));
    CHECK(g->label() == (e.format == CatalogEntry::Format::Family
                             ? e.family_text
                             : e.name));
  }
}

TEST_CASE("catalog root validation") {
  CHECK_THROWS_WITH_AS(parse_catalog(json::array()),
                       doctest::Contains("object"), InputError);
  CHECK_THROWS_WITH_AS(parse_catalog(json{{"groups", json::array()}}),
                       doctest::Contains("groups"), InputError);
  CHECK_THROWS_WITH_AS(parse_catalog(json::object()),
                       doctest::Contains("entries"), InputError);
  CHECK_THROWS_WITH_AS(
      parse_catalog(json{{"entries", json::array()}, {"extra", 1}}),
      doctest::Contains("extra"), InputError);
  CHECK_THROWS_AS(parse_catalog(json{{"entries", "nope"}}), InputError);
  CHECK(parse_catalog(catalog_of({})).entries.empty());
}

TEST_CASE("entry validation names the entry and key") {
  json bad = minimal_entry();
  bad["color"] = "red";
  CHECK_THROWS_WITH_AS(parse_catalog(catalog_of({bad})),
                       doctest::Contains("'C2'"), InputError);
  CHECK_THROWS_WITH_AS(parse_catalog(catalog_of({bad})),
                       doctest::Contains("color"), InputError);

  json noname = minimal_entry();
  noname.erase("name");
  CHECK_THROWS_AS(parse_catalog(catalog_of({noname})), InputError);

  json empty_name = minimal_entry();
  empty_name["name"] = "";
  CHECK_THROWS_AS(parse_catalog(catalog_of({empty_name})), InputError);

  CHECK_THROWS_WITH_AS(
      parse_catalog(catalog_of({minimal_entry(), minimal_entry()})),
      doctest::Contains("duplicate"), InputError);

  json badprime = minimal_entry();
  badprime["prime"] = 6;
  CHECK_THROWS_WITH_AS(parse_catalog(catalog_of({badprime})),
                       doctest::Contains("not prime"), InputError);

  json badformat = minimal_entry();
  badformat["format"] = "matrix";
  CHECK_THROWS_AS(parse_catalog(catalog_of({badformat})), InputError);
}

TEST_CASE("table entries must be square with in-range values") {
  json ragged = minimal_entry();
  ragged["table"] = json::array({json::array({0, 1}), json::array({1})});
  CHECK_THROWS_WITH_AS(parse_catalog(catalog_of({ragged})),
                       doctest::Contains("row 1"), InputError);

  json range = minimal_entry();
  range["table"] = json::array({json::array({0, 2}), json::array({1, 0})});
  CHECK_THROWS_AS(parse_catalog(catalog_of({range})), InputError);

  json notpower = minimal_entry();
  notpower["prime"] = 3;
  CHECK_THROWS_WITH_AS(parse_catalog(catalog_of({notpower})),
                       doctest::Contains("power"), InputError);

  json empty = minimal_entry();
  empty["table"] = json::array();
  CHECK_THROWS_AS(parse_catalog(catalog_of({empty})), InputError);
}

TEST_CASE("permgen entries validate the generators") {
  json perm{{"name", "C4"},
            {"prime", 2},
            {"format", "permgen"},
            {"degree", 4},
            {"generators", json::array({json::array({1, 2, 3, 0})})}};
  Catalog ok = parse_catalog(catalog_of({perm}));
  GroupPtr c4 = build_entry(ok.entries[0]);
  CHECK(c4->order() == 4);
  CHECK(c4->exponent() == 4);

  json nonbij = perm;
  nonbij["generators"] = json::array({json::array({0, 0, 1, 2})});
  CHECK_THROWS_WITH_AS(parse_catalog(catalog_of({nonbij})),
                       doctest::Contains("generator 0"), InputError);

  json shortgen = perm;
  shortgen["generators"] = json::array({json::array({1, 0})});
  CHECK_THROWS_AS(parse_catalog(catalog_of({shortgen})), InputError);

  json nogen = perm;
  nogen["generators"] = json::array();
  CHECK_THROWS_AS(parse_catalog(catalog_of({nogen})), InputError);

  // the generated group must be a p-group for the declared prime
  json s3{{"name", "S3"},
          {"prime", 3},
          {"format", "permgen"},
          {"degree", 3},
          {"generators",
           json::array({json::array({1, 2, 0}), json::array({1, 0, 2})})}};
  Catalog parsed = parse_catalog(catalog_of({s3}));
  CHECK_THROWS_WITH_AS(build_entry(parsed.entries[0]),
                       doctest::Contains("power"), InputError);
}

TEST_CASE("family entries check the prime for consistency") {
  json fam{{"name", "H27"},
           {"prime", 3},
           {"format", "family"},
           {"family", "extraspecial_plus p=3"}};
  Catalog cat = parse_catalog(catalog_of({fam}));
  CHECK(cat.entries[0].family_text == "extraspecial_plus p=3");
  CHECK(build_entry(cat.entries[0])->order() == 27);

  json mismatch = fam;
  mismatch["prime"] = 5;
  CHECK_THROWS_WITH_AS(parse_catalog(catalog_of({mismatch})),
                       doctest::Contains("prime"), InputError);

  // family text is normalized to the canonical spelling
  json spaced = fam;
  spaced["family"] = "  extraspecial_plus   p=3 ";
  CHECK(parse_catalog(catalog_of({spaced})).entries[0].family_text ==
        "extraspecial_plus p=3");
}

TEST_CASE("load_catalog reports file problems") {
  CHECK_THROWS_WITH_AS(load_catalog("/nonexistent/catalog.json"),
                       doctest::Contains("cannot open"), InputError);
  const std::string tmp = "/tmp/ap2_bad_catalog.json";
  {
    std::FILE* f = std::fopen(tmp.c_str(), "w");
    REQUIRE(f);
    std::fputs("{\"entries\": [", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(load_catalog(tmp), InputError);
}

TEST_CASE("table cap applies at build time") {
  Catalog cat = load_catalog(kBundled);
  const CatalogEntry* big = cat.find("3plus_x_3plus");
  REQUIRE(big != nullptr);
  Limits tight;
  tight.max_order = 100;
  CHECK_THROWS_AS(build_entry(*big, tight), CapError);
}

TEST_CASE("entry_document round trip") {
  GroupPtr h = build_family("extraspecial_plus p=3");
  nlohmann::ordered_json doc = entry_document("h27_copy", h, 3);
  Catalog cat = parse_catalog(json::parse(doc.dump()));
  REQUIRE(cat.entries.size() == 1);
  CHECK(cat.entries[0].name == "h27_copy");
  GroupPtr back = build_entry(cat.entries[0]);
  CHECK(back->order() == 27);
  CHECK(back->exponent() == 3);
  Subgroup zc = center(back);
  CHECK(zc.size() == 3);
  // identical multiplication tables
  for (elem_t a = 0; a < 27; ++a)
    for (elem_t b = 0; b < 27; ++b) CHECK(back->mul(a, b) == h->mul(a, b));
}

TEST_CASE("analysis report structure") {
  GroupPtr j3 = build_family("jordan_semidirect d=3 p=3");
  nlohmann::ordered_json doc = analysis_report("jordan33", j3, 3);
  CHECK(doc["schema"] == "ap2.analysis.v1");
  CHECK(doc["group"]["name"] == "jordan33");
  CHECK(doc["group"]["order"] == 81);
  CHECK(doc["group"]["center_cyclic"] == true);
  CHECK(doc["group"]["derived_type"] == "C3^2");
  CHECK(doc["prime"] == 3);
  CHECK(doc["min_rank"] == 2);
  CHECK(doc["poset"]["member_count"] == 17);
  CHECK(doc["poset"]["by_rank"]["2"] == 16);
  CHECK(doc["complex"]["f_vector"] == json::array({17, 13}));
  CHECK(doc["complex"]["euler_characteristic"] == 4);
  CHECK(doc["homology"]["signature"] == "single_degree(0, 3)");
  CHECK(doc["theorem"]["outcome"] == "single_degree");
  CHECK(doc["theorem"]["hypotheses"]["derived_rank2"] == true);
  CHECK(doc["decomposition"]["applicable"] == true);
  CHECK(doc["decomposition"]["chi_size"] == 3);
  CHECK_FALSE(doc.contains("timing_ms"));

  ReportOptions topt;
  topt.with_timing = true;
  nlohmann::ordered_json timed = analysis_report("jordan33", j3, 3, topt);
  CHECK(timed.contains("timing_ms"));

  // min_rank changes the displayed poset but not the verdict sections
  ReportOptions r1;
  r1.min_rank = 1;
  nlohmann::ordered_json wide = analysis_report("jordan33", j3, 3, r1);
  CHECK(wide["min_rank"] == 1);
  CHECK(wide["poset"]["member_count"].get<long long>() > 17);
  CHECK(wide["theorem"]["outcome"] == "single_degree");
  CHECK(wide["decomposition"]["chi_size"] == 3);
}

TEST_CASE("analysis report on an inapplicable decomposition") {
  GroupPtr h = build_family("extraspecial_plus p=3");
  nlohmann::ordered_json doc = analysis_report("3plus", h, 3);
  CHECK(doc["decomposition"]["applicable"] == false);
  CHECK(doc["decomposition"]["reason"].get<std::string>().find(
            "inapplicable") != std::string::npos);
}

TEST_CASE("verify report counts and determinism") {
  Catalog cat = load_catalog(kBundled);
  ReportOptions opts;
  VerifyRun run = verify_report(cat, VerifyMode::Theorem, opts);
  CHECK(run.report["schema"] == "ap2.verify.v1");
  CHECK(run.report["mode"] == "theorem");
  CHECK(run.violations == 0);
  CHECK(run.checked == 19);  // all odd-p entries
  CHECK(run.skipped == 4);   // the p = 2 entries
  CHECK(run.report["summary"]["checked"] == 19);
  CHECK(run.report["summary"]["violations"] == 0);

  ReportOptions par;
  par.jobs = 4;
  VerifyRun rerun = verify_report(cat, VerifyMode::Theorem, par);
  CHECK(run.report.dump(2) == rerun.report.dump(2));

  ReportOptions timed;
  timed.with_timing = true;
  VerifyRun t = verify_report(cat, VerifyMode::Theorem, timed);
  CHECK(t.report.contains("timing_ms"));
}

TEST_CASE("verify modes gate the entries") {
  Catalog cat = load_catalog(kBundled);

  VerifyRun wedge = verify_report(cat, VerifyMode::Wedge);
  CHECK(wedge.violations == 0);
  CHECK(wedge.checked == 2);  // jordan33 and jordan53
  for (const auto& res : wedge.report["results"]) {
    if (res.value("skipped", false)) {
      CHECK_FALSE(res["reason"].get<std::string>().empty());
    } else {
      CHECK((res["name"] == "jordan33" || res["name"] == "jordan53"));
      CHECK(res["holds"] == true);
    }
  }

  VerifyRun step2 = verify_report(cat, VerifyMode::Step2);
  CHECK(step2.violations == 0);
  CHECK(step2.checked == 9);

  VerifyRun cor = verify_report(cat, VerifyMode::Cor22);
  CHECK(cor.violations == 0);
  CHECK(cor.checked == 6);
  for (const auto& res : cor.report["results"])
    if (!res.value("skipped", false)) {
      CHECK(res["holds"] == true);
      CHECK(res["derived_central"] == true);
      CHECK(res["derived_is_omega"] == true);
      CHECK(res["form_consistent"] == true);
    }

  VerifyRun p2 = verify_report(cat, VerifyMode::P2Explore);
  CHECK(p2.checked == 4);
  for (const auto& res : p2.report["results"])
    if (!res.value("skipped", false)) CHECK(res["consecutive_le2"] == true);
}

TEST_CASE("prime filter selects entries and p2 gating holds") {
  Catalog cat = load_catalog(kBundled);
  ReportOptions p5;
  p5.prime_filter = 5;
  VerifyRun run = verify_report(cat, VerifyMode::Theorem, p5);
  CHECK(run.checked == 5);
  for (const auto& res : run.report["results"]) CHECK(res["prime"] == 5);

  // p = 2 entries are never fed to the odd-p checks and vice versa
  ReportOptions p2;
  p2.prime_filter = 2;
  VerifyRun gate = verify_report(cat, VerifyMode::Theorem, p2);
  CHECK(gate.checked == 0);
  CHECK(gate.skipped == 4);
  for (const auto& res : gate.report["results"])
    CHECK(res["reason"].get<std::string>().find("p2-explore") !=
          std::string::npos);
  VerifyRun unfiltered = verify_report(cat, VerifyMode::P2Explore);
  CHECK(unfiltered.checked == 4);
  CHECK(unfiltered.skipped == 19);
  VerifyRun okp2 = verify_report(cat, VerifyMode::P2Explore, p2);
  CHECK(okp2.checked == 4);
  CHECK(okp2.skipped == 0);

  ReportOptions p7;
  p7.prime_filter = 7;
  VerifyRun none = verify_report(cat, VerifyMode::Theorem, p7);
  CHECK(none.checked == 0);
  CHECK(none.report.contains("warning"));
}

TEST_CASE("verify report is in catalog order with any job count") {
  Catalog cat = load_catalog(kBundled);
  for (int jobs : {1, 2, 8}) {
    ReportOptions opts;
    opts.jobs = jobs;
    VerifyRun run = verify_report(cat, VerifyMode::Step2, opts);
    std::vector<std::string> got;
    for (const auto& res : run.report["results"])
      got.push_back(res["name"].get<std::string>());
    std::vector<std::string> want;
    for (const auto& e : cat.entries) want.push_back(e.name);
    CHECK(got == want);
  }
}

TEST_CASE("mode parsing") {
  CHECK(parse_mode("theorem") == VerifyMode::Theorem);
  CHECK(parse_mode("wedge") == VerifyMode::Wedge);
  CHECK(parse_mode("step2") == VerifyMode::Step2);
  CHECK(parse_mode("cor22") == VerifyMode::Cor22);
  CHECK(parse_mode("p2-explore") == VerifyMode::P2Explore);
  CHECK_THROWS_WITH_AS(parse_mode("bogus"), doctest::Contains("unknown mode"),
                       InputError);
  for (VerifyMode m : {VerifyMode::Theorem, VerifyMode::Wedge, VerifyMode::Step2,
                       VerifyMode::Cor22, VerifyMode::P2Explore})
    CHECK(parse_mode(format_mode(m)) == m);
}

TEST_CASE("pretty rendering") {
  GroupPtr j3 = build_family("jordan_semidirect d=3 p=3");
  nlohmann::ordered_json doc = analysis_report("jordan33", j3, 3);
  std::string text = pretty_report(doc);
  CHECK(text.find("jordan33") != std::string::npos);
  CHECK(text.find("single_degree(0, 3)") != std::string::npos);

  Catalog cat = load_catalog(kBundled);
  ReportOptions p5;
  p5.prime_filter = 5;
  VerifyRun run = verify_report(cat, VerifyMode::Theorem, p5);
  std::string vtext = pretty_report(run.report);
  CHECK(vtext.find("jordan53") != std::string::npos);
  // unknown schemas fall back to the raw document
  std::string raw = pretty_report(nlohmann::ordered_json{{"schema", "bogus"}});
  CHECK(raw.find("bogus") != std::string::npos);
}
