#include <doctest.h>

#include <algorithm>

#include "anosovkit/certificate.hpp"

using namespace anosov;

TEST_CASE("the premise set is fixed and fully cited") {
  const std::vector<Premise>& premises = standard_premises();
  CHECK(premises.size() == 7);
  for (const Premise& p : premises) {
    CHECK_FALSE(p.id.empty());
    CHECK_FALSE(p.statement.empty());
    CHECK_FALSE(p.citation.empty());
  }
  std::vector<std::string> ids = standard_premise_ids();
  for (const char* id : {"HYPERBOLIC_K", "FIX_OMEGA", "MODN_IS_D4", "BG_THEOREM",
                         "ETA_ISOTOPIC_ID", "HOMOTOPY_IMPLIES_ISOTOPY", "FIG8_EXTERIOR"})
    CHECK(std::count(ids.begin(), ids.end(), id) == 1);
}

TEST_CASE("non-triviality witnesses") {
  Witness w0 = nontriviality_witness(0);
  CHECK(w0.kind == "none");
  Witness w1 = nontriviality_witness(1);
  CHECK(w1.kind == "orientation-reversal");
  CHECK(w1.data.at("image_orientation").get<int>() == -1);
  Witness w2 = nontriviality_witness(2);
  CHECK(w2.kind == "periodic-orbit-pair");
  CHECK_FALSE(w2.data.at("freely_homotopic").get<bool>());
  Witness w3 = nontriviality_witness(3);
  CHECK(w3.kind == "orientation-reversal");
  CHECK_THROWS_AS(nontriviality_witness(4), Error);
  CHECK_THROWS_AS(nontriviality_witness(-1), Error);
}

TEST_CASE("building a certificate for a hyperbolic slope") {
  Certificate cert = build_certificate(5);
  CHECK(cert.valid);
  CHECK(cert.k == 5);
  CHECK(cert.group.identification == "Z2+Z2");
  CHECK(cert.group.elements.size() == 4);
  CHECK(cert.group.abelian);
  for (const MappingClass& mc : cert.group.elements) CHECK(mc.order <= 2);
  CHECK(cert.class_tags.at("f0") == "self-orbit-equivalence");
  CHECK(cert.class_tags.at("f1") == "eta-composed-orbit-equivalence");
  CHECK(cert.class_tags.at("f2") == "self-orbit-equivalence");
  CHECK(cert.class_tags.at("f3") == "eta-composed-orbit-equivalence");
  CHECK(cert.premises.size() == 7);
  for (const CheckRecord& check : cert.checks) CHECK(check.passed);
  // every non-identity class carries a witness
  CHECK(cert.witnesses.size() == 4);
  for (int i = 1; i <= 3; ++i)
    CHECK(cert.witnesses[static_cast<std::size_t>(i)].kind != "none");
}

TEST_CASE("slopes that are not known to be hyperbolic are refused") {
  for (long long k : {0LL, 1LL, -1LL, 3LL, 4LL, -4LL}) {
    try {
      build_certificate(k);
      FAIL("expected PremiseViolated for k = ", k);
    } catch (const Error& e) {
      CHECK(e.code() == errc::premise_violated);
    }
  }
  CHECK(build_certificate(-6).valid);
}

TEST_CASE("removing any premise makes the build refuse") {
  std::vector<std::string> all = standard_premise_ids();
  for (const std::string& removed : all) {
    std::vector<std::string> reduced;
    for (const std::string& id : all)
      if (id != removed) reduced.push_back(id);
    try {
      build_certificate(5, reduced);
      FAIL("expected PremiseViolated with ", removed, " removed");
    } catch (const Error& e) {
      CHECK(e.code() == errc::premise_violated);
    }
  }
}

TEST_CASE("certificates replay from their JSON form") {
  for (long long k : {5LL, -6LL, 12LL}) {
    Json j = certificate_to_json(build_certificate(k));
    CHECK(replay_certificate(j));
  }
}

TEST_CASE("a tampered witness fails the replay") {
  Json j = certificate_to_json(build_certificate(5));
  // overwrite the target orbit of the orbit-pair witness with the source:
  // the moved orbit no longer matches and the homotopy search now succeeds
  Json& witnesses = j.at("witnesses");
  bool tampered = false;
  for (Json& w : witnesses)
    if (w.at("kind") == "periodic-orbit-pair") {
      w.at("data")["target"] = w.at("data").at("source");
      w.at("data")["target_class"] = w.at("data").at("source_class");
      tampered = true;
    }
  REQUIRE(tampered);
  CHECK_FALSE(replay_certificate(j));

  // the same tamper applied to the recorded check, with the hash refreshed so
  // that replay actually re-runs the computation instead of flagging staleness
  Json j2 = certificate_to_json(build_certificate(5));
  for (Json& check : j2.at("checks"))
    if (check.at("id") == "witness_f2") {
      check.at("inputs").at("data")["target"] = check.at("inputs").at("data").at("source");
      check.at("inputs").at("data")["target_class"] =
          check.at("inputs").at("data").at("source_class");
      check["hash"] = hash_hex(canonical_hash(check.at("inputs")));
    }
  CHECK_FALSE(replay_certificate(j2));
}

TEST_CASE("editing the slope without refreshing hashes is stale") {
  Json j = certificate_to_json(build_certificate(5));
  j["k"] = 7;
  CHECK_THROWS_AS(static_cast<void>(replay_certificate(j)), Error);
  try {
    replay_certificate(j);
  } catch (const Error& e) {
    CHECK(e.code() == errc::stale_hash);
  }

  Json j2 = certificate_to_json(build_certificate(5));
  j2.at("context").at("inputs")["k"] = 7;
  try {
    replay_certificate(j2);
    FAIL("expected StaleHash");
  } catch (const Error& e) {
    CHECK(e.code() == errc::stale_hash);
  }

  // tampering a check's inputs without refreshing its hash is also stale
  Json j3 = certificate_to_json(build_certificate(5));
  for (Json& check : j3.at("checks"))
    if (check.at("id") == "slope_census") check.at("inputs")["k"] = 9;
  try {
    replay_certificate(j3);
    FAIL("expected StaleHash");
  } catch (const Error& e) {
    CHECK(e.code() == errc::stale_hash);
  }
}

TEST_CASE("removing a premise from the stored certificate breaks the replay") {
  Json j = certificate_to_json(build_certificate(5));
  Json kept = Json::array();
  for (const Json& p : j.at("premises"))
    if (p.at("id") != "BG_THEOREM") kept.push_back(p);
  j["premises"] = kept;
  CHECK_FALSE(replay_certificate(j));
}

TEST_CASE("the group conclusion names the four standard classes") {
  Certificate cert = build_certificate(7);
  std::vector<std::string> labels;
  for (const MappingClass& mc : cert.group.elements) labels.push_back(mc.representative.label);
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"f0", "f1", "f2", "f3"});
}
