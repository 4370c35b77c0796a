#pragma once

#include <map>
#include <string>
#include <vector>

#include "anosovkit/json_io.hpp"

namespace anosov {

/// Cited external fact: declared, never computed.
struct Premise {
  std::string id;
  std::string statement;
  std::string citation;
};

/// The fixed premise set the certificate machinery may draw from.
const std::vector<Premise>& standard_premises();

std::vector<std::string> standard_premise_ids();

/// Exact data substantiating the non-triviality of one mapping class,
/// re-verifiable by replaying the module operations it references.
struct Witness {
  std::string class_label;
  std::string kind;  // none | periodic-orbit-pair | orientation-reversal
  Json data;
};

/// Witness for class index 0..3: empty for the identity, an orbit pair moved
/// by the symmetry but not freely homotopic for index 2, the reversal of the
/// fixed orbit plus the boundary signs for indices 1 and 3.
Witness nontriviality_witness(int index);

struct CheckRecord {
  std::string id;
  Json inputs;
  std::string hash;  // canonical hash of inputs
  bool passed = false;
  std::vector<std::string> premises;  // premise ids this check's meaning rests on
  Json details;
};

struct Derivation {
  std::string conclusion;
  std::vector<std::string> uses_premises;
  std::vector<std::string> uses_checks;
};

struct Certificate {
  int schema = 1;
  long long k = 0;
  Json context_inputs;
  std::string context_hash;
  GroupTable group;  // concluded mapping class group of the filling
  std::map<std::string, std::string> class_tags;
  std::vector<Witness> witnesses;
  std::vector<Premise> premises;
  std::vector<CheckRecord> checks;
  std::vector<Derivation> derivations;
  bool valid = false;
};

/// Runs the whole pipeline for the k-filling. Requires |k| > 4 and the full
/// premise set; refuses (PremiseViolated) when a needed premise is missing
/// rather than weakening the conclusion.
Certificate build_certificate(long long k);
Certificate build_certificate(long long k, const std::vector<std::string>& declared_premises);

Json certificate_to_json(const Certificate& cert);

/// Re-executes every recorded check and witness from its stored inputs.
/// Throws StaleHash when stored inputs do not match their recorded hashes;
/// returns false when any replayed computation disagrees with the record.
bool replay_certificate(const Json& cert_json);

}  // namespace anosov
