#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace surf4 {

/// One reproduction check. pass is true exactly when expected and
/// computed are equal strings.
struct VerificationEntry {
  int criterion;  // 1..8, the published checks in a fixed order
  std::string claim_id;
  std::string citation;
  std::string expected;
  std::string computed;
  bool pass;
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;

  int passed() const;
  int failed() const;
  bool all_pass() const;
};

VerificationEntry make_entry(int criterion, std::string claim_id,
                             std::string citation, std::string expected,
                             std::string computed);

/// Runs the whole reproduction suite: the classification tables, the
/// candidate enumeration, the degree-13 exclusion, the bound-polynomial
/// cap, the range/predicate equivalences, the lattice identities, the
/// raw-enumeration cross-check and the max-genus formula checks.
VerificationReport build_verification_report();

}  // namespace surf4
