#pragma once

#include <json.hpp>

#include "surf4/fn_systems.hpp"
#include "surf4/invariants.hpp"
#include "surf4/oracle.hpp"
#include "surf4/ruled.hpp"
#include "surf4/verify.hpp"

namespace surf4 {

// Field names follow the result types; ordered_json keeps emission
// deterministic and in schema order.
using ojson = nlohmann::ordered_json;

ojson to_json(const NumericalInvariants& v);
ojson to_json(const CandidateRecord& rec);
ojson ruled_table_json(int64_t a, const std::vector<CandidateRecord>& rows);
ojson to_json(const BSolution& s);
ojson to_json(const FnCandidate& c);
ojson to_json(const Degree13Analysis& an);
ojson to_json(const FnClassification& cls);
ojson to_json(const SearchBox& box);
ojson to_json(const OracleTuple& t);
ojson oracle_json(const SearchBox& box, const std::vector<OracleTuple>& tuples);
ojson to_json(const SearchBox& box, const CrossValidation& cv);
ojson to_json(const VerificationReport& report);

}  // namespace surf4
