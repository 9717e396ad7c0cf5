#include "surf4/json_io.hpp"

namespace surf4 {

ojson to_json(const NumericalInvariants& v) {
  return ojson{{"d", v.d},
               {"pi", v.pi},
               {"k_squared", v.k_squared},
               {"chi", v.chi},
               {"dp_residual", v.dp_residual}};
}

ojson to_json(const CandidateRecord& rec) {
  ojson j{{"a", rec.a}, {"d", rec.d}};
  if (rec.pi)
    j["pi"] = *rec.pi;
  else
    j["pi"] = nullptr;
  j["verdict"] = to_string(rec.verdict);
  j["branch"] = to_string(rec.branch);
  j["reasons"] = rec.reasons;
  return j;
}

ojson ruled_table_json(int64_t a, const std::vector<CandidateRecord>& rows) {
  ojson records = ojson::array();
  for (const CandidateRecord& rec : rows) records.push_back(to_json(rec));
  return ojson{{"a", a}, {"records", std::move(records)}};
}

ojson to_json(const BSolution& s) {
  return ojson{{"n", s.n}, {"b", s.b}, {"r", s.r}};
}

ojson to_json(const FnCandidate& c) {
  ojson solutions = ojson::array();
  for (const BSolution& s : c.b_solutions) solutions.push_back(to_json(s));
  ojson j{{"a", c.a},
          {"d", c.d},
          {"f_value", c.f_value},
          {"divisibility_ok", c.divisibility_ok},
          {"b_solutions", std::move(solutions)}};
  if (c.pi)
    j["pi"] = *c.pi;
  else
    j["pi"] = nullptr;
  j["verdict"] = to_string(c.verdict);
  j["reasons"] = c.reasons;
  return j;
}

ojson to_json(const Degree13Analysis& an) {
  return ojson{{"candidate", to_json(an.candidate)},
               {"two_b_minus_seven_n", an.two_b_minus_seven_n},
               {"r_values", an.r_values},
               {"pi_values", an.pi_values},
               {"solutions_exactly_odd_n", an.solutions_exactly_odd_n},
               {"g13", an.g13}};
}

ojson to_json(const FnClassification& cls) {
  ojson candidates = ojson::array();
  for (const FnCandidate& c : cls.candidates) candidates.push_back(to_json(c));
  ojson survivors = ojson::array();
  for (const auto& [a, d] : cls.surviving_d_gt_12)
    survivors.push_back(ojson::array({a, d}));
  return ojson{{"strict", cls.strict},
               {"n_window", ojson::array({cls.n_lo, cls.n_hi})},
               {"candidates", std::move(candidates)},
               {"degree13", to_json(cls.degree13)},
               {"summary",
                ojson{{"max_degree", cls.max_degree},
                      {"max_surviving_candidate_degree",
                       cls.max_surviving_candidate_degree},
                      {"delegated_max_degree", cls.delegated_max_degree},
                      {"surviving_d_gt_12", std::move(survivors)},
                      {"notes", cls.notes}}}};
}

ojson to_json(const SearchBox& box) {
  return ojson{{"a", ojson::array({box.a_lo, box.a_hi})},
               {"b", ojson::array({box.b_lo, box.b_hi})},
               {"n", ojson::array({box.n_lo, box.n_hi})},
               {"r", ojson::array({box.r_lo, box.r_hi})},
               {"d_min", box.d_min}};
}

ojson to_json(const OracleTuple& t) {
  return ojson{{"a", t.a}, {"b", t.b}, {"n", t.n},
               {"r", t.r}, {"d", t.d}, {"pi", t.pi}};
}

ojson oracle_json(const SearchBox& box, const std::vector<OracleTuple>& tuples) {
  ojson arr = ojson::array();
  for (const OracleTuple& t : tuples) arr.push_back(to_json(t));
  return ojson{{"box", to_json(box)},
               {"count", tuples.size()},
               {"tuples", std::move(arr)}};
}

ojson to_json(const SearchBox& box, const CrossValidation& cv) {
  ojson extra = ojson::array();
  for (const OracleTuple& t : cv.extra) extra.push_back(to_json(t));
  ojson missing = ojson::array();
  for (const OracleTuple& t : cv.missing) missing.push_back(to_json(t));
  ojson pairs = ojson::array();
  for (const auto& [a, d] : cv.d_gt_12_pairs)
    pairs.push_back(ojson::array({a, d}));
  return ojson{{"box", to_json(box)},
               {"pass", cv.pass},
               {"warnings", cv.warnings},
               {"extra", std::move(extra)},
               {"missing", std::move(missing)},
               {"d_gt_12_pairs", std::move(pairs)}};
}

ojson to_json(const VerificationReport& report) {
  ojson entries = ojson::array();
  for (const VerificationEntry& e : report.entries)
    entries.push_back(ojson{{"criterion", e.criterion},
                            {"claim_id", e.claim_id},
                            {"citation", e.citation},
                            {"expected", e.expected},
                            {"computed", e.computed},
                            {"status", e.pass ? "PASS" : "FAIL"}});
  return ojson{{"entries", std::move(entries)},
               {"summary", ojson{{"pass", report.passed()},
                                 {"fail", report.failed()},
                                 {"total", report.entries.size()}}}};
}

}  // namespace surf4
