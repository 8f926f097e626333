// The per-word criterion battery behind the command line tool, its JSON
// report, the bounded census, and cover experiments.

#ifndef SURFSUB_ANALYSIS_HPP_
#define SURFSUB_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "surfsub/words.hpp"

namespace surfsub {

  struct AnalyzeOptions {
    std::optional<std::vector<long long>> phi;  // fixed φ for criterion D
    long long phi_bound = 2;  // search range for φ when it is not unique
  };

  struct CriterionRecord {
    std::string    name;  // "D", "E", "C16", "BS"
    bool           applicable = false;
    bool           fired      = false;
    std::string    note;
    nlohmann::json certificate;  // null when nothing fired

    friend bool operator==(CriterionRecord const&, CriterionRecord const&) = default;
  };

  struct CriterionReport {
    std::string word;
    std::size_t rank = 0;

    bool                       proper_power = false;
    std::string                power_root;
    int                        power_exponent = 1;
    bool                       commutator     = false;
    std::optional<long long>   betti2_double;  // trivial cover, when commutator
    std::optional<bool>        one_ended;      // unknown above rank 8
    std::string                one_ended_method;

    std::vector<CriterionRecord> criteria;
    bool                         certified = false;
    std::string                  summary;
    std::vector<std::string>     notes;

    CriterionRecord const* criterion(std::string_view name) const;
    friend bool operator==(CriterionReport const&, CriterionReport const&) = default;
  };

  // Throws std::invalid_argument on a parse error or the empty word.
  CriterionReport analyze(std::string_view word_text, std::size_t rank,
                          AnalyzeOptions const& options = {});

  nlohmann::json  to_json(CriterionReport const& r);
  CriterionReport report_from_json(nlohmann::json const& j);
  std::string     to_text(CriterionReport const& r);

  constexpr std::size_t census_max_length = 14;

  struct CensusRow {
    std::string word;
    std::size_t length = 0;
    bool        proper_power = false, commutator = false, one_ended = false;
    bool        crit_d = false, crit_e = false, crit_c16 = false, crit_bs = false;
    bool        certified = false;
  };

  struct CensusTable {
    std::vector<CensusRow> rows;  // enumeration order: length, then letter order

    std::size_t count_d = 0, count_e = 0, count_c16 = 0, count_bs = 0;
    std::size_t count_certified = 0, count_one_ended = 0;
  };

  // Rank 2 only. threads = 0 picks the hardware concurrency. Throws
  // std::invalid_argument when max_len exceeds census_max_length.
  CensusTable census(std::size_t rank, std::size_t max_len, unsigned threads = 0);
  std::string to_csv(CensusTable const& table);

  struct CoverReport {
    std::string             word;
    std::string             spec;
    std::size_t             rank  = 0;
    std::size_t             index = 0;
    std::optional<std::vector<long long>> phi;
    long long               betti1 = 0;
    std::vector<std::string> torsion;
    long long               betti2 = 0;  // β₂(D')
    std::size_t             lifts  = 0;  // |J|
    bool                    relator_acts_trivially = false;
    std::string             identity;  // the Euler identity checked, as text
    bool                    identity_holds = false;
    std::optional<long long> alexander_prediction;
  };

  // cover_spec is "cyclic:k", "cyclic:k:φ1,φ2,...", or "perm:<cycles;...>".
  CoverReport cover_experiment(std::string_view word_text, std::size_t rank,
                               std::string_view cover_spec);
  nlohmann::json to_json(CoverReport const& r);
  std::string    to_text(CoverReport const& r);

}  // namespace surfsub

#endif  // SURFSUB_ANALYSIS_HPP_
