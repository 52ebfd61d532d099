#ifndef KMSS_CROSSCHECK_HPP
#define KMSS_CROSSCHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "involutions.hpp"

namespace kmss {

/// A named worked case: the automorphism data, the Vogan diagram it should
/// classify to, and the expected invariants of the resulting decomposition.
struct WorkedCase {
  std::string name;
  Series series;
  int rank;
  std::function<AutomorphismSpec()> spec;
  std::function<VoganDiagram()> vogan;
  std::string expected_row;
  std::string expected_label;
  // Expected degree-0 structure of K.
  int deg0_slice = 0;
  int deg0_loop = 0;
  std::vector<std::pair<Series, int>> deg0_types;
  int deg0_center = 0;
  // Expected cumulative dimensions of K and P within degree m (index m),
  // derived by counting the fixed/antifixed complex dimensions per degree.
  std::vector<int> dim_k_profile;
  std::vector<int> dim_p_profile;
  std::vector<std::string> notes;
};

const std::vector<WorkedCase>& worked_cases();
const WorkedCase& find_case(Series s, int rank, const std::string& name);
std::vector<std::string> case_names(Series s, int rank);

struct CrosscheckReport {
  std::string case_name;
  std::string spec_echo;  // JSON echo of the automorphism data
  bool agree = true;
  std::vector<std::string> disagreements;
  std::vector<std::string> notes;

  int window = 0;
  int core = 0;
  std::vector<int> dim_k_per_degree;  // cumulative dims within degree m
  std::vector<int> dim_p_per_degree;
  Degree0Report degree0;
  std::array<int, 3> signature_k{0, 0, 0};
  std::array<int, 3> signature_ip{0, 0, 0};
  bool involution_holds = true;
  std::string classified_row;
  std::string classified_label;

  std::string to_json() const;
};

/// Runs the involutions pipeline for a registered case and compares the
/// outcome against the catalog entry reached through the Vogan diagram.
CrosscheckReport crosscheck(Series s, int rank, const std::string& case_name, int window);

/// The decomposition itself, for tests that want the raw spaces.
CartanDecomposition decompose_case(const WorkedCase& wc, int window);

}  // namespace kmss

#endif  // KMSS_CROSSCHECK_HPP
