#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "weyl/flag_lab.hpp"
#include "weyl/sigma.hpp"

namespace weyl {

// Parsed datum description.  A preset name expands to the built-in data of
// the worked examples; explicit keys override preset defaults.
struct DatumConfig {
  std::string preset;
  char type = 0;
  int rank = 0;
  std::vector<int> sigma_perm;  // empty = identity automorphism
  IVec mu;
  int removed_node = -1;
};

DatumConfig parse_config_text(const std::string& text);
DatumConfig parse_config_file(const std::string& path);
void apply_preset(DatumConfig& c);

// Owns the engine objects with stable addresses.
struct Session {
  std::unique_ptr<RootDatum> datum;
  std::unique_ptr<AffineWeyl> weyl;
  DiagramAutomorphism sigma;
  CoxeterDatum cd;
  std::unique_ptr<SigmaOps> ops;
};

std::unique_ptr<Session> build_session(const DatumConfig& c);

struct RunOptions {
  int radius = 6;
  long long margin = 1;
  int search_radius = 12;
  int field_p = 2;
  int field_m = 2;
  int dl_n = 2;
  int eo1 = 0;
  int eo2 = 1;
  std::vector<int> word1, word2, dir_word, jprime_word;
  std::set<int> type_set;
  std::vector<int> moore_vector;
  std::string walls;  // "rootindex:level;rootindex:level"
};

// Executes one command ("adm", "eo", "sigma-w", "gate", "cone", "dr-enum",
// "rational", "straight", "separator", "bt-check", "dl-check", "moore") and
// returns one record per output line.
std::vector<nlohmann::json> run_command(const std::string& command,
                                        const DatumConfig& config,
                                        const RunOptions& opt);

std::string omega_str(const RootDatum& d, const OmegaElem& cls);
nlohmann::json element_json(const AffineWeyl& w, const AffineElement& x);

}  // namespace weyl
