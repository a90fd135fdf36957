#include "weyl/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace weyl {

using nlohmann::json;

DatumConfig parse_config_text(const std::string& text) {
  DatumConfig c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (key == "preset") {
      ls >> c.preset;
    } else if (key == "type") {
      std::string t;
      ls >> t;
      if (t.size() != 1)
        throw std::invalid_argument("config: type must be a single letter");
      c.type = t[0];
    } else if (key == "rank") {
      ls >> c.rank;
    } else if (key == "removed_node") {
      ls >> c.removed_node;
    } else if (key == "sigma") {
      int v;
      while (ls >> v) c.sigma_perm.push_back(v);
    } else if (key == "mu") {
      long long v;
      while (ls >> v) c.mu.push_back(v);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return c;
}

DatumConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void apply_preset(DatumConfig& c) {
  if (c.preset.empty()) return;
  if (c.preset == "example-3.1" || c.preset == "example-1.3") {
    c.type = 'A';
    if (c.rank == 0) c.rank = c.preset == "example-3.1" ? 8 : 3;
    int n = c.rank + 1;
    c.sigma_perm.assign(size_t(n), 0);
    for (int i = 1; i < n; ++i) c.sigma_perm[size_t(i)] = n - i;
    c.mu.assign(size_t(c.rank), 0);
    c.mu[0] = 1;
    c.removed_node = 0;
  } else if (c.preset == "example-3.2") {
    c.type = 'B';
    if (c.rank == 0) c.rank = 6;
    c.sigma_perm.assign(size_t(c.rank) + 1, 0);
    for (int i = 0; i <= c.rank; ++i) c.sigma_perm[size_t(i)] = i;
    c.sigma_perm[0] = 1;
    c.sigma_perm[1] = 0;
    c.mu.assign(size_t(c.rank), 0);
    c.mu[0] = 1;
    c.removed_node = c.rank;
  } else {
    throw std::invalid_argument("config: unsupported preset '" + c.preset + "'");
  }
}

std::unique_ptr<Session> build_session(const DatumConfig& config) {
  DatumConfig c = config;
  apply_preset(c);
  if (c.type == 0) throw std::invalid_argument("config: no type given");
  auto s = std::make_unique<Session>();
  s->datum = std::make_unique<RootDatum>(RootDatum::build(c.type, c.rank));
  s->weyl = std::make_unique<AffineWeyl>(*s->datum);
  s->sigma = c.sigma_perm.empty()
                 ? DiagramAutomorphism::identity(*s->datum)
                 : DiagramAutomorphism::from_node_perm(*s->datum, c.sigma_perm);
  IVec mu = c.mu;
  if (mu.empty()) mu.assign(size_t(c.rank), 0);
  int removed = c.removed_node >= 0 ? c.removed_node : 0;
  s->cd = CoxeterDatum::make(*s->weyl, s->sigma, mu, removed);
  s->ops = std::make_unique<SigmaOps>(s->cd);
  return s;
}

std::string omega_str(const RootDatum& d, const OmegaElem& cls) {
  return "tau^" + std::to_string(d.omega_index(cls));
}

json element_json(const AffineWeyl& w, const AffineElement& x) {
  auto [word, cls] = w.reduced_word(x);
  json j;
  j["word"] = word.nodes;
  j["omega"] = omega_str(w.datum(), cls);
  j["length"] = word.nodes.size();
  return j;
}

namespace {

AffineElement elem_from_nodes(const Session& s, const std::vector<int>& nodes) {
  AffineElement x = AffineElement::identity(*s.datum);
  for (int t : nodes) x = x.mul_simple(t);
  return x;
}

json input_echo(const DatumConfig& c, const RunOptions& opt) {
  json j;
  if (!c.preset.empty()) j["preset"] = c.preset;
  if (c.type) j["type"] = std::string(1, c.type);
  j["rank"] = c.rank;
  if (!c.sigma_perm.empty()) j["sigma"] = c.sigma_perm;
  if (!c.mu.empty()) j["mu"] = c.mu;
  if (c.removed_node >= 0) j["removed_node"] = c.removed_node;
  j["radius"] = opt.radius;
  return j;
}

json make_record(const std::string& command, const json& input,
                 const json& payload) {
  json j;
  j["command"] = command;
  j["input"] = input;
  j["payload"] = payload;
  j["status"] = "ok";
  return j;
}

std::set<Hyperplane> parse_walls(const Building& b, const std::string& spec) {
  std::set<Hyperplane> out;
  if (spec.empty()) {
    // default: the walls of the base alcove
    for (int t : b.datum().affine_node_ids()) out.insert(b.wall(b.base(), t));
    return out;
  }
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ';')) {
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("walls: expected rootindex:level");
    Hyperplane h;
    h.root_index = std::stoi(item.substr(0, colon));
    h.level = std::stoll(item.substr(colon + 1));
    if (h.root_index < 0 ||
        h.root_index >= int(b.datum().positive_roots().size()))
      throw std::invalid_argument("walls: root index out of range");
    out.insert(h);
  }
  return out;
}

}  // namespace

std::vector<json> run_command(const std::string& command,
                              const DatumConfig& config_in,
                              const RunOptions& opt) {
  static const std::set<std::string> known = {
      "adm",      "eo",       "sigma-w",  "gate",     "cone",  "dr-enum",
      "rational", "straight", "separator", "bt-check", "dl-check", "moore"};
  if (!known.count(command))
    throw std::invalid_argument("unknown command '" + command + "'");
  DatumConfig config = config_in;
  apply_preset(config);
  std::vector<json> out;
  json input = input_echo(config, opt);

  if (command == "dl-check") {
    FiniteField f(opt.field_p, opt.field_m);
    ContainmentReport rep = lusztig_containment_check(opt.dl_n, f);
    json payload;
    payload["n"] = opt.dl_n;
    payload["p"] = opt.field_p;
    payload["m"] = opt.field_m;
    payload["points"] = rep.points;
    payload["violations"] = rep.violations;
    payload["passed"] = rep.passed();
    json in2 = input;
    in2["field"] = {opt.field_p, opt.field_m};
    in2["n"] = opt.dl_n;
    out.push_back(make_record(command, in2, payload));
    return out;
  }
  if (command == "moore") {
    FiniteField f(opt.field_p, opt.field_m);
    json payload;
    payload["vector"] = opt.moore_vector;
    payload["independent"] = moore_criterion(opt.moore_vector, f);
    json in2 = input;
    in2["field"] = {opt.field_p, opt.field_m};
    out.push_back(make_record(command, in2, payload));
    return out;
  }

  auto s = build_session(config);
  const AffineWeyl& w = *s->weyl;
  SigmaOps& ops = *s->ops;
  const Building& b = ops.building();

  if (command == "adm") {
    for (const AffineElement& x : w.admissible_set(s->cd.mu))
      out.push_back(make_record(command, input, element_json(w, x)));
  } else if (command == "eo" || command == "sigma-w") {
    for (const EOElement& e : ops.enumerate_eo()) {
      json payload = element_json(w, e.w);
      payload["sigma_supp"] = std::vector<int>(e.sigma_supp.begin(),
                                               e.sigma_supp.end());
      payload["sigma_w"] = std::vector<int>(e.sigma_w.begin(), e.sigma_w.end());
      out.push_back(make_record(command, input, payload));
    }
  } else if (command == "gate") {
    Alcove bb(elem_from_nodes(*s, opt.word1));
    Alcove rbase(elem_from_nodes(*s, opt.word2));
    std::set<int> type = opt.type_set.empty() ? s->cd.K : opt.type_set;
    Residue r = b.residue(rbase, type);
    Alcove g = b.gate(bb, r);
    json payload;
    payload["gate"] = element_json(w, g.elem);
    payload["delta_b_gate"] = element_json(w, b.delta(bb, g));
    out.push_back(make_record(command, input, payload));
  } else if (command == "cone") {
    Alcove bb(elem_from_nodes(*s, opt.word1));
    Alcove x(elem_from_nodes(*s, opt.word2));
    FiniteWeyl dir = FiniteWeyl::identity(*s->datum);
    for (int i : opt.dir_word) dir = dir.mul(FiniteWeyl::simple(*s->datum, i));
    json payload;
    payload["member"] = b.acute_cone_member(bb, dir, x);
    out.push_back(make_record(command, input, payload));
  } else if (command == "dr-enum") {
    DrEnumResult res = b.enumerate_dr_subset(parse_walls(b, opt.walls),
                                             opt.radius);
    json payload;
    payload["count"] = res.count_at_radius;
    payload["count_minus_2"] = res.count_at_radius_minus_2;
    payload["stabilized"] = res.stabilized;
    json words = json::array();
    for (const Alcove& a : res.alcoves)
      words.push_back(element_json(w, a.elem)["word"]);
    payload["alcoves"] = words;
    out.push_back(make_record(command, input, payload));
  } else if (command == "rational") {
    for (const AffineElement& x : ops.rational_elements(opt.radius))
      out.push_back(make_record(command, input, element_json(w, x)));
  } else if (command == "straight") {
    for (const AffineElement& x : w.enumerate_wa(opt.radius)) {
      json payload = element_json(w, x);
      payload["straight"] = ops.is_sigma_straight(x);
      out.push_back(make_record(command, input, payload));
    }
  } else if (command == "separator") {
    auto eos = ops.enumerate_eo();
    if (opt.eo1 < 0 || opt.eo1 >= int(eos.size()) || opt.eo2 < 0 ||
        opt.eo2 >= int(eos.size()))
      throw std::invalid_argument("separator: EO index out of range");
    AffineElement jp = elem_from_nodes(*s, opt.jprime_word);
    SeparatorResult res = ops.find_separator(eos[size_t(opt.eo1)],
                                             eos[size_t(opt.eo2)], jp,
                                             opt.search_radius);
    json payload;
    payload["j"] = element_json(w, res.j);
    payload["val1"] = element_json(w, res.val1);
    payload["val2"] = element_json(w, res.val2);
    payload["support_certificate"] = res.support_certificate;
    out.push_back(make_record(command, input, payload));
  } else if (command == "bt-check") {
    BtCheckReport rep = ops.bt_vs_j_check(opt.radius, opt.search_radius);
    json payload;
    payload["labels"] = rep.labels.size();
    payload["pairs_tested"] = rep.pairs_tested;
    payload["pairs_separated"] = rep.pairs_separated;
    json fails = json::array();
    for (auto [a, c] : rep.failures) fails.push_back({a, c});
    payload["failures"] = fails;
    payload["all_separated"] = rep.all_separated();
    out.push_back(make_record(command, input, payload));
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  return out;
}

}  // namespace weyl
