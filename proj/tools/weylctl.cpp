#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weyl/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"batch driver for the affine Weyl / building engine"};
  std::string command, config_path, preset, walls;
  weyl::RunOptions opt;
  std::vector<int> field;

  app.add_option("command", command,
                 "one of adm, eo, sigma-w, gate, cone, dr-enum, rational, "
                 "straight, separator, bt-check, dl-check, moore")
      ->required();
  app.add_option("--config", config_path, "configuration file");
  app.add_option("--preset", preset, "preset datum name");
  app.add_option("--radius", opt.radius, "length radius for enumerations");
  app.add_option("--margin", opt.margin, "wall-distance margin");
  app.add_option("--search-radius", opt.search_radius,
                 "radius of the separator search");
  app.add_option("--field", field, "finite field as: p m")->expected(2);
  app.add_option("--n", opt.dl_n, "flag dimension for dl-check");
  app.add_option("--eo1", opt.eo1, "first EO index for separator");
  app.add_option("--eo2", opt.eo2, "second EO index for separator");
  app.add_option("--word", opt.word1, "alcove word (affine node ids)");
  app.add_option("--word2", opt.word2, "second alcove word");
  app.add_option("--dir", opt.dir_word, "finite direction word for cone");
  app.add_option("--jprime", opt.jprime_word, "rational translate word");
  app.add_option("--vector", opt.moore_vector, "field element ids for moore");
  app.add_option("--walls", walls, "hyperplanes as rootindex:level;...");

  CLI11_PARSE(app, argc, argv);
  opt.walls = walls;
  if (field.size() == 2) {
    opt.field_p = field[0];
    opt.field_m = field[1];
  }

  try {
    weyl::DatumConfig config;
    if (!config_path.empty()) config = weyl::parse_config_file(config_path);
    if (!preset.empty()) config.preset = preset;
    for (const auto& rec : weyl::run_command(command, config, opt))
      std::cout << rec.dump() << "\n";
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["command"] = command;
    err["status"] = "error";
    err["message"] = e.what();
    std::cout << err.dump() << "\n";
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
