// Writes seeded random instance files.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/instance.hpp"
#include "tdvr/random.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Random instance generator for tdvr-gb", "tdvr-gen"};
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::string out_dir;
  bool x_homogeneous = false, pi_homogeneous = false;
  std::string flavor;
  std::optional<std::uint32_t> p, a, rank;
  std::optional<std::size_t> nvars, ngens;
  std::optional<std::uint64_t> degree;

  app.add_option("--seed", seed, "RNG seed")->required();
  app.add_option("--count", count, "number of instances");
  app.add_option("--out-dir", out_dir, "write inst-<k>.inst files here instead of stdout");
  app.add_flag("--x-homogeneous", x_homogeneous, "every generator homogeneous in x");
  app.add_flag("--pi-homogeneous", pi_homogeneous, "every coefficient of a generator in one pi-layer (flavor pi)");
  app.add_option("--flavor", flavor, "pi or p (default: random)")->check(CLI::IsMember({"pi", "p"}));
  app.add_option("--p", p, "prime (default: random in {2,3,5})");
  app.add_option("--a", a, "length (default: random in 1..4)");
  app.add_option("--vars", nvars, "number of variables");
  app.add_option("--rank", rank, "module rank");
  app.add_option("--gens", ngens, "number of generators");
  app.add_option("--degree", degree, "maximal generator degree");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    tdvr::InstanceShape s = tdvr::random_shape(rng);
    if (!flavor.empty()) s.flavor = flavor == "pi" ? tdvr::Flavor::EquiChar : tdvr::Flavor::MixedChar;
    if (pi_homogeneous) s.flavor = tdvr::Flavor::EquiChar;
    if (p) s.p = *p;
    if (a) s.a = *a;
    if (nvars) s.nvars = *nvars;
    if (rank) s.rank = *rank;
    if (ngens) s.ngens = *ngens;
    if (degree) s.max_degree = *degree;
    s.x_homogeneous = x_homogeneous;
    s.pi_homogeneous = pi_homogeneous;
    try {
      const tdvr::RandomInstance r = tdvr::random_instance(s, rng);
      const std::string text = "# tdvr-gen --seed " + std::to_string(seed) + " #" + std::to_string(k) + "\n" +
                               tdvr::cli::format_instance({r.module, r.generators});
      if (out_dir.empty()) {
        std::cout << text << (k + 1 < count ? "\n" : "");
      } else {
        std::filesystem::create_directories(out_dir);
        std::ofstream(std::filesystem::path(out_dir) / ("inst-" + std::to_string(k) + ".inst")) << text;
      }
    } catch (const std::exception& e) {
      std::cerr << "tdvr-gen: " << e.what() << "\n";
      return 3;
    }
  }
  return 0;
}
