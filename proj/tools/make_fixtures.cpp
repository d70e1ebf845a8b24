// Regenerates the shipped JSON fixtures: hrf_make_fixtures <data-dir>
#include <filesystem>
#include <iostream>

#include "hrf/io.hpp"

using namespace hrf;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: hrf_make_fixtures <data-dir>\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);

  auto v = standard_module(RootSystem::A2(), Ring::rationals(), Weight{1, 1});
  io::write_file((dir / "vrho_A2.json").string(), io::module_to_json(v.module, &v.form));

  auto b2 = standard_module(RootSystem::B2(), Ring::rationals(), Weight{1, 1});
  io::write_file((dir / "vrho_B2.json").string(), io::module_to_json(b2.module, &b2.form));

  for (long lambda : {3, 5}) {
    auto [m, form] = weyl_lattice(RootSystem::A1(), Weight{lambda}, 5);
    io::write_file((dir / ("weyl_A1_" + std::to_string(lambda) + "_p5.json")).string(), io::lattice_to_json(m, &form));
  }

  auto t = oracle::sl2_tilting_fixture(3);
  if (!t) {
    std::cerr << "tilting search exhausted at p=3\n";
    return 1;
  }
  io::write_file((dir / "tilting_A1_3_p3.json").string(), io::lattice_to_json(t->lattice, &t->form));
  return 0;
}
