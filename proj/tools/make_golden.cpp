// Regenerates data/golden from the engine: make_golden <dir>
#include <fstream>
#include <iostream>

#include "e6voa/golden.hpp"
#include "e6voa/json_io.hpp"

using namespace e6voa;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_golden <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  auto write = [&](const std::string& name, const json_io::json& j) {
    std::ofstream out(dir + "/" + name);
    out << j.dump(1) << "\n";
    std::cout << name << "\n";
  };
  write("omega_e6.json", json_io::golden_json(virasoro::omega_e6()));
  write("omega_f4.json", json_io::golden_json(virasoro::omega_f4()));
  write("omega.json", json_io::golden_json(virasoro::omega_coset()));
  for (const auto& b : hwv::builtin_hwvs()) write(golden::hwv_file(b.id), json_io::golden_json(b));
  return 0;
}
