// Writes every builtin group description into a directory, one file per group.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "charcorr/perm_group.hpp"
#include "charcorr/showcase.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus <directory>\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  for (const auto& name : charcorr::builtin_names()) {
    std::ofstream out(dir / name);
    charcorr::write_group_description(out, charcorr::builtin_group(name));
    if (!out) {
      std::cerr << "cannot write " << (dir / name) << '\n';
      return 1;
    }
  }
  return 0;
}
