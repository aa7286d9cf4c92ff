// Writes conn<n>.g6 for n = 1..max into a directory.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "corpus.hpp"
#include "critcheck/graph6.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_corpus <max-n> <out-dir>\n";
    return 2;
  }
  const int max_n = std::atoi(argv[1]);
  const std::filesystem::path dir = argv[2];
  std::filesystem::create_directories(dir);
  for (int n = 1; n <= max_n; ++n) {
    const std::filesystem::path file = dir / ("conn" + std::to_string(n) + ".g6");
    const std::filesystem::path tmp = dir / ("conn" + std::to_string(n) + ".g6.tmp");
    {
      std::ofstream out(tmp);
      for (const auto& g : corpus::connected_graphs(n)) out << critcheck::encode_graph6(g) << '\n';
    }
    std::filesystem::rename(tmp, file);
  }
  return 0;
}
