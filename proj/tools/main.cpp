#include <iostream>

#include "gentrans/harness/cli.hpp"

int main(int argc, char** argv) { return gentrans::run_cli(argc, argv, std::cout, std::cerr); }
