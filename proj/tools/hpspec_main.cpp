#include <iostream>

#include "hpspec/cli.hpp"

int main(int argc, char** argv) { return hpspec::cli_main(argc, argv, std::cout, std::cerr); }
