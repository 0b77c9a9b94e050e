#include <iostream>

#include "jsr/cli.hpp"

int main(int argc, char** argv) { return jsr::cli_main(argc, argv, std::cout, std::cerr); }
