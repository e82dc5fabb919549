#include <iostream>

#include "wreath/cli.hpp"

int main(int argc, char** argv) { return wreath::cli::run(argc, argv, std::cout, std::cerr); }
