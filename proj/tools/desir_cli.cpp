#include <iostream>

#include "desir/cli.hpp"

int main(int argc, char** argv) { return desir::run(argc, argv, std::cout, std::cerr); }
