#include <iostream>

#include "actbij/cli.hpp"

int main(int argc, char** argv) { return actbij::run_cli({argv, argv + argc}, std::cout, std::cerr); }
