#include <iostream>

#include "planeperiods/cli.hpp"

int main(int argc, char** argv) { return planeperiods::run(argc, argv, std::cout, std::cerr); }
