#include <iostream>

#include "kyoung/cli.hpp"

int main(int argc, char** argv) { return kyoung::cli::run(argc, argv, std::cout, std::cerr); }
